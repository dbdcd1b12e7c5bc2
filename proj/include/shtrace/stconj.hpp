#pragma once

// Strongly regular elements of GL_n(F) given by eigenvalue data, their
// stable transfers to G_b(F), the torus-bundle invariant inv[b](g, g') and
// the relevant triples Rel_{b,mu}.

#include "shtrace/kottwitz.hpp"

namespace shtrace {

enum class TorusKind { split, quadratic };

inline const char* to_string(TorusKind k) { return k == TorusKind::split ? "split" : "quadratic"; }

/// Strongly regular semisimple g in GL_n(F): distinct nonzero eigenvalues.
/// Split elements have eigenvalues in F; quadratic elements (n = 2) have a
/// conjugate pair a +- b sqrt(d) with sqrt(d) outside F.
class SRElement {
public:
    static SRElement split(std::vector<FieldElement> eigenvalues) {
        for (const auto& x : eigenvalues)
            if (!x.is_rational()) throw std::invalid_argument("split element needs eigenvalues in F, got " + x.str());
        check_regular(eigenvalues);
        SRElement g;
        g.eigenvalues_ = std::move(eigenvalues);
        return g;
    }

    static SRElement split(const std::vector<Rational>& eigenvalues) {
        return split(std::vector<FieldElement>(eigenvalues.begin(), eigenvalues.end()));
    }

    /// The elliptic element of GL_2(F) with eigenvalues a +- b sqrt(d).
    static SRElement quadratic(const Rational& a, const Rational& b, const Rational& d, const FieldParams& params) {
        if (b == 0) throw std::invalid_argument("quadratic element needs b != 0");
        FieldElement x = FieldElement::quadratic(a, b, d);
        QuadraticKind kind = quadratic_kind(x.d(), params);
        if (kind == QuadraticKind::split)
            throw std::invalid_argument("sqrt(" + x.d().str() + ") lies in F; the eigenvalues are in F");
        if (kind == QuadraticKind::undetermined)
            throw std::invalid_argument("cannot decide whether sqrt(" + x.d().str() + ") lies in F from (p, f, e)");
        SRElement g;
        g.kind_ = TorusKind::quadratic;
        g.eigenvalues_ = {x, x.conjugate()};
        check_regular(g.eigenvalues_);
        return g;
    }

    TorusKind kind() const { return kind_; }
    std::size_t rank() const { return eigenvalues_.size(); }
    const std::vector<FieldElement>& eigenvalues() const { return eigenvalues_; }
    const Integer& quadratic_d() const { return eigenvalues_.front().d(); }

    friend bool operator==(const SRElement&, const SRElement&) = default;

private:
    static void check_regular(const std::vector<FieldElement>& ev) {
        if (ev.empty()) throw std::invalid_argument("element needs at least one eigenvalue");
        for (std::size_t i = 0; i < ev.size(); ++i) {
            if (ev[i].is_zero()) throw std::invalid_argument("eigenvalue 0: element is not invertible");
            for (std::size_t j = i + 1; j < ev.size(); ++j)
                if (ev[i] == ev[j])
                    throw std::invalid_argument("repeated eigenvalue " + ev[i].str() + ": element is not strongly regular");
        }
    }

    TorusKind kind_ = TorusKind::split;
    std::vector<FieldElement> eigenvalues_;
};

/// Element of G_b(F) up to conjugacy: one eigenvalue per slot, slots in
/// ascending slope order. A quaternion-type block (slope with denominator 2,
/// size 2) holds a conjugate quadratic pair; split blocks hold elements of F
/// and adjacent conjugate pairs.
struct GbElement {
    KottwitzPoint b;
    std::vector<FieldElement> slots;

    friend bool operator==(const GbElement&, const GbElement&) = default;
};

/// Validates that `slots` describe a strongly regular element of G_b(F).
inline GbElement make_gb_element(const RootDatum& datum, const KottwitzPoint& b, std::vector<FieldElement> slots) {
    auto blocks = Gb_levi_description(datum, b);
    datum.check_size(slots.size());
    std::size_t at = 0;
    for (const auto& blk : blocks) {
        if (blk.split()) {
            // elements of F, or adjacent conjugate pairs for elliptic parts
            for (int i = 0; i < blk.size; ++i) {
                const auto& x = slots[at + i];
                if (x.is_rational()) continue;
                if (i + 1 < blk.size && slots[at + i + 1] == x.conjugate()) {
                    ++i;
                    continue;
                }
                throw std::invalid_argument("slot " + std::to_string(at + i) + " of split block " + blk.describe() +
                                            " needs an element of F or a conjugate pair");
            }
        } else if (blk.division_degree == 2 && blk.size == 2) {
            const auto& x = slots[at];
            if (x.is_rational() || !(slots[at + 1] == x.conjugate()))
                throw std::invalid_argument("block " + blk.describe() + " needs a conjugate quadratic pair");
        } else {
            throw std::invalid_argument("elements of block " + blk.describe() + " are not supported");
        }
        at += static_cast<std::size_t>(blk.size);
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].is_zero()) throw std::invalid_argument("zero eigenvalue in G_b element");
        for (std::size_t j = i + 1; j < slots.size(); ++j)
            if (slots[i] == slots[j]) throw std::invalid_argument("G_b element is not strongly regular");
    }
    return {b, std::move(slots)};
}

/// g' as a placement of g's eigenvalues into the slots of G_b.
struct Transfer {
    std::vector<std::size_t> slot_to_eigenvalue;
    GbElement element;

    friend bool operator==(const Transfer&, const Transfer&) = default;
};

/// Element of X_*(T)_Gamma = B(T): Z^n for split T, Z for the quadratic
/// torus of GL_2 (coinvariants of the swap).
struct TorusClass {
    TorusKind kind = TorusKind::split;
    std::vector<long long> value;

    friend bool operator==(const TorusClass&, const TorusClass&) = default;
};

inline TorusClass beta_T(const Cochar& lambda, TorusKind kind) {
    if (kind == TorusKind::split) return {kind, lambda.entries()};
    if (lambda.size() != 2) throw std::invalid_argument("quadratic torus is only housed in GL_2");
    return {kind, {lambda[0] + lambda[1]}};
}

namespace detail {

inline void check_gl_match(const RootDatum& datum, const SRElement& g) {
    if (!datum.is_gl()) throw std::invalid_argument("stable conjugacy is implemented for GL_n only");
    datum.check_size(g.rank());
}

// All ways to fill blocks of the given sizes with indices 0..n-1, each block
// listing its indices in increasing order.
inline void fill_blocks(const std::vector<int>& sizes, std::size_t block, std::size_t placed_before,
                        std::vector<bool>& used, std::vector<std::size_t>& current,
                        std::vector<std::vector<std::size_t>>& out, std::size_t start) {
    if (block == sizes.size()) {
        out.push_back(current);
        return;
    }
    const auto in_block = current.size() - placed_before;
    if (in_block == static_cast<std::size_t>(sizes[block])) {
        fill_blocks(sizes, block + 1, current.size(), used, current, out, 0);
        return;
    }
    for (std::size_t i = start; i < used.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        current.push_back(i);
        fill_blocks(sizes, block, placed_before, used, current, out, i + 1);
        current.pop_back();
        used[i] = false;
    }
}

}  // namespace detail

/// Stable transfers of g to G_b(F), one representative per G_b(F)-conjugacy
/// class (eigenvalues listed in input order within each block).
inline std::vector<Transfer> stable_transfers(const RootDatum& datum, const SRElement& g, const KottwitzPoint& b) {
    detail::check_gl_match(datum, g);
    auto blocks = Gb_levi_description(datum, b);
    std::vector<Transfer> out;
    if (g.kind() == TorusKind::quadratic) {
        // The elliptic torus only fits in a single block of size 2.
        if (blocks.size() != 1) return out;
        std::vector<std::size_t> slots{0, 1};
        out.push_back({slots, {b, g.eigenvalues()}});
        return out;
    }
    for (const auto& blk : blocks)
        if (!blk.split()) return out;
    std::vector<int> sizes;
    for (const auto& blk : blocks) sizes.push_back(blk.size);
    std::vector<bool> used(g.rank(), false);
    std::vector<std::size_t> current;
    std::vector<std::vector<std::size_t>> fills;
    detail::fill_blocks(sizes, 0, 0, used, current, fills, 0);
    for (auto& fill : fills) {
        std::vector<FieldElement> slots;
        for (auto i : fill) slots.push_back(g.eigenvalues()[i]);
        out.push_back({std::move(fill), {b, std::move(slots)}});
    }
    return out;
}

/// inv[b](g, g'): for split T the degree of each eigenline (the slope of the
/// block carrying that eigenvalue), indexed like g's eigenvalues; for the
/// quadratic torus and basic b, kappa(b).
inline TorusClass inv_b(const RootDatum& datum, const SRElement& g, const Transfer& t) {
    detail::check_gl_match(datum, g);
    const KottwitzPoint& b = t.element.b;
    const auto slopes = slot_slopes(b);
    if (t.slot_to_eigenvalue.size() != g.rank() || t.element.slots.size() != g.rank())
        throw std::invalid_argument("incompatible pair: transfer has the wrong size");
    for (std::size_t s = 0; s < g.rank(); ++s)
        if (!(t.element.slots[s] == g.eigenvalues()[t.slot_to_eigenvalue[s]]))
            throw std::invalid_argument("incompatible pair: g' is not stably conjugate to g");
    if (g.kind() == TorusKind::quadratic) {
        if (!is_basic(datum, b)) throw std::invalid_argument("inv[b] for the quadratic torus needs basic b");
        return {TorusKind::quadratic, {b.kappa[0]}};
    }
    std::vector<long long> degrees(g.rank(), 0);
    for (std::size_t s = 0; s < g.rank(); ++s) {
        if (!is_integer(slopes[s]))
            throw std::invalid_argument("incompatible pair: split torus in a block of slope " + to_string(slopes[s]));
        degrees[t.slot_to_eigenvalue[s]] = boost::multiprecision::numerator(slopes[s]).convert_to<long long>();
    }
    return {TorusKind::split, degrees};
}

/// Element (g, g', lambda) of Rel_{b,mu}.
struct RelTriple {
    SRElement g;
    Transfer g_prime;
    Cochar lambda;

    friend bool operator==(const RelTriple&, const RelTriple&) = default;
};

/// All beta_T-preimages of `cls` whose dominant representative is <= mu.
inline std::vector<Cochar> bounded_preimages(const RootDatum& datum, const TorusClass& cls, const Cochar& mu) {
    std::vector<Cochar> out;
    auto fits = [&](const Cochar& lam) {
        return dominance_leq_or_false(datum, to_rational(dominant_sort(datum, lam)), to_rational(mu));
    };
    if (cls.kind == TorusKind::split) {
        Cochar lam(cls.value);
        if (fits(lam)) out.push_back(lam);
        return out;
    }
    // lambda_1 + lambda_2 = kappa; the bound mu_2 <= lambda_i <= mu_1 is forced
    const long long total = cls.value[0];
    for (long long a = mu[0]; a >= mu[1]; --a) {
        Cochar lam{a, total - a};
        if (fits(lam)) out.push_back(lam);
    }
    return out;
}

/// Rel_{b,mu} for g: every stable transfer g' paired with every bounded
/// preimage lambda of inv[b](g, g'). Lambdas are listed in descending
/// lexicographic order.
inline std::vector<RelTriple> build_rel(const RootDatum& datum, const SRElement& g, const KottwitzPoint& b,
                                       const Cochar& mu) {
    datum.check_cochar(mu);
    if (!is_dominant(datum, mu)) throw std::invalid_argument("mu = " + mu.str() + " is not dominant");
    std::vector<RelTriple> out;
    for (auto& t : stable_transfers(datum, g, b)) {
        if (g.kind() == TorusKind::quadratic && !is_basic(datum, b)) continue;
        TorusClass cls = inv_b(datum, g, t);
        for (auto& lam : bounded_preimages(datum, cls, mu)) out.push_back({g, t, std::move(lam)});
    }
    return out;
}

/// Checks the RelTriple invariants; throws with a reason on failure.
inline void validate(const RootDatum& datum, const RelTriple& r, const Cochar& mu) {
    std::vector<FieldElement> a = r.g.eigenvalues(), b = r.g_prime.element.slots;
    auto key = [](const FieldElement& x) { return std::make_tuple(x.a(), x.b(), x.d()); };
    auto cmp = [&](const FieldElement& x, const FieldElement& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    if (a != b) throw std::logic_error("triple: g and g' have different eigenvalues");
    if (!(beta_T(r.lambda, r.g.kind()) == inv_b(datum, r.g, r.g_prime)))
        throw std::logic_error("triple: lambda does not map to inv[b](g, g')");
    if (!dominance_leq_or_false(datum, to_rational(dominant_sort(datum, r.lambda)), to_rational(mu)))
        throw std::logic_error("triple: lambda is not bounded by mu");
}

}  // namespace shtrace
