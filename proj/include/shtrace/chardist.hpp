#pragma once

// Harish-Chandra characters as exact functions of eigenvalue data, the
// determinant and norm factors of the isocrystal side, the closed-form
// characteristic-class components, and the two assemblies of Theta_pi:
// directly from the trace formula and through characteristic classes.

#include "shtrace/stconj.hpp"
#include "shtrace/weights.hpp"

#include <numeric>
#include <variant>

namespace shtrace {

/// alpha(t) for a character alpha of the diagonal torus, t given by slots.
inline FieldElement root_value(const Character& alpha, const std::vector<FieldElement>& slots) {
    if (alpha.size() != slots.size()) throw std::invalid_argument("rank mismatch between root and element");
    FieldElement v(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        FieldElement base = alpha[i] > 0 ? slots[i] : slots[i].inverse();
        for (long long k = 0; k < (alpha[i] > 0 ? alpha[i] : -alpha[i]); ++k) v *= base;
    }
    return v;
}

/// prod_{alpha in roots} |1 - alpha(t)|; a vanishing factor means t is not
/// regular against these roots. Valuations are summed first, so a product
/// over conjugate pairs stays rational.
inline Rational one_minus_root_norms(const std::vector<Character>& roots, const std::vector<FieldElement>& slots,
                                     const FieldParams& params) {
    Rational total = 0;
    for (const auto& a : roots) {
        FieldElement x = one_minus(root_value(a, slots));
        if (x.is_zero()) throw std::domain_error("1 - alpha(t) = 0 for alpha = " + a.str() + ": element is not regular");
        total += val(x, params);
    }
    Rational exponent = -Rational(params.degree()) * total;
    if (!is_integer(exponent)) throw std::domain_error("product of root norms is irrational");
    return detail::rpow(params.p, boost::multiprecision::numerator(exponent));
}

/// Roots that are positive (plus) or negative (minus) for P_b, in slot
/// coordinates of G_b.
inline std::vector<Character> parabolic_roots(const RootDatum& datum, const KottwitzPoint& b, Sign sign) {
    return positive_roots_of_parabolic(datum, slot_newton(b), sign);
}

/// Roots outside the Levi M_b (Phi^+ and Phi^- together).
inline std::vector<Character> nilradical_roots(const RootDatum& datum, const KottwitzPoint& b) {
    auto out = parabolic_roots(datum, b, Sign::plus);
    auto minus = parabolic_roots(datum, b, Sign::minus);
    out.insert(out.end(), minus.begin(), minus.end());
    return out;
}

/// (-1)^{<mu, 2 rho_G>}.
inline int transfer_sign(const RootDatum& datum, const Cochar& mu) {
    return pairing(two_rho(datum), mu) % 2 == 0 ? 1 : -1;
}

/// Conjugation-invariant function on strongly regular elements of G_b(F).
struct CharacterTable {
    KottwitzPoint group_at;
    std::function<Rational(const GbElement&)> eval;

    Rational operator()(const GbElement& t) const {
        if (!(t.b == group_at)) throw std::invalid_argument("character of G_b for b = " + group_at.str() +
                                                            " evaluated on G_b for b = " + t.b.str());
        return eval(t);
    }
};

struct TrivialRep {};
/// Normalized induction from the unramified characters x -> z_i^{ord_F(x)},
/// one Satake parameter per slot.
struct UnramifiedPrincipalSeries {
    std::vector<Rational> satake;
};
/// St - 1 on GL_2(F).
struct SteinbergMinusTrivial {};
struct UserTable {
    CharacterTable table;
};
using RepSpec = std::variant<TrivialRep, UnramifiedPrincipalSeries, SteinbergMinusTrivial, UserTable>;

inline std::string rep_name(const RepSpec& rho) {
    struct {
        std::string operator()(const TrivialRep&) const { return "trivial"; }
        std::string operator()(const UnramifiedPrincipalSeries& u) const {
            std::string s = "unramified_principal_series(";
            for (std::size_t i = 0; i < u.satake.size(); ++i) s += (i ? "," : "") + to_string(u.satake[i]);
            return s + ")";
        }
        std::string operator()(const SteinbergMinusTrivial&) const { return "steinberg_minus_trivial"; }
        std::string operator()(const UserTable&) const { return "user_table"; }
    } visitor;
    return std::visit(visitor, rho);
}

namespace detail {

// z^{ord_F(x)} with ord_F = e * val.
inline Rational unramified_character(const Rational& z, const FieldElement& x, const FieldParams& params) {
    Rational ord = Rational(params.e) * val(x, params);
    if (!is_integer(ord)) throw std::domain_error("ord_F of " + x.str() + " is not an integer");
    long long k = boost::multiprecision::numerator(ord).convert_to<long long>();
    if (z == 0) throw std::invalid_argument("Satake parameter must be nonzero");
    Rational base = k >= 0 ? z : Rational(1) / z;
    Rational r = 1;
    for (long long i = 0; i < (k >= 0 ? k : -k); ++i) r *= base;
    return r;
}

// sum_w prod_i chi_i(t_{w i}) delta(w t) / prod_{i<j} |1 - t_{w i}/t_{w j}|
inline Rational induced_character(const std::vector<Rational>& satake, const std::vector<FieldElement>& eigenvalues,
                                  const FieldParams& params) {
    const std::size_t n = eigenvalues.size();
    if (satake.size() != n) throw std::invalid_argument("need one Satake parameter per eigenvalue");
    for (const auto& x : eigenvalues)
        if (!x.is_rational()) return Rational(0);
    std::vector<std::size_t> w(n);
    std::iota(w.begin(), w.end(), 0);
    Rational total = 0;
    do {
        Rational term = 1;
        for (std::size_t i = 0; i < n; ++i) term *= unramified_character(satake[i], eigenvalues[w[i]], params);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                FieldElement ratio = eigenvalues[w[i]] / eigenvalues[w[j]];
                FieldElement gap = one_minus(ratio);
                if (gap.is_zero()) throw std::domain_error("element is not regular");
                term *= norm_F(ratio, params) / norm_F(gap, params);
            }
        total += term;
    } while (std::next_permutation(w.begin(), w.end()));
    return total;
}

}  // namespace detail

/// van Dijk's character of the normalized induction of unramified characters
/// from the diagonal torus of GL_n; 0 off the split locus.
inline Rational vandijk_character(const RootDatum& datum, const std::vector<Rational>& satake, const SRElement& g,
                                  const FieldParams& params) {
    if (!datum.is_gl()) throw std::invalid_argument("van Dijk's formula is implemented for GL_n only");
    datum.check_size(g.rank());
    if (g.kind() != TorusKind::split) return Rational(0);
    return detail::induced_character(satake, g.eigenvalues(), params);
}

/// Theta_St - Theta_1 on GL_2(F).
inline Rational steinberg_minus_trivial(const std::vector<FieldElement>& eigenvalues, const FieldParams& params) {
    if (eigenvalues.size() != 2) throw std::invalid_argument("St - 1 is defined here for GL_2 only");
    return detail::induced_character({1, 1}, eigenvalues, params) - 2;
}

/// Theta_rho(t) for t in G_b(F).
inline Rational evaluate_character(const RootDatum& datum, const RepSpec& rho, const GbElement& t,
                                   const FieldParams& params) {
    struct Visitor {
        const RootDatum& datum;
        const GbElement& t;
        const FieldParams& params;
        Rational operator()(const TrivialRep&) const { return 1; }
        Rational operator()(const UnramifiedPrincipalSeries& u) const {
            auto blocks = Gb_levi_description(datum, t.b);
            if (u.satake.size() != t.slots.size())
                throw std::invalid_argument("principal series needs " + std::to_string(t.slots.size()) +
                                            " Satake parameters");
            Rational value = 1;
            std::size_t at = 0;
            for (const auto& blk : blocks) {
                if (!blk.split())
                    throw std::domain_error("unramified principal series is not defined on " + blk.describe());
                auto first = static_cast<std::ptrdiff_t>(at), last = first + blk.size;
                std::vector<Rational> z(u.satake.begin() + first, u.satake.begin() + last);
                std::vector<FieldElement> ev(t.slots.begin() + first, t.slots.begin() + last);
                value *= detail::induced_character(z, ev, params);
                at += static_cast<std::size_t>(blk.size);
            }
            return value;
        }
        Rational operator()(const SteinbergMinusTrivial&) const {
            auto blocks = Gb_levi_description(datum, t.b);
            if (blocks.size() != 1 || blocks[0].size != 2 || !blocks[0].split())
                throw std::domain_error("St - 1 needs G_b = GL_2(F)");
            return steinberg_minus_trivial(t.slots, params);
        }
        Rational operator()(const UserTable& u) const { return u.table(t); }
    };
    return std::visit(Visitor{datum, t, params}, rho);
}

/// D_b^-(t) = prod_{alpha in Phi^-(P_b)} (1 - alpha(t)).
inline FieldElement D_b_minus(const RootDatum& datum, const GbElement& t) {
    FieldElement prod(1);
    for (const auto& a : parabolic_roots(datum, t.b, Sign::minus)) {
        FieldElement x = one_minus(root_value(a, t.slots));
        if (x.is_zero()) throw std::domain_error("D_b^- vanishes: element is not regular against P_b^-");
        prod *= x;
    }
    return prod;
}

/// Graded piece of the slope filtration: slope (nullopt for torsion) and the
/// eigenvalues of g on it.
struct IsocrystalPiece {
    std::optional<Rational> slope;
    std::vector<FieldElement> eigenvalues;
};

/// det g: determinant on positive-slope pieces, inverse determinant on
/// negative-slope pieces, 1 on torsion.
inline FieldElement det_isocrystal(const std::vector<IsocrystalPiece>& pieces) {
    FieldElement det(1);
    for (const auto& piece : pieces) {
        if (!piece.slope) continue;
        if (*piece.slope == 0) throw std::invalid_argument("slope-zero pieces have no determinant convention");
        FieldElement d(1);
        for (const auto& x : piece.eigenvalues) {
            if (x.is_zero()) throw std::domain_error("zero eigenvalue: not an automorphism");
            d *= x;
        }
        det *= *piece.slope > 0 ? d : d.inverse();
    }
    return det;
}

/// Action on compactly supported cohomology: |det g|^{-1}.
inline Rational bc_action_factor(const std::vector<IsocrystalPiece>& pieces, const FieldParams& params) {
    return 1 / norm_F(det_isocrystal(pieces), params);
}

/// Elements of `bgmu` strictly below b in the dominance order.
inline std::vector<KottwitzPoint> strictly_below(const RootDatum& datum, const KottwitzPoint& b,
                                                 const std::vector<KottwitzPoint>& bgmu) {
    std::vector<KottwitzPoint> out;
    for (const auto& c : specializations(datum, b, bgmu, true, Direction::generization)) out.push_back(c);
    return out;
}

/// Strongly regular b'-component of cc(i_{b*} Lambda) for basic b and a b'
/// whose only smaller element in B(G, mu) is b:
///   prod_{Phi^+ u Phi^-} |1 - alpha(t)| - prod_{Phi^-} |1 - alpha(t)|.
inline Rational cc_nonbasic_component(const RootDatum& datum, const KottwitzPoint& b_basic,
                                      const KottwitzPoint& b_prime, const Cochar& mu, const GbElement& t,
                                      const FieldParams& params) {
    if (!is_basic(datum, b_basic)) throw std::domain_error("formula not established: b is not basic");
    auto bgmu = enumerate_BGmu(datum, mu);
    auto in = [&](const KottwitzPoint& x) { return std::find(bgmu.begin(), bgmu.end(), x) != bgmu.end(); };
    if (!in(b_basic) || !in(b_prime)) throw std::domain_error("formula not established: points outside B(G,mu)");
    auto below = strictly_below(datum, b_prime, bgmu);
    if (below.size() != 1 || !(below[0] == b_basic))
        throw std::domain_error("formula not established: b' = " + b_prime.str() +
                                " does not have b as its only smaller element in B(G,mu)");
    if (!(t.b == b_prime)) throw std::invalid_argument("t does not lie in G_b' for b' = " + b_prime.str());
    Rational all = one_minus_root_norms(nilradical_roots(datum, b_prime), t.slots, params);
    Rational minus = one_minus_root_norms(parabolic_roots(datum, b_prime, Sign::minus), t.slots, params);
    return all - minus;
}

struct HypothesisCheck {
    bool holds = true;
    std::optional<KottwitzPoint> witness;
};

/// True iff no proper specialization of b in B(G, mu) receives a stable
/// transfer of g.
inline HypothesisCheck check_hypothesis(const RootDatum& datum, const KottwitzPoint& b, const Cochar& mu,
                                        const SRElement& g) {
    auto bgmu = enumerate_BGmu(datum, mu);
    for (const auto& c : specializations(datum, b, bgmu, true)) {
        if (!stable_transfers(datum, g, c).empty()) return {false, c};
    }
    return {};
}

class HypothesisViolated : public std::domain_error {
public:
    HypothesisViolated(KottwitzPoint witness)
        : std::domain_error("theorem hypothesis violated: g transfers to the specialization b'' = " + witness.str() +
                            "; use theta_via_cc"),
          witness_(std::move(witness)) {}
    const KottwitzPoint& witness() const { return witness_; }

private:
    KottwitzPoint witness_;
};

/// One summand of Theta_pi(g).
struct ThetaTerm {
    KottwitzPoint stratum;
    RelTriple triple;
    long long dim = 0;
    /// Theta_rho(g') for the trace formula, the cc component for theta_via_cc.
    Rational character_value;
    /// Roots whose |1 - alpha(g')| enter the factor; empty for basic b.
    std::vector<Character> norm_roots;
    /// Multiplier from those norms (inverse product).
    Rational norm_factor{1};
    Rational contribution;
};

struct ThetaResult {
    Rational value;
    int sign = 1;
    std::vector<ThetaTerm> terms;
};

/// Theta_pi(g) = (-1)^{<mu,2rho>} sum_{Rel_{b,mu}} dim r_mu[lambda] Theta_rho(g')
///               prod_{alpha in Phi^+(P_b)} |1 - alpha(g')|^{-1}.
inline ThetaResult theta_from_theorem(const RootDatum& datum, const KottwitzPoint& b, const Cochar& mu,
                                      const RepSpec& rho, const SRElement& g, const FieldParams& params) {
    auto check = check_hypothesis(datum, b, mu, g);
    if (!check.holds) throw HypothesisViolated(*check.witness);
    auto table = freudenthal(datum, mu);
    ThetaResult result;
    result.sign = transfer_sign(datum, mu);
    const auto plus = parabolic_roots(datum, b, Sign::plus);
    for (auto& triple : build_rel(datum, g, b, mu)) {
        ThetaTerm term;
        term.stratum = b;
        term.dim = table.multiplicity(datum, triple.lambda);
        term.character_value = evaluate_character(datum, rho, triple.g_prime.element, params);
        term.norm_roots = plus;
        term.norm_factor = 1 / one_minus_root_norms(plus, triple.g_prime.element.slots, params);
        term.contribution = Rational(result.sign * term.dim) * term.character_value * term.norm_factor;
        result.value += term.contribution;
        term.triple = std::move(triple);
        result.terms.push_back(std::move(term));
    }
    return result;
}

/// Own-stratum component of cc(i_{b*} rho): |D_b^-| Theta_rho.
inline CharacterTable own_stratum_component(const RootDatum& datum, const KottwitzPoint& b, const RepSpec& rho,
                                            const FieldParams& params) {
    return {b, [datum, rho, params](const GbElement& t) {
                return norm_F(D_b_minus(datum, t), params) * evaluate_character(datum, rho, t, params);
            }};
}

/// Components known in closed form: the own stratum, and for trivial rho on
/// basic b every b' in the closure whose only smaller element is b.
inline std::map<KottwitzPoint, CharacterTable> known_cc_components(const RootDatum& datum, const KottwitzPoint& b,
                                                                   const Cochar& mu, const RepSpec& rho,
                                                                   const FieldParams& params) {
    std::map<KottwitzPoint, CharacterTable> out;
    out.emplace(b, own_stratum_component(datum, b, rho, params));
    if (!std::holds_alternative<TrivialRep>(rho) || !is_basic(datum, b)) return out;
    auto bgmu = enumerate_BGmu(datum, mu);
    for (const auto& c : specializations(datum, b, bgmu, true)) {
        auto below = strictly_below(datum, c, bgmu);
        if (below.size() != 1 || !(below[0] == b)) continue;
        out.emplace(c, CharacterTable{c, [datum, b, c, mu, params](const GbElement& t) {
                                          return cc_nonbasic_component(datum, b, c, mu, t, params);
                                      }});
    }
    return out;
}

/// Theta_pi(g) through characteristic classes: sum over b' in the closure of
/// b and Rel_{b',mu} of (-1)^{<mu,2rho>} dim r_mu[lambda] cc_{b'}(g'), each
/// divided by prod_{Phi^+ u Phi^-(P_b')} |1 - alpha(g')|. A missing own-stratum
/// component defaults to |D_b^-| Theta_rho.
inline ThetaResult theta_via_cc(const RootDatum& datum, const KottwitzPoint& b, const Cochar& mu, const RepSpec& rho,
                                const SRElement& g, const std::map<KottwitzPoint, CharacterTable>& components,
                                const FieldParams& params) {
    auto table = freudenthal(datum, mu);
    auto bgmu = enumerate_BGmu(datum, mu);
    ThetaResult result;
    result.sign = transfer_sign(datum, mu);
    for (const auto& stratum : specializations(datum, b, bgmu, false)) {
        auto triples = build_rel(datum, g, stratum, mu);
        if (triples.empty()) continue;
        CharacterTable component;
        if (auto it = components.find(stratum); it != components.end())
            component = it->second;
        else if (stratum == b)
            component = own_stratum_component(datum, b, rho, params);
        else
            throw std::domain_error("missing characteristic-class component for b' = " + stratum.str());
        const auto roots = nilradical_roots(datum, stratum);
        for (auto& triple : triples) {
            ThetaTerm term;
            term.stratum = stratum;
            term.dim = table.multiplicity(datum, triple.lambda);
            term.character_value = component(triple.g_prime.element);
            term.norm_roots = roots;
            term.norm_factor = 1 / one_minus_root_norms(roots, triple.g_prime.element.slots, params);
            term.contribution = Rational(result.sign * term.dim) * term.character_value * term.norm_factor;
            result.value += term.contribution;
            term.triple = std::move(triple);
            result.terms.push_back(std::move(term));
        }
    }
    return result;
}

}  // namespace shtrace
