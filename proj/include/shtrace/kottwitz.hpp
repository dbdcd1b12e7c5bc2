#pragma once

// Kottwitz sets B(G) and B(G, mu): Newton points, kappa invariants, basic
// elements, the closure (specialization) order and the Levi/inner-form
// block structure of G_b.

#include "shtrace/rootdata.hpp"

#include <functional>
#include <limits>
#include <sstream>

namespace shtrace {

/// Element of B(G) as (dominant Newton point, Kottwitz invariant).
struct KottwitzPoint {
    RationalCochar nu;
    std::vector<long long> kappa;

    friend bool operator==(const KottwitzPoint&, const KottwitzPoint&) = default;
    friend bool operator<(const KottwitzPoint& a, const KottwitzPoint& b) {
        if (a.kappa != b.kappa) return a.kappa < b.kappa;
        return a.nu < b.nu;
    }
    std::string str() const { return nu.str(); }
};

inline bool is_basic(const RootDatum& datum, const KottwitzPoint& b) {
    for (const auto& a : datum.simple_roots())
        if (pairing(a, b.nu) != 0) return false;
    return true;
}

/// GL_n integrality: a slope a/q in lowest terms occurs with multiplicity
/// divisible by q.
inline bool has_integral_breakpoints(const RationalCochar& nu) {
    std::map<Rational, long long> mult;
    for (const auto& s : nu) ++mult[s];
    for (const auto& [slope, m] : mult) {
        Integer q = boost::multiprecision::denominator(slope);
        if (Integer(m) % q != 0) return false;
    }
    return true;
}

/// Checks the KottwitzPoint invariants; throws with a reason on failure.
inline void validate(const RootDatum& datum, const KottwitzPoint& b) {
    datum.check_size(b.nu.size());
    if (!is_dominant(datum, b.nu)) throw std::invalid_argument("Newton point " + b.nu.str() + " is not dominant");
    if (datum.is_gl()) {
        if (b.kappa.size() != 1) throw std::invalid_argument("GL_n kappa must be a single integer");
        Rational s = 0;
        for (const auto& x : b.nu) s += x;
        if (s != Rational(b.kappa[0]))
            throw std::invalid_argument("kappa " + std::to_string(b.kappa[0]) + " does not match Newton point " +
                                        b.nu.str());
        if (!has_integral_breakpoints(b.nu))
            throw std::invalid_argument("Newton point " + b.nu.str() + " has non-integral breakpoints");
    }
}

/// GL_n point from a slope vector in any order; kappa is the total degree.
inline KottwitzPoint gl_point(const RootDatum& datum, RationalCochar slopes) {
    if (!datum.is_gl()) throw std::invalid_argument("gl_point needs a GL_n root datum");
    slopes = dominant_sort(datum, std::move(slopes));
    Rational s = 0;
    for (const auto& x : slopes) s += x;
    if (!is_integer(s)) throw std::invalid_argument("slopes " + slopes.str() + " have non-integral sum");
    KottwitzPoint b{slopes, {boost::multiprecision::numerator(s).convert_to<long long>()}};
    validate(datum, b);
    return b;
}

/// The basic element with Kottwitz invariant kappa.
inline KottwitzPoint basic_element(const RootDatum& datum, const std::vector<long long>& kappa) {
    const std::size_t n = static_cast<std::size_t>(datum.rank());
    if (datum.is_gl()) {
        if (kappa.size() != 1) throw std::invalid_argument("GL_n kappa must be a single integer");
        return {RationalCochar(n, Rational(kappa[0], static_cast<long long>(n))), kappa};
    }
    auto group = datum.pi1();
    if (kappa.size() != group.torsion.size()) throw std::invalid_argument("kappa has the wrong shape for pi_1(G)");
    for (std::size_t i = 0; i < kappa.size(); ++i)
        if (kappa[i] < 0 || kappa[i] >= group.torsion[i]) throw std::invalid_argument("kappa out of range");
    return {RationalCochar(n), kappa};
}

inline KottwitzPoint basic_element(const RootDatum& datum, long long kappa) {
    return basic_element(datum, std::vector<long long>{kappa});
}

namespace detail {

// Newton polygons with integral breakpoints from (0,0) to (n, total) lying
// on or below the polygon of mu. Blocks have strictly decreasing slopes.
inline void newton_polygons(const std::vector<long long>& mu_partial, long long n, long long x, long long y,
                            std::optional<Rational> prev_slope, std::vector<Rational>& current,
                            std::vector<RationalCochar>& out) {
    const long long total = mu_partial[n];
    if (x == n) {
        if (y == total) out.emplace_back(current);
        return;
    }
    for (long long m = 1; x + m <= n; ++m) {
        const long long rest = n - x - m;
        // rise range: below the mu polygon at x+m, and above the line that
        // still lets the remaining blocks have smaller slopes.
        long long hi = mu_partial[x + m] - y;
        long long lo = rest == 0 ? total - y : std::numeric_limits<long long>::min();
        if (rest == 0 && lo > hi) continue;
        if (rest > 0) {
            // need d/m > (total - y - d)/rest  <=>  d (rest + m) > m (total - y)
            Rational bound = Rational(m * (total - y), rest + m);
            lo = floor_div(bound).convert_to<long long>() + 1;
        }
        for (long long d = lo; d <= hi; ++d) {
            Rational slope(d, m);
            if (prev_slope && slope >= *prev_slope) break;
            if (rest == 0 && y + d != total) continue;
            for (long long i = 0; i < m; ++i) current.push_back(slope);
            newton_polygons(mu_partial, n, x + m, y + d, slope, current, out);
            current.resize(current.size() - static_cast<std::size_t>(m));
        }
    }
}

inline Rational partial_sum_weight(const RationalCochar& nu) {
    Rational s = 0, acc = 0;
    for (const auto& x : nu) {
        acc += x;
        s += acc;
    }
    return s;
}

}  // namespace detail

/// B(G, mu). For GL_n this is exact: integral-breakpoint Newton polygons
/// under mu with the same endpoint. For other families the result is the
/// dominant rational candidate set mu - sum c_i alpha_i^vee with c_i in
/// (1/N)Z, N = |pi_1 torsion| * Coxeter number, passed through `filter`.
/// Output is sorted along a linear extension of the dominance order.
inline std::vector<KottwitzPoint> enumerate_BGmu(const RootDatum& datum, const Cochar& mu,
                                                 const std::function<bool(const KottwitzPoint&)>& filter = {}) {
    datum.check_cochar(mu);
    if (!is_dominant(datum, mu)) throw std::invalid_argument("mu = " + mu.str() + " is not dominant");
    std::vector<KottwitzPoint> out;
    if (datum.is_gl()) {
        const long long n = datum.rank();
        std::vector<long long> partial(static_cast<std::size_t>(n + 1), 0);
        for (long long i = 0; i < n; ++i) partial[i + 1] = partial[i] + mu[i];
        std::vector<Rational> current;
        std::vector<RationalCochar> polys;
        detail::newton_polygons(partial, n, 0, 0, std::nullopt, current, polys);
        for (auto& nu : polys) out.push_back({std::move(nu), {partial[n]}});
    } else {
        auto group = datum.pi1();
        long long torsion = 1;
        for (auto t : group.torsion) torsion *= t;
        const long long N = torsion * datum.coxeter_number();
        auto cmu = simple_coroot_coordinates(datum, mu);
        if (!cmu) throw std::logic_error("mu outside the coroot span of a semisimple datum");
        std::vector<long long> bound;
        unsigned long long grid = 1;
        for (const auto& c : *cmu) {
            bound.push_back(floor_div(c * N).convert_to<long long>());
            grid *= static_cast<unsigned long long>(bound.back() + 1);
            if (grid > 5'000'000ULL) throw std::invalid_argument("B(G,mu) candidate grid too large");
        }
        const auto simple = datum.simple_coroots();
        std::vector<long long> idx(bound.size(), 0);
        const RationalCochar rmu = to_rational(mu);
        for (;;) {
            RationalCochar nu = rmu;
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t k = 0; k < nu.size(); ++k) nu[k] -= Rational(idx[i], N) * simple[i][k];
            if (is_dominant(datum, nu)) out.push_back({nu, datum.kappa(mu)});
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] > bound[pos]) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
    }
    if (filter) std::erase_if(out, [&](const KottwitzPoint& b) { return !filter(b); });
    std::sort(out.begin(), out.end(), [](const KottwitzPoint& a, const KottwitzPoint& b) {
        Rational wa = detail::partial_sum_weight(a.nu), wb = detail::partial_sum_weight(b.nu);
        if (wa != wb) return wa < wb;
        return a.nu < b.nu;
    });
    return out;
}

/// Which way the closure relation is read. `closure`: b' is a specialization
/// of b iff nu_b' >= nu_b. `generization` reverses the comparison.
enum class Direction { closure, generization };

/// Elements b' of `within` related to b by the closure order.
inline std::vector<KottwitzPoint> specializations(const RootDatum& datum, const KottwitzPoint& b,
                                                  const std::vector<KottwitzPoint>& within, bool proper,
                                                  Direction direction = Direction::closure) {
    std::vector<KottwitzPoint> out;
    for (const auto& c : within) {
        if (c.kappa != b.kappa)
            throw std::invalid_argument("mixed kappa: " + c.str() + " and " + b.str() + " lie in different components");
        if (proper && c == b) continue;
        bool related = direction == Direction::closure ? dominance_leq(datum, b.nu, c.nu) : dominance_leq(datum, c.nu, b.nu);
        if (related) out.push_back(c);
    }
    return out;
}

/// One slope block of G_b for GL_n: GL_{matrix_degree}(D) with D central of
/// invariant slope mod 1 and index division_degree.
struct LeviBlock {
    Rational slope;
    int size = 0;
    int division_degree = 1;
    int matrix_degree = 0;

    bool split() const { return division_degree == 1; }
    std::string describe() const {
        std::string gl = "GL" + std::to_string(matrix_degree);
        if (split()) return gl;
        return gl + "(D_" + to_string(slope - Rational(floor_div(slope))) + ")";
    }
    friend bool operator==(const LeviBlock&, const LeviBlock&) = default;
};

/// Slopes of G_b coordinates, ascending. This is the slot order used for
/// elements of G_b(F) everywhere in the library.
inline std::vector<Rational> slot_slopes(const KottwitzPoint& b) {
    std::vector<Rational> s(b.nu.begin(), b.nu.end());
    std::sort(s.begin(), s.end());
    return s;
}

inline RationalCochar slot_newton(const KottwitzPoint& b) { return RationalCochar(slot_slopes(b)); }

/// Blocks of G_b in ascending slope order.
inline std::vector<LeviBlock> Gb_levi_description(const RootDatum& datum, const KottwitzPoint& b) {
    if (!datum.is_gl()) throw std::invalid_argument("G_b block structure is implemented for GL_n only");
    validate(datum, b);
    std::vector<LeviBlock> blocks;
    for (const auto& s : slot_slopes(b)) {
        if (blocks.empty() || blocks.back().slope != s) blocks.push_back({s, 0, 1, 0});
        ++blocks.back().size;
    }
    for (auto& blk : blocks) {
        blk.division_degree = boost::multiprecision::denominator(blk.slope).convert_to<int>();
        blk.matrix_degree = blk.size / blk.division_degree;
    }
    return blocks;
}

inline std::string describe_Gb(const std::vector<LeviBlock>& blocks) {
    std::string out;
    for (const auto& blk : blocks) {
        if (!out.empty()) out += " x ";
        out += blk.describe();
    }
    return out;
}

/// Covering relations of the dominance order, as index pairs (lower, upper).
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const RootDatum& datum,
                                                                    const std::vector<KottwitzPoint>& points) {
    const std::size_t n = points.size();
    auto less = [&](std::size_t i, std::size_t j) {
        return i != j && points[i].kappa == points[j].kappa && dominance_leq(datum, points[i].nu, points[j].nu) &&
               !(points[i].nu == points[j].nu);
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!less(i, j)) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k)
                if (less(i, k) && less(k, j)) covered = false;
            if (covered) edges.emplace_back(i, j);
        }
    return edges;
}

/// Graphviz rendering of the specialization order; edges point from b to
/// its immediate specializations.
inline std::string hasse_dot(const RootDatum& datum, const std::vector<KottwitzPoint>& points) {
    std::ostringstream out;
    out << "digraph BGmu {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        out << "  n" << i << " [label=\"" << points[i].nu.str();
        if (is_basic(datum, points[i])) out << "\\nbasic";
        out << "\"];\n";
    }
    for (const auto& [lo, hi] : hasse_edges(datum, points)) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace shtrace
