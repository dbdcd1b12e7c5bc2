#pragma once

// Weight multiplicities dim r_mu[lambda] of the irreducible representation of
// the dual group with highest weight mu in X_*(T). The dual group's roots are
// the coroots of G and its coroots are the roots of G.

#include "shtrace/rootdata.hpp"

#include <deque>
#include <functional>

namespace shtrace {

/// Dominant weights of r_mu with their multiplicities.
class WeightMultiplicityTable {
public:
    WeightMultiplicityTable() = default;
    WeightMultiplicityTable(Cochar mu, std::map<Cochar, long long> entries)
        : mu_(std::move(mu)), entries_(std::move(entries)) {}

    const Cochar& mu() const { return mu_; }
    const std::map<Cochar, long long>& entries() const { return entries_; }

    /// Multiplicity of an arbitrary weight (Weyl invariant); 0 off the table.
    long long multiplicity(const RootDatum& datum, const Cochar& lambda) const {
        auto it = entries_.find(dominant_sort(datum, lambda));
        return it == entries_.end() ? 0 : it->second;
    }

    friend bool operator==(const WeightMultiplicityTable&, const WeightMultiplicityTable&) = default;

private:
    Cochar mu_;
    std::map<Cochar, long long> entries_;
};

namespace detail {

template <class V>
Rational dot(const V& a, const V& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * Rational(b[i]);
    return s;
}

inline Rational height(const RootDatum& datum, const Cochar& v) {
    auto c = simple_coroot_coordinates(datum, v);
    if (!c) throw std::invalid_argument("vector " + v.str() + " is not in the coroot span");
    Rational h = 0;
    for (const auto& x : *c) h += x;
    return h;
}

inline void check_highest_weight(const RootDatum& datum, const Cochar& mu) {
    datum.check_cochar(mu);
    if (!is_dominant(datum, mu)) throw std::invalid_argument("mu = " + mu.str() + " is not dominant");
}

}  // namespace detail

/// Dominant weights lambda <= mu in the same coset of the coroot lattice,
/// found by walking root steps from mu through dominant representatives.
inline std::vector<Cochar> dominant_weights(const RootDatum& datum, const Cochar& mu) {
    detail::check_highest_weight(datum, mu);
    const auto pos = datum.positive_coroots();
    const RationalCochar rmu = to_rational(mu);
    std::set<Cochar> seen{mu};
    std::deque<Cochar> queue{mu};
    while (!queue.empty()) {
        Cochar lam = queue.front();
        queue.pop_front();
        for (const auto& beta : pos) {
            for (int s : {-1, 1}) {
                Cochar next = dominant_sort(datum, lam + static_cast<long long>(s) * beta);
                if (seen.count(next)) continue;
                if (!dominance_leq_or_false(datum, to_rational(next), rmu)) continue;
                seen.insert(next);
                queue.push_back(next);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

/// Size of the Weyl orbit of lambda.
inline long long orbit_size(const RootDatum& datum, const Cochar& lambda) {
    std::set<Cochar> orbit{lambda};
    std::deque<Cochar> queue{lambda};
    while (!queue.empty()) {
        Cochar x = queue.front();
        queue.pop_front();
        for (auto i : datum.simple_indices()) {
            Cochar y = reflect(datum, i, x);
            if (orbit.insert(y).second) queue.push_back(y);
        }
    }
    return static_cast<long long>(orbit.size());
}

/// Freudenthal's recursion over dominant weights,
///   m(l) = 2 sum_{b>0} sum_{k>=1} m(l + k b)(l + k b, b) / (|mu+rho|^2 - |l+rho|^2),
/// processed by increasing height of mu - l (ties lexicographic).
inline WeightMultiplicityTable freudenthal(const RootDatum& datum, const Cochar& mu) {
    auto weights = dominant_weights(datum, mu);
    std::vector<std::pair<Rational, Cochar>> order;
    for (auto& w : weights) order.emplace_back(detail::height(datum, mu - w), w);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return b.second < a.second;
    });

    const auto pos = datum.positive_coroots();
    RationalCochar rho = to_rational(two_rho_check(datum));
    for (auto& x : rho) x /= 2;
    RationalCochar mu_rho = to_rational(mu) + rho;
    const Rational top = detail::dot(mu_rho, mu_rho);

    std::map<Cochar, long long> mult;
    for (const auto& [h, lam] : order) {
        if (lam == mu) {
            mult[lam] = 1;
            continue;
        }
        Rational sum = 0;
        for (const auto& beta : pos) {
            for (long long k = 1;; ++k) {
                Cochar up = lam + k * beta;
                auto it = mult.find(dominant_sort(datum, up));
                if (it == mult.end()) break;
                sum += Rational(it->second) * detail::dot(up, beta);
            }
        }
        RationalCochar lr = to_rational(lam) + rho;
        Rational denom = top - detail::dot(lr, lr);
        if (denom <= 0) throw std::logic_error("Freudenthal denominator vanished at " + lam.str());
        Rational m = 2 * sum / denom;
        if (!is_integer(m)) throw std::logic_error("non-integral multiplicity at " + lam.str());
        long long value = boost::multiprecision::numerator(m).convert_to<long long>();
        if (value > 0) mult[lam] = value;
    }
    return {mu, std::move(mult)};
}

/// Kostant's formula m(l) = sum_w sgn(w) P(w(mu+rho) - (l+rho)) with the
/// partition function counted by exhaustive enumeration. Guarded to rank <= 4
/// and height(mu - l) <= 12.
inline long long kostant_oracle(const RootDatum& datum, const Cochar& mu, const Cochar& lambda) {
    detail::check_highest_weight(datum, mu);
    datum.check_cochar(lambda);
    if (datum.rank() > 4) throw std::invalid_argument("kostant_oracle guard: rank > 4");
    const Cochar dom = dominant_sort(datum, lambda);
    auto diff = simple_coroot_coordinates(datum, mu - dom);
    if (!diff) return 0;
    Rational h = 0;
    for (const auto& c : *diff) h += c;
    if (h > 12) throw std::invalid_argument("kostant_oracle guard: height(mu - lambda) > 12");

    // positive dual roots in simple coordinates
    std::vector<std::vector<long long>> pos;
    for (const auto& beta : datum.positive_coroots()) {
        auto c = simple_coroot_coordinates(datum, beta);
        std::vector<long long> v;
        for (const auto& x : *c) v.push_back(boost::multiprecision::numerator(x).convert_to<long long>());
        pos.push_back(std::move(v));
    }
    std::function<long long(std::size_t, std::vector<long long>&)> count = [&](std::size_t i,
                                                                               std::vector<long long>& rest) {
        if (i == pos.size()) return std::all_of(rest.begin(), rest.end(), [](long long x) { return x == 0; }) ? 1LL : 0LL;
        long long total = count(i + 1, rest);
        int k = 0;
        for (;;) {
            bool ok = true;
            for (std::size_t j = 0; j < rest.size(); ++j) {
                rest[j] -= pos[i][j];
                if (rest[j] < 0) ok = false;
            }
            ++k;
            if (!ok) break;
            total += count(i + 1, rest);
        }
        for (std::size_t j = 0; j < rest.size(); ++j) rest[j] += k * pos[i][j];
        return total;
    };
    auto partition = [&](const Cochar& v) -> long long {
        auto c = simple_coroot_coordinates(datum, v);
        if (!c) return 0;
        std::vector<long long> rest;
        for (const auto& x : *c) {
            if (!is_integer(x) || x < 0) return 0;
            rest.push_back(boost::multiprecision::numerator(x).convert_to<long long>());
        }
        return count(0, rest);
    };

    // 2 rho keeps everything integral: w(mu+rho) - (l+rho) = (w(2mu+2rho) - (2l+2rho)) / 2
    const Cochar two_rho = two_rho_check(datum);
    const Cochar twice_mu = 2LL * mu + two_rho;
    const Cochar twice_l = 2LL * dom + two_rho;
    long long m = 0;
    for (const auto& w : weyl_group(datum)) {
        Cochar v = w.apply(twice_mu) - twice_l;
        bool even = std::all_of(v.begin(), v.end(), [](long long x) { return x % 2 == 0; });
        if (!even) continue;
        for (auto& x : v) x /= 2;
        m += w.sign() * partition(v);
    }
    return m;
}

/// Weyl dimension formula prod_{a>0} <a, mu + rho^vee> / <a, rho^vee>.
inline Integer weyl_dimension(const RootDatum& datum, const Cochar& mu) {
    detail::check_highest_weight(datum, mu);
    const Cochar two_rho = two_rho_check(datum);
    const Cochar shifted = 2LL * mu + two_rho;
    Rational d = 1;
    for (const auto& a : datum.positive_roots()) d *= Rational(pairing(a, shifted), pairing(a, two_rho));
    if (!is_integer(d)) throw std::logic_error("Weyl dimension is not an integer: root datum is inconsistent");
    return boost::multiprecision::numerator(d);
}

}  // namespace shtrace
