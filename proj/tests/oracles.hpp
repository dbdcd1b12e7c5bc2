#pragma once

// Reference computations for the test suites, written without the library's
// valuation, enumeration or character code. Only the exact number types are
// shared.

#include "shtrace/exactnum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using shtrace::Integer;
using shtrace::Rational;

inline long vp(const Integer& n0, long long p) {
    Integer n = n0 < 0 ? Integer(-n0) : n0;
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline long vp(const Rational& x, long long p) {
    return vp(boost::multiprecision::numerator(x), p) - vp(boost::multiprecision::denominator(x), p);
}

/// p^k for an integer k.
inline Rational power(long long p, long k) {
    Rational r = 1;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) r = k < 0 ? r / p : r * p;
    return r;
}

/// |x|_F = p^{-e f v_p(x)} for nonzero rational x.
inline Rational abs_F(const Rational& x, long long p, int f, int e) { return power(p, -e * f * vp(x, p)); }

/// -2 + |1 - l1/l2|^{-1} + |1 - l2/l1|^{-1}: the character of St - 1 at a
/// split element of GL_2(F).
inline Rational st_minus_one_split(const Rational& l1, const Rational& l2, long long p, int f, int e) {
    return -2 + 1 / abs_F(1 - l1 / l2, p, f, e) + 1 / abs_F(1 - l2 / l1, p, f, e);
}

/// |1 - t1/t2||1 - t2/t1| - |1 - t1/t2|.
inline Rational cc_gl2(const Rational& t1, const Rational& t2, long long p, int f, int e) {
    return abs_F(1 - t1 / t2, p, f, e) * abs_F(1 - t2 / t1, p, f, e) - abs_F(1 - t1 / t2, p, f, e);
}

/// Norm from Q(sqrt d) of u + v sqrt(d).
inline Rational quad_norm(const Rational& u, const Rational& v, const Integer& d) { return u * u - Rational(d) * v * v; }

/// GL_3, b' with slopes (0 | 1/2, 1/2): slot 0 carries s in F, the quaternion
/// block carries x = a + b sqrt(d) and its conjugate. Uses |y||ybar| = |N(y)|.
///   all roots:      |N(1 - s/x)| |N(1 - x/s)|
///   negative roots: |N(1 - s/x)|
inline Rational cc_gl3(const Rational& s, const Rational& a, const Rational& b, const Integer& d, long long p, int f,
                       int e) {
    // 1 - s/x = (x - s)/x, so N(1 - s/x) = N(x - s)/N(x); 1 - x/s = (s - x)/s
    const Rational nx = quad_norm(a, b, d);
    const Rational n_minus = quad_norm(a - s, b, d) / nx;
    const Rational n_plus = quad_norm(s - a, -b, d) / (s * s);
    return abs_F(n_minus, p, f, e) * abs_F(n_plus, p, f, e) - abs_F(n_minus, p, f, e);
}

/// van Dijk's character of the normalized induction of x -> z_i^{ord(x)} on
/// GL_n at a split element with eigenvalues t, as a sum over all
/// assignments sigma of eigenvalues to characters:
///   sum_sigma prod_i z_i^{ord t_sigma(i)} prod_{i<j} |1 - t_sigma(j)/t_sigma(i)|^{-1}.
inline Rational van_dijk(const std::vector<Rational>& z, const std::vector<Rational>& t, long long p, int f, int e) {
    const std::size_t n = t.size();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    Rational total = 0;
    do {
        Rational term = 1;
        for (std::size_t i = 0; i < n; ++i) {
            long ord = e * vp(t[sigma[i]], p);
            term *= ord >= 0 ? Rational(boost::multiprecision::pow(boost::multiprecision::numerator(z[i]), ord)) /
                                   Rational(boost::multiprecision::pow(boost::multiprecision::denominator(z[i]), ord))
                             : Rational(boost::multiprecision::pow(boost::multiprecision::denominator(z[i]), -ord)) /
                                   Rational(boost::multiprecision::pow(boost::multiprecision::numerator(z[i]), -ord));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) term /= abs_F(1 - t[sigma[j]] / t[sigma[i]], p, f, e);
        total += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

/// Slope vectors of B(GL_n, mu) by brute force: every non-increasing
/// sequence of rationals with denominators <= n in [mu_n, mu_1], with
/// integral Newton-polygon breakpoints, the right total and partial sums
/// bounded by those of mu.
inline std::set<std::vector<Rational>> bgmu_bruteforce(const std::vector<long long>& mu) {
    const std::size_t n = mu.size();
    std::set<Rational> values;
    for (long long q = 1; q <= static_cast<long long>(n); ++q)
        for (long long k = mu.back() * q; k <= mu.front() * q; ++k) values.insert(Rational(k, q));
    std::vector<Rational> pool(values.rbegin(), values.rend());  // descending
    std::vector<long long> mu_partial(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) mu_partial[i + 1] = mu_partial[i] + mu[i];

    std::set<std::vector<Rational>> out;
    std::vector<Rational> current;
    auto integral_breaks = [&](const std::vector<Rational>& v) {
        std::map<Rational, long long> mult;
        for (const auto& x : v) ++mult[x];
        for (const auto& [slope, m] : mult)
            if ((Rational(m) * slope).str().find('/') != std::string::npos) return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t from, Rational partial) -> void {
        const std::size_t i = current.size();
        if (i == n) {
            if (partial == mu_partial[n] && integral_breaks(current)) out.insert(current);
            return;
        }
        for (std::size_t k = from; k < pool.size(); ++k) {
            Rational next = partial + pool[k];
            if (next > mu_partial[i + 1]) continue;
            current.push_back(pool[k]);
            self(self, k, next);
            current.pop_back();
        }
    };
    rec(rec, 0, Rational(0));
    return out;
}

}  // namespace oracle
