#pragma once

// Random strongly regular elements for property tests.

#include "shtrace/stconj.hpp"

#include <random>

namespace fixtures {

using shtrace::FieldParams;
using shtrace::Integer;
using shtrace::Rational;

/// Nonzero rational with a random power of p mixed in.
inline Rational random_rational(std::mt19937_64& rng, long long p, int spread = 3) {
    std::uniform_int_distribution<long long> num(-30, 30), den(1, 15), ex(-spread, spread);
    long long n = 0;
    while (n == 0) n = num(rng);
    Rational x(n, den(rng));
    long long k = ex(rng);
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) x = k < 0 ? x / p : x * p;
    return x;
}

inline std::vector<Rational> random_distinct(std::mt19937_64& rng, long long p, std::size_t n) {
    std::vector<Rational> out;
    while (out.size() < n) {
        Rational x = random_rational(rng, p);
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
}

/// Radicand whose square root lies outside F and whose norms stay
/// rational: a unit nonsquare when f is odd (unramified), p times a unit
/// when f is even (ramified, [F:Q_p] even).
inline Integer quadratic_radicand(const FieldParams& params) {
    if (params.f % 2 == 0) {
        if (params.e % 2 == 0) throw std::invalid_argument("no fixture radicand for even e and even f");
        return Integer(params.p == 2 ? 2 : params.p);
    }
    if (params.p == 2) return 5;
    for (long long u = 2;; ++u) {
        if (shtrace::quadratic_kind(u, params) == shtrace::QuadraticKind::unramified) return u;
    }
}

inline shtrace::SRElement random_quadratic(std::mt19937_64& rng, const FieldParams& params) {
    Integer d = quadratic_radicand(params);
    Rational b = 0;
    while (b == 0) b = random_rational(rng, params.p);
    std::uniform_int_distribution<int> zero(0, 4);
    Rational a = zero(rng) == 0 ? Rational(0) : random_rational(rng, params.p);
    return shtrace::SRElement::quadratic(a, b, Rational(d), params);
}

inline const std::vector<FieldParams>& test_fields() {
    static const std::vector<FieldParams> fields = [] {
        std::vector<FieldParams> v;
        for (long long p : {2, 3, 5})
            for (auto [e, f] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) v.emplace_back(p, f, e);
        return v;
    }();
    return fields;
}

}  // namespace fixtures
