#pragma once

// Exact arithmetic: big rationals, elements of Q(sqrt d) embedded in a
// p-adic field F, valuations and normalized norms |p| = p^{-[F:Q_p]}.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace shtrace {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
    auto num = boost::multiprecision::numerator(x);
    auto den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "n", "-n", "n/m".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

inline bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

inline Integer floor_div(const Rational& x) {
    Integer num = boost::multiprecision::numerator(x);
    Integer den = boost::multiprecision::denominator(x);
    Integer q = num / den;
    if (num % den != 0 && num < 0) q -= 1;
    return q;
}

namespace detail {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline Rational rpow(std::int64_t base, const Integer& exponent) {
    if (exponent >= 0) return Rational(ipow(Integer(base), exponent.convert_to<unsigned long>()));
    return Rational(Integer(1), ipow(Integer(base), (-exponent).convert_to<unsigned long>()));
}

// Largest k with p^k | n, n != 0.
inline long vp(Integer n, std::int64_t p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    long k = 0;
    Integer q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, Integer(p), q, r);
        if (r != 0) return k;
        n = q;
        ++k;
    }
}

inline long vp(const Rational& x, std::int64_t p) {
    return vp(boost::multiprecision::numerator(x), p) - vp(boost::multiprecision::denominator(x), p);
}

inline std::int64_t mod(const Integer& n, std::int64_t m) {
    Integer r = n % m;
    if (r < 0) r += m;
    return r.convert_to<std::int64_t>();
}

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
    __int128 result = 1, base = b % m;
    while (e > 0) {
        if (e & 1) result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

inline bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    Integer r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

// Writes n = s^2 * k with k squarefree as far as trial division up to 10^6
// can tell (a leftover perfect square cofactor is also pulled out).
inline std::pair<Integer, Integer> square_part(Integer n) {
    Integer s = 1;
    Integer k = n < 0 ? Integer(-1) : Integer(1);
    if (n < 0) n = -n;
    for (std::int64_t i = 2; i <= 1000000 && Integer(i) * i <= n; ++i) {
        int count = 0;
        while (n % i == 0) {
            n /= i;
            ++count;
        }
        for (int c = 0; c < count / 2; ++c) s *= i;
        if (count % 2 == 1) k *= i;
    }
    if (n > 1) {
        if (is_perfect_square(n))
            s *= boost::multiprecision::sqrt(n);
        else
            k *= n;
    }
    return {s, k};
}

}  // namespace detail

/// Numerical invariants of a finite extension F/Q_p.
struct FieldParams {
    std::int64_t p = 2;
    int f = 1;  ///< residue degree
    int e = 1;  ///< ramification index

    FieldParams() = default;
    FieldParams(std::int64_t prime, int residue_degree, int ramification)
        : p(prime), f(residue_degree), e(ramification) {
        validate();
    }

    void validate() const {
        if (!detail::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
        if (f < 1) throw std::invalid_argument("residue degree f must be >= 1");
        if (e < 1) throw std::invalid_argument("ramification index e must be >= 1");
    }

    int degree() const { return e * f; }
    Integer q() const { return detail::ipow(Integer(p), static_cast<unsigned long>(f)); }

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// How F(sqrt d) sits over F.
enum class QuadraticKind { split, unramified, ramified, undetermined };

inline const char* to_string(QuadraticKind k) {
    switch (k) {
        case QuadraticKind::split: return "split";
        case QuadraticKind::unramified: return "unramified";
        case QuadraticKind::ramified: return "ramified";
        case QuadraticKind::undetermined: return "undetermined";
    }
    return "?";
}

/// Square class of a squarefree integer d over F. A ramified Q_p(sqrt d)
/// inside an F with even e depends on which ramified extension F is, which
/// the invariants (p, f, e) do not record; that case is `undetermined`.
inline QuadraticKind quadratic_kind(const Integer& d, const FieldParams& params) {
    params.validate();
    if (d == 0) throw std::invalid_argument("d = 0 does not define a quadratic extension");
    const std::int64_t p = params.p;
    long v = detail::vp(d, p);
    Integer unit = d;
    for (long i = 0; i < v; ++i) unit /= p;
    if (v % 2 == 0) {
        // d = p^{2k} u; even v is always 0 for squarefree d, kept general
        bool square_mod;
        bool unramified;
        if (p == 2) {
            std::int64_t r = detail::mod(unit, 8);
            square_mod = (r == 1);
            unramified = (r == 5);
        } else {
            std::int64_t r = detail::mod(unit, p);
            std::int64_t legendre = detail::powmod(r, (p - 1) / 2, p);
            square_mod = (legendre == 1);
            unramified = !square_mod;
        }
        if (square_mod) return QuadraticKind::split;
        if (unramified) return params.f % 2 == 0 ? QuadraticKind::split : QuadraticKind::unramified;
    }
    return params.e % 2 == 1 ? QuadraticKind::ramified : QuadraticKind::undetermined;
}

/// a + b sqrt(d) with a, b rational and d a squarefree integer != 1, or a
/// plain rational (b = 0, d = 0).
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Rational value) : a_(std::move(value)) {}  // NOLINT: implicit by intent
    FieldElement(long long value) : a_(value) {}            // NOLINT
    FieldElement(int value) : a_(value) {}                  // NOLINT

    /// Builds a + b sqrt(d); d is reduced to a squarefree integer and must
    /// not be a rational square.
    static FieldElement quadratic(const Rational& a, const Rational& b, const Rational& d) {
        if (d == 0) throw std::invalid_argument("d must be nonzero");
        Integer n = boost::multiprecision::numerator(d);
        Integer m = boost::multiprecision::denominator(d);
        // sqrt(n/m) = sqrt(n m) / m
        auto [s, k] = detail::square_part(n * m);
        if (k == 1) throw std::invalid_argument("d = " + to_string(d) + " is a square in Q");
        FieldElement x;
        x.a_ = a;
        x.b_ = b * Rational(s, m);
        x.d_ = k;
        x.normalize();
        return x;
    }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    /// Squarefree radicand; 0 for rational elements.
    const Integer& d() const { return d_; }

    FieldElement conjugate() const {
        FieldElement x = *this;
        x.b_ = -x.b_;
        return x;
    }

    /// N(x) = a^2 - d b^2 for quadratic elements, x itself for rationals.
    Rational field_norm() const {
        if (is_rational()) return a_;
        return a_ * a_ - Rational(d_) * b_ * b_;
    }

    const Rational& as_rational() const {
        if (!is_rational()) throw std::domain_error("element " + str() + " is not rational");
        return a_;
    }

    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (is_rational()) return FieldElement(1 / a_);
        Rational n = field_norm();
        FieldElement x;
        x.a_ = a_ / n;
        x.b_ = -b_ / n;
        x.d_ = d_;
        return x;
    }

    FieldElement& operator+=(const FieldElement& o) {
        d_ = common_d(o);
        a_ += o.a_;
        b_ += o.b_;
        normalize();
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        d_ = common_d(o);
        a_ -= o.a_;
        b_ -= o.b_;
        normalize();
        return *this;
    }
    FieldElement& operator*=(const FieldElement& o) {
        Integer d = common_d(o);
        Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        d_ = std::move(d);
        normalize();
        return *this;
    }
    FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

    friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
    friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
    friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
    friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }
    FieldElement operator-() const {
        FieldElement x = *this;
        x.a_ = -x.a_;
        x.b_ = -x.b_;
        return x;
    }

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }

    std::string str() const {
        if (is_rational()) return to_string(a_);
        return to_string(a_) + (b_ < 0 ? " - " : " + ") + to_string(b_ < 0 ? Rational(-b_) : b_) + "*sqrt(" +
               d_.str() + ")";
    }

private:
    Integer common_d(const FieldElement& o) const {
        if (is_rational()) return o.d_;
        if (o.is_rational() || o.d_ == d_) return d_;
        throw std::domain_error("elements of different quadratic fields: sqrt(" + d_.str() + ") vs sqrt(" +
                                o.d_.str() + ")");
    }
    void normalize() {
        if (b_ == 0) d_ = 0;
    }

    Rational a_{0};
    Rational b_{0};
    Integer d_{0};
};

/// p-adic valuation on F normalized by val(p) = 1. Quadratic elements use
/// val(x) = val(N(x)) / 2, which requires sqrt(d) not to lie in F.
inline Rational val(const FieldElement& x, const FieldParams& params) {
    if (x.is_zero()) throw std::domain_error("valuation of zero");
    if (x.is_rational()) return Rational(detail::vp(x.a(), params.p));
    QuadraticKind kind = quadratic_kind(x.d(), params);
    if (kind == QuadraticKind::split)
        throw std::domain_error("sqrt(" + x.d().str() + ") lies in F; the element is not quadratic over F");
    if (kind == QuadraticKind::undetermined)
        throw std::domain_error("square class of " + x.d().str() + " in F is undetermined by (p, f, e)");
    return Rational(detail::vp(x.field_norm(), params.p), 2);
}

/// |x| = p^{-e f val(x)}; |0| = 0. Irrational values are rejected.
inline Rational norm_F(const FieldElement& x, const FieldParams& params) {
    if (x.is_zero()) return Rational(0);
    Rational exponent = -Rational(params.degree()) * val(x, params);
    if (!is_integer(exponent))
        throw std::domain_error("|" + x.str() + "| = " + std::to_string(params.p) + "^(" + to_string(exponent) +
                                ") is irrational");
    return detail::rpow(params.p, boost::multiprecision::numerator(exponent));
}

inline FieldElement one_minus(const FieldElement& x) { return FieldElement(1) - x; }

}  // namespace shtrace
