#pragma once

// Based root data of split reductive groups in standard coordinates.
// GL_n is fully supported; SL_n, Sp_2n and SO_n are carried as data.

#include "shtrace/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shtrace {

/// Coordinate vector tagged with the lattice it lives in.
template <class T, class Tag>
class Coordinates {
public:
    using value_type = T;

    Coordinates() = default;
    explicit Coordinates(std::vector<T> entries) : entries_(std::move(entries)) {}
    Coordinates(std::initializer_list<T> entries) : entries_(entries) {}
    explicit Coordinates(std::size_t n, const T& value = T(0)) : entries_(n, value) {}

    std::size_t size() const { return entries_.size(); }
    const T& operator[](std::size_t i) const { return entries_[i]; }
    T& operator[](std::size_t i) { return entries_[i]; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    auto begin() { return entries_.begin(); }
    auto end() { return entries_.end(); }
    const std::vector<T>& entries() const { return entries_; }

    Coordinates& operator+=(const Coordinates& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    Coordinates& operator-=(const Coordinates& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }
    friend Coordinates operator+(Coordinates a, const Coordinates& b) { return a += b; }
    friend Coordinates operator-(Coordinates a, const Coordinates& b) { return a -= b; }
    friend Coordinates operator*(const T& k, Coordinates a) {
        for (auto& x : a.entries_) x *= k;
        return a;
    }
    Coordinates operator-() const {
        Coordinates r = *this;
        for (auto& x : r.entries_) x = -x;
        return r;
    }

    friend bool operator==(const Coordinates&, const Coordinates&) = default;
    friend bool operator<(const Coordinates& a, const Coordinates& b) { return a.entries_ < b.entries_; }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < size(); ++i) {
            if (i) out += ",";
            if constexpr (std::is_same_v<T, Rational>)
                out += to_string(entries_[i]);
            else
                out += std::to_string(entries_[i]);
        }
        return out + ")";
    }

private:
    void check_same_size(const Coordinates& o) const {
        if (o.size() != size()) throw std::invalid_argument("rank mismatch");
    }
    std::vector<T> entries_;
};

using Cochar = Coordinates<long long, struct CocharTag>;
using Character = Coordinates<long long, struct CharacterTag>;
using RationalCochar = Coordinates<Rational, struct RationalCocharTag>;

inline RationalCochar to_rational(const Cochar& c) {
    RationalCochar r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = Rational(c[i]);
    return r;
}

/// Canonical pairing X^*(T) x X_*(T) -> Z.
inline long long pairing(const Character& chi, const Cochar& lambda) {
    if (chi.size() != lambda.size())
        throw std::invalid_argument("rank mismatch in pairing: " + std::to_string(chi.size()) + " vs " +
                                    std::to_string(lambda.size()));
    long long s = 0;
    for (std::size_t i = 0; i < chi.size(); ++i) s += chi[i] * lambda[i];
    return s;
}

inline Rational pairing(const Character& chi, const RationalCochar& lambda) {
    if (chi.size() != lambda.size())
        throw std::invalid_argument("rank mismatch in pairing: " + std::to_string(chi.size()) + " vs " +
                                    std::to_string(lambda.size()));
    Rational s = 0;
    for (std::size_t i = 0; i < chi.size(); ++i) s += chi[i] * lambda[i];
    return s;
}

enum class GroupFamily { GL, SL, Sp, SO };

/// pi_1(G) = Z^free_rank x prod Z/torsion[i].
struct Pi1Group {
    int free_rank = 0;
    std::vector<long long> torsion;
};

enum class Sign { plus, minus };

class RootDatum {
public:
    static RootDatum GL(int n) {
        if (n < 1) throw std::invalid_argument("GL(n) needs n >= 1");
        RootDatum d(GroupFamily::GL, n, "GL" + std::to_string(n), n);
        d.add_type_a(n);
        d.finish();
        return d;
    }

    /// SL_n in the ambient coordinates of GL_n; cocharacters have sum zero.
    static RootDatum SL(int n) {
        if (n < 2) throw std::invalid_argument("SL(n) needs n >= 2");
        RootDatum d(GroupFamily::SL, n, "SL" + std::to_string(n), n);
        d.add_type_a(n);
        d.finish();
        return d;
    }

    /// Sp_2n, rank n.
    static RootDatum Sp(int two_n) {
        if (two_n < 2 || two_n % 2) throw std::invalid_argument("Sp(2n) needs an even size >= 2");
        int n = two_n / 2;
        RootDatum d(GroupFamily::Sp, n, "Sp" + std::to_string(two_n), two_n);
        d.add_pm_pairs(n);
        for (int i = 0; i < n; ++i) {
            d.add_positive(unit(n, i, 2), unit(n, i, 1));  // 2e_i, coroot e_i
        }
        std::vector<Character> simple;
        for (int i = 0; i + 1 < n; ++i) simple.push_back(diff(n, i, i + 1));
        simple.push_back(unit(n, n - 1, 2));
        d.set_simple(simple);
        d.finish();
        return d;
    }

    /// SO_n, n >= 3 (type B for odd n, D for even n >= 4).
    static RootDatum SO(int size) {
        if (size < 3) throw std::invalid_argument("SO(n) needs n >= 3");
        int n = size / 2;
        RootDatum d(GroupFamily::SO, n, "SO" + std::to_string(size), size);
        d.add_pm_pairs(n);
        std::vector<Character> simple;
        for (int i = 0; i + 1 < n; ++i) simple.push_back(diff(n, i, i + 1));
        if (size % 2 == 1) {
            for (int i = 0; i < n; ++i) d.add_positive(unit(n, i, 1), unit(n, i, 2));  // e_i, coroot 2e_i
            simple.push_back(unit(n, n - 1, 1));
        } else {
            if (n < 2) throw std::invalid_argument("SO(2n) needs n >= 2");
            Character last(static_cast<std::size_t>(n));
            last[n - 2] = 1;
            last[n - 1] = 1;
            simple.push_back(last);
        }
        d.set_simple(simple);
        d.finish();
        return d;
    }

    /// "GL3", "GL(3)", "SL(2)", "Sp(4)", "SO(5)", case-insensitive family.
    static RootDatum by_name(std::string_view name) {
        std::string s;
        for (char c : name)
            if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '_') s += c;
        std::size_t digits = s.find_first_of("0123456789");
        if (digits == std::string::npos || digits == 0) throw std::invalid_argument("unknown group '" + std::string(name) + "'");
        std::string family = s.substr(0, digits);
        for (auto& c : family) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(s.substr(digits), &used);
            if (used != s.size() - digits) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("unknown group '" + std::string(name) + "'");
        }
        if (family == "GL") return GL(n);
        if (family == "SL") return SL(n);
        if (family == "SP") return Sp(n);
        if (family == "SO") return SO(n);
        throw std::invalid_argument("unknown group '" + std::string(name) + "'");
    }

    GroupFamily family() const { return family_; }
    bool is_gl() const { return family_ == GroupFamily::GL; }
    const std::string& name() const { return name_; }
    /// Number of coordinates of X_*(T) (ambient for SL_n).
    int rank() const { return rank_; }
    /// n for GL_n/SL_n/SO_n, 2n for Sp_2n.
    int matrix_size() const { return matrix_size_; }

    const std::vector<Character>& roots() const { return roots_; }
    const std::vector<Cochar>& coroots() const { return coroots_; }
    const std::vector<std::size_t>& simple_indices() const { return simple_; }
    const std::vector<std::size_t>& positive_indices() const { return positive_; }

    std::vector<Character> simple_roots() const {
        std::vector<Character> r;
        for (auto i : simple_) r.push_back(roots_[i]);
        return r;
    }
    std::vector<Cochar> simple_coroots() const {
        std::vector<Cochar> r;
        for (auto i : simple_) r.push_back(coroots_[i]);
        return r;
    }
    std::vector<Character> positive_roots() const {
        std::vector<Character> r;
        for (auto i : positive_) r.push_back(roots_[i]);
        return r;
    }
    std::vector<Cochar> positive_coroots() const {
        std::vector<Cochar> r;
        for (auto i : positive_) r.push_back(coroots_[i]);
        return r;
    }

    Pi1Group pi1() const {
        switch (family_) {
            case GroupFamily::GL: return {1, {}};
            case GroupFamily::SL: return {0, {}};
            case GroupFamily::Sp: return {0, {}};
            case GroupFamily::SO: return {0, {2}};
        }
        return {};
    }

    /// Coxeter number |Phi| / (number of simple roots).
    long long coxeter_number() const {
        if (simple_.empty()) return 1;
        return static_cast<long long>(roots_.size() / simple_.size());
    }

    void check_cochar(const Cochar& c) const {
        if (static_cast<int>(c.size()) != rank_)
            throw std::invalid_argument("cocharacter " + c.str() + " has length " + std::to_string(c.size()) +
                                        ", expected " + std::to_string(rank_) + " for " + name_);
        if (family_ == GroupFamily::SL && std::accumulate(c.begin(), c.end(), 0LL) != 0)
            throw std::invalid_argument("cocharacter " + c.str() + " of " + name_ + " must have coordinate sum 0");
    }
    void check_size(std::size_t n) const {
        if (static_cast<int>(n) != rank_)
            throw std::invalid_argument("vector of length " + std::to_string(n) + " does not match rank " +
                                        std::to_string(rank_) + " of " + name_);
    }

    /// Image in pi_1(G): free coordinates then torsion residues.
    std::vector<long long> kappa(const Cochar& c) const {
        check_size(c.size());
        long long sum = std::accumulate(c.begin(), c.end(), 0LL);
        switch (family_) {
            case GroupFamily::GL: return {sum};
            case GroupFamily::SO: return {((sum % 2) + 2) % 2};
            default: return {};
        }
    }

    /// Image in pi_1(G) (x) Q.
    std::vector<Rational> pi1_rational(const RationalCochar& c) const {
        check_size(c.size());
        if (!is_gl()) return {};
        Rational s = 0;
        for (const auto& x : c) s += x;
        return {s};
    }

private:
    RootDatum(GroupFamily family, int rank, std::string name, int matrix_size)
        : family_(family), rank_(rank), matrix_size_(matrix_size), name_(std::move(name)) {}

    static Character diff(int n, int i, int j) {
        Character c(static_cast<std::size_t>(n));
        c[i] = 1;
        c[j] = -1;
        return c;
    }
    static Character unit(int n, int i, long long k) {
        Character c(static_cast<std::size_t>(n));
        c[i] = k;
        return c;
    }
    static Cochar as_cochar(const Character& c) { return Cochar(c.entries()); }

    void add_positive(const Character& root, const Character& coroot) {
        pending_.push_back({root, coroot});
    }

    void add_type_a(int n) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) add_positive(diff(n, i, j), diff(n, i, j));
        std::vector<Character> simple;
        for (int i = 0; i + 1 < n; ++i) simple.push_back(diff(n, i, i + 1));
        set_simple(simple);
    }

    void add_pm_pairs(int n) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                add_positive(diff(n, i, j), diff(n, i, j));
                Character s(static_cast<std::size_t>(n));
                s[i] = 1;
                s[j] = 1;
                add_positive(s, s);
            }
    }

    void set_simple(std::vector<Character> simple) { pending_simple_ = std::move(simple); }

    void finish() {
        for (const auto& [root, coroot] : pending_) {
            positive_.push_back(roots_.size());
            roots_.push_back(root);
            coroots_.push_back(as_cochar(coroot));
        }
        for (const auto& [root, coroot] : pending_) {
            roots_.push_back(-root);
            coroots_.push_back(-as_cochar(coroot));
        }
        for (const auto& s : pending_simple_) {
            auto it = std::find(roots_.begin(), roots_.end(), s);
            if (it == roots_.end()) throw std::logic_error("simple root missing from root list");
            simple_.push_back(static_cast<std::size_t>(it - roots_.begin()));
        }
        for (std::size_t i = 0; i < roots_.size(); ++i)
            if (pairing(roots_[i], coroots_[i]) != 2) throw std::logic_error("root/coroot pairing is not 2");
        pending_.clear();
        pending_simple_.clear();
    }

    GroupFamily family_;
    int rank_;
    int matrix_size_;
    std::string name_;
    std::vector<Character> roots_;
    std::vector<Cochar> coroots_;
    std::vector<std::size_t> simple_;
    std::vector<std::size_t> positive_;
    std::vector<std::pair<Character, Character>> pending_;
    std::vector<Character> pending_simple_;
};

/// Sum of the positive roots.
inline Character two_rho(const RootDatum& datum) {
    Character r(static_cast<std::size_t>(datum.rank()));
    for (const auto& a : datum.positive_roots()) r += a;
    return r;
}

/// Sum of the positive coroots (2 rho of the dual group).
inline Cochar two_rho_check(const RootDatum& datum) {
    Cochar r(static_cast<std::size_t>(datum.rank()));
    for (const auto& a : datum.positive_coroots()) r += a;
    return r;
}

/// Coordinates of v in the basis of simple coroots, if v lies in their
/// rational span.
template <class V>
std::optional<std::vector<Rational>> simple_coroot_coordinates(const RootDatum& datum, const V& v) {
    datum.check_size(v.size());
    const auto simple = datum.simple_coroots();
    const std::size_t rows = v.size(), cols = simple.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = simple[c][r];
        m[r][cols] = Rational(v[r]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t piv = row;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rational factor = m[r][c] / m[row][c];
            for (std::size_t k = c; k <= cols; ++k) m[r][k] -= factor * m[row][k];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (m[r][cols] != 0) return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][cols] / m[r][pivot_col[r]];
    return x;
}

template <class V>
bool is_dominant(const RootDatum& datum, const V& v) {
    datum.check_size(v.size());
    for (const auto& a : datum.simple_roots())
        if (pairing(a, v) < 0) return false;
    return true;
}

/// Dominance order b - a in the nonnegative cone of simple coroots.
/// Throws when a and b have different images in pi_1(G) (x) Q.
inline bool dominance_leq(const RootDatum& datum, const RationalCochar& a, const RationalCochar& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
    if (datum.pi1_rational(a) != datum.pi1_rational(b))
        throw std::invalid_argument("incomparable components: " + a.str() + " and " + b.str() +
                                    " have different images in pi_1(G)");
    if (datum.is_gl()) {
        // Partial sums of a bounded by those of b.
        Rational sa = 0, sb = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            sa += a[i];
            sb += b[i];
            if (sa > sb) return false;
        }
        return true;
    }
    auto coords = simple_coroot_coordinates(datum, b - a);
    if (!coords) throw std::invalid_argument("incomparable components: " + a.str() + " and " + b.str());
    return std::all_of(coords->begin(), coords->end(), [](const Rational& c) { return c >= 0; });
}

inline bool dominance_leq(const RootDatum& datum, const Cochar& a, const Cochar& b) {
    return dominance_leq(datum, to_rational(a), to_rational(b));
}

/// Same as dominance_leq but false (instead of an error) across components.
inline bool dominance_leq_or_false(const RootDatum& datum, const RationalCochar& a, const RationalCochar& b) {
    if (datum.pi1_rational(a) != datum.pi1_rational(b)) return false;
    return dominance_leq(datum, a, b);
}

/// Reflection s_alpha(x) = x - <alpha, x> alpha^vee.
template <class V>
V reflect(const RootDatum& datum, std::size_t root_index, const V& x) {
    const auto& alpha = datum.roots()[root_index];
    const auto& coroot = datum.coroots()[root_index];
    auto k = pairing(alpha, x);
    V r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= k * coroot[i];
    return r;
}

/// The dominant representative of the Weyl orbit of x.
template <class V>
V dominant_sort(const RootDatum& datum, V x) {
    datum.check_size(x.size());
    if (datum.family() == GroupFamily::GL || datum.family() == GroupFamily::SL) {
        std::vector<typename V::value_type> e = x.entries();
        std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a > b; });
        return V(std::move(e));
    }
    for (;;) {
        bool moved = false;
        for (auto i : datum.simple_indices()) {
            if (pairing(datum.roots()[i], x) < 0) {
                x = reflect(datum, i, x);
                moved = true;
            }
        }
        if (!moved) return x;
    }
}

/// Roots alpha with <alpha, nu> > 0 (plus) or < 0 (minus).
inline std::vector<Character> positive_roots_of_parabolic(const RootDatum& datum, const RationalCochar& nu, Sign sign) {
    datum.check_size(nu.size());
    std::vector<Character> out;
    for (const auto& a : datum.roots()) {
        Rational v = pairing(a, nu);
        if ((sign == Sign::plus && v > 0) || (sign == Sign::minus && v < 0)) out.push_back(a);
    }
    return out;
}

/// Weyl group element acting on X_*(T) as an integer matrix (row-major).
struct WeylElement {
    std::vector<long long> matrix;
    int length = 0;
    int sign() const { return length % 2 ? -1 : 1; }

    template <class V>
    V apply(const V& x) const {
        const std::size_t n = x.size();
        V r(n);
        for (std::size_t i = 0; i < n; ++i) {
            typename V::value_type s = 0;
            for (std::size_t j = 0; j < n; ++j) s += matrix[i * n + j] * x[j];
            r[i] = s;
        }
        return r;
    }
};

/// All Weyl group elements by breadth-first search over simple reflections.
inline std::vector<WeylElement> weyl_group(const RootDatum& datum) {
    const std::size_t n = static_cast<std::size_t>(datum.rank());
    std::vector<std::vector<long long>> gens;
    for (auto idx : datum.simple_indices()) {
        std::vector<long long> m(n * n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            Cochar e(n);
            e[j] = 1;
            Cochar img = reflect(datum, idx, e);
            for (std::size_t i = 0; i < n; ++i) m[i * n + j] = img[i];
        }
        gens.push_back(std::move(m));
    }
    std::vector<long long> id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    std::vector<WeylElement> out{{id, 0}};
    std::set<std::vector<long long>> seen{id};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& g : gens) {
            std::vector<long long> prod(n * n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    if (g[i * n + k])
                        for (std::size_t j = 0; j < n; ++j) prod[i * n + j] += g[i * n + k] * out[head].matrix[k * n + j];
            if (seen.insert(prod).second) out.push_back({prod, out[head].length + 1});
        }
    }
    return out;
}

}  // namespace shtrace
