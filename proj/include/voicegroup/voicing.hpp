#pragma once

/**
 * @file voicing.hpp
 * @brief The voicing-reflection group J = <U, V, W> inside SL(3, Z/n).
 *
 * U, V and W reflect a voicing across the sum of two of its own voices:
 *
 *     U = J^{1,2},  V = J^{2,3},  W = J^{3,1},
 *     J^{r,s}(v) = -v + (v_r + v_s)   (componentwise).
 *
 * Every element of J is uniquely U^k (UV)^m (UW)^n with k in {0,1} and
 * m, n in Z/n, so |J| = 2n^2. The triple (k, m, n) is the canonical
 * representation; matrices are derived from it.
 *
 * With UV and UW commuting and U inverting both by conjugation,
 *
 *     (k1,m1,n1)(k2,m2,n2) = (k1 xor k2, m2 + (-1)^k2 m1, n2 + (-1)^k2 n1),
 *
 * and (UV)^m (UW)^n acts as v + m(z-x) + n(z-y) on v = (x,y,z).
 */

#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace vg {

/// Raised when a matrix or element does not lie in the requested group.
class NotInGroup : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInJ : public NotInGroup {
public:
    NotInJ() : NotInGroup("matrix is not in the group <U,V,W>") {}
};

enum class GeneratorTag { U, V, W };

/// Voice indices (1-based) of the reflection J^{r,s} named by g.
constexpr std::pair<int, int> generator_voices(GeneratorTag g) {
    switch (g) {
        case GeneratorTag::U: return {1, 2};
        case GeneratorTag::V: return {2, 3};
        case GeneratorTag::W: return {3, 1};
    }
    return {1, 2};
}

/// The generator J^{r,s} (unordered indices, r != s).
inline GeneratorTag generator_from_voices(int r, int s) {
    if (r == s || r < 1 || r > 3 || s < 1 || s > 3) throw std::invalid_argument("J^{r,s} needs distinct voices in 1..3");
    const int missing = 6 - r - s;
    return missing == 3 ? GeneratorTag::U : missing == 1 ? GeneratorTag::V : GeneratorTag::W;
}

inline char generator_name(GeneratorTag g) { return "UVW"[static_cast<int>(g)]; }

inline Mat3 generator_matrix(GeneratorTag g, Modulus n) {
    switch (g) {
        case GeneratorTag::U: return Mat3({{0, 1, 0}, {1, 0, 0}, {1, 1, -1}}, n);
        case GeneratorTag::V: return Mat3({{-1, 1, 1}, {0, 0, 1}, {0, 1, 0}}, n);
        case GeneratorTag::W: return Mat3({{0, 0, 1}, {1, -1, 1}, {1, 0, 0}}, n);
    }
    throw std::logic_error("unknown generator");
}

/// J^{r,s}(v): every entry e becomes -e + v_r + v_s.
inline Vec3 j_reflection(int r, int s, const Vec3& v) {
    if (r == s || r < 1 || r > 3 || s < 1 || s > 3) throw std::invalid_argument("J^{r,s} needs distinct voices in 1..3");
    const std::int64_t axis = v[r - 1] + v[s - 1];
    return Vec3(axis - v[0], axis - v[1], axis - v[2], v.modulus());
}

/// U^k (UV)^m (UW)^n.
class JElement {
public:
    JElement(int k, std::int64_t m, std::int64_t n, Modulus mod)
        : k_(k), m_(detail::mod(m, mod.value())), n_(detail::mod(n, mod.value())), mod_(mod) {
        if (k != 0 && k != 1) throw std::invalid_argument("JElement: k must be 0 or 1");
    }

    static JElement identity(Modulus mod) { return JElement(0, 0, 0, mod); }

    int k() const { return k_; }
    std::int64_t m() const { return m_; }
    std::int64_t n() const { return n_; }
    const Modulus& modulus() const { return mod_; }
    bool is_identity() const { return k_ == 0 && m_ == 0 && n_ == 0; }

    friend JElement operator*(const JElement& a, const JElement& b) {
        require_same(a.mod_, b.mod_);
        const std::int64_t s = b.k_ ? -1 : 1;
        return JElement(a.k_ ^ b.k_, b.m_ + s * a.m_, b.n_ + s * a.n_, a.mod_);
    }

    JElement inverse() const { return k_ ? *this : JElement(0, -m_, -n_, mod_); }

    friend bool operator==(const JElement& a, const JElement& b) {
        return a.mod_ == b.mod_ && a.k_ == b.k_ && a.m_ == b.m_ && a.n_ == b.n_;
    }
    friend auto operator<=>(const JElement& a, const JElement& b) {
        if (auto c = a.mod_.value() <=> b.mod_.value(); c != 0) return c;
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        if (auto c = a.m_ <=> b.m_; c != 0) return c;
        return a.n_ <=> b.n_;
    }

    /// "U^k (UV)^m (UW)^n" without zero-exponent factors; "Id" for the identity.
    std::string to_string() const {
        if (is_identity()) return "Id";
        std::string s;
        auto add = [&s](const std::string& part) { s += (s.empty() ? "" : " ") + part; };
        if (k_) add("U");
        if (m_) add("(UV)^" + std::to_string(m_));
        if (n_) add("(UW)^" + std::to_string(n_));
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const JElement& e) { return os << e.to_string(); }

private:
    int k_;
    std::int64_t m_;
    std::int64_t n_;
    Modulus mod_;
};

inline JElement generator_element(GeneratorTag g, Modulus n) {
    switch (g) {
        case GeneratorTag::U: return JElement(1, 0, 0, n);
        case GeneratorTag::V: return JElement(1, 1, 0, n);
        case GeneratorTag::W: return JElement(1, 0, 1, n);
    }
    throw std::logic_error("unknown generator");
}

inline JElement j_multiply(const JElement& a, const JElement& b) { return a * b; }
inline JElement j_inverse(const JElement& a) { return a.inverse(); }

inline JElement j_pow(const JElement& a, std::int64_t e) {
    JElement base = e < 0 ? a.inverse() : a;
    std::uint64_t k = static_cast<std::uint64_t>(e < 0 ? -e : e);
    JElement r = JElement::identity(a.modulus());
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

inline std::uint64_t j_order(const JElement& a) {
    if (a.is_identity()) return 1;
    if (a.k() == 1) return 2;
    const std::int64_t n = a.modulus().value();
    return static_cast<std::uint64_t>(n / std::gcd(n, std::gcd(a.m(), a.n())));
}

inline Mat3 normal_form_matrix(const JElement& e) {
    const std::int64_t m = e.m(), n = e.n();
    if (e.k() == 0)
        return Mat3({{1 - m, -n, m + n}, {-m, 1 - n, m + n}, {-m, -n, 1 + m + n}}, e.modulus());
    return Mat3({{-m, 1 - n, m + n}, {1 - m, -n, m + n}, {1 - m, 1 - n, -1 + m + n}}, e.modulus());
}

/// Normal form of a matrix in J; throws NotInJ otherwise.
inline JElement decode(const Mat3& a) {
    const Modulus& mod = a.modulus();
    JElement as_k0(0, 1 - a(0, 0), -a(0, 1), mod);
    if (normal_form_matrix(as_k0) == a) return as_k0;
    JElement as_k1(1, -a(0, 0), 1 - a(0, 1), mod);
    if (normal_form_matrix(as_k1) == a) return as_k1;
    throw NotInJ();
}

inline bool in_J(const Mat3& a) {
    try {
        decode(a);
        return true;
    } catch (const NotInJ&) {
        return false;
    }
}

inline JElement word_to_element(std::span<const GeneratorTag> word, Modulus n) {
    JElement r = JElement::identity(n);
    for (GeneratorTag g : word) r = r * generator_element(g, n);
    return r;
}

inline JElement word_to_element(std::initializer_list<GeneratorTag> word, Modulus n) {
    return word_to_element(std::span<const GeneratorTag>(word.begin(), word.size()), n);
}

inline Vec3 apply(const JElement& e, const Vec3& v) {
    require_same(e.modulus(), v.modulus());
    // U fixes constant vectors, so it commutes with the shift.
    const std::int64_t shift = e.m() * (v[2] - v[0]) + e.n() * (v[2] - v[1]);
    const Vec3 w = e.k() ? Vec3(v[1], v[0], v[0] + v[1] - v[2], v.modulus()) : v;
    return w.shifted(shift);
}

/// All 2n^2 normal forms, in lexicographic (k, m, n) order.
inline std::vector<JElement> enumerate_J(Modulus n) {
    std::vector<JElement> out;
    out.reserve(static_cast<std::size_t>(2 * n.value() * n.value()));
    for (int k = 0; k < 2; ++k)
        for (std::int64_t m = 0; m < n.value(); ++m)
            for (std::int64_t e = 0; e < n.value(); ++e) out.emplace_back(k, m, e, n);
    return out;
}

/// The mode-preserving half {(0, m, n)} = <UV, UW>.
inline std::vector<JElement> enumerate_J_plus(Modulus n) {
    std::vector<JElement> out;
    for (std::int64_t m = 0; m < n.value(); ++m)
        for (std::int64_t e = 0; e < n.value(); ++e) out.emplace_back(0, m, e, n);
    return out;
}

}  // namespace vg
