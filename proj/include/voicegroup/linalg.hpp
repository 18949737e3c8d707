#pragma once

/**
 * @file linalg.hpp
 * @brief 3-vectors, 3x3 matrices, permutations of three voices and
 * componentwise affine maps over Z/n.
 *
 * Vectors are columns and matrices act on the left. Permutations compose
 * right to left: (a*b)(i) = a(b(i)).
 */

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>

#include "modring.hpp"

namespace vg {

class Vec3 {
public:
    Vec3(std::int64_t x, std::int64_t y, std::int64_t z, Modulus n)
        : e_{detail::mod(x, n.value()), detail::mod(y, n.value()), detail::mod(z, n.value())}, n_(n) {}

    static Vec3 zero(Modulus n) { return Vec3(0, 0, 0, n); }

    const Modulus& modulus() const { return n_; }
    std::int64_t operator[](std::size_t i) const { return e_[i]; }
    Residue at(std::size_t i) const { return Residue(e_.at(i), n_); }
    const std::array<std::int64_t, 3>& values() const { return e_; }

    friend Vec3 operator+(const Vec3& a, const Vec3& b) {
        require_same(a.n_, b.n_);
        return Vec3(a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2], a.n_);
    }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) {
        require_same(a.n_, b.n_);
        return Vec3(a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2], a.n_);
    }
    /// Add the scalar c to every entry.
    Vec3 shifted(std::int64_t c) const { return Vec3(e_[0] + c, e_[1] + c, e_[2] + c, n_); }

    friend bool operator==(const Vec3& a, const Vec3& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend auto operator<=>(const Vec3& a, const Vec3& b) {
        if (auto c = a.n_.value() <=> b.n_.value(); c != 0) return c;
        return a.e_ <=> b.e_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Vec3& v) {
        return os << '(' << v.e_[0] << ',' << v.e_[1] << ',' << v.e_[2] << ')';
    }

private:
    std::array<std::int64_t, 3> e_;
    Modulus n_;
};

class Mat3 {
public:
    using Rows = std::array<std::array<std::int64_t, 3>, 3>;

    Mat3(const Rows& rows, Modulus n) : n_(n) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a_[i][j] = detail::mod(rows[i][j], n.value());
    }
    Mat3(std::initializer_list<std::initializer_list<std::int64_t>> rows, Modulus n) : n_(n) {
        if (rows.size() != 3) throw std::invalid_argument("Mat3 needs 3 rows");
        int i = 0;
        for (const auto& row : rows) {
            if (row.size() != 3) throw std::invalid_argument("Mat3 rows need 3 entries");
            int j = 0;
            for (std::int64_t x : row) a_[i][j++] = detail::mod(x, n.value());
            ++i;
        }
    }

    static Mat3 identity(Modulus n) { return Mat3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, n); }
    static Mat3 diagonal(std::int64_t u, Modulus n) { return Mat3({{u, 0, 0}, {0, u, 0}, {0, 0, u}}, n); }

    const Modulus& modulus() const { return n_; }
    std::int64_t operator()(int i, int j) const { return a_[i][j]; }
    const Rows& rows() const { return a_; }

    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        require_same(a.n_, b.n_);
        Rows r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r[i][j] = a.a_[i][0] * b.a_[0][j] + a.a_[i][1] * b.a_[1][j] + a.a_[i][2] * b.a_[2][j];
        return Mat3(r, a.n_);
    }
    friend Vec3 operator*(const Mat3& a, const Vec3& v) {
        require_same(a.n_, v.modulus());
        std::array<std::int64_t, 3> r{};
        for (int i = 0; i < 3; ++i) r[i] = a.a_[i][0] * v[0] + a.a_[i][1] * v[1] + a.a_[i][2] * v[2];
        return Vec3(r[0], r[1], r[2], a.n_);
    }
    friend Mat3 operator+(const Mat3& a, const Mat3& b) {
        require_same(a.n_, b.n_);
        Rows r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i][j] = a.a_[i][j] + b.a_[i][j];
        return Mat3(r, a.n_);
    }
    friend Mat3 operator-(const Mat3& a, const Mat3& b) {
        require_same(a.n_, b.n_);
        Rows r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i][j] = a.a_[i][j] - b.a_[i][j];
        return Mat3(r, a.n_);
    }

    std::int64_t trace() const { return detail::mod(a_[0][0] + a_[1][1] + a_[2][2], n_.value()); }

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
    friend auto operator<=>(const Mat3& a, const Mat3& b) {
        if (auto c = a.n_.value() <=> b.n_.value(); c != 0) return c;
        return a.a_ <=> b.a_;
    }

    /// Row-major, e.g. [[0,1,0],[1,0,0],[1,1,11]].
    friend std::ostream& operator<<(std::ostream& os, const Mat3& m) {
        os << '[';
        for (int i = 0; i < 3; ++i) {
            os << (i ? ",[" : "[") << m.a_[i][0] << ',' << m.a_[i][1] << ',' << m.a_[i][2] << ']';
        }
        return os << ']';
    }

private:
    Rows a_{};
    Modulus n_;
};

inline Mat3 identity(Modulus n) { return Mat3::identity(n); }
inline Mat3 mat_mul(const Mat3& a, const Mat3& b) { return a * b; }
inline Vec3 mat_vec(const Mat3& a, const Vec3& v) { return a * v; }

inline Residue determinant(const Mat3& a) {
    const std::int64_t n = a.modulus().value();
    // Entries are < 2^31, so reduce each 2x2 minor before the final product.
    auto minor = [&](int r0, int r1, int c0, int c1) {
        return detail::mod(a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0), n);
    };
    std::int64_t d = a(0, 0) * minor(1, 2, 1, 2) % n;
    d = detail::mod(d - a(0, 1) * minor(1, 2, 0, 2) % n, n);
    d = detail::mod(d + a(0, 2) * minor(1, 2, 0, 1) % n, n);
    return Residue(d, a.modulus());
}

inline bool is_invertible(const Mat3& a) { return is_unit(determinant(a)); }

/// x^e for matrices, e >= 0.
inline Mat3 mat_pow(Mat3 x, std::uint64_t e) {
    Mat3 r = Mat3::identity(x.modulus());
    while (e) {
        if (e & 1) r = r * x;
        x = x * x;
        e >>= 1;
    }
    return r;
}

/**
 * A permutation of {1,2,3}, stored as its images. Written in cycle notation
 * without commas: "()" or "Id" for the identity, "(12)", "(123)", ...
 */
class Perm3 {
public:
    constexpr Perm3() : img_{1, 2, 3} {}
    constexpr Perm3(int a, int b, int c) : img_{a, b, c} {
        if (!(a != b && b != c && a != c && a >= 1 && b >= 1 && c >= 1 && a <= 3 && b <= 3 && c <= 3))
            throw std::invalid_argument("not a permutation of {1,2,3}");
    }

    static constexpr Perm3 identity() { return Perm3(); }
    /// The transposition (i j).
    static constexpr Perm3 swap(int i, int j) {
        std::array<int, 3> img{1, 2, 3};
        img[i - 1] = j;
        img[j - 1] = i;
        return Perm3(img[0], img[1], img[2]);
    }
    /// The 3-cycle (a b c).
    static constexpr Perm3 cycle(int a, int b, int c) {
        std::array<int, 3> img{};
        img[a - 1] = b;
        img[b - 1] = c;
        img[c - 1] = a;
        return Perm3(img[0], img[1], img[2]);
    }

    /// All six permutations: id, (12), (13), (23), (123), (132).
    static std::array<Perm3, 6> all() {
        return {identity(), swap(1, 2), swap(1, 3), swap(2, 3), cycle(1, 2, 3), cycle(1, 3, 2)};
    }

    constexpr int operator()(int i) const { return img_[i - 1]; }

    constexpr Perm3 inverse() const {
        std::array<int, 3> inv{};
        for (int i = 1; i <= 3; ++i) inv[img_[i - 1] - 1] = i;
        return Perm3(inv[0], inv[1], inv[2]);
    }

    constexpr bool is_identity() const { return img_[0] == 1 && img_[1] == 2 && img_[2] == 3; }
    constexpr int fixed_points() const { return (img_[0] == 1) + (img_[1] == 2) + (img_[2] == 3); }
    constexpr bool is_transposition() const { return fixed_points() == 1; }
    constexpr bool is_three_cycle() const { return fixed_points() == 0; }
    constexpr int sign() const { return is_transposition() ? -1 : 1; }

    friend constexpr Perm3 operator*(const Perm3& a, const Perm3& b) { return Perm3(a(b(1)), a(b(2)), a(b(3))); }
    friend constexpr bool operator==(const Perm3&, const Perm3&) = default;
    friend constexpr auto operator<=>(const Perm3& a, const Perm3& b) { return a.img_ <=> b.img_; }

    /// σ(x1,x2,x3) = (x_{σ⁻¹1}, x_{σ⁻¹2}, x_{σ⁻¹3}).
    Vec3 apply(const Vec3& v) const {
        const Perm3 inv = inverse();
        return Vec3(v[inv(1) - 1], v[inv(2) - 1], v[inv(3) - 1], v.modulus());
    }

    std::string to_string() const {
        if (is_identity()) return "Id";
        if (is_transposition()) {
            for (int i = 1; i <= 3; ++i)
                if (img_[i - 1] != i) return "(" + std::to_string(i) + std::to_string(img_[i - 1]) + ")";
        }
        return "(1" + std::to_string(img_[0]) + std::to_string(img_[img_[0] - 1]) + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const Perm3& p) { return os << p.to_string(); }

private:
    std::array<int, 3> img_;
};

/// Permutation matrix with columns e_{σ1}, e_{σ2}, e_{σ3}.
inline Mat3 perm_matrix(const Perm3& s, Modulus n) {
    Mat3::Rows r{};
    for (int j = 1; j <= 3; ++j) r[s(j) - 1][j - 1] = 1;
    return Mat3(r, n);
}

/// x ↦ linear·x + translation.
class AffineMap {
public:
    AffineMap(Mat3 linear, Vec3 translation) : linear_(std::move(linear)), translation_(std::move(translation)) {
        require_same(linear_.modulus(), translation_.modulus());
    }

    const Mat3& linear() const { return linear_; }
    const Vec3& translation() const { return translation_; }
    const Modulus& modulus() const { return linear_.modulus(); }

    Vec3 operator()(const Vec3& v) const { return linear_ * v + translation_; }

    /// Translation of the form (q,q,q).
    bool has_diagonal_translation() const {
        return translation_[0] == translation_[1] && translation_[1] == translation_[2];
    }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
    friend auto operator<=>(const AffineMap& a, const AffineMap& b) {
        if (auto c = a.linear_ <=> b.linear_; c != 0) return c;
        return a.translation_ <=> b.translation_;
    }
    friend std::ostream& operator<<(std::ostream& os, const AffineMap& f) {
        return os << f.linear_ << " + " << f.translation_;
    }

private:
    Mat3 linear_;
    Vec3 translation_;
};

inline Vec3 affine_apply(const AffineMap& f, const Vec3& v) { return f(v); }

/// (f∘g)(x) = f(g(x)).
inline AffineMap affine_compose(const AffineMap& f, const AffineMap& g) {
    return AffineMap(f.linear() * g.linear(), f.linear() * g.translation() + f.translation());
}

/// x ↦ ux + (q,q,q), i.e. x ↦ ux+q on each voice.
inline AffineMap scalar_affine(const Residue& u, const Residue& q) {
    require_same(u.modulus(), q.modulus());
    const Modulus& n = u.modulus();
    return AffineMap(Mat3::diagonal(u.value(), n), Vec3(q.value(), q.value(), q.value(), n));
}

inline AffineMap linear_affine(const Mat3& a) { return AffineMap(a, Vec3::zero(a.modulus())); }

}  // namespace vg
