#pragma once

/**
 * @file modring.hpp
 * @brief Exact arithmetic in Z/n with a runtime modulus.
 *
 * Residues carry their modulus; combining residues of different moduli is
 * an error rather than a silent reduction. Linear systems over Z/n are
 * solved by exhaustive enumeration over each prime-power factor of n and
 * recombined with the Chinese remainder theorem.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vg {

class ModulusMismatch : public std::invalid_argument {
public:
    ModulusMismatch(std::int64_t a, std::int64_t b)
        : std::invalid_argument("modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// Raised when an exhaustive search would exceed its candidate budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
        : std::runtime_error("search needs " + std::to_string(needed) + " candidates, budget is " +
                             std::to_string(budget)),
          needed_(needed) {}
    std::uint64_t needed() const { return needed_; }

private:
    std::uint64_t needed_;
};

inline constexpr std::uint64_t default_search_budget = 10'000'000;

struct PrimePower {
    std::int64_t prime;
    int exponent;
    std::int64_t value;  // prime^exponent

    bool operator==(const PrimePower&) const = default;
};

namespace detail {

// floor-mod into [0, n)
constexpr std::int64_t mod(std::int64_t x, std::int64_t n) {
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

// x^e, saturating at UINT64_MAX
constexpr std::uint64_t saturating_pow(std::uint64_t x, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (x != 0 && r > UINT64_MAX / x) return UINT64_MAX;
        r *= x;
    }
    return r;
}

// Inverse of a modulo n; requires gcd(a, n) == 1.
constexpr std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
    std::int64_t old_r = mod(a, n), r = n, old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw std::domain_error("not invertible modulo " + std::to_string(n));
    return mod(old_s, n);
}

}  // namespace detail

/**
 * A modulus n >= 2 with its prime-power factorization cached at
 * construction. Factors are ordered by increasing prime.
 */
class Modulus {
public:
    static constexpr std::size_t max_factors = 10;

    constexpr explicit Modulus(std::int64_t n) : n_(n) {
        if (n < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(n));
        if (n > (std::int64_t{1} << 31)) throw std::invalid_argument("modulus too large: " + std::to_string(n));
        std::int64_t rest = n;
        for (std::int64_t p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            PrimePower pp{p, 0, 1};
            while (rest % p == 0) {
                rest /= p;
                ++pp.exponent;
                pp.value *= p;
            }
            factors_[count_++] = pp;
        }
        if (rest > 1) factors_[count_++] = PrimePower{rest, 1, rest};
    }

    constexpr std::int64_t value() const { return n_; }
    constexpr std::span<const PrimePower> prime_powers() const { return {factors_.data(), count_}; }

    constexpr bool operator==(const Modulus& other) const { return n_ == other.n_; }
    constexpr auto operator<=>(const Modulus& other) const { return n_ <=> other.n_; }

private:
    std::int64_t n_;
    std::array<PrimePower, max_factors> factors_{};
    std::size_t count_ = 0;
};

inline void require_same(const Modulus& a, const Modulus& b) {
    if (a != b) throw ModulusMismatch(a.value(), b.value());
}

/// An element of Z/n, stored in [0, n).
class Residue {
public:
    Residue(std::int64_t x, Modulus n) : value_(detail::mod(x, n.value())), modulus_(n) {}

    std::int64_t value() const { return value_; }
    const Modulus& modulus() const { return modulus_; }

    friend Residue operator+(const Residue& a, const Residue& b) {
        require_same(a.modulus_, b.modulus_);
        return Residue(a.value_ + b.value_, a.modulus_);
    }
    friend Residue operator-(const Residue& a, const Residue& b) {
        require_same(a.modulus_, b.modulus_);
        return Residue(a.value_ - b.value_, a.modulus_);
    }
    friend Residue operator*(const Residue& a, const Residue& b) {
        require_same(a.modulus_, b.modulus_);
        return Residue(a.value_ * b.value_, a.modulus_);
    }
    Residue operator-() const { return Residue(-value_, modulus_); }

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Residue& a, const Residue& b) {
        if (auto c = a.modulus_.value() <=> b.modulus_.value(); c != 0) return c;
        return a.value_ <=> b.value_;
    }
    friend std::ostream& operator<<(std::ostream& os, const Residue& r) { return os << r.value_; }

private:
    std::int64_t value_;
    Modulus modulus_;
};

inline Residue normalize(std::int64_t x, const Modulus& n) { return Residue(x, n); }

inline bool is_unit(const Residue& x) { return std::gcd(x.value(), x.modulus().value()) == 1; }

inline std::vector<Residue> units(const Modulus& n) {
    std::vector<Residue> out;
    for (std::int64_t x = 1; x < n.value(); ++x)
        if (std::gcd(x, n.value()) == 1) out.emplace_back(x, n);
    return out;
}

inline std::vector<Modulus> crt_split(const Modulus& n) {
    std::vector<Modulus> out;
    for (const auto& pp : n.prime_powers()) out.emplace_back(pp.value);
    return out;
}

/// Recombine one residue per prime-power factor of n (in crt_split order).
inline Residue crt_combine(const Modulus& n, std::span<const Residue> parts) {
    auto factors = n.prime_powers();
    if (parts.size() != factors.size())
        throw std::invalid_argument("crt_combine: expected " + std::to_string(factors.size()) + " residues, got " +
                                    std::to_string(parts.size()));
    std::int64_t x = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::int64_t q = factors[i].value;
        require_same(parts[i].modulus(), Modulus(q));
        const std::int64_t rest = n.value() / q;
        const std::int64_t coeff = detail::mod(rest * detail::mod_inverse(rest % q, q), n.value());
        x = detail::mod(x + detail::mod(parts[i].value() * coeff, n.value()), n.value());
    }
    return Residue(x, n);
}

/**
 * Linear system rows * x = rhs over Z/n, with integer coefficients that are
 * reduced modulo each factor during solving. An empty rhs means homogeneous.
 */
struct LinearSystem {
    std::size_t unknowns = 0;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> rhs;

    void add_equation(std::vector<std::int64_t> coeffs, std::int64_t value = 0) {
        if (coeffs.size() != unknowns) throw std::invalid_argument("equation width does not match unknown count");
        if (rhs.size() < rows.size()) rhs.resize(rows.size(), 0);
        rows.push_back(std::move(coeffs));
        rhs.push_back(value);
    }
};

/// All solution vectors of a LinearSystem, each entry in [0, n), sorted lexicographically.
struct SolutionSet {
    Modulus modulus;
    std::size_t unknowns = 0;
    std::vector<std::vector<std::int64_t>> vectors;

    std::size_t size() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }
};

namespace detail {

// Exhaustive odometer search over (Z/q)^d.
inline std::vector<std::vector<std::int64_t>> enumerate_mod(const LinearSystem& sys, std::int64_t q,
                                                            std::uint64_t budget) {
    const std::size_t d = sys.unknowns;
    const std::uint64_t candidates = saturating_pow(static_cast<std::uint64_t>(q), d);
    if (candidates > budget) throw BudgetExceeded(candidates, budget);

    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> rhs;
    rows.reserve(sys.rows.size());
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        std::vector<std::int64_t> row(d);
        for (std::size_t c = 0; c < d; ++c) row[c] = mod(sys.rows[r][c], q);
        rows.push_back(std::move(row));
        rhs.push_back(r < sys.rhs.size() ? mod(sys.rhs[r], q) : 0);
    }

    std::vector<std::vector<std::int64_t>> found;
    std::vector<std::int64_t> x(d, 0);
    for (std::uint64_t iter = 0; iter < candidates; ++iter) {
        bool ok = true;
        for (std::size_t r = 0; r < rows.size() && ok; ++r) {
            std::int64_t acc = 0;
            for (std::size_t c = 0; c < d; ++c) acc += rows[r][c] * x[c];
            ok = mod(acc, q) == rhs[r];
        }
        if (ok) found.push_back(x);
        for (std::size_t c = d; c-- > 0;) {
            if (++x[c] < q) break;
            x[c] = 0;
        }
    }
    return found;
}

}  // namespace detail

/**
 * Solve a linear system over Z/n by enumerating each prime-power factor
 * q = p^a exhaustively (q^d candidates) and CRT-combining the per-factor
 * solution sets. Throws BudgetExceeded if any factor needs more than
 * `budget` candidates.
 */
inline SolutionSet solve_linear(const LinearSystem& sys, const Modulus& n,
                                std::uint64_t budget = default_search_budget) {
    for (const auto& row : sys.rows)
        if (row.size() != sys.unknowns) throw std::invalid_argument("equation width does not match unknown count");

    const auto factors = n.prime_powers();
    std::vector<std::vector<std::vector<std::int64_t>>> per_factor;
    per_factor.reserve(factors.size());
    for (const auto& pp : factors) per_factor.push_back(detail::enumerate_mod(sys, pp.value, budget));

    SolutionSet out{n, sys.unknowns, {}};
    for (const auto& f : per_factor)
        if (f.empty()) return out;

    // Coefficients e_i with e_i = 1 mod q_i and 0 mod q_j (j != i).
    std::vector<std::int64_t> idempotent;
    for (const auto& pp : factors) {
        const std::int64_t rest = n.value() / pp.value;
        idempotent.push_back(detail::mod(rest * detail::mod_inverse(rest % pp.value, pp.value), n.value()));
    }

    std::vector<std::size_t> pick(factors.size(), 0);
    while (true) {
        std::vector<std::int64_t> v(sys.unknowns, 0);
        for (std::size_t f = 0; f < factors.size(); ++f)
            for (std::size_t c = 0; c < sys.unknowns; ++c)
                v[c] = detail::mod(v[c] + detail::mod(per_factor[f][pick[f]][c] * idempotent[f], n.value()),
                                   n.value());
        out.vectors.push_back(std::move(v));

        std::size_t f = factors.size();
        while (f-- > 0) {
            if (++pick[f] < per_factor[f].size()) break;
            pick[f] = 0;
        }
        if (f == static_cast<std::size_t>(-1)) break;
    }
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

inline SolutionSet solve_homogeneous(std::vector<std::vector<std::int64_t>> rows, std::size_t unknowns,
                                     const Modulus& n, std::uint64_t budget = default_search_budget) {
    LinearSystem sys;
    sys.unknowns = unknowns;
    sys.rows = std::move(rows);
    return solve_linear(sys, n, budget);
}

}  // namespace vg
