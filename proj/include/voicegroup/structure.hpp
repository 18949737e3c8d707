#pragma once

/**
 * @file structure.hpp
 * @brief Center and centralizers of J, orders of GL(3) and SL(3) over Z/n,
 * and the duality between J and the transposition/inversion group.
 *
 * Centralizers are solved as linear systems: A commutes with U, V and W
 * iff AG - GA = 0 for each generator G, nine linear equations per
 * generator in the nine entries of A. An affine map x ↦ Ax + b commutes
 * with every linear G iff AG = GA and Gb = b.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "extension.hpp"

namespace vg {

inline std::vector<JElement> center_of_J(Modulus n) {
    const auto all = enumerate_J(n);
    std::vector<JElement> out;
    for (const JElement& a : all) {
        const bool central = std::all_of(all.begin(), all.end(), [&](const JElement& b) { return a * b == b * a; });
        if (central) out.push_back(a);
    }
    return out;
}

enum class Ambient { M3, GL3, AffMonoid, AffGroup };

inline std::string ambient_name(Ambient a) {
    switch (a) {
        case Ambient::M3: return "m3";
        case Ambient::GL3: return "gl3";
        case Ambient::AffMonoid: return "aff";
        case Ambient::AffGroup: return "affx";
    }
    return "?";
}

/// Linear ambients fill `matrices`; affine ambients fill `maps`. Both sorted.
struct CentralizerReport {
    Ambient ambient;
    Modulus modulus;
    std::vector<Mat3> matrices;
    std::vector<AffineMap> maps;

    std::size_t size() const { return ambient == Ambient::M3 || ambient == Ambient::GL3 ? matrices.size() : maps.size(); }
};

namespace detail {

inline std::array<GeneratorTag, 3> all_generators() { return {GeneratorTag::U, GeneratorTag::V, GeneratorTag::W}; }

// Rows of AG - GA = 0 over the unknowns a_00, a_01, ..., a_22.
inline void add_commutator_rows(LinearSystem& sys, const Mat3& g, std::size_t offset) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::vector<std::int64_t> row(sys.unknowns, 0);
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q) {
                    std::int64_t c = 0;
                    if (p == i) c += g(q, j);
                    if (q == j) c -= g(i, p);
                    row[offset + static_cast<std::size_t>(3 * p + q)] += c;
                }
            sys.add_equation(std::move(row));
        }
}

// Rows of (G - I)b = 0 over the unknowns b_0, b_1, b_2.
inline void add_fixed_vector_rows(LinearSystem& sys, const Mat3& g, std::size_t offset) {
    for (int i = 0; i < 3; ++i) {
        std::vector<std::int64_t> row(sys.unknowns, 0);
        for (int j = 0; j < 3; ++j) row[offset + static_cast<std::size_t>(j)] = g(i, j) - (i == j ? 1 : 0);
        sys.add_equation(std::move(row));
    }
}

inline Mat3 matrix_from_unknowns(const std::vector<std::int64_t>& x, std::size_t offset, Modulus n) {
    Mat3::Rows r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = x[offset + static_cast<std::size_t>(3 * i + j)];
    return Mat3(r, n);
}

}  // namespace detail

/// The commutation system for J on the nine entries of a matrix (row-major unknowns).
inline LinearSystem commutation_system(Modulus n) {
    LinearSystem sys;
    sys.unknowns = 9;
    for (GeneratorTag g : detail::all_generators()) detail::add_commutator_rows(sys, generator_matrix(g, n), 0);
    return sys;
}

/**
 * The commutation system for an affine map x ↦ Ax + b, b unrestricted:
 * unknowns are the nine entries of A followed by b.
 */
inline LinearSystem affine_commutation_system(Modulus n) {
    LinearSystem sys;
    sys.unknowns = 12;
    for (GeneratorTag g : detail::all_generators()) {
        detail::add_commutator_rows(sys, generator_matrix(g, n), 0);
        detail::add_fixed_vector_rows(sys, generator_matrix(g, n), 9);
    }
    return sys;
}

inline CentralizerReport centralizer_in_M3(Modulus n, std::uint64_t budget = default_search_budget) {
    CentralizerReport rep{Ambient::M3, n, {}, {}};
    for (const auto& x : solve_linear(commutation_system(n), n, budget).vectors)
        rep.matrices.push_back(detail::matrix_from_unknowns(x, 0, n));
    std::sort(rep.matrices.begin(), rep.matrices.end());
    return rep;
}

inline CentralizerReport centralizer_in_GL3(Modulus n, std::uint64_t budget = default_search_budget) {
    CentralizerReport rep = centralizer_in_M3(n, budget);
    rep.ambient = Ambient::GL3;
    std::erase_if(rep.matrices, [](const Mat3& a) { return !is_invertible(a); });
    return rep;
}

/// Translations b with Gb = b for every generator G.
inline std::vector<Vec3> fixed_translations(Modulus n, std::uint64_t budget = default_search_budget) {
    LinearSystem sys;
    sys.unknowns = 3;
    for (GeneratorTag g : detail::all_generators()) detail::add_fixed_vector_rows(sys, generator_matrix(g, n), 0);
    std::vector<Vec3> out;
    for (const auto& x : solve_linear(sys, n, budget).vectors) out.emplace_back(x[0], x[1], x[2], n);
    return out;
}

inline CentralizerReport centralizer_in_Aff(Modulus n, bool invertible_only,
                                            std::uint64_t budget = default_search_budget) {
    const CentralizerReport linear = invertible_only ? centralizer_in_GL3(n, budget) : centralizer_in_M3(n, budget);
    CentralizerReport rep{invertible_only ? Ambient::AffGroup : Ambient::AffMonoid, n, {}, {}};
    const auto translations = fixed_translations(n, budget);
    for (const Mat3& a : linear.matrices)
        for (const Vec3& b : translations) rep.maps.emplace_back(a, b);
    std::sort(rep.maps.begin(), rep.maps.end());
    return rep;
}

inline CentralizerReport centralizer(Ambient ambient, Modulus n, std::uint64_t budget = default_search_budget) {
    switch (ambient) {
        case Ambient::M3: return centralizer_in_M3(n, budget);
        case Ambient::GL3: return centralizer_in_GL3(n, budget);
        case Ambient::AffMonoid: return centralizer_in_Aff(n, false, budget);
        case Ambient::AffGroup: return centralizer_in_Aff(n, true, budget);
    }
    throw std::logic_error("unknown ambient");
}

/**
 * The explicit thirty-matrix family over Z/12: diag(u) for every u, and
 * diag(u)·(UV)^6, diag(u)·(UW)^6, diag(u)·(UV)^6(UW)^6 for odd u.
 */
inline std::vector<Mat3> diagonal_family_12() {
    const Modulus n(12);
    const std::array<Mat3, 3> twists{normal_form_matrix(JElement(0, 6, 0, n)),
                                     normal_form_matrix(JElement(0, 0, 6, n)),
                                     normal_form_matrix(JElement(0, 6, 6, n))};
    std::vector<Mat3> out;
    for (std::int64_t u = 0; u < 12; ++u) {
        out.push_back(Mat3::diagonal(u, n));
        if (u % 2 == 1)
            for (const Mat3& t : twists) out.push_back(Mat3::diagonal(u, n) * t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Orders of GL(3) and SL(3)

namespace detail {

struct MatrixCounts {
    std::uint64_t invertible = 0;
    std::uint64_t unimodular = 0;
};

// Exhaustive over all q^9 matrices; the last row is dotted with the cofactors of the first two.
inline MatrixCounts count_matrices_mod(std::int64_t q, std::uint64_t budget) {
    const std::uint64_t candidates = saturating_pow(static_cast<std::uint64_t>(q), 9);
    if (candidates > budget) throw BudgetExceeded(candidates, budget);

    std::vector<std::uint64_t> det_histogram(static_cast<std::size_t>(q), 0);
    std::array<std::int64_t, 6> r{};
    const std::uint64_t top = saturating_pow(static_cast<std::uint64_t>(q), 6);
    for (std::uint64_t idx = 0; idx < top; ++idx) {
        std::uint64_t t = idx;
        for (auto& x : r) {
            x = static_cast<std::int64_t>(t % static_cast<std::uint64_t>(q));
            t /= static_cast<std::uint64_t>(q);
        }
        const std::int64_t c0 = mod(r[1] * r[5] - r[2] * r[4], q);
        const std::int64_t c1 = mod(r[2] * r[3] - r[0] * r[5], q);
        const std::int64_t c2 = mod(r[0] * r[4] - r[1] * r[3], q);
        for (std::int64_t a = 0; a < q; ++a)
            for (std::int64_t b = 0; b < q; ++b)
                for (std::int64_t c = 0; c < q; ++c) ++det_histogram[static_cast<std::size_t>((a * c0 + b * c1 + c * c2) % q)];
    }
    MatrixCounts out;
    for (std::int64_t d = 0; d < q; ++d)
        if (std::gcd(d, q) == 1) out.invertible += det_histogram[static_cast<std::size_t>(d)];
    out.unimodular = det_histogram[1 % static_cast<std::size_t>(q)];
    return out;
}

}  // namespace detail

/// Brute-force |GL(3, Z/q)| for one prime power q.
inline std::uint64_t count_GL3_prime_power(std::int64_t q, std::uint64_t budget = default_search_budget) {
    return detail::count_matrices_mod(q, budget).invertible;
}

inline std::uint64_t count_SL3_prime_power(std::int64_t q, std::uint64_t budget = default_search_budget) {
    return detail::count_matrices_mod(q, budget).unimodular;
}

/// Product of brute-force counts over the prime-power factors of n.
inline std::uint64_t count_GL3(Modulus n, std::uint64_t budget = default_search_budget) {
    std::uint64_t total = 1;
    for (const auto& pp : n.prime_powers()) total *= count_GL3_prime_power(pp.value, budget);
    return total;
}

inline std::uint64_t count_SL3(Modulus n, std::uint64_t budget = default_search_budget) {
    std::uint64_t total = 1;
    for (const auto& pp : n.prime_powers()) total *= count_SL3_prime_power(pp.value, budget);
    return total;
}

/// |GL(3, Z/p^a)| = p^{9(a-1)} (p^3-1)(p^3-p)(p^3-p^2), multiplied over factors.
inline std::uint64_t closed_form_GL3(Modulus n) {
    std::uint64_t total = 1;
    for (const auto& pp : n.prime_powers()) {
        const std::uint64_t p = static_cast<std::uint64_t>(pp.prime);
        total *= detail::saturating_pow(p, 9 * static_cast<std::uint64_t>(pp.exponent - 1)) * (p * p * p - 1) *
                 (p * p * p - p) * (p * p * p - p * p);
    }
    return total;
}

/// |SL| = |GL| / |units|, factor by factor.
inline std::uint64_t closed_form_SL3(Modulus n) {
    std::uint64_t total = 1;
    for (const auto& pp : n.prime_powers()) {
        const std::uint64_t p = static_cast<std::uint64_t>(pp.prime);
        const std::uint64_t gl = detail::saturating_pow(p, 9 * static_cast<std::uint64_t>(pp.exponent - 1)) *
                                 (p * p * p - 1) * (p * p * p - p) * (p * p * p - p * p);
        total *= gl / (detail::saturating_pow(p, static_cast<std::uint64_t>(pp.exponent - 1)) * (p - 1));
    }
    return total;
}

enum class LinearAmbient { GL3, SL3 };

inline std::uint64_t index_of_J(Modulus n, LinearAmbient ambient, std::uint64_t budget = default_search_budget) {
    const std::uint64_t order = ambient == LinearAmbient::GL3 ? count_GL3(n, budget) : count_SL3(n, budget);
    const std::uint64_t j = 2 * static_cast<std::uint64_t>(n.value() * n.value());
    if (order % j != 0) throw std::logic_error("group order " + std::to_string(order) + " not divisible by |J|");
    return order / j;
}

// ---------------------------------------------------------------------------
// Duality with the transposition/inversion group

/// Transpositions x ↦ x+t then inversions x ↦ -x+t, t = 0..n-1.
inline std::vector<AffineMap> ti_group(Modulus n) {
    std::vector<AffineMap> out;
    for (int u : {1, -1})
        for (std::int64_t t = 0; t < n.value(); ++t) out.push_back(scalar_affine(Residue(u, n), Residue(t, n)));
    return out;
}

/// Sorted orbit of v under transpositions and inversions.
inline std::vector<Vec3> ti_orbit(const Vec3& v) {
    std::set<Vec3> seen;
    for (const AffineMap& f : ti_group(v.modulus())) seen.insert(f(v));
    return {seen.begin(), seen.end()};
}

/// A permutation of an indexed finite set, as the list of image indices.
using Restriction = std::vector<std::size_t>;

/// Restriction of a map to X, or nullopt if it does not map X into itself.
template <class Map>
std::optional<Restriction> restrict_to(const Map& f, const std::vector<Vec3>& sorted_x) {
    Restriction r;
    r.reserve(sorted_x.size());
    for (const Vec3& v : sorted_x) {
        const Vec3 w = f(v);
        auto it = std::lower_bound(sorted_x.begin(), sorted_x.end(), w);
        if (it == sorted_x.end() || *it != w) return std::nullopt;
        r.push_back(static_cast<std::size_t>(it - sorted_x.begin()));
    }
    return r;
}

enum class ContextualGroup { U_UV, U_UW };

struct DualityReport {
    explicit DualityReport(Vec3 s) : seed(std::move(s)) {}

    Vec3 seed;
    std::size_t orbit_size = 0;
    ContextualGroup contextual = ContextualGroup::U_UV;
    std::size_t contextual_image_size = 0;  // distinct restrictions to the orbit
    std::size_t ti_image_size = 0;
    bool simply_transitive_contextual = false;
    bool simply_transitive_TI = false;
    bool mutually_commuting = false;
    bool is_dual_pair = false;
    /// Smallest e > 1 with g^e = g on the orbit, g the second contextual generator (UV or UW).
    std::optional<std::int64_t> coinciding_power;
};

namespace detail {

// |image| = |X| and the image moves X[0] everywhere.
inline bool simply_transitive(const std::set<Restriction>& image, std::size_t x_size) {
    if (image.size() != x_size || x_size == 0) return false;
    std::vector<bool> hit(x_size, false);
    for (const Restriction& r : image) hit[r[0]] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace detail

/**
 * Restrict <U, UV> (or <U, UW> when z-x is not a unit but z-y is) and the
 * transposition/inversion group to the orbit of the seed, and test simple
 * transitivity of each and elementwise commutation.
 */
inline DualityReport check_duality(const Vec3& seed) {
    const Modulus& n = seed.modulus();
    DualityReport rep(seed);
    const auto x = ti_orbit(seed);
    rep.orbit_size = x.size();

    const bool zx_unit = is_unit(Residue(seed[2] - seed[0], n));
    const bool zy_unit = is_unit(Residue(seed[2] - seed[1], n));
    rep.contextual = (!zx_unit && zy_unit) ? ContextualGroup::U_UW : ContextualGroup::U_UV;
    const bool use_m = rep.contextual == ContextualGroup::U_UV;

    std::set<Restriction> contextual;
    bool closed = true;
    for (int k = 0; k < 2; ++k)
        for (std::int64_t e = 0; e < n.value(); ++e) {
            const JElement g(k, use_m ? e : 0, use_m ? 0 : e, n);
            auto r = restrict_to([&](const Vec3& v) { return apply(g, v); }, x);
            if (!r) {
                closed = false;
                continue;
            }
            contextual.insert(*r);
        }

    std::set<Restriction> ti;
    for (const AffineMap& f : ti_group(n)) {
        auto r = restrict_to(f, x);
        if (r) ti.insert(*r);
    }

    rep.contextual_image_size = contextual.size();
    rep.ti_image_size = ti.size();
    rep.simply_transitive_contextual = closed && detail::simply_transitive(contextual, x.size());
    rep.simply_transitive_TI = detail::simply_transitive(ti, x.size());

    rep.mutually_commuting = closed;
    for (const Restriction& a : contextual)
        for (const Restriction& b : ti)
            for (std::size_t i = 0; i < x.size() && rep.mutually_commuting; ++i)
                if (a[b[i]] != b[a[i]]) rep.mutually_commuting = false;

    const JElement g1(0, use_m ? 1 : 0, use_m ? 0 : 1, n);
    const auto base = restrict_to([&](const Vec3& v) { return apply(g1, v); }, x);
    const auto order = static_cast<std::int64_t>(j_order(g1));
    for (std::int64_t e = 2; base && e <= order; ++e) {
        const JElement ge = j_pow(g1, e);
        if (restrict_to([&](const Vec3& v) { return apply(ge, v); }, x) == base) {
            rep.coinciding_power = e;
            break;
        }
    }

    rep.is_dual_pair = rep.simply_transitive_contextual && rep.simply_transitive_TI && rep.mutually_commuting &&
                       rep.orbit_size == static_cast<std::size_t>(2 * n.value());
    return rep;
}

/// Number of distinct permutations that the elements of J induce on the orbit of seed.
inline std::size_t j_restriction_image_size(const Vec3& seed) {
    const auto x = ti_orbit(seed);
    std::set<Restriction> image;
    for (const JElement& g : enumerate_J(seed.modulus())) {
        auto r = restrict_to([&](const Vec3& v) { return apply(g, v); }, x);
        if (!r) throw std::logic_error("J does not preserve the orbit");
        image.insert(*r);
    }
    return image.size();
}

// ---------------------------------------------------------------------------
// Restrictions of U, V, W to the six reorderings of the C-major orbit

enum class PLR { P, L, R };

inline char plr_name(PLR x) { return "PLR"[static_cast<int>(x)]; }

/// P, L, R on voicings: inversions about the sum of the outer, upper and lower voice pairs.
inline Vec3 plr_apply(PLR x, const Vec3& v) {
    switch (x) {
        case PLR::P: return j_reflection(1, 3, v);
        case PLR::L: return j_reflection(2, 3, v);
        case PLR::R: return j_reflection(1, 2, v);
    }
    throw std::logic_error("unknown PLR");
}

struct OrbitRestrictionColumn {
    Vec3 representative;
    Perm3 sigma;
    std::array<PLR, 3> generator_as;  // indexed by U, V, W
};

/**
 * For each reordering σ(0,4,7) of the C-major triad, find which of
 * σPσ⁻¹, σLσ⁻¹, σRσ⁻¹ agrees with each of U, V, W on the orbit σS,
 * S the orbit of (0,4,7) under J.
 */
inline std::vector<OrbitRestrictionColumn> orbit_restriction_table() {
    const Modulus n(12);
    const Vec3 c_major(0, 4, 7, n);
    std::set<Vec3> s_set;
    for (const JElement& j : enumerate_J(n)) s_set.insert(apply(j, c_major));
    const std::vector<Vec3> s(s_set.begin(), s_set.end());

    const std::array<Vec3, 6> columns{Vec3(0, 4, 7, n), Vec3(4, 7, 0, n), Vec3(7, 0, 4, n),
                                      Vec3(0, 7, 4, n), Vec3(4, 0, 7, n), Vec3(7, 4, 0, n)};
    std::vector<OrbitRestrictionColumn> out;
    for (const Vec3& c : columns) {
        Perm3 sigma;
        for (const Perm3& p : Perm3::all())
            if (p.apply(c_major) == c) sigma = p;
        OrbitRestrictionColumn col{c, sigma, {}};
        for (GeneratorTag g : detail::all_generators()) {
            const Mat3 gm = generator_matrix(g, n);
            std::vector<PLR> matches;
            for (PLR x : {PLR::P, PLR::L, PLR::R}) {
                const bool agrees = std::all_of(s.begin(), s.end(), [&](const Vec3& v) {
                    return gm * sigma.apply(v) == sigma.apply(plr_apply(x, v));
                });
                if (agrees) matches.push_back(x);
            }
            if (matches.size() != 1) throw std::logic_error("ambiguous or missing P/L/R match");
            col.generator_as[static_cast<std::size_t>(g)] = matches.front();
        }
        out.push_back(col);
    }
    return out;
}

}  // namespace vg
