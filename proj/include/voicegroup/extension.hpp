#pragma once

/**
 * @file extension.hpp
 * @brief The extension of J by the voice permutations, S3 ⋉ J.
 *
 * An element (σ, j) denotes P_σ · j. Permutations normalize J:
 *
 *     σ J^{r,s} σ⁻¹ = J^{σr, σs},
 *
 * so a product is brought back to (permutation, normal form) by moving
 * permutations to the left:
 *
 *     (σa, ja)(σb, jb) = (σa σb, (σb⁻¹ ja σb) jb).
 *
 * The group has 6 · 2n^2 elements (1728 for n = 12).
 */

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "voicing.hpp"

namespace vg {

class NotInExtension : public NotInGroup {
public:
    NotInExtension() : NotInGroup("matrix is not in the extension of <U,V,W> by voice permutations") {}
};

inline GeneratorTag sigma_conjugate_generator(const Perm3& s, GeneratorTag g) {
    const auto [r, t] = generator_voices(g);
    return generator_from_voices(s(r), s(t));
}

/// τ j τ⁻¹, computed by conjugating the generators of the normal form.
inline JElement conjugate_by_perm(const Perm3& tau, const JElement& j) {
    if (tau.is_identity()) return j;
    const Modulus& n = j.modulus();
    const JElement u = generator_element(sigma_conjugate_generator(tau, GeneratorTag::U), n);
    const JElement v = generator_element(sigma_conjugate_generator(tau, GeneratorTag::V), n);
    const JElement w = generator_element(sigma_conjugate_generator(tau, GeneratorTag::W), n);
    return j_pow(u, j.k()) * j_pow(u * v, j.m()) * j_pow(u * w, j.n());
}

class ExtElement {
public:
    ExtElement(Perm3 sigma, JElement j) : sigma_(sigma), j_(std::move(j)) {}
    explicit ExtElement(JElement j) : sigma_(), j_(std::move(j)) {}
    ExtElement(Perm3 sigma, Modulus n) : sigma_(sigma), j_(JElement::identity(n)) {}

    static ExtElement identity(Modulus n) { return ExtElement(JElement::identity(n)); }

    const Perm3& sigma() const { return sigma_; }
    const JElement& j() const { return j_; }
    const Modulus& modulus() const { return j_.modulus(); }
    bool is_identity() const { return sigma_.is_identity() && j_.is_identity(); }

    friend ExtElement operator*(const ExtElement& a, const ExtElement& b) {
        return ExtElement(a.sigma_ * b.sigma_, conjugate_by_perm(b.sigma_.inverse(), a.j_) * b.j_);
    }

    ExtElement inverse() const { return ExtElement(sigma_.inverse(), conjugate_by_perm(sigma_, j_.inverse())); }

    Mat3 matrix() const { return perm_matrix(sigma_, modulus()) * normal_form_matrix(j_); }

    Vec3 operator()(const Vec3& v) const { return sigma_.apply(apply(j_, v)); }

    friend bool operator==(const ExtElement&, const ExtElement&) = default;
    friend auto operator<=>(const ExtElement& a, const ExtElement& b) {
        if (auto c = a.sigma_ <=> b.sigma_; c != 0) return c;
        return a.j_ <=> b.j_;
    }

    /// Cycle notation then the normal form, e.g. "(13) U (UW)^1"; "Id" for the identity.
    std::string to_string() const {
        if (sigma_.is_identity()) return j_.to_string();
        if (j_.is_identity()) return sigma_.to_string();
        return sigma_.to_string() + " " + j_.to_string();
    }
    friend std::ostream& operator<<(std::ostream& os, const ExtElement& e) { return os << e.to_string(); }

private:
    Perm3 sigma_;
    JElement j_;
};

inline ExtElement ext_multiply(const ExtElement& a, const ExtElement& b) { return a * b; }
inline ExtElement ext_inverse(const ExtElement& a) { return a.inverse(); }
inline Mat3 ext_matrix(const ExtElement& a) { return a.matrix(); }

inline ExtElement ext_pow(const ExtElement& a, std::int64_t e) {
    ExtElement base = e < 0 ? a.inverse() : a;
    std::uint64_t k = static_cast<std::uint64_t>(e < 0 ? -e : e);
    ExtElement r = ExtElement::identity(a.modulus());
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

inline std::uint64_t ext_order(const ExtElement& a) {
    std::uint64_t t = 1;
    for (ExtElement x = a; !x.is_identity(); x = x * a) ++t;
    return t;
}

/// Decode a matrix as (σ, j) by trying all six permutations.
inline ExtElement ext_decode(const Mat3& a) {
    for (const Perm3& s : Perm3::all()) {
        const Mat3 rest = perm_matrix(s.inverse(), a.modulus()) * a;
        try {
            return ExtElement(s, decode(rest));
        } catch (const NotInJ&) {
        }
    }
    throw NotInExtension();
}

inline ExtElement ext_generator(GeneratorTag g, Modulus n) { return ExtElement(generator_element(g, n)); }

enum class CosetTag { JPlus, JMinus, SigmaJPlus, SigmaJMinus };

/// All elements, ordered by (σ, k, m, n).
inline std::vector<ExtElement> enumerate_extension(Modulus n) {
    std::vector<ExtElement> out;
    const auto js = enumerate_J(n);
    out.reserve(6 * js.size());
    auto perms = Perm3::all();
    std::sort(perms.begin(), perms.end());
    for (const Perm3& s : perms)
        for (const JElement& j : js) out.emplace_back(s, j);
    return out;
}

inline std::vector<ExtElement> enumerate_coset(CosetTag tag, Modulus n) {
    const bool all_perms = tag == CosetTag::SigmaJPlus || tag == CosetTag::SigmaJMinus;
    const int k = (tag == CosetTag::JMinus || tag == CosetTag::SigmaJMinus) ? 1 : 0;
    std::vector<ExtElement> out;
    for (const ExtElement& e : enumerate_extension(n))
        if ((all_perms || e.sigma().is_identity()) && e.j().k() == k) out.push_back(e);
    return out;
}

inline Residue trace(const ExtElement& a) { return Residue(a.matrix().trace(), a.modulus()); }

enum class GroupSelector { J, Extension };

inline std::set<ExtElement> conjugacy_class(const ExtElement& a, GroupSelector within) {
    std::set<ExtElement> out;
    if (within == GroupSelector::J) {
        for (const JElement& j : enumerate_J(a.modulus())) {
            const ExtElement g(j);
            out.insert(g * a * g.inverse());
        }
    } else {
        for (const ExtElement& g : enumerate_extension(a.modulus())) out.insert(g * a * g.inverse());
    }
    return out;
}

}  // namespace vg
