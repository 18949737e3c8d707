#pragma once

/**
 * @file analysis.hpp
 * @brief Transformational analysis: find the elements of S3 ⋉ J that
 * realize a progression of voicings, and the affine maps between two
 * progressions.
 *
 * For fixed σ and k the element σ U^k (UV)^m (UW)^n sends v = (x,y,z) to
 *
 *     σ( U^k v + m(z-x) + n(z-y) ),
 *
 * so "g(v) = w" is linear in (m, n): σ⁻¹w - U^k v must be a constant
 * vector c, and m(z-x) + n(z-y) = c.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "structure.hpp"
#include "triadic.hpp"

namespace vg {

struct Progression {
    Modulus modulus;
    std::vector<Vec3> tuples;
    bool cyclic = false;

    Progression(Modulus n, std::vector<Vec3> ts, bool cyc = false) : modulus(n), tuples(std::move(ts)), cyclic(cyc) {
        if (tuples.empty()) throw std::invalid_argument("progression needs at least one tuple");
        for (const Vec3& v : tuples) require_same(v.modulus(), modulus);
    }

    /// Consecutive (source, target) pairs, including last-to-first when cyclic.
    std::vector<std::pair<Vec3, Vec3>> steps() const {
        std::vector<std::pair<Vec3, Vec3>> out;
        for (std::size_t i = 0; i + 1 < tuples.size(); ++i) out.emplace_back(tuples[i], tuples[i + 1]);
        if (cyclic && tuples.size() > 1) out.emplace_back(tuples.back(), tuples.front());
        return out;
    }
};

enum class GroupChoice { J, Extension, Hook };

namespace detail {

inline Vec3 apply_u_power(int k, const Vec3& v) { return k ? Vec3(v[1], v[0], v[0] + v[1] - v[2], v.modulus()) : v; }

// Adds the three equations m(z-x) + n(z-y) = (σ⁻¹dst - U^k src)_i.
inline void add_step_equations(LinearSystem& sys, const Perm3& sigma, int k, const Vec3& src, const Vec3& dst) {
    const Vec3 w = sigma.inverse().apply(dst) - apply_u_power(k, src);
    for (int i = 0; i < 3; ++i) sys.add_equation({src[2] - src[0], src[2] - src[1]}, w[i]);
}

inline std::vector<std::pair<Perm3, int>> cases_for(GroupChoice group) {
    std::vector<std::pair<Perm3, int>> out;
    switch (group) {
        case GroupChoice::J:
            out = {{Perm3(), 0}, {Perm3(), 1}};
            break;
        case GroupChoice::Hook:
            out = {{Perm3(), 0}, {Perm3::swap(1, 3), 1}};
            break;
        case GroupChoice::Extension:
            for (const Perm3& s : Perm3::all())
                for (int k = 0; k < 2; ++k) out.emplace_back(s, k);
            break;
    }
    return out;
}

}  // namespace detail

/// All σ U^k (UV)^m (UW)^n with fixed σ, k sending src to dst.
inline std::vector<ExtElement> solve_step_case(const Vec3& src, const Vec3& dst, const Perm3& sigma, int k) {
    require_same(src.modulus(), dst.modulus());
    const Modulus& n = src.modulus();
    LinearSystem sys;
    sys.unknowns = 2;
    detail::add_step_equations(sys, sigma, k, src, dst);
    std::vector<ExtElement> out;
    for (const auto& x : solve_linear(sys, n).vectors) out.emplace_back(sigma, JElement(k, x[0], x[1], n));
    return out;
}

/// All elements g of the chosen group with g(src) = dst, sorted.
inline std::vector<ExtElement> solve_step(const Vec3& src, const Vec3& dst, GroupChoice group) {
    if (group == GroupChoice::Hook) require_same(src.modulus(), triad_modulus);
    std::vector<ExtElement> out;
    for (const auto& [sigma, k] : detail::cases_for(group)) {
        auto part = solve_step_case(src, dst, sigma, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

class UniformSolution {
public:
    /// Throws std::logic_error unless the element realizes every step of prog.
    UniformSolution(ExtElement element, const Progression& prog) : element_(std::move(element)) {
        const Mat3 a = element_.matrix();
        for (const auto& [src, dst] : prog.steps())
            if (a * src != dst) throw std::logic_error("uniform solution does not reproduce the progression");
    }

    const ExtElement& element() const { return element_; }
    const Perm3& sigma() const { return element_.sigma(); }
    int k() const { return element_.j().k(); }
    std::int64_t m() const { return element_.j().m(); }
    std::int64_t n() const { return element_.j().n(); }
    Mat3 matrix() const { return element_.matrix(); }

    friend bool operator==(const UniformSolution&, const UniformSolution&) = default;
    friend auto operator<=>(const UniformSolution&, const UniformSolution&) = default;

private:
    ExtElement element_;
};

/// All (m, n) for which σ U^k (UV)^m (UW)^n maps each tuple of prog to the next.
inline std::vector<UniformSolution> solve_uniform(const Progression& prog, const Perm3& sigma, int k) {
    if (prog.tuples.size() < 2) throw std::invalid_argument("uniform solving needs at least two tuples");
    const Modulus& n = prog.modulus;
    LinearSystem sys;
    sys.unknowns = 2;
    for (const auto& [src, dst] : prog.steps()) detail::add_step_equations(sys, sigma, k, src, dst);
    std::vector<UniformSolution> out;
    for (const auto& x : solve_linear(sys, n).vectors) out.emplace_back(ExtElement(sigma, JElement(k, x[0], x[1], n)), prog);
    return out;
}

/// solve_uniform over every (σ, k) allowed in the chosen group.
inline std::vector<UniformSolution> solve_uniform(const Progression& prog, GroupChoice group = GroupChoice::Extension) {
    std::vector<UniformSolution> out;
    for (const auto& [sigma, k] : detail::cases_for(group)) {
        auto part = solve_uniform(prog, sigma, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// RICH and cyclic orbits

/// (13)V: (x, y, z) ↦ (y, z, y + z - x).
inline ExtElement rich_element(Modulus n) { return ExtElement(Perm3::swap(1, 3), JElement(1, 1, 0, n)); }

inline Vec3 rich(const Vec3& v) { return rich_element(v.modulus())(v); }

/// seed, g(seed), g²(seed), ... up to (not including) the return to seed.
inline std::vector<Vec3> orbit_of_element(const ExtElement& g, const Vec3& seed) {
    std::vector<Vec3> out{seed};
    for (Vec3 v = g(seed); v != seed; v = g(v)) out.push_back(v);
    return out;
}

/**
 * Voicings v_0, ..., v_{k-1} of the given triads (in order) with
 * g(v_i) = v_{i+1} and g(v_{k-1}) = v_0. Every solution is returned.
 */
inline std::vector<std::vector<Vec3>> find_cyclic_voicings(const std::vector<TriadId>& cycle, const ExtElement& g) {
    std::vector<std::vector<Vec3>> out;
    if (cycle.empty()) return out;
    auto same_set = [](const Vec3& v, const TriadId& t) {
        auto c = classify(v);
        return c && c->id == t;
    };
    for (const Perm3& s : Perm3::all()) {
        std::vector<Vec3> voicings{s.apply(root_position_tuple(cycle.front()))};
        bool ok = true;
        for (std::size_t i = 1; i < cycle.size() && ok; ++i) {
            voicings.push_back(g(voicings.back()));
            ok = same_set(voicings.back(), cycle[i]);
        }
        if (ok && g(voicings.back()) == voicings.front()) out.push_back(std::move(voicings));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Affine morphisms between progressions

/**
 * Affine maps f with f(a_i) = b_i for all i. By default the candidates are
 * the componentwise maps x ↦ ux + q. With restrict_to_centralizer the
 * candidates are instead all affine maps commuting with J.
 */
inline std::vector<AffineMap> find_affine_morphisms(const Progression& a, const Progression& b,
                                                    bool restrict_to_centralizer = false) {
    if (a.tuples.size() != b.tuples.size()) throw std::invalid_argument("progressions differ in length");
    require_same(a.modulus, b.modulus);
    const Modulus& n = a.modulus;

    std::vector<AffineMap> candidates;
    if (restrict_to_centralizer) {
        candidates = centralizer_in_Aff(n, false).maps;
    } else {
        for (std::int64_t u = 0; u < n.value(); ++u)
            for (std::int64_t q = 0; q < n.value(); ++q) candidates.push_back(scalar_affine(Residue(u, n), Residue(q, n)));
    }
    std::vector<AffineMap> out;
    for (const AffineMap& f : candidates) {
        bool ok = true;
        for (std::size_t i = 0; i < a.tuples.size() && ok; ++i) ok = f(a.tuples[i]) == b.tuples[i];
        if (ok) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// f∘g = g∘f for every label g.
inline bool verify_morphism_commutation(const AffineMap& f, const std::vector<ExtElement>& labels) {
    return std::all_of(labels.begin(), labels.end(), [&](const ExtElement& g) {
        const AffineMap lg = linear_affine(g.matrix());
        return affine_compose(f, lg) == affine_compose(lg, f);
    });
}

// ---------------------------------------------------------------------------
// Networks

struct Network {
    struct Edge {
        std::size_t from;
        std::size_t to;
        std::string label;
    };
    std::vector<Vec3> nodes;  // in order of first appearance
    std::vector<Edge> edges;
};

/// One node per distinct tuple and one edge per step; labels (if given) must match the step count.
inline Network export_network(const Progression& prog, const std::optional<std::vector<std::string>>& labels = {}) {
    const auto steps = prog.steps();
    if (labels && labels->size() != steps.size())
        throw std::invalid_argument("expected " + std::to_string(steps.size()) + " edge labels, got " +
                                    std::to_string(labels->size()));
    Network net;
    std::map<Vec3, std::size_t> index;
    auto node = [&](const Vec3& v) {
        auto [it, fresh] = index.try_emplace(v, net.nodes.size());
        if (fresh) net.nodes.push_back(v);
        return it->second;
    };
    for (const Vec3& v : prog.tuples) node(v);
    for (std::size_t i = 0; i < steps.size(); ++i)
        net.edges.push_back({node(steps[i].first), node(steps[i].second), labels ? (*labels)[i] : std::string()});
    return net;
}

inline std::string vec_label(const Vec3& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

inline std::string to_dot(const Network& net, const std::string& name = "progression") {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t i = 0; i < net.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << vec_label(net.nodes[i]) << "\"];\n";
    for (const auto& e : net.edges) {
        os << "  n" << e.from << " -> n" << e.to;
        if (!e.label.empty()) os << " [label=\"" << e.label << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace vg
