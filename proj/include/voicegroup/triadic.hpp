#pragma once

/**
 * @file triadic.hpp
 * @brief Consonant triads, uniform triadic transformations, and their
 * linear representation inside S3 ⋉ J over Z/12.
 *
 * A uniform triadic transformation <s, m, n> moves the root of a major
 * triad by m and of a minor triad by n, then keeps (s = +) or flips
 * (s = -) the mode. The representation ρ sends <s, m, n> to the element
 * of S3 ⋉ J that does the same to root-position voicings
 * (r, r+4, r+7) and (r, r+3, r+7). Its image is the Hook group H, the
 * stabilizer of the 24 root-position triads, and
 *
 *     H = J⁺ ⊔ (13)J⁻,   H = <E, F, G>,
 *
 * with E = ρ<-,0,0> = (13)W, F = ρ<+,1,0>, G = ρ<+,0,1>.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "extension.hpp"

namespace vg {

inline const Modulus triad_modulus(12);

enum class Mode { major, minor };

struct TriadId {
    std::int64_t root;  // in [0, 12)
    Mode mode;

    TriadId(std::int64_t r, Mode m) : root(detail::mod(r, 12)), mode(m) {}

    friend bool operator==(const TriadId&, const TriadId&) = default;
    friend auto operator<=>(const TriadId&, const TriadId&) = default;

    /// Letter name, upper case for major and lower case for minor: "C", "d#", ...
    std::string name() const {
        static const std::array<const char*, 12> letters{"C", "C#", "D", "D#", "E", "F",
                                                         "F#", "G", "G#", "A", "A#", "B"};
        std::string s = letters[static_cast<std::size_t>(root)];
        if (mode == Mode::minor) s[0] = static_cast<char>(s[0] - 'A' + 'a');
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const TriadId& t) { return os << t.name(); }
};

/// (r, r+4, r+7) or (r, r+3, r+7).
inline Vec3 root_position_tuple(const TriadId& t) {
    const std::int64_t r = t.root;
    return t.mode == Mode::major ? Vec3(r, r + 4, r + 7, triad_modulus) : Vec3(r, r + 3, r + 7, triad_modulus);
}

/// (r, r+4, r+7) or (r+7, r+3, r).
inline Vec3 dualistic_tuple(const TriadId& t) {
    const std::int64_t r = t.root;
    return t.mode == Mode::major ? Vec3(r, r + 4, r + 7, triad_modulus) : Vec3(r + 7, r + 3, r, triad_modulus);
}

struct TriadClass {
    TriadId id;
    Perm3 voicing;  // voicing.apply(root_position_tuple(id)) is the classified tuple

    friend bool operator==(const TriadClass&, const TriadClass&) = default;
};

/// The triad and voicing of v, or nullopt if v is not a voiced consonant triad.
inline std::optional<TriadClass> classify(const Vec3& v) {
    require_same(v.modulus(), triad_modulus);
    for (const Perm3& s : Perm3::all()) {
        const Vec3 w = s.inverse().apply(v);  // candidate root position
        for (Mode mode : {Mode::major, Mode::minor}) {
            const TriadId id(w[0], mode);
            if (root_position_tuple(id) == w) return TriadClass{id, s};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Orbits and stabilizers

/// Sorted BFS closure of seed under the generators and their inverses.
inline std::vector<Vec3> orbit(const std::vector<ExtElement>& generators, const Vec3& seed) {
    std::vector<ExtElement> moves = generators;
    for (const ExtElement& g : generators) moves.push_back(g.inverse());
    std::set<Vec3> seen{seed};
    std::deque<Vec3> todo{seed};
    while (!todo.empty()) {
        const Vec3 v = todo.front();
        todo.pop_front();
        for (const ExtElement& g : moves) {
            const Vec3 w = g(v);
            if (seen.insert(w).second) todo.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

/// Elements g of group with g(target) = target as a set.
inline std::vector<ExtElement> stabilizer_of_set(const std::vector<ExtElement>& group, const std::vector<Vec3>& target) {
    const std::set<Vec3> t(target.begin(), target.end());
    std::vector<ExtElement> out;
    for (const ExtElement& g : group) {
        const bool keeps = std::all_of(t.begin(), t.end(), [&](const Vec3& v) { return t.contains(g(v)); });
        if (keeps) out.push_back(g);
    }
    return out;
}

inline ExtElement perm_element(const Perm3& s, Modulus n = triad_modulus) { return ExtElement(s, n); }

/// U, V, W, (12), (13).
inline std::vector<ExtElement> extension_generators(Modulus n = triad_modulus) {
    return {ext_generator(GeneratorTag::U, n), ext_generator(GeneratorTag::V, n), ext_generator(GeneratorTag::W, n),
            perm_element(Perm3::swap(1, 2), n), perm_element(Perm3::swap(1, 3), n)};
}

inline std::vector<ExtElement> j_generators(Modulus n = triad_modulus) {
    return {ext_generator(GeneratorTag::U, n), ext_generator(GeneratorTag::V, n), ext_generator(GeneratorTag::W, n)};
}

/// (13)U and (13)W.
inline std::vector<ExtElement> hook_generators(Modulus n = triad_modulus) {
    const ExtElement t = perm_element(Perm3::swap(1, 3), n);
    return {t * ext_generator(GeneratorTag::U, n), t * ext_generator(GeneratorTag::W, n)};
}

/// (12), (13), UV, UW: the mode-preserving generators.
inline std::vector<ExtElement> mode_preserving_generators(Modulus n = triad_modulus) {
    return {perm_element(Perm3::swap(1, 2), n), perm_element(Perm3::swap(1, 3), n), ExtElement(JElement(0, 1, 0, n)),
            ExtElement(JElement(0, 0, 1, n))};
}

inline std::vector<Vec3> triads() { return orbit(extension_generators(), Vec3(0, 4, 7, triad_modulus)); }
inline std::vector<Vec3> major_triads() { return orbit(mode_preserving_generators(), Vec3(0, 4, 7, triad_modulus)); }
inline std::vector<Vec3> minor_triads() { return orbit(mode_preserving_generators(), Vec3(0, 3, 7, triad_modulus)); }
inline std::vector<Vec3> root_position_triads() { return orbit(hook_generators(), Vec3(0, 4, 7, triad_modulus)); }
inline std::vector<Vec3> dual_root_position_triads() {
    return orbit(j_generators(), Vec3(0, 4, 7, triad_modulus));
}

// ---------------------------------------------------------------------------
// Uniform triadic transformations

enum class Sign { plus, minus };

struct UTT {
    Sign sign;
    std::int64_t t_major;  // in [0, 12)
    std::int64_t t_minor;

    UTT(Sign s, std::int64_t m, std::int64_t n) : sign(s), t_major(detail::mod(m, 12)), t_minor(detail::mod(n, 12)) {}

    static UTT identity() { return UTT(Sign::plus, 0, 0); }

    friend bool operator==(const UTT&, const UTT&) = default;
    friend auto operator<=>(const UTT&, const UTT&) = default;

    /// "<+,m,n>" or "<-,m,n>".
    std::string to_string() const {
        return std::string("<") + (sign == Sign::plus ? "+" : "-") + "," + std::to_string(t_major) + "," +
               std::to_string(t_minor) + ">";
    }
    friend std::ostream& operator<<(std::ostream& os, const UTT& u) { return os << u.to_string(); }
};

inline TriadId utt_apply(const UTT& u, const TriadId& t) {
    const std::int64_t shift = t.mode == Mode::major ? u.t_major : u.t_minor;
    const Mode mode = u.sign == Sign::plus ? t.mode : (t.mode == Mode::major ? Mode::minor : Mode::major);
    return TriadId(t.root + shift, mode);
}

/// a ∘ b: apply b first.
inline UTT utt_compose(const UTT& a, const UTT& b) {
    const Sign s = a.sign == b.sign ? Sign::plus : Sign::minus;
    const bool keep = b.sign == Sign::plus;
    return UTT(s, b.t_major + (keep ? a.t_major : a.t_minor), b.t_minor + (keep ? a.t_minor : a.t_major));
}

inline std::vector<UTT> enumerate_utts() {
    std::vector<UTT> out;
    for (Sign s : {Sign::plus, Sign::minus})
        for (std::int64_t m = 0; m < 12; ++m)
            for (std::int64_t n = 0; n < 12; ++n) out.emplace_back(s, m, n);
    return out;
}

// ---------------------------------------------------------------------------
// The Hook group

class NotInHook : public NotInGroup {
public:
    NotInHook() : NotInGroup("element does not preserve root-position triads") {}
};

/// Membership test: σ = id with k = 0, or σ = (13) with k = 1.
inline bool in_hook(const ExtElement& e) {
    if (e.modulus() != triad_modulus) return false;
    if (e.sigma().is_identity()) return e.j().k() == 0;
    return e.sigma() == Perm3::swap(1, 3) && e.j().k() == 1;
}

class HookElement {
public:
    explicit HookElement(ExtElement e) : e_(std::move(e)) {
        if (!in_hook(e_)) throw NotInHook();
    }

    const ExtElement& underlying() const { return e_; }
    Mat3 matrix() const { return e_.matrix(); }
    Vec3 operator()(const Vec3& v) const { return e_(v); }

    friend HookElement operator*(const HookElement& a, const HookElement& b) { return HookElement(a.e_ * b.e_); }
    HookElement inverse() const { return HookElement(e_.inverse()); }

    friend bool operator==(const HookElement&, const HookElement&) = default;
    friend auto operator<=>(const HookElement&, const HookElement&) = default;
    friend std::ostream& operator<<(std::ostream& os, const HookElement& h) { return os << h.e_; }

private:
    ExtElement e_;
};

inline Mat3 rho_matrix(const UTT& u) {
    const std::int64_t m = u.t_major, n = u.t_minor;
    if (u.sign == Sign::plus)
        return Mat3({{1 - 4 * m - 3 * n, m - n, 3 * m + 4 * n},
                     {-4 * m - 3 * n, 1 + m - n, 3 * m + 4 * n},
                     {-4 * m - 3 * n, m - n, 1 + 3 * m + 4 * n}},
                    triad_modulus);
    // Sends (r, r+4, r+7) to (r+m, r+m+3, r+m+7) and (r, r+3, r+7) to (r+n, r+n+4, r+n+7).
    return Mat3({{1 - 4 * m - 3 * n, m - n, 3 * m + 4 * n},
                 {1 - 4 * m - 3 * n, -1 + m - n, 1 + 3 * m + 4 * n},
                 {-4 * m - 3 * n, m - n, 1 + 3 * m + 4 * n}},
                triad_modulus);
}

inline HookElement rho(const UTT& u) {
    try {
        return HookElement(ext_decode(rho_matrix(u)));
    } catch (const NotInGroup&) {
        throw std::logic_error("representation matrix of " + u.to_string() + " left the Hook group");
    }
}

inline UTT rho_inverse(const HookElement& h) {
    const auto major = classify(h(Vec3(0, 4, 7, triad_modulus)));
    const auto minor = classify(h(Vec3(0, 3, 7, triad_modulus)));
    if (!major || !minor) throw NotInHook();
    const Sign s = h.underlying().j().k() == 0 ? Sign::plus : Sign::minus;
    return UTT(s, major->id.root, minor->id.root);
}

inline HookElement to_hook(const ExtElement& e) { return HookElement(e); }

/// All 288 elements of H, ordered as their underlying elements.
inline std::vector<HookElement> enumerate_hook() {
    std::vector<HookElement> out;
    for (const ExtElement& e : enumerate_extension(triad_modulus))
        if (in_hook(e)) out.emplace_back(e);
    return out;
}

struct HookNormalFormA {
    int k;
    std::int64_t m;
    std::int64_t n;
    friend bool operator==(const HookNormalFormA&, const HookNormalFormA&) = default;
};

/// J-normal form of h; the permutation is (13) exactly when k = 1.
inline HookNormalFormA hook_normal_form_A(const HookElement& h) {
    const JElement& j = h.underlying().j();
    return {j.k(), j.m(), j.n()};
}

struct HookNormalFormB {
    std::int64_t p;  // in [0, 24)
    std::int64_t n;  // in [0, 12)
    friend bool operator==(const HookNormalFormB&, const HookNormalFormB&) = default;
};

inline ExtElement hook_twist() {
    return perm_element(Perm3::swap(1, 3)) * ext_generator(GeneratorTag::U, triad_modulus);
}

/// h = ((13)U)^p (UW)^n: the p with ((13)U)^-p h in <UW>.
inline HookNormalFormB hook_normal_form_B(const HookElement& h) {
    const ExtElement t = hook_twist();
    ExtElement power_inv = ExtElement::identity(triad_modulus);
    const ExtElement t_inv = t.inverse();
    for (std::int64_t p = 0; p < 24; ++p) {
        const ExtElement rest = power_inv * h.underlying();
        if (rest.sigma().is_identity() && rest.j().k() == 0 && rest.j().m() == 0) return {p, rest.j().n()};
        power_inv = t_inv * power_inv;
    }
    throw NotInHook();
}

inline HookElement from_normal_form_B(const HookNormalFormB& b) {
    return HookElement(ext_pow(hook_twist(), b.p) * ExtElement(JElement(0, 0, b.n, triad_modulus)));
}

struct WreathGenerators {
    HookElement e;
    HookElement f;
    HookElement g;
};

/// E = (13)W, F = (UV)^4 (UW)^-1, G = (UV)^3 (UW).
inline WreathGenerators wreath_generators() {
    return {rho(UTT(Sign::minus, 0, 0)), rho(UTT(Sign::plus, 1, 0)), rho(UTT(Sign::plus, 0, 1))};
}

/// Exponents (t, p, q) with h = E^t F^p G^q.
struct WreathCoordinates {
    int t;
    std::int64_t p;
    std::int64_t q;
    friend bool operator==(const WreathCoordinates&, const WreathCoordinates&) = default;
};

inline WreathCoordinates wreath_coordinates(const HookElement& h) {
    const UTT u = rho_inverse(h);
    return {u.sign == Sign::plus ? 0 : 1, u.t_major, u.t_minor};
}

inline HookElement from_wreath_coordinates(const WreathCoordinates& c) {
    const WreathGenerators w = wreath_generators();
    ExtElement r = ext_pow(w.e.underlying(), c.t) * ext_pow(w.f.underlying(), c.p) * ext_pow(w.g.underlying(), c.q);
    return HookElement(r);
}

}  // namespace vg
