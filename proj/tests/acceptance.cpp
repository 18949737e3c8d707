// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <deque>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "voicegroup/voicegroup.hpp"

using namespace vg;

namespace {

const Modulus twelve(12);

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [" << what << "]";
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
    Outcome out;
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail << " [exception: " << e.what() << "]";
    }
    if (!out.ok) ++failures;
    std::cout << (out.ok ? "PASS" : "FAIL") << " " << id << " " << name << out.detail.str() << std::endl;
}

Mat3 gen(GeneratorTag g) { return generator_matrix(g, twelve); }

std::set<Mat3> matrix_closure(const std::vector<Mat3>& gens) {
    std::set<Mat3> seen{identity(twelve)};
    std::deque<Mat3> todo{identity(twelve)};
    while (!todo.empty()) {
        const Mat3 a = todo.front();
        todo.pop_front();
        for (const Mat3& g : gens)
            if (seen.insert(a * g).second) todo.push_back(a * g);
    }
    return seen;
}

bool commutes(const Mat3& a, const Mat3& b) { return a * b == b * a; }

template <class T>
std::string str(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

int main() {
    const std::vector<Mat3> uvw{gen(GeneratorTag::U), gen(GeneratorTag::V), gen(GeneratorTag::W)};

    criterion(1, "group order 288 and normal-form bijection", [&](Outcome& o) {
        const auto closure = matrix_closure(uvw);
        o.check(closure.size() == 288, "closure size " + std::to_string(closure.size()));
        std::set<Mat3> images;
        for (const JElement& e : enumerate_J(twelve)) {
            const Mat3 m = normal_form_matrix(e);
            images.insert(m);
            o.check(decode(m) == e, "decode " + e.to_string());
        }
        o.check(images == closure, "normal forms do not cover the closure");
        for (const Mat3& m : closure) o.check(normal_form_matrix(decode(m)) == m, "encode(decode)");
    });

    criterion(2, "relations", [&](Outcome& o) {
        const Mat3 &u = uvw[0], &v = uvw[1], &w = uvw[2], id = identity(twelve);
        o.check(u * u == id && v * v == id && w * w == id, "involutions");
        o.check(mat_pow(u * v * w, 2) == id, "(UVW)^2");
        o.check(mat_pow(u * v, 12) == id && mat_pow(u * w, 12) == id, "twelfth powers");
        o.check(commutes(u * v, u * w), "UV UW commute");
        for (std::int64_t m = 0; m < 12; ++m)
            o.check(u * mat_pow(u * v, m) * u == mat_pow(mat_pow(u * v, 11), m), "U (UV)^m U, m=" + std::to_string(m));
    });

    criterion(3, "center of J", [&](Outcome& o) {
        std::set<Mat3> center;
        const auto all = enumerate_J(twelve);
        for (const JElement& a : all) {
            const Mat3 ma = normal_form_matrix(a);
            bool central = true;
            for (const JElement& b : all) central = central && commutes(ma, normal_form_matrix(b));
            if (central) center.insert(ma);
        }
        const std::set<Mat3> expected{identity(twelve), mat_pow(uvw[0] * uvw[1], 6), mat_pow(uvw[0] * uvw[2], 6),
                                      mat_pow(uvw[0] * uvw[1], 6) * mat_pow(uvw[0] * uvw[2], 6)};
        o.check(center == expected, "center has " + std::to_string(center.size()) + " elements");
        const auto lib = center_of_J(twelve);
        o.check(lib.size() == 4, "library center size");
    });

    criterion(4, "centralizer sizes 30/16/360/192 and the 30 diagonal families", [&](Outcome& o) {
        const auto m3 = centralizer_in_M3(twelve);
        const auto gl = centralizer_in_GL3(twelve);
        const auto aff = centralizer_in_Aff(twelve, false);
        const auto affx = centralizer_in_Aff(twelve, true);
        o.check(m3.size() == 30, "M3 has " + std::to_string(m3.size()));
        o.check(gl.size() == 16, "GL3 has " + std::to_string(gl.size()));
        o.check(aff.size() == 360, "Aff monoid has " + std::to_string(aff.size()));
        o.check(affx.size() == 192, "Aff group has " + std::to_string(affx.size()));
        const auto families = diagonal_family_12();
        const std::set<Mat3> family_set(families.begin(), families.end());
        o.check(std::set<Mat3>(m3.matrices.begin(), m3.matrices.end()) == family_set,
                "M3 centralizer differs from the 30 family matrices");
        for (const Mat3& a : m3.matrices)
            if (!family_set.contains(a)) {
                o.check(false, "e.g. " + str(a) + " commutes with U,V,W: " +
                                   (commutes(a, uvw[0]) && commutes(a, uvw[1]) && commutes(a, uvw[2]) ? "yes" : "no"));
                break;
            }
    });

    criterion(5, "GL/SL orders and indices of J", [&](Outcome& o) {
        o.check(count_GL3_prime_power(3) == 11232, "GL(3,Z3)");
        o.check(count_GL3_prime_power(4) == 86016, "GL(3,Z4)");
        o.check(count_SL3(twelve) == 241532928, "SL(3,Z12)");
        o.check(index_of_J(twelve, LinearAmbient::GL3) == 3354624, "index in GL");
        o.check(index_of_J(twelve, LinearAmbient::SL3) == 838656, "index in SL");
    });

    criterion(6, "trace table and conjugacy classes of U", [&](Outcome& o) {
        for (const auto& a : enumerate_extension(twelve)) {
            const Perm3& s = a.sigma();
            const int k = a.j().k();
            const std::int64_t expected = s.is_identity() ? (k ? 11 : 3) : s.is_three_cycle() ? (k ? 2 : 0) : 1;
            if (a.matrix().trace() != expected) {
                o.check(false, "trace of " + a.to_string());
                break;
            }
        }
        // Conjugation done on matrices, independently of the normal-form product.
        const Mat3 u = uvw[0];
        std::set<Mat3> in_j, in_ext;
        for (const JElement& g : enumerate_J(twelve)) {
            const Mat3 m = normal_form_matrix(g);
            in_j.insert(m * u * normal_form_matrix(g.inverse()));
        }
        for (const auto& g : enumerate_extension(twelve)) in_ext.insert(g.matrix() * u * g.inverse().matrix());
        o.check(in_j.size() == 36, "class in J has " + std::to_string(in_j.size()));
        o.check(in_ext.size() == 108, "class in extension has " + std::to_string(in_ext.size()));
    });

    criterion(7, "triadic orbits and the P/L/R restriction table", [&](Outcome& o) {
        o.check(triads().size() == 144, "Triads");
        o.check(major_triads().size() == 72 && minor_triads().size() == 72, "Maj/Min");
        o.check(root_position_triads().size() == 24, "RootPos");
        o.check(dual_root_position_triads().size() == 24, "DualRootPos");
        const std::vector<std::string> expected{"RLP", "LPR", "PRL", "PLR", "RPL", "LRP"};
        const auto table = orbit_restriction_table();
        for (std::size_t i = 0; i < table.size() && i < expected.size(); ++i) {
            std::string got;
            for (PLR x : table[i].generator_as) got += plr_name(x);
            o.check(got == expected[i], "column " + str(table[i].representative) + " is " + got);
        }
        o.check(table.size() == 6, "six columns");
    });

    criterion(8, "rho and the Hook group", [&](Outcome& o) {
        const auto utts = enumerate_utts();
        std::vector<HookElement> images;
        for (const UTT& u : utts) images.push_back(rho(u));
        std::set<ExtElement> image_set;
        for (const auto& h : images) image_set.insert(h.underlying());
        o.check(image_set.size() == 288, "injective");
        bool hom = true;
        for (std::size_t i = 0; i < utts.size() && hom; ++i)
            for (std::size_t j = 0; j < utts.size() && hom; ++j)
                hom = rho(utt_compose(utts[i], utts[j])).matrix() == images[i].matrix() * images[j].matrix();
        o.check(hom, "homomorphism");

        const auto stab = stabilizer_of_set(enumerate_extension(twelve), root_position_triads());
        o.check(std::set<ExtElement>(stab.begin(), stab.end()) == image_set, "image is the stabilizer");

        o.check(rho(UTT(Sign::plus, 1, 0)).matrix() == Mat3({{9, 1, 3}, {8, 2, 3}, {8, 1, 4}}, twelve), "rho<+,1,0>");
        o.check(rho(UTT(Sign::plus, 0, 1)).matrix() == Mat3({{10, 11, 4}, {9, 0, 4}, {9, 11, 5}}, twelve), "rho<+,0,1>");
        o.check(rho(UTT(Sign::minus, 0, 0)).matrix() == Mat3({{1, 0, 0}, {1, 11, 1}, {0, 0, 1}}, twelve), "rho<-,0,0>");

        const Mat3 e = perm_matrix(Perm3::swap(1, 3), twelve) * uvw[2];
        const Mat3 uv = uvw[0] * uvw[1], uw = uvw[0] * uvw[2];
        for (std::int64_t m = 0; m < 12; ++m)
            for (std::int64_t n = 0; n < 12; ++n)
                if (e * mat_pow(uv, m) * mat_pow(uw, n) * uvw[2] * perm_matrix(Perm3::swap(1, 3), twelve) !=
                    mat_pow(uv, (m + n) % 12) * mat_pow(uw, (12 - n) % 12))
                    o.check(false, "conjugation formula at m=" + std::to_string(m) + " n=" + std::to_string(n));

        std::set<std::pair<std::int64_t, std::int64_t>> forms;
        for (const HookElement& h : enumerate_hook()) {
            const auto b = hook_normal_form_B(h);
            forms.emplace(b.p, b.n);
            o.check(from_normal_form_B(b) == h, "form B reconstruction");
            o.check((b.p % 2 == 0) == (h.underlying().j().k() == 0), "p parity");
        }
        o.check(forms.size() == 288, "form B unique");
    });

    criterion(9, "uniform solvers: Grail and mod-7 falling fifths", [&](Outcome& o) {
        const Progression grail(twelve,
                                {Vec3(3, 7, 10, twelve), Vec3(2, 6, 11, twelve), Vec3(7, 11, 2, twelve),
                                 Vec3(6, 10, 3, twelve), Vec3(11, 3, 6, twelve), Vec3(10, 2, 7, twelve)},
                                true);
        const auto sols = solve_uniform(grail, Perm3::swap(1, 2), 1);
        std::set<std::pair<std::int64_t, std::int64_t>> mn;
        std::set<Mat3> mats;
        for (const auto& s : sols) {
            mn.emplace(s.m(), s.n());
            mats.insert(s.matrix());
        }
        o.check(mn == std::set<std::pair<std::int64_t, std::int64_t>>{{2, 7}, {5, 4}, {8, 1}, {11, 10}}, "Grail (m,n)");
        o.check(mats == std::set<Mat3>{Mat3({{11, 5, 9}, {10, 6, 9}, {11, 6, 8}}, twelve),
                                       Mat3({{8, 8, 9}, {7, 9, 9}, {8, 9, 8}}, twelve),
                                       Mat3({{5, 11, 9}, {4, 0, 9}, {5, 0, 8}}, twelve),
                                       Mat3({{2, 2, 9}, {1, 3, 9}, {2, 3, 8}}, twelve)},
                "Grail matrices");

        const Modulus seven(7);
        const Progression ff(seven, {Vec3(0, 2, 4, seven), Vec3(5, 0, 3, seven), Vec3(6, 1, 3, seven)});
        const auto f = solve_uniform(ff, Perm3::swap(1, 2), 1);
        o.check(f.size() == 1, "falling fifths has " + std::to_string(f.size()) + " solutions");
        if (f.size() == 1) {
            o.check(f[0].m() == 3 && f[0].n() == 0, "falling fifths (m,n)");
            o.check(f[0].matrix() == Mat3({{5, 0, 3}, {4, 1, 3}, {5, 1, 2}}, seven), "falling fifths matrix");
        }
    });

    criterion(10, "RICH and the Webern rows", [&](Outcome& o) {
        const std::vector<Vec3> row1{Vec3(8, 4, 5, twelve), Vec3(4, 5, 1, twelve),  Vec3(5, 1, 2, twelve),
                                     Vec3(1, 2, 10, twelve), Vec3(2, 10, 11, twelve), Vec3(10, 11, 7, twelve)};
        const auto cycle = orbit_of_element(rich_element(twelve), row1.front());
        o.check(std::equal(row1.begin(), row1.end(), cycle.begin()), "row 1");
        o.check(cycle.size() == 8, "cycle length " + std::to_string(cycle.size()));
        std::set<std::int64_t> pcs;
        for (const Vec3& x : cycle)
            for (std::int64_t c : x.values()) pcs.insert(c);
        o.check(pcs == std::set<std::int64_t>{1, 2, 4, 5, 7, 8, 10, 11}, "octatonic union");
        const AffineMap down2 = scalar_affine(Residue(1, twelve), Residue(10, twelve));
        const std::vector<Vec3> row2{Vec3(6, 2, 3, twelve), Vec3(2, 3, 11, twelve), Vec3(3, 11, 0, twelve),
                                     Vec3(11, 0, 8, twelve), Vec3(0, 8, 9, twelve),  Vec3(8, 9, 5, twelve)};
        for (std::size_t i = 0; i < row1.size(); ++i) o.check(down2(row1[i]) == row2[i], "x-2 on " + str(row1[i]));
        o.check(verify_morphism_commutation(down2, {rich_element(twelve)}), "x-2 commutes with (13)V");
    });

    criterion(11, "duality", [&](Outcome& o) {
        o.check(check_duality(Vec3(0, 4, 7, twelve)).is_dual_pair, "(0,4,7)");
        o.check(check_duality(Vec3(0, 4, 1, twelve)).is_dual_pair, "(0,4,1)");
        const auto bad = check_duality(Vec3(0, 4, 10, twelve));
        o.check(!bad.is_dual_pair, "(0,4,10) reported dual");
        o.check(bad.coinciding_power == 7, "(UV)^7 witness");
    });

    criterion(12, "oracle equivalence", [&](Outcome& o) {
        const auto all = enumerate_J(twelve);
        std::vector<Mat3> mats;
        for (const auto& e : all) mats.push_back(normal_form_matrix(e));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j)
                if (normal_form_matrix(all[i] * all[j]) != mats[i] * mats[j]) {
                    o.check(false, "product " + all[i].to_string() + " * " + all[j].to_string());
                    i = all.size();
                    break;
                }

        const auto ext = enumerate_extension(twelve);
        std::mt19937 rng(2024);
        std::uniform_int_distribution<std::int64_t> d(0, 11);
        for (int t = 0; t < 200; ++t) {
            const Vec3 src(d(rng), d(rng), d(rng), twelve), dst(d(rng), d(rng), d(rng), twelve);
            std::vector<ExtElement> brute;
            for (const auto& g : ext)
                if (g(src) == dst) brute.push_back(g);
            if (solve_step(src, dst, GroupChoice::Extension) != brute) o.check(false, "solve_step " + str(src));
        }

        // Every system with one or two equations in one or two unknowns.
        auto direct = [](const std::vector<std::vector<std::int64_t>>& rows, std::size_t unknowns) {
            std::vector<std::vector<std::int64_t>> out;
            const std::int64_t total = unknowns == 1 ? 12 : 144;
            for (std::int64_t idx = 0; idx < total; ++idx) {
                const std::vector<std::int64_t> x = unknowns == 1 ? std::vector<std::int64_t>{idx}
                                                                  : std::vector<std::int64_t>{idx / 12, idx % 12};
                bool ok = true;
                for (const auto& r : rows) {
                    std::int64_t acc = 0;
                    for (std::size_t c = 0; c < unknowns; ++c) acc += r[c] * x[c];
                    ok = ok && acc % 12 == 0;
                }
                if (ok) out.push_back(x);
            }
            return out;
        };
        std::size_t systems = 0;
        for (std::size_t unknowns : {1u, 2u}) {
            const std::int64_t row_count = unknowns == 1 ? 12 : 144;
            auto row = [&](std::int64_t idx) {
                return unknowns == 1 ? std::vector<std::int64_t>{idx} : std::vector<std::int64_t>{idx / 12, idx % 12};
            };
            for (std::int64_t a = 0; a < row_count; ++a) {
                const std::vector<std::vector<std::int64_t>> one{row(a)};
                ++systems;
                if (solve_homogeneous(one, unknowns, twelve).vectors != direct(one, unknowns))
                    o.check(false, "one-equation system");
                for (std::int64_t b = 0; b < row_count; ++b) {
                    const std::vector<std::vector<std::int64_t>> two{row(a), row(b)};
                    ++systems;
                    if (solve_homogeneous(two, unknowns, twelve).vectors != direct(two, unknowns))
                        o.check(false, "two-equation system");
                }
            }
        }
        o.check(systems == 12 + 144 + 144 + 20736, "system count");
    });

    return failures == 0 ? 0 : 1;
}
