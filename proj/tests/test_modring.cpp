#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "voicegroup/modring.hpp"

using namespace vg;

TEST(Normalize, ReducesIntoRange) {
    EXPECT_EQ(normalize(-3, Modulus(12)).value(), 9);
    EXPECT_EQ(normalize(14, Modulus(7)).value(), 0);
    EXPECT_EQ(normalize(13, Modulus(12)).value(), 1);
}

TEST(Normalize, FloorDivisionIdentity) {
    for (std::int64_t n = 2; n <= 24; ++n)
        for (std::int64_t x = -100; x <= 100; ++x) {
            const std::int64_t r = normalize(x, Modulus(n)).value();
            ASSERT_GE(r, 0);
            ASSERT_LT(r, n);
            // floor(x / n) computed without relying on truncation toward zero
            const std::int64_t q = (x - r) / n;
            ASSERT_EQ(r + n * q, x);
        }
}

TEST(Modulus, RejectsTooSmall) {
    EXPECT_THROW(Modulus(1), std::invalid_argument);
    EXPECT_THROW(Modulus(0), std::invalid_argument);
    EXPECT_THROW(Modulus(-12), std::invalid_argument);
}

TEST(Modulus, FactorizationMultipliesBack) {
    for (std::int64_t n = 2; n <= 1000; ++n) {
        std::int64_t prod = 1;
        for (const auto& pp : Modulus(n).prime_powers()) {
            std::int64_t v = 1;
            for (int i = 0; i < pp.exponent; ++i) v *= pp.prime;
            ASSERT_EQ(v, pp.value);
            prod *= pp.value;
        }
        ASSERT_EQ(prod, n);
    }
}

TEST(Residue, MixedModuliAreRejected) {
    const Residue a(3, Modulus(12)), b(3, Modulus(7));
    EXPECT_THROW(a + b, ModulusMismatch);
    EXPECT_THROW(a * b, ModulusMismatch);
    EXPECT_NE(a, b);
}

TEST(Residue, Arithmetic) {
    const Modulus n(12);
    EXPECT_EQ((Residue(7, n) + Residue(8, n)).value(), 3);
    EXPECT_EQ((Residue(3, n) - Residue(8, n)).value(), 7);
    EXPECT_EQ((Residue(5, n) * Residue(5, n)).value(), 1);
    EXPECT_EQ((-Residue(1, n)).value(), 11);
}

TEST(Units, ExamplesFromTwelve) {
    EXPECT_TRUE(is_unit(Residue(5, Modulus(12))));
    EXPECT_FALSE(is_unit(Residue(6, Modulus(12))));
    EXPECT_FALSE(is_unit(Residue(0, Modulus(7))));

    std::vector<std::int64_t> u12;
    for (const auto& r : units(Modulus(12))) u12.push_back(r.value());
    EXPECT_EQ(u12, (std::vector<std::int64_t>{1, 5, 7, 11}));
    EXPECT_EQ(units(Modulus(7)).size(), 6u);
    EXPECT_EQ(units(Modulus(4)).size(), 2u);
}

TEST(Units, CountIsTotient) {
    for (std::int64_t n = 2; n <= 24; ++n) {
        std::size_t phi = 0;
        for (std::int64_t x = 1; x <= n; ++x) phi += std::gcd(x, n) == 1;
        EXPECT_EQ(units(Modulus(n)).size(), phi) << n;
    }
}

TEST(Crt, SplitTwelve) {
    const auto parts = crt_split(Modulus(12));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].value(), 4);
    EXPECT_EQ(parts[1].value(), 3);
    EXPECT_EQ(crt_split(Modulus(7)).size(), 1u);
}

TEST(Crt, CombineExample) {
    const std::vector<Residue> parts{Residue(3, Modulus(4)), Residue(2, Modulus(3))};
    EXPECT_EQ(crt_combine(Modulus(12), parts).value(), 11);
}

TEST(Crt, CombineRejectsWrongLength) {
    const std::vector<Residue> parts{Residue(3, Modulus(4))};
    EXPECT_THROW(crt_combine(Modulus(12), parts), std::invalid_argument);
}

TEST(Crt, RoundTripEveryResidue) {
    for (std::int64_t n : {2, 6, 7, 12, 30, 60, 72, 210}) {
        const Modulus m(n);
        for (std::int64_t x = 0; x < n; ++x) {
            std::vector<Residue> parts;
            for (const Modulus& f : crt_split(m)) parts.emplace_back(x, f);
            ASSERT_EQ(crt_combine(m, parts).value(), x) << n;
        }
    }
}

TEST(Solve, OneUnknownExamples) {
    auto s = solve_homogeneous({{1}}, 1, Modulus(12));
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s.vectors[0][0], 0);

    s = solve_homogeneous({{2}}, 1, Modulus(12));
    EXPECT_EQ(s.vectors, (std::vector<std::vector<std::int64_t>>{{0}, {6}}));
}

TEST(Solve, InhomogeneousSystem) {
    LinearSystem sys;
    sys.unknowns = 2;
    sys.add_equation({4, 0}, 8);
    sys.add_equation({-3, 1}, 1);
    const auto s = solve_linear(sys, Modulus(12));
    EXPECT_EQ(s.vectors, (std::vector<std::vector<std::int64_t>>{{2, 7}, {5, 4}, {8, 1}, {11, 10}}));
}

TEST(Solve, InconsistentSystemIsEmpty) {
    LinearSystem sys;
    sys.unknowns = 1;
    sys.add_equation({2}, 1);
    EXPECT_TRUE(solve_linear(sys, Modulus(12)).empty());
}

TEST(Solve, BudgetIsEnforced) {
    LinearSystem sys;
    sys.unknowns = 9;
    EXPECT_THROW(solve_linear(sys, Modulus(7), 1000), BudgetExceeded);
    try {
        solve_linear(sys, Modulus(7), 1000);
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.needed(), 40353607u);
    }
}

TEST(Solve, CountIsProductOfFactorCounts) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> coeff(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
        LinearSystem sys;
        sys.unknowns = 3;
        for (int r = 0; r < 2; ++r) sys.add_equation({coeff(rng), coeff(rng), coeff(rng)}, coeff(rng));
        const Modulus n(60);
        std::size_t product = 1;
        for (const Modulus& f : crt_split(n)) product *= solve_linear(sys, f).size();
        EXPECT_EQ(solve_linear(sys, n).size(), product);
    }
}

// Direct enumeration over Z/n with no factorization.
static std::vector<std::vector<std::int64_t>> brute_force(const LinearSystem& sys, std::int64_t n) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> x(sys.unknowns, 0);
    while (true) {
        bool ok = true;
        for (std::size_t r = 0; r < sys.rows.size() && ok; ++r) {
            std::int64_t acc = 0;
            for (std::size_t c = 0; c < sys.unknowns; ++c) acc += sys.rows[r][c] * x[c];
            ok = ((acc - sys.rhs[r]) % n + n) % n == 0;
        }
        if (ok) out.push_back(x);
        std::size_t c = sys.unknowns;
        while (c-- > 0) {
            if (++x[c] < n) break;
            x[c] = 0;
        }
        if (c == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

TEST(Solve, AgreesWithDirectEnumerationSmallSystems) {
    std::mt19937 rng(11);
    for (std::int64_t n = 2; n <= 12; ++n) {
        std::uniform_int_distribution<std::int64_t> coeff(0, n - 1);
        for (std::size_t d = 1; d <= 3; ++d)
            for (int trial = 0; trial < 20; ++trial) {
                LinearSystem sys;
                sys.unknowns = d;
                for (int r = 0; r < 2; ++r) {
                    std::vector<std::int64_t> row(d);
                    for (auto& c : row) c = coeff(rng);
                    sys.add_equation(row, trial % 2 ? coeff(rng) : 0);
                }
                ASSERT_EQ(solve_linear(sys, Modulus(n)).vectors, brute_force(sys, n)) << "n=" << n << " d=" << d;
            }
    }
}
