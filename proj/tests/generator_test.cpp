#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gen.hpp"
#include "semifield/errors.hpp"
#include "semifield/generator.hpp"

using namespace semifield;

namespace {

constexpr double inf = ExtendedReal::inf;

}  // namespace

TEST(OrderParameterTest, AlphaConversion) {
    OrderParameter p = OrderParameter::from_alpha(2.0);
    EXPECT_EQ(p.r(), 1.0);
    EXPECT_EQ(p.alpha(), 2.0);
    EXPECT_EQ(p.base(), 2.0);
    EXPECT_TRUE(OrderParameter(0.0).is_degenerate());
    EXPECT_FALSE(OrderParameter(inf).is_finite());
    EXPECT_THROW(OrderParameter(1.0, 1.0), DomainError);
    EXPECT_THROW(OrderParameter(1.0, inf), DomainError);
    EXPECT_EQ(OrderParameter::natural(1.0).base(), std::numbers::e);
}

TEST(RealFamilyTest, EndpointsAreBuiltins) {
    EXPECT_EQ(real_family(OrderParameter(inf)), builtin("max-times"));
    EXPECT_EQ(real_family(OrderParameter(-inf)), builtin("min-times"));
    EXPECT_THROW(real_family(OrderParameter(0.0)), DegenerateFamilyError);
}

TEST(RealFamilyTest, PowerAddition) {
    Semifield r2 = real_family(OrderParameter(2.0));
    EXPECT_DOUBLE_EQ(r2.add(3.0, 4.0).value(), 5.0);
    EXPECT_EQ(r2.mul(3.0, 4.0), 12.0);
    Semifield r1 = real_family(OrderParameter(1.0));
    EXPECT_DOUBLE_EQ(r1.add(3.0, 4.0).value(), 7.0);
    Semifield rm1 = real_family(OrderParameter(-1.0));
    EXPECT_DOUBLE_EQ(rm1.add(2.0, 2.0).value(), 1.0);
    EXPECT_EQ(rm1.bottom(), inf);
    EXPECT_EQ(r2.dual(), real_family(OrderParameter(-2.0)));
}

TEST(RealFamilyTest, LargeOrderDoesNotOverflow) {
    Semifield r = real_family(OrderParameter(500.0));
    EXPECT_NEAR(r.add(1e300, 1e299).value(), 1e300, 1e285);
}

TEST(EntropicFamilyTest, MatchesHartleyAtMinusOneInBaseE) {
    Semifield h = entropic_family(OrderParameter::natural(-1.0));
    Semifield ref = builtin("hartley");
    testing_support::Gen g(1);
    for (int i = 0; i < 200; ++i) {
        double a = g.uniform(-10, 10);
        double b = g.uniform(-10, 10);
        EXPECT_NEAR(h.add(a, b).value(), ref.add(a, b).value(), 1e-12);
    }
    EXPECT_EQ(h.bottom(), -inf);
}

TEST(EntropicFamilyTest, EndpointsAndDegenerateOrder) {
    EXPECT_EQ(entropic_family(OrderParameter(inf)), builtin("min-plus"));
    EXPECT_EQ(entropic_family(OrderParameter(-inf)), builtin("max-plus"));
    EXPECT_THROW(entropic_family(OrderParameter(0.0)), DegenerateFamilyError);
}

TEST(EntropicFamilyTest, DefinitionAsDeformedMinimum) {
    // u ⊕ v = u + v - log_b (b^{ru} + b^{rv})^{1/r}
    for (double r : {-2.0, -0.5, 0.5, 3.0}) {
        Semifield h = entropic_family(OrderParameter(r));
        for (double u : {-3.0, 0.25, 4.0}) {
            for (double v : {-1.0, 2.0}) {
                double expected = u + v - std::log2(std::pow(std::exp2(r * u) + std::exp2(r * v), 1 / r));
                EXPECT_NEAR(h.add(u, v).value(), expected, 1e-12) << r << " " << u << " " << v;
            }
        }
    }
}

TEST(GeneratorTest, IdentityGeneratorGivesNonnegativeReals) {
    Generator g{[](double x) { return x; }, [](double x) { return x; }, Monotonicity::increasing,
                0.0, inf, "id"};
    Semifield f = from_generator(g);
    EXPECT_EQ(f.bottom(), 0.0);
    EXPECT_EQ(f.unit(), 1.0);
    EXPECT_EQ(f.add(2.0, 3.0), 5.0);
    EXPECT_EQ(f.mul(2.0, 3.0), 6.0);
    EXPECT_FALSE(f.is_idempotent());
}

TEST(GeneratorTest, ExponentialGeneratorGivesLogSemiring) {
    Generator g{[](double x) { return std::exp(x); }, [](double y) { return std::log(y); },
                Monotonicity::increasing, -inf, inf, "exp"};
    Semifield f = from_generator(g);
    EXPECT_EQ(f.bottom(), -inf);
    EXPECT_NEAR(f.unit().value(), 0.0, 0.0);
    EXPECT_NEAR(f.add(0.0, 0.0).value(), std::log(2.0), 1e-15);
    EXPECT_NEAR(f.mul(2.0, 3.0).value(), 5.0, 1e-12);
}

TEST(GeneratorTest, DecreasingGeneratorIsOrderDual) {
    Semifield f = from_generator(renyi_kernel(OrderParameter(1.0)));
    EXPECT_EQ(f.bottom(), inf);
    EXPECT_EQ(f.top(), -inf);
    EXPECT_EQ(f.alignment(), Alignment::dual);
}

TEST(GeneratorTest, RejectsInvalidGenerators) {
    Generator wrong_flag{[](double x) { return x; }, [](double x) { return x; },
                         Monotonicity::decreasing, 0.0, inf, "flag"};
    EXPECT_THROW(from_generator(wrong_flag), InvalidSpecError);
    Generator bad_inverse{[](double x) { return x * x; }, [](double x) { return x; },
                          Monotonicity::increasing, 0.0, inf, "sq"};
    EXPECT_THROW(from_generator(bad_inverse), InvalidSpecError);
    Generator not_monotone{[](double x) { return x == 0 ? 0 : (std::isinf(x) ? inf : 1.0 + std::sin(x) * 0.5); },
                           [](double x) { return x; }, Monotonicity::increasing, 0.0, inf, "wavy"};
    EXPECT_THROW(from_generator(not_monotone), InvalidSpecError);
}

TEST(GeneratorTest, RenyiKernelComposition) {
    // The two constructions of H_r agree.
    testing_support::Gen g(8);
    for (double r : {-3.0, -1.0, 1.0, 3.0}) {
        OrderParameter p(r);
        Semifield direct = entropic_family(p);
        Semifield built = from_generator(renyi_kernel(p));
        for (int i = 0; i < 1000; ++i) {
            double a = g.uniform(-8, 8);
            double b = g.uniform(-8, 8);
            EXPECT_NEAR(direct.add(a, b).value(), built.add(a, b).value(),
                        1e-9 * std::max({1.0, std::abs(a), std::abs(b)}));
            EXPECT_NEAR(direct.mul(a, b).value(), built.mul(a, b).value(), 1e-9 * std::max({1.0, std::abs(a + b)}));
        }
    }
}

TEST(HartleyMapTest, TransportsProductsToSums) {
    EXPECT_EQ(hartley_map(1.0), 0.0);
    EXPECT_EQ(hartley_map(0.0), inf);
    EXPECT_EQ(hartley_map(inf), -inf);
    EXPECT_DOUBLE_EQ(hartley_map(0.25, 2.0).value(), 2.0);
    EXPECT_THROW(hartley_map(-1.0), DomainError);
    Semifield hd = builtin("hartley-dual");
    testing_support::Gen g(3);
    for (int i = 0; i < 100; ++i) {
        double x = g.uniform(0.01, 5);
        double y = g.uniform(0.01, 5);
        EXPECT_NEAR(hartley_map(x * y).value(), hartley_map(x).value() + hartley_map(y).value(), 1e-12);
        // Sums of probabilities become soft minima of informations.
        EXPECT_NEAR(hartley_map(x + y).value(), hd.add(hartley_map(x), hartley_map(y)).value(), 1e-12);
        EXPECT_NEAR(hartley_map_inverse(hartley_map(x)).value(), x, 1e-12 * x);
    }
}

TEST(IdempotentLimitTest, PowerFamilyApproachesMaxAndMin) {
    testing_support::Gen g(9);
    Semifield big = real_family(OrderParameter(100.0));
    Semifield small = real_family(OrderParameter(-100.0));
    for (int i = 0; i < 1000; ++i) {
        double u = g.uniform(0.5, 4);
        double v = g.uniform(0.5, 4);
        double m = std::max(u, v);
        double n = std::min(u, v);
        EXPECT_LE(std::abs(big.add(u, v).value() - m) / m, std::exp2(0.01) - 1);
        EXPECT_LE(std::abs(small.add(u, v).value() - n) / n, 1 - std::exp2(-0.01));
    }
}
