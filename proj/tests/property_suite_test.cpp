#include <gtest/gtest.h>

#include "semifield/generator.hpp"
#include "semifield/property_suite.hpp"

using namespace semifield;

TEST(PropertySuiteTest, SameSeedSameReport) {
    SuiteOptions opts;
    opts.seed = 99;
    opts.triples = 200;
    opts.distributions = 10;
    PropertyReport a = run_property_suite(opts);
    PropertyReport b = run_property_suite(opts);
    ASSERT_EQ(a.groups.size(), b.groups.size());
    for (std::size_t i = 0; i < a.groups.size(); ++i) {
        EXPECT_EQ(a.groups[i].name, b.groups[i].name);
        EXPECT_EQ(a.groups[i].passed, b.groups[i].passed);
        EXPECT_EQ(a.groups[i].total, b.groups[i].total);
    }
    EXPECT_TRUE(a.all_pass());
}

TEST(PropertySuiteTest, CornerTablesReportEighteenCells) {
    PropertyGroup g = check_corner_tables();
    EXPECT_EQ(g.total, 18u);
    EXPECT_EQ(g.passed, 18u);
}

TEST(PropertySuiteTest, LawFieldsCoverBuiltinsAndFamilies) {
    EXPECT_EQ(law_test_fields().size(), 20u);
}

TEST(PropertySuiteTest, CornerAxiomsOnEveryLawField) {
    for (const Semifield& f : law_test_fields()) {
        PropertyGroup g = check_corner_axioms(f);
        EXPECT_TRUE(g.ok()) << f.name() << (g.failures.empty() ? "" : ": " + g.failures.front());
    }
}

TEST(PropertySuiteTest, LawEqualIsExactOnCorners) {
    Semifield nn = builtin("nnR");
    EXPECT_TRUE(law_equal(nn, 1.0, 1.0 + 1e-12, 1e-9));
    EXPECT_FALSE(law_equal(nn, 0.0, 1e-300, 1e-9));
    EXPECT_TRUE(law_equal(nn, ExtendedReal::inf, ExtendedReal::inf, 1e-9));
}
