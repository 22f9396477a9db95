#include <agrodevs/metrics.hpp>
#include <agrodevs/rng.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace agrodevs;
using namespace agrodevs::metrics;

TEST(Rmse, Identical) {
    const auto r = rmse_and_v({{10, 20, 30}, {10, 20, 30}});
    EXPECT_EQ(r.rmse, 0.0);
    EXPECT_EQ(r.v, 0.0);
}

TEST(Rmse, HandWorked) {
    const auto r = rmse_and_v({{10, 20}, {14, 16}});
    EXPECT_NEAR(r.rmse, 4.0, 1e-12);
    EXPECT_NEAR(r.v, 4.0 / 15.0, 1e-12);
}

TEST(Rmse, ZeroMean) { EXPECT_THROW(rmse_and_v({{0, 0}, {3, 4}}), MetricError); }

TEST(Rmse, LengthMismatch) { EXPECT_THROW(rmse_and_v({{1, 2, 3}, {1, 2}}), ConfigError); }

TEST(Ordinal, Perfect) {
    const auto f = ordinal_fit({{1, 2, 3}, {10, 20, 30}});
    EXPECT_EQ(f.pm, 1.0);
    EXPECT_EQ(f.iof, 1.0);
}

TEST(Ordinal, Reversed) {
    const auto f = ordinal_fit({{1, 2, 3}, {3, 2, 1}});
    EXPECT_EQ(f.pm, 0.0);
    EXPECT_EQ(f.iof, -1.0);
}

TEST(Ordinal, Mixed) {
    const auto f = ordinal_fit({{1, 2, 3}, {2, 1, 3}});
    EXPECT_EQ(f.matches, 2u);
    EXPECT_EQ(f.mismatches, 1u);
    EXPECT_NEAR(f.pm, 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(f.iof, 1.0 / 3.0, 1e-15);
}

TEST(Ordinal, Ties) {
    // the tied observed pair (0,1) is skipped; the simulated tie on (1,2) is a mismatch
    const auto f = ordinal_fit({{1, 1, 2}, {0, 5, 5}});
    EXPECT_EQ(f.matches, 1u);
    EXPECT_EQ(f.mismatches, 1u);
    EXPECT_THROW(ordinal_fit({{4, 4, 4}, {1, 2, 3}}), MetricError);
}

TEST(Ordinal, Properties) {
    SplitMix64 r(77);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 2 + r.below(12);
        SeriesPair p;
        for (std::size_t i = 0; i < n; ++i) {
            p.observed.push_back(static_cast<double>(r.below(6)));
            p.simulated.push_back(static_cast<double>(r.below(6)));
        }
        p.observed[0] = 0;
        p.observed[1] = 9;
        const auto f = ordinal_fit(p);
        EXPECT_EQ(f.iof, 2 * f.pm - 1);
        EXPECT_GE(f.pm, 0.0);
        EXPECT_LE(f.pm, 1.0);

        SeriesPair rev{{p.observed.rbegin(), p.observed.rend()}, {p.simulated.rbegin(), p.simulated.rend()}};
        EXPECT_EQ(ordinal_fit(rev).pm, f.pm);

        SeriesPair t = p;
        for (double& x : t.simulated) x = std::exp(x) + 3;
        for (double& x : t.observed) x = x * x * x - 7;
        EXPECT_EQ(ordinal_fit(t).pm, f.pm);
    }
}

TEST(Agreement, Examples) {
    EXPECT_EQ(goal_agreement({true, true, false, false}), 50.0);
    EXPECT_EQ(goal_agreement(std::vector<bool>(28, false)), 0.0);
    std::vector<bool> f(27, false);
    for (int i = 0; i < 5; ++i) f[i * 4] = true;
    EXPECT_NEAR(goal_agreement(f), 18.52, 0.005);
    EXPECT_THROW(goal_agreement({}), MetricError);
}

TEST(Summary, Quartiles) {
    const std::vector<double> v{5, 3, 1, 4, 2};
    const auto d = distribution_summary(v);
    EXPECT_EQ(d.median, 3);
    EXPECT_EQ(d.q25, 2);
    EXPECT_EQ(d.q75, 4);
    EXPECT_EQ(d.min, 1);
    EXPECT_EQ(d.max, 5);
    EXPECT_EQ(d.mean, 3);
}

TEST(Summary, Interpolates) {
    const std::vector<double> v{1, 2, 3, 4};
    const auto d = distribution_summary(v);
    EXPECT_DOUBLE_EQ(d.q25, 1.75);
    EXPECT_DOUBLE_EQ(d.median, 2.5);
    EXPECT_DOUBLE_EQ(d.q75, 3.25);
}

TEST(Summary, Cv) {
    const std::vector<double> flat{10, 10, 10};
    EXPECT_EQ(*distribution_summary(flat).cv, 0.0);
    const std::vector<double> two{0, 10};
    EXPECT_NEAR(*distribution_summary(two).cv, 100.0, 1e-12);
    const std::vector<double> zero{-5, 5};
    EXPECT_THROW(distribution_summary(zero), MetricError);
    EXPECT_FALSE(describe(zero).cv);
    EXPECT_THROW(describe(std::vector<double>{}), MetricError);
}
