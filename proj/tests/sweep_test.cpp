#include <agrodevs/sweep.hpp>

#include <gtest/gtest.h>

using namespace agrodevs;

namespace {
ScenarioConfig small_base() {
    auto c = longterm_preset();
    c.grid_rows = c.grid_cols = 8;
    c.cycles = 12;
    return c;
}

SweepAxis numeric(SweepParameter p, std::vector<double> values) {
    SweepAxis a{p, {}};
    for (double v : values) a.values.emplace_back(v);
    return a;
}
}  // namespace

TEST(Sweep, SoyPriceRows) {
    const auto r = run_sweep(small_base(), numeric(SweepParameter::SoybeanPrice, {346.4, 141, 277}),
                             pergamino_tables());
    ASSERT_EQ(r.rows.size(), 3u);
    EXPECT_EQ(std::get<double>(r.rows[0].value), 141);
    EXPECT_EQ(std::get<double>(r.rows[2].value), 346.4);
    EXPECT_FALSE(r.rows[0].is_reference);
    EXPECT_TRUE(r.rows[1].is_reference);
    EXPECT_LT(r.rows[0].mean_profit_usd_per_ha, r.rows[2].mean_profit_usd_per_ha);
}

TEST(Sweep, ReferenceRowMatchesBase) {
    const auto base = small_base();
    const auto run = run_scenario(base, pergamino_tables());
    for (auto axis : {numeric(SweepParameter::RentUsd, {221.6, 443.2, 775.6}),
                      numeric(SweepParameter::OwnerShare, {10, 50}),
                      numeric(SweepParameter::MaizePrice, {141})}) {
        const auto r = run_sweep(base, axis, pergamino_tables());
        const auto it = std::find_if(r.rows.begin(), r.rows.end(), [](const SweepRow& row) { return row.is_reference; });
        ASSERT_NE(it, r.rows.end());
        EXPECT_EQ(it->mean_profit_usd_per_ha, run.summary.mean_profit_usd_per_ha);
        EXPECT_EQ(it->mean_rl_pct, run.summary.mean_rl_pct);
        EXPECT_EQ(it->final_cover_pct, run.summary.final_cover_pct);
        EXPECT_EQ(it->final_tl_counts, run.summary.final_tl_counts);
    }
}

TEST(Sweep, OwnerShareRows) {
    const auto r = run_sweep(small_base(), numeric(SweepParameter::OwnerShare, {90, 70, 50, 30, 10}),
                             pergamino_tables(), 2);
    ASSERT_EQ(r.rows.size(), 5u);
    for (std::size_t i = 1; i < 5; ++i) EXPECT_LT(std::get<double>(r.rows[i - 1].value), std::get<double>(r.rows[i].value));
}

TEST(Sweep, ThreadsDoNotChangeRows) {
    const auto axis = numeric(SweepParameter::WheatPrice, {100.28, 153, 249.23});
    const auto a = run_sweep(small_base(), axis, pergamino_tables(), 1);
    const auto b = run_sweep(small_base(), axis, pergamino_tables(), 3);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(a.rows[i].mean_profit_usd_per_ha, b.rows[i].mean_profit_usd_per_ha);
        EXPECT_EQ(a.rows[i].final_cover_pct, b.rows[i].final_cover_pct);
    }
}

TEST(Sweep, WgcMix) {
    SweepAxis axis{SweepParameter::WgcMixLevel, {Wgc::VeryFavorable, Wgc::VeryUnfavorable, Wgc::Average}};
    const auto r = run_sweep(small_base(), axis, pergamino_tables());
    ASSERT_EQ(r.rows.size(), 3u);
    EXPECT_EQ(std::get<Wgc>(r.rows[0].value), Wgc::VeryUnfavorable);
    EXPECT_GT(r.rows[2].mean_profit_usd_per_ha, r.rows[0].mean_profit_usd_per_ha);

    const auto c = apply_axis_value(small_base(), SweepParameter::WgcMixLevel, Wgc::Favorable, pergamino_tables());
    const auto* mix = std::get_if<climate::AlternatingMix>(&c.climate);
    ASSERT_TRUE(mix);
    EXPECT_EQ(mix->fixed, Wgc::Favorable);
    SplitMix64 rng(0);
    const auto seq = wgc_sequence(c.climate, 4, rng);
    EXPECT_EQ(seq, (std::vector<Wgc>{Wgc::Average, Wgc::Favorable, Wgc::Average, Wgc::Favorable}));
}

TEST(Sweep, DomainErrors) {
    EXPECT_THROW(run_sweep(small_base(), numeric(SweepParameter::SoybeanPrice, {-1}), pergamino_tables()),
                 ConfigError);
    EXPECT_THROW(run_sweep(small_base(), numeric(SweepParameter::OwnerShare, {120}), pergamino_tables()),
                 ConfigError);
    EXPECT_THROW(run_sweep(small_base(), numeric(SweepParameter::RentUsd, {-5}), pergamino_tables()), ConfigError);
    EXPECT_THROW(run_sweep(small_base(), SweepAxis{SweepParameter::RentUsd, {}}, pergamino_tables()), ConfigError);
    EXPECT_THROW(run_sweep(small_base(), SweepAxis{SweepParameter::WgcMixLevel, {1.0}}, pergamino_tables()),
                 ConfigError);
}

TEST(Sweep, EmptyHistoricalFallsBack) {
    auto base = pergamino_1988_preset();
    base.grid_rows = base.grid_cols = 5;
    const auto r = run_sweep(base, numeric(SweepParameter::RentUsd, {443.2}), pergamino_tables());
    EXPECT_NE(r.climate_base.find("constant-average"), std::string::npos);
    EXPECT_TRUE(r.rows[0].is_reference);
}

TEST(Sweep, RentLinearOnTenantFixture) {
    ScenarioConfig c;
    c.grid_rows = c.grid_cols = 6;
    c.cycles = 28;
    c.owner_share_pct = 0;
    c.initial_cover_pct = {0, 100, 0};
    c.initial_tl_pct = {100, 0, 0};
    c.allocation = AllocationScheme::Uniform;
    const auto r = run_sweep(c, numeric(SweepParameter::RentUsd, {221.6, 443.2, 775.6}), pergamino_tables());
    for (const auto& row : r.rows)
        EXPECT_NEAR(row.mean_profit_usd_per_ha, 541.01 - std::get<double>(row.value), 1e-9);
}

TEST(Sweep, DefaultRanges) {
    EXPECT_EQ(default_range(SweepParameter::SoybeanPrice)->hi, 346.4);
    EXPECT_EQ(default_range(SweepParameter::RentUsd)->lo, 221.6);
    EXPECT_FALSE(default_range(SweepParameter::WgcMixLevel));
    EXPECT_EQ(parse_sweep_parameter("owner-share"), SweepParameter::OwnerShare);
    EXPECT_FALSE(parse_sweep_parameter("soy"));
}
