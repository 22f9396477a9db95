#include <agrodevs/config_io.hpp>

#include <gtest/gtest.h>

using namespace agrodevs;

namespace {
std::string fixture(const char* name) { return std::string(AGRODEVS_FIXTURE_DIR) + "/" + name; }

std::string error_of(const std::string& text) {
    try {
        parse_config_text(text, "test.json", ".");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}
}  // namespace

TEST(Preset, Pergamino) {
    const auto c = pergamino_1988_preset();
    EXPECT_EQ(c.agent_count(), 625u);
    EXPECT_EQ(c.owner_share_pct, 63.0);
    EXPECT_EQ(c.et_pct, 50.0);
    EXPECT_NEAR(rent_usd_per_ha(c.rent, pergamino_tables().price_usd_per_t), 443.2, 1e-9);
    // published shares keep their ratios
    EXPECT_NEAR(c.initial_cover_pct[1] / c.initial_cover_pct[0], 36.2 / 20.0, 1e-12);
    EXPECT_NEAR(c.initial_tl_pct[2] / c.initial_tl_pct[1], 30.0 / 36.0, 1e-12);
    EXPECT_THROW(validate_config(c), ConfigError);
}

TEST(Preset, PergaminoWithSequence) {
    const auto c = parse_config(fixture("pergamino_file.json"));
    EXPECT_EQ(c.cycles, 27u);
    EXPECT_EQ(c.owner_share_pct, 63.0);
    const auto* seq = std::get_if<climate::ExplicitSequence>(&c.climate);
    ASSERT_TRUE(seq);
    EXPECT_EQ(seq->levels.size(), 27u);
    EXPECT_EQ(seq->levels[0], Wgc::Unfavorable);
    EXPECT_NO_THROW(validate_config(c));
}

TEST(Preset, LongTerm) {
    const auto c = *preset("longterm");
    EXPECT_EQ(c.cycles, 50u);
    EXPECT_EQ(c.owner_share_pct, 10.0);
    EXPECT_TRUE(std::holds_alternative<climate::ConstantAverage>(c.climate));
    EXPECT_FALSE(preset("nope"));
}

TEST(Parse, SmallScenario) {
    const auto c = parse_config(fixture("scenario_small.json"));
    EXPECT_EQ(c.grid_rows, 5u);
    EXPECT_EQ(c.grid_cols, 4u);
    EXPECT_EQ(c.cycles, 6u);
    EXPECT_EQ(c.seed, 7u);
    EXPECT_TRUE(std::holds_alternative<climate::SeeSaw>(c.climate));
    EXPECT_EQ(c.initial_cover_pct, (PerLandUse<double>{30, 40, 30}));
    EXPECT_EQ(std::get<RentUsd>(c.rent).usd_per_ha, 300.0);
}

TEST(Parse, ShareSum) {
    try {
        parse_config(fixture("cover_99.json"));
        FAIL();
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("sum to 100"), std::string::npos) << msg;
        EXPECT_NE(msg.find("cover_99.json:4"), std::string::npos) << msg;
    }
}

TEST(Parse, UnknownKey) {
    try {
        parse_config(fixture("unknown_key.json"));
        FAIL();
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("grdi_rows"), std::string::npos) << msg;
        EXPECT_NE(msg.find(":3"), std::string::npos) << msg;
    }
}

TEST(Parse, MissingSequence) {
    const auto c = parse_config(fixture("explicit_missing.json"));
    EXPECT_THROW(validate_config(c), ConfigError);
    EXPECT_NE(error_of(R"({"climate": "explicit"})").find("sequence"), std::string::npos);
    EXPECT_NE(error_of(R"({"climate": {"regime": "explicit", "sequence": []}})").find("sequence"), std::string::npos);
}

TEST(Parse, Errors) {
    EXPECT_NE(error_of("{"), "");
    EXPECT_NE(error_of("[1]"), "");
    EXPECT_NE(error_of(R"({"cycles": 0})"), "");
    EXPECT_NE(error_of(R"({"cycles": 2.5})"), "");
    EXPECT_NE(error_of(R"({"climate": "stormy"})"), "");
    EXPECT_NE(error_of(R"({"rent": {"soy_tons": 1, "usd_per_ha": 2}})"), "");
    EXPECT_NE(error_of(R"({"pricing_mode": "both"})"), "");
    EXPECT_NE(error_of(R"({"preset": "elsewhere"})"), "");
    EXPECT_NE(error_of(R"({"initial_tl_pct": {"L": 50, "A": 50, "Q": 0}})"), "");
    EXPECT_THROW(parse_config(fixture("no_such.json")), IoError);
}

TEST(Parse, ClimateForms) {
    auto c = parse_config_text(R"({"cycles": 3, "climate": {"regime": "explicit", "sequence": ["F", "VU", "A"]}})",
                               "t", ".");
    EXPECT_EQ(std::get<climate::ExplicitSequence>(c.climate).levels,
              (std::vector<Wgc>{Wgc::Favorable, Wgc::VeryUnfavorable, Wgc::Average}));
    c = parse_config_text(R"({"climate": {"regime": "explicit", "sequence": ["F", "VU"]}})", "t", ".");
    EXPECT_EQ(c.cycles, 2u);
    c = parse_config_text(
        R"({"cycles": 4, "climate": {"regime": "alternating", "historical": ["U", "U", "U"], "fixed": "VF"}})", "t",
        ".");
    EXPECT_EQ(std::get<climate::AlternatingMix>(c.climate).fixed, Wgc::VeryFavorable);
    EXPECT_NO_THROW(validate_config(c));
    c = parse_config_text(R"({"climate": "random", "prices": {"S": 300}})", "t", ".");
    EXPECT_TRUE(std::holds_alternative<climate::RandomUniform>(c.climate));
    EXPECT_EQ(*c.prices, (PerLandUse<double>{141, 300, 153}));
}

TEST(Parse, TableOverrides) {
    const auto c = parse_config(fixture("overrides.json"));
    ASSERT_TRUE(c.table_overrides.price);
    const auto t = resolve_tables(c);
    EXPECT_EQ(t.price_usd_per_t[1], 300.0);
    EXPECT_EQ(t.wct_usd_per_ha[0], 200.0);
}

TEST(Validate, Ranges) {
    ScenarioConfig c;
    EXPECT_NO_THROW(validate_config(c));
    c.owner_share_pct = 101;
    EXPECT_THROW(validate_config(c), ConfigError);
    c = {};
    c.et_pct = -1;
    EXPECT_THROW(validate_config(c), ConfigError);
    c = {};
    c.grid_cols = 0;
    EXPECT_THROW(validate_config(c), ConfigError);
    c = {};
    c.rent = RentUsd{-3};
    EXPECT_THROW(validate_config(c), ConfigError);
    c = {};
    c.cycles = 5;
    c.climate = climate::AlternatingMix{{Wgc::Average, Wgc::Average}, Wgc::Favorable};
    EXPECT_THROW(validate_config(c), ConfigError);
}
