#include <agrodevs/climate.hpp>
#include <agrodevs/rng.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdint>

using namespace agrodevs;

TEST(SplitMix64, ReferenceOutputs) {
    SplitMix64 a(0);
    EXPECT_EQ(a(), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(a(), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(a(), 0x06c45d188009454fULL);

    SplitMix64 b(42);
    EXPECT_EQ(b(), 0xbdd732262feb6e95ULL);
    EXPECT_EQ(b(), 0x28efe333b266f103ULL);
    EXPECT_EQ(b(), 0x47526757130f9f52ULL);
}

TEST(SplitMix64, Below) {
    SplitMix64 r(42);
    std::vector<std::uint64_t> got;
    for (int i = 0; i < 10; ++i) got.push_back(r.below(5));
    EXPECT_EQ(got, (std::vector<std::uint64_t>{3, 1, 3, 4, 0, 2, 0, 3, 0, 4}));
}

TEST(SplitMix64, UnitOpenRange) {
    SplitMix64 r(3);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.unit_open();
        ASSERT_GT(u, 0.0);
        ASSERT_LE(u, 1.0);
    }
}

TEST(SplitMix64, StreamsDiffer) {
    auto a = derive_stream(1, kInitStream);
    auto b = derive_stream(1, kClimateStream);
    auto c = derive_stream(1, kInitStream);
    const auto x = a();
    EXPECT_NE(x, b());
    EXPECT_EQ(x, c());
}

TEST(Shuffle, IsPermutation) {
    std::vector<int> v(50);
    for (int i = 0; i < 50; ++i) v[i] = i;
    SplitMix64 r(9);
    shuffle(std::span(v), r);
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
    EXPECT_NE(v, sorted);
}

TEST(Climate, Constant) {
    SplitMix64 r(1);
    EXPECT_EQ(wgc_for_cycle(climate::ConstantAverage{}, 17, r), Wgc::Average);
    for (std::size_t c : {0u, 5u, 999u}) {
        EXPECT_EQ(wgc_for_cycle(climate::ConstantUnfavorable{}, c, r), Wgc::Unfavorable);
        EXPECT_EQ(wgc_for_cycle(climate::ConstantFavorable{}, c, r), Wgc::Favorable);
    }
    EXPECT_EQ(r.state(), SplitMix64(1).state());
}

TEST(Climate, SeeSaw) {
    SplitMix64 r(1);
    const auto seq = wgc_sequence(climate::SeeSaw{}, 6, r);
    EXPECT_EQ(seq, (std::vector<Wgc>{Wgc::VeryUnfavorable, Wgc::Average, Wgc::VeryFavorable, Wgc::VeryUnfavorable,
                                     Wgc::Average, Wgc::VeryFavorable}));
}

TEST(Climate, Explicit) {
    SplitMix64 r(1);
    const climate::ExplicitSequence seq{{Wgc::Favorable, Wgc::VeryUnfavorable}};
    EXPECT_EQ(wgc_for_cycle(seq, 1, r), Wgc::VeryUnfavorable);
    EXPECT_THROW(wgc_for_cycle(seq, 2, r), ConfigError);
}

TEST(Climate, AlternatingMix) {
    SplitMix64 r(1);
    const climate::AlternatingMix mix{{Wgc::VeryUnfavorable, Wgc::Unfavorable, Wgc::Favorable, Wgc::Average},
                                      Wgc::VeryFavorable};
    EXPECT_EQ(wgc_sequence(mix, 4, r),
              (std::vector<Wgc>{Wgc::VeryUnfavorable, Wgc::VeryFavorable, Wgc::Favorable, Wgc::VeryFavorable}));
}

TEST(Climate, RandomIsSeeded) {
    auto a = derive_stream(11, kClimateStream);
    auto b = derive_stream(11, kClimateStream);
    EXPECT_EQ(wgc_sequence(climate::RandomUniform{}, 200, a), wgc_sequence(climate::RandomUniform{}, 200, b));
}

TEST(Climate, RandomIsUniform) {
    SplitMix64 r(2024);
    std::array<int, 5> counts{};
    for (int i = 0; i < 10000; ++i) ++counts[index(wgc_for_cycle(climate::RandomUniform{}, i, r))];
    for (int c : counts) EXPECT_NEAR(c / 10000.0, 0.2, 0.02);
}

TEST(Climate, Names) {
    EXPECT_EQ(regime_name(climate::SeeSaw{}), "seesaw");
    EXPECT_EQ(regime_name(climate::ConstantUnfavorable{}), "constant-unfavorable");
    EXPECT_EQ(regime_name(climate::AlternatingMix{}), "alternating");
}

TEST(WgcFile, Parse) {
    EXPECT_EQ(parse_wgc_sequence("VU\nA\n\nVF\n", "mem"),
              (std::vector<Wgc>{Wgc::VeryUnfavorable, Wgc::Average, Wgc::VeryFavorable}));
    EXPECT_THROW(parse_wgc_sequence("VU\nX\n", "mem"), ConfigError);
    const auto seq = load_wgc_sequence(std::string(AGRODEVS_FIXTURE_DIR) + "/wgc_27.txt");
    EXPECT_EQ(seq.size(), 27u);
    EXPECT_THROW(load_wgc_sequence("/nonexistent/wgc.txt"), IoError);
}
