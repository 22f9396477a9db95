#pragma once

#include <agrodevs/detail/csv.hpp>
#include <agrodevs/domain.hpp>
#include <agrodevs/rng.hpp>

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace agrodevs {

namespace climate {
struct ConstantUnfavorable {};
struct ConstantAverage {};
struct ConstantFavorable {};
/// VU, A, VF, VU, A, VF, ...
struct SeeSaw {};
/// iid uniform over the five levels.
struct RandomUniform {};
struct ExplicitSequence {
    std::vector<Wgc> levels;
};
/// historical[i] on even cycle indices, `fixed` on odd ones.
struct AlternatingMix {
    std::vector<Wgc> historical;
    Wgc fixed = Wgc::Average;
};
}  // namespace climate

using ClimateRegime = std::variant<climate::ConstantUnfavorable, climate::ConstantAverage,
                                   climate::ConstantFavorable, climate::SeeSaw, climate::RandomUniform,
                                   climate::ExplicitSequence, climate::AlternatingMix>;

/// The rng is advanced only by RandomUniform.
inline Wgc wgc_for_cycle(const ClimateRegime& regime, std::size_t cycle, SplitMix64& rng) {
    struct Visitor {
        std::size_t cycle;
        SplitMix64& rng;
        Wgc operator()(const climate::ConstantUnfavorable&) const { return Wgc::Unfavorable; }
        Wgc operator()(const climate::ConstantAverage&) const { return Wgc::Average; }
        Wgc operator()(const climate::ConstantFavorable&) const { return Wgc::Favorable; }
        Wgc operator()(const climate::SeeSaw&) const {
            constexpr Wgc pattern[3] = {Wgc::VeryUnfavorable, Wgc::Average, Wgc::VeryFavorable};
            return pattern[cycle % 3];
        }
        Wgc operator()(const climate::RandomUniform&) const {
            return kWgcLevels[static_cast<std::size_t>(rng.below(kWgcCount))];
        }
        Wgc operator()(const climate::ExplicitSequence& s) const {
            if (cycle >= s.levels.size())
                throw ConfigError("weather sequence exhausted: cycle " + std::to_string(cycle) + " requested, " +
                                  std::to_string(s.levels.size()) + " levels supplied");
            return s.levels[cycle];
        }
        Wgc operator()(const climate::AlternatingMix& m) const {
            if (cycle % 2 == 1) return m.fixed;
            if (cycle >= m.historical.size())
                throw ConfigError("historical weather sequence exhausted at cycle " + std::to_string(cycle));
            return m.historical[cycle];
        }
    };
    return std::visit(Visitor{cycle, rng}, regime);
}

/// Materializes the first `cycles` levels of a regime.
inline std::vector<Wgc> wgc_sequence(const ClimateRegime& regime, std::size_t cycles, SplitMix64& rng) {
    std::vector<Wgc> out;
    out.reserve(cycles);
    for (std::size_t i = 0; i < cycles; ++i) out.push_back(wgc_for_cycle(regime, i, rng));
    return out;
}

inline std::string regime_name(const ClimateRegime& regime) {
    constexpr std::string_view names[] = {"constant-unfavorable", "constant-average", "constant-favorable",
                                          "seesaw", "random", "explicit", "alternating"};
    return std::string(names[regime.index()]);
}

/// Weather sequence file: one code per line, blank lines ignored.
inline std::vector<Wgc> parse_wgc_sequence(std::string_view text, const std::string& source) {
    const auto t = detail::parse_csv(text, source, /*has_header=*/false);
    std::vector<Wgc> out;
    for (const auto& row : t.rows) {
        if (row.fields.size() != 1) t.fail(row.line, "expected a single weather code per line");
        auto w = parse_wgc(row.fields[0]);
        if (!w) t.fail(row.line, "unknown weather code '" + row.fields[0] + "' (expected VU, U, A, F or VF)");
        out.push_back(*w);
    }
    return out;
}

inline std::vector<Wgc> load_wgc_sequence(const std::string& path) {
    return parse_wgc_sequence(detail::read_file(path), path);
}

}  // namespace agrodevs
