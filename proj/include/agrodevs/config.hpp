#pragma once

#include <agrodevs/climate.hpp>
#include <agrodevs/domain.hpp>
#include <agrodevs/tables_io.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace agrodevs {

/// Tenant rent expressed in soybean tonnes per hectare; converted with the
/// current soybean price each cycle.
struct RentSoyTons {
    double tons_per_ha = 1.6;
};
struct RentUsd {
    double usd_per_ha = 0.0;
};
using RentSpec = std::variant<RentSoyTons, RentUsd>;

enum class PricingMode { Combined, Split };

enum class AllocationScheme {
    /// Random per-agent mixes whose landscape mean hits the configured shares.
    Random,
    /// Every agent holds exactly the configured shares.
    Uniform,
};

struct ScenarioConfig {
    std::size_t grid_rows = 25;
    std::size_t grid_cols = 25;
    std::size_t cycles = 50;
    std::uint64_t seed = 1;
    double owner_share_pct = 50.0;
    ClimateRegime climate = climate::ConstantAverage{};
    PerLandUse<double> initial_cover_pct{100.0 / 3, 100.0 / 3, 100.0 / 3};
    PerTechLevel<double> initial_tl_pct{100.0 / 3, 100.0 / 3, 100.0 / 3};
    AllocationScheme allocation = AllocationScheme::Random;
    double initial_al_factor = 0.6;
    double et_pct = 50.0;
    RentSpec rent = RentSoyTons{};
    /// Unset means the prices of the parameter tables.
    std::optional<PerLandUse<double>> prices;
    TableOverrides table_overrides;
    PricingMode pricing_mode = PricingMode::Combined;

    std::size_t agent_count() const noexcept { return grid_rows * grid_cols; }
};

inline PerLandUse<double> effective_prices(const ScenarioConfig& c, const ParameterTables& t) {
    return c.prices.value_or(t.price_usd_per_t);
}

inline double rent_usd_per_ha(const RentSpec& rent, const PerLandUse<double>& prices) noexcept {
    if (const auto* soy = std::get_if<RentSoyTons>(&rent)) return soy->tons_per_ha * prices[index(LandUse::Soybean)];
    return std::get<RentUsd>(rent).usd_per_ha;
}

namespace detail {
template <std::size_t N>
bool shares_sum_to_100(const std::array<double, N>& v) noexcept {
    double s = 0.0;
    for (double x : v) {
        if (!(x >= 0.0)) return false;
        s += x;
    }
    return std::abs(s - 100.0) <= 1e-6;
}

template <std::size_t N>
std::array<double, N> rescale_to_100(std::array<double, N> v) noexcept {
    double s = 0.0;
    for (double x : v) s += x;
    for (double& x : v) x *= 100.0 / s;
    return v;
}
}  // namespace detail

/// Throws ConfigError for any inconsistent field. Called before every run.
inline void validate_config(const ScenarioConfig& c) {
    if (c.grid_rows == 0 || c.grid_cols == 0) throw ConfigError("grid dimensions must be positive");
    if (c.cycles == 0) throw ConfigError("cycles must be at least 1");
    if (!(c.owner_share_pct >= 0.0 && c.owner_share_pct <= 100.0))
        throw ConfigError("owner_share_pct must lie in [0, 100]");
    if (!detail::shares_sum_to_100(c.initial_cover_pct))
        throw ConfigError("initial_cover_pct must be non-negative and sum to 100");
    if (!detail::shares_sum_to_100(c.initial_tl_pct))
        throw ConfigError("initial_tl_pct must be non-negative and sum to 100");
    if (!(c.initial_al_factor >= 0.0)) throw ConfigError("initial_al_factor must be non-negative");
    if (!(c.et_pct >= 0.0 && c.et_pct <= 100.0)) throw ConfigError("et_pct must lie in [0, 100]");
    if (const auto* soy = std::get_if<RentSoyTons>(&c.rent); soy && !(soy->tons_per_ha >= 0.0))
        throw ConfigError("rent.soy_tons must be non-negative");
    if (const auto* usd = std::get_if<RentUsd>(&c.rent); usd && !(usd->usd_per_ha >= 0.0))
        throw ConfigError("rent.usd_per_ha must be non-negative");
    if (c.prices)
        for (auto lu : kLandUses)
            if (!((*c.prices)[index(lu)] > 0.0))
                throw ConfigError("price of " + std::string(code(lu)) + " must be positive");
    if (const auto* seq = std::get_if<climate::ExplicitSequence>(&c.climate)) {
        if (seq->levels.empty()) throw ConfigError("climate regime 'explicit' requires a weather sequence");
        if (seq->levels.size() < c.cycles)
            throw ConfigError("weather sequence has " + std::to_string(seq->levels.size()) + " levels but " +
                              std::to_string(c.cycles) + " cycles were requested");
    }
    if (const auto* mix = std::get_if<climate::AlternatingMix>(&c.climate)) {
        const std::size_t last_even = (c.cycles - 1) - (c.cycles - 1) % 2;
        if (mix->historical.size() <= last_even)
            throw ConfigError("alternating regime needs a historical sequence covering every even cycle");
    }
}

// ---------------------------------------------------------------------------
// Presets

/// Pergamino 1988 census initialization. The published crop and tech shares
/// cover 92% and 98% of the landscape respectively; they are rescaled to sum
/// to 100 preserving their ratios. The weather series is not bundled: the
/// climate is an empty explicit sequence the caller must fill.
inline ScenarioConfig pergamino_1988_preset() {
    ScenarioConfig c;
    c.grid_rows = 25;
    c.grid_cols = 25;
    c.cycles = 28;
    c.owner_share_pct = 63.0;
    c.climate = climate::ExplicitSequence{};
    c.initial_cover_pct = detail::rescale_to_100(PerLandUse<double>{20.0, 36.2, 35.8});
    c.initial_tl_pct = detail::rescale_to_100(PerTechLevel<double>{32.0, 36.0, 30.0});
    c.initial_al_factor = 0.6;
    c.et_pct = 50.0;
    c.rent = RentSoyTons{1.6};
    return c;
}

/// 50-cycle equal-thirds landscape used for the long-term climate and tenure
/// scenarios.
inline ScenarioConfig longterm_preset() {
    ScenarioConfig c;
    c.grid_rows = 25;
    c.grid_cols = 25;
    c.cycles = 50;
    c.owner_share_pct = 10.0;
    c.climate = climate::ConstantAverage{};
    c.rent = RentSoyTons{1.6};
    return c;
}

inline std::optional<ScenarioConfig> preset(std::string_view name) {
    if (name == "pergamino-1988") return pergamino_1988_preset();
    if (name == "longterm") return longterm_preset();
    return std::nullopt;
}

}  // namespace agrodevs
