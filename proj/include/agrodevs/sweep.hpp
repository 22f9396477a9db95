#pragma once

// One-at-a-time sensitivity sweeps: every axis value gets one full run with
// the base seed and all other parameters at their base value.

#include <agrodevs/detail/parallel.hpp>
#include <agrodevs/simulation.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace agrodevs {

enum class SweepParameter { SoybeanPrice, MaizePrice, WheatPrice, WgcMixLevel, OwnerShare, RentUsd };

constexpr std::string_view code(SweepParameter p) noexcept {
    switch (p) {
        case SweepParameter::SoybeanPrice: return "soy-price";
        case SweepParameter::MaizePrice: return "maize-price";
        case SweepParameter::WheatPrice: return "wheat-price";
        case SweepParameter::WgcMixLevel: return "wgc-mix";
        case SweepParameter::OwnerShare: return "owner-share";
        case SweepParameter::RentUsd: return "rent";
    }
    return "?";
}

inline std::optional<SweepParameter> parse_sweep_parameter(std::string_view s) noexcept {
    for (auto p : {SweepParameter::SoybeanPrice, SweepParameter::MaizePrice, SweepParameter::WheatPrice,
                   SweepParameter::WgcMixLevel, SweepParameter::OwnerShare, SweepParameter::RentUsd})
        if (code(p) == s) return p;
    return std::nullopt;
}

/// Numeric for prices, owner share (%) and rent (US$/ha); a weather level
/// for the climate-mix axis.
using SweepValue = std::variant<double, Wgc>;

inline std::string format_sweep_value(const SweepValue& v) {
    if (const auto* w = std::get_if<Wgc>(&v)) return std::string(code(*w));
    return detail::fixed6(std::get<double>(v));
}

struct SweepAxis {
    SweepParameter parameter = SweepParameter::SoybeanPrice;
    std::vector<SweepValue> values;
};

/// Low/high ends of the default ranges (prices US$/t, rent US$/ha, owner %).
struct AxisRange {
    double lo;
    double hi;
};

inline std::optional<AxisRange> default_range(SweepParameter p) noexcept {
    switch (p) {
        case SweepParameter::SoybeanPrice: return AxisRange{141.0, 346.4};
        case SweepParameter::MaizePrice: return AxisRange{69.76, 185.28};
        case SweepParameter::WheatPrice: return AxisRange{100.28, 249.23};
        case SweepParameter::OwnerShare: return AxisRange{10.0, 90.0};
        case SweepParameter::RentUsd: return AxisRange{221.6, 775.6};
        case SweepParameter::WgcMixLevel: break;
    }
    return std::nullopt;
}

struct SweepRow {
    SweepValue value;
    bool is_reference = false;
    double mean_profit_usd_per_ha = 0.0;
    double mean_rl_pct = 0.0;
    PerLandUse<double> final_cover_pct{};
    PerTechLevel<std::size_t> final_tl_counts{};
};

struct SweepResult {
    SweepParameter parameter = SweepParameter::SoybeanPrice;
    /// Climate regime of the base runs.
    std::string climate_base;
    std::vector<SweepRow> rows;
};

/// The base scenario's own value of a swept parameter, if it has one.
inline std::optional<SweepValue> reference_value(const ScenarioConfig& base, SweepParameter p,
                                                 const ParameterTables& tables) {
    const auto prices = effective_prices(base, tables);
    switch (p) {
        case SweepParameter::SoybeanPrice: return prices[index(LandUse::Soybean)];
        case SweepParameter::MaizePrice: return prices[index(LandUse::Maize)];
        case SweepParameter::WheatPrice: return prices[index(LandUse::WheatSoy)];
        case SweepParameter::OwnerShare: return base.owner_share_pct;
        case SweepParameter::RentUsd: return rent_usd_per_ha(base.rent, prices);
        case SweepParameter::WgcMixLevel: break;
    }
    return std::nullopt;
}

namespace detail {
inline bool same_value(const SweepValue& a, const SweepValue& b) noexcept {
    if (a.index() != b.index()) return false;
    if (const auto* x = std::get_if<double>(&a)) {
        const double y = std::get<double>(b);
        return std::abs(*x - y) <= 1e-9 * std::max(1.0, std::abs(y));
    }
    return std::get<Wgc>(a) == std::get<Wgc>(b);
}
}  // namespace detail

/// Replaces an ExplicitSequence without levels (the Pergamino preset without a
/// supplied weather file) by ConstantAverage. Returns the label of the regime
/// the sweep runs on.
inline std::string prepare_sweep_base(ScenarioConfig& base) {
    if (const auto* seq = std::get_if<climate::ExplicitSequence>(&base.climate); seq && seq->levels.empty()) {
        base.climate = climate::ConstantAverage{};
        return "constant-average (no historical weather sequence supplied)";
    }
    return regime_name(base.climate);
}

/// Scenario for one axis value. A value equal to the base value returns the
/// base scenario unchanged so that the reference run is reproduced exactly.
inline ScenarioConfig apply_axis_value(const ScenarioConfig& base, SweepParameter p, const SweepValue& value,
                                       const ParameterTables& tables) {
    if (auto ref = reference_value(base, p, tables); ref && detail::same_value(*ref, value)) return base;

    ScenarioConfig c = base;
    if (p == SweepParameter::WgcMixLevel) {
        const auto* level = std::get_if<Wgc>(&value);
        if (!level) throw ConfigError("wgc-mix values must be weather codes (VU, U, A, F, VF)");
        std::vector<Wgc> historical;
        if (const auto* seq = std::get_if<climate::ExplicitSequence>(&base.climate)) {
            historical = seq->levels;
        } else {
            auto rng = derive_stream(base.seed, kClimateStream);
            historical = wgc_sequence(base.climate, base.cycles, rng);
        }
        c.climate = climate::AlternatingMix{std::move(historical), *level};
        return c;
    }

    const auto* num = std::get_if<double>(&value);
    if (!num) throw ConfigError(std::string(code(p)) + " values must be numeric");
    const double v = *num;
    auto price_axis = [&](LandUse lu) {
        if (!(v > 0.0)) throw ConfigError(std::string(code(p)) + " value must be positive, got " + detail::fixed6(v));
        auto prices = effective_prices(base, tables);
        prices[index(lu)] = v;
        c.prices = prices;
    };
    switch (p) {
        case SweepParameter::SoybeanPrice: price_axis(LandUse::Soybean); break;
        case SweepParameter::MaizePrice: price_axis(LandUse::Maize); break;
        case SweepParameter::WheatPrice: price_axis(LandUse::WheatSoy); break;
        case SweepParameter::OwnerShare:
            if (!(v >= 0.0 && v <= 100.0)) throw ConfigError("owner-share value must lie in [0, 100]");
            c.owner_share_pct = v;
            break;
        case SweepParameter::RentUsd:
            if (!(v >= 0.0)) throw ConfigError("rent value must be non-negative");
            c.rent = RentUsd{v};
            break;
        case SweepParameter::WgcMixLevel: break;
    }
    return c;
}

inline SweepRow sweep_row(const RunResult& run, SweepValue value, bool is_reference) {
    SweepRow row;
    row.value = value;
    row.is_reference = is_reference;
    row.mean_profit_usd_per_ha = run.summary.mean_profit_usd_per_ha;
    row.mean_rl_pct = run.summary.mean_rl_pct;
    row.final_cover_pct = run.summary.final_cover_pct;
    row.final_tl_counts = run.summary.final_tl_counts;
    return row;
}

/// Rows come back sorted by axis value. `threads` runs independent points
/// concurrently; each run itself is single-threaded.
inline SweepResult run_sweep(ScenarioConfig base, const SweepAxis& axis, const ParameterTables& tables,
                             std::size_t threads = 1) {
    if (axis.values.empty()) throw ConfigError("sweep axis has no values");
    SweepResult result;
    result.parameter = axis.parameter;
    result.climate_base = prepare_sweep_base(base);
    validate_config(base);

    std::vector<SweepValue> values = axis.values;
    std::stable_sort(values.begin(), values.end(), [](const SweepValue& a, const SweepValue& b) {
        if (a.index() != b.index()) return a.index() < b.index();
        if (const auto* x = std::get_if<double>(&a)) return *x < std::get<double>(b);
        return index(std::get<Wgc>(a)) < index(std::get<Wgc>(b));
    });

    // Build every scenario up front so domain errors surface before any run.
    std::vector<ScenarioConfig> configs;
    for (const auto& v : values) {
        configs.push_back(apply_axis_value(base, axis.parameter, v, tables));
        validate_config(configs.back());
    }
    const auto ref = reference_value(base, axis.parameter, tables);

    result.rows.resize(values.size());
    detail::parallel_for(values.size(), threads, [&](std::size_t i) {
        const auto run = run_scenario(configs[i], tables);
        result.rows[i] = sweep_row(run, values[i], ref && detail::same_value(*ref, values[i]));
    });
    return result;
}

}  // namespace agrodevs
