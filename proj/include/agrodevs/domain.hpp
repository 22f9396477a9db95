#pragma once

// Core enumerations and the crop parameter dataset (yields, costs,
// renewability, prices, aspiration adjustment factors and working capital
// thresholds) for the Pergamino region.

#include <agrodevs/errors.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace agrodevs {

enum class LandUse { Maize = 0, Soybean = 1, WheatSoy = 2 };
enum class TechLevel { Low = 0, Average = 1, High = 2 };
enum class Wgc { VeryUnfavorable = 0, Unfavorable = 1, Average = 2, Favorable = 3, VeryFavorable = 4 };

inline constexpr std::size_t kLandUseCount = 3;
inline constexpr std::size_t kTechLevelCount = 3;
inline constexpr std::size_t kWgcCount = 5;

inline constexpr std::array<LandUse, kLandUseCount> kLandUses{LandUse::Maize, LandUse::Soybean,
                                                              LandUse::WheatSoy};
inline constexpr std::array<TechLevel, kTechLevelCount> kTechLevels{TechLevel::Low, TechLevel::Average,
                                                                    TechLevel::High};
inline constexpr std::array<Wgc, kWgcCount> kWgcLevels{Wgc::VeryUnfavorable, Wgc::Unfavorable, Wgc::Average,
                                                       Wgc::Favorable, Wgc::VeryFavorable};

constexpr std::size_t index(LandUse lu) noexcept { return static_cast<std::size_t>(lu); }
constexpr std::size_t index(TechLevel tl) noexcept { return static_cast<std::size_t>(tl); }
constexpr std::size_t index(Wgc w) noexcept { return static_cast<std::size_t>(w); }

template <class T>
using PerLandUse = std::array<T, kLandUseCount>;
template <class T>
using PerTechLevel = std::array<T, kTechLevelCount>;
template <class T>
using PerWgc = std::array<T, kWgcCount>;

/// Values indexed by [land use][tech level][weather condition].
using CropCube = PerLandUse<PerTechLevel<PerWgc<double>>>;
/// Values indexed by [tech level][weather condition].
using TechWgcGrid = PerTechLevel<PerWgc<double>>;

// ---------------------------------------------------------------------------
// Short codes used by every file format: M/S/WS, L/A/H, VU/U/A/F/VF.

constexpr std::string_view code(LandUse lu) noexcept {
    constexpr std::array<std::string_view, 3> codes{"M", "S", "WS"};
    return codes[index(lu)];
}
constexpr std::string_view code(TechLevel tl) noexcept {
    constexpr std::array<std::string_view, 3> codes{"L", "A", "H"};
    return codes[index(tl)];
}
constexpr std::string_view code(Wgc w) noexcept {
    constexpr std::array<std::string_view, 5> codes{"VU", "U", "A", "F", "VF"};
    return codes[index(w)];
}

inline std::optional<LandUse> parse_land_use(std::string_view s) noexcept {
    for (auto lu : kLandUses)
        if (code(lu) == s) return lu;
    return std::nullopt;
}
inline std::optional<TechLevel> parse_tech_level(std::string_view s) noexcept {
    for (auto tl : kTechLevels)
        if (code(tl) == s) return tl;
    return std::nullopt;
}
inline std::optional<Wgc> parse_wgc(std::string_view s) noexcept {
    for (auto w : kWgcLevels)
        if (code(w) == s) return w;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

/// Wheat and second-crop soybean yields of the double-cropping sequence,
/// used only by the split pricing mode.
struct DoubleCropYields {
    TechWgcGrid wheat_t_per_ha{};
    TechWgcGrid soy2_t_per_ha{};
};

struct ParameterTables {
    CropCube yield_t_per_ha{};
    CropCube cost_usd_per_ha{};
    CropCube renewability_pct{};
    PerLandUse<double> price_usd_per_t{};
    PerWgc<double> alpha_wgc{};
    /// Indexed [agent tech level][best neighbor tech level].
    PerTechLevel<PerTechLevel<double>> alpha_bn{};
    PerTechLevel<double> wct_usd_per_ha{};
    std::optional<DoubleCropYields> double_crop;
};

enum class TableKind { Yield, Cost, Renewability };

constexpr std::string_view name(TableKind k) noexcept {
    switch (k) {
        case TableKind::Yield: return "yield";
        case TableKind::Cost: return "cost";
        case TableKind::Renewability: return "renewability";
    }
    return "?";
}

inline const CropCube& cube(const ParameterTables& t, TableKind kind) noexcept {
    switch (kind) {
        case TableKind::Yield: return t.yield_t_per_ha;
        case TableKind::Cost: return t.cost_usd_per_ha;
        case TableKind::Renewability: break;
    }
    return t.renewability_pct;
}

inline CropCube& cube(ParameterTables& t, TableKind kind) noexcept {
    return const_cast<CropCube&>(cube(std::as_const(t), kind));
}

inline double lookup(const ParameterTables& t, TableKind kind, LandUse lu, TechLevel tl, Wgc w) noexcept {
    return cube(t, kind)[index(lu)][index(tl)][index(w)];
}

/// The Pergamino dataset. Rows are tech levels L, A, H; columns are the
/// weather conditions VU, U, A, F, VF.
inline const ParameterTables& pergamino_tables() {
    static const ParameterTables tables = [] {
        ParameterTables t;
        t.yield_t_per_ha = {{
            {{{4.05, 6.27, 7.45, 8.37, 9.25}, {4.88, 7.78, 9.02, 10.45, 11.59}, {5.40, 8.80, 10.22, 11.94, 13.18}}},
            {{{1.89, 2.67, 3.13, 3.72, 4.15}, {2.13, 3.00, 3.53, 4.18, 4.67}, {2.37, 3.34, 3.92, 4.65, 5.19}}},
            {{{3.06, 4.34, 5.21, 5.73, 7.11}, {3.53, 4.89, 6.01, 6.55, 8.16}, {4.25, 5.85, 7.30, 7.90, 9.83}}},
        }};
        t.cost_usd_per_ha = {{
            {{{504, 619, 680, 727, 773}, {618, 768, 832, 906, 965}, {717, 892, 966, 1055, 1119}}},
            {{{262, 302, 326, 356, 378}, {329, 374, 401, 435, 460}, {395, 446, 476, 514, 541}}},
            {{{477, 511, 528, 541, 584}, {618, 656, 675, 690, 738}, {759, 801, 822, 838, 892}}},
        }};
        t.renewability_pct = {{
            {{{35.5, 40.2, 42.0, 45.8, 50.2}, {33.1, 37.8, 39.6, 43.4, 47.8}, {31.0, 35.6, 37.3, 41.2, 45.6}}},
            {{{43.7, 48.4, 50.1, 53.6, 57.6}, {42.2, 46.9, 48.7, 52.3, 56.3}, {40.8, 45.5, 47.3, 50.9, 55.1}}},
            {{{24.3, 28.3, 29.9, 33.4, 37.5}, {23.0, 26.9, 28.5, 31.9, 36.0}, {21.8, 25.7, 27.2, 30.5, 34.7}}},
        }};
        t.price_usd_per_t = {141, 277, 153};
        t.alpha_wgc = {-0.55, -0.28, 0.00, 0.22, 0.45};
        // Positive when the best neighbor runs a higher tech level than the agent.
        t.alpha_bn = {{
            {0.00, 0.20, 0.45},
            {-0.25, 0.00, 0.20},
            {-0.55, -0.25, 0.00},
        }};
        t.wct_usd_per_ha = {252, 333, 413};
        return t;
    }();
    return tables;
}

// ---------------------------------------------------------------------------

struct TableViolation {
    std::string table;
    std::string key;
    std::string rule;
};

using ValidationReport = std::vector<TableViolation>;

namespace detail {
inline std::string cube_key(LandUse lu, TechLevel tl, Wgc w) {
    return std::string(code(lu)) + "," + std::string(code(tl)) + "," + std::string(code(w));
}
}  // namespace detail

/// Checks the structural invariants of a dataset. An empty report means the
/// tables are usable by the engine.
inline ValidationReport validate_tables(const ParameterTables& t) {
    ValidationReport report;
    auto add = [&](std::string_view table, std::string key, std::string rule) {
        report.push_back({std::string(table), std::move(key), std::move(rule)});
    };

    for (auto kind : {TableKind::Yield, TableKind::Cost}) {
        const auto& c = cube(t, kind);
        const std::string positive_rule = "non-positive " + std::string(name(kind));
        const std::string monotone_rule = std::string(name(kind)) + " decreasing in wgc";
        for (auto lu : kLandUses)
            for (auto tl : kTechLevels) {
                const auto& row = c[index(lu)][index(tl)];
                for (auto w : kWgcLevels)
                    if (!(row[index(w)] > 0.0)) add(name(kind), detail::cube_key(lu, tl, w), positive_rule);
                // Cells already reported as non-positive are not compared again.
                for (std::size_t i = 1; i < kWgcCount; ++i)
                    if (row[i - 1] > 0.0 && row[i] > 0.0 && row[i] < row[i - 1])
                        add(name(kind), detail::cube_key(lu, tl, kWgcLevels[i]), monotone_rule);
            }
    }

    for (auto lu : kLandUses)
        for (auto tl : kTechLevels)
            for (auto w : kWgcLevels) {
                const double v = t.renewability_pct[index(lu)][index(tl)][index(w)];
                if (!(v > 0.0 && v < 100.0))
                    add("renewability", detail::cube_key(lu, tl, w), "renewability outside (0, 100)");
            }

    for (auto lu : kLandUses)
        if (!(t.price_usd_per_t[index(lu)] > 0.0)) add("price", std::string(code(lu)), "non-positive price");

    for (auto w : kWgcLevels)
        if (!(t.alpha_wgc[index(w)] >= -1.0)) add("alpha_wgc", std::string(code(w)), "alpha_wgc below -1");

    for (auto a : kTechLevels)
        for (auto b : kTechLevels) {
            const double v = t.alpha_bn[index(a)][index(b)];
            const bool ok = b > a ? v > 0.0 : (b == a ? v == 0.0 : v < 0.0);
            if (!ok) add("alpha_bn", std::string(code(a)) + "," + std::string(code(b)), "alpha_bn sign");
        }

    for (std::size_t i = 1; i < kTechLevelCount; ++i)
        if (!(t.wct_usd_per_ha[i] > t.wct_usd_per_ha[i - 1]))
            add("wct", std::string(code(kTechLevels[i])), "wct not strictly increasing");

    if (t.double_crop) {
        for (auto tl : kTechLevels)
            for (auto w : kWgcLevels) {
                const std::string key = std::string(code(tl)) + "," + std::string(code(w));
                if (!(t.double_crop->wheat_t_per_ha[index(tl)][index(w)] >= 0.0))
                    add("wheat_yield", key, "negative yield");
                if (!(t.double_crop->soy2_t_per_ha[index(tl)][index(w)] >= 0.0))
                    add("soy2_yield", key, "negative yield");
            }
    }
    return report;
}

}  // namespace agrodevs
