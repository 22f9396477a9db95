#pragma once

// One cropping cycle is four barrier-separated stages over the grid:
//   1. profit and renewability of every farm from its pre-cycle state
//   2. climate-adjusted aspiration (CAL) from the cycle's weather
//   3. economic and environmental goal evaluation
//   4. adaptation for the next cycle (land use, aspiration, tech level),
//      reading only a frozen snapshot of stages 1-3
// Every stage is a pure per-cell map, so the result does not depend on the
// order or thread count used to evaluate cells.

#include <agrodevs/config.hpp>
#include <agrodevs/detail/parallel.hpp>
#include <agrodevs/domain.hpp>
#include <agrodevs/landscape.hpp>

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

namespace agrodevs {

struct CycleContext {
    Wgc wgc = Wgc::Average;
    PerLandUse<double> prices{};
    const ParameterTables* tables = nullptr;
    double rent_usd_per_ha = 0.0;
    double et_pct = 50.0;
    PricingMode pricing = PricingMode::Combined;
};

inline CycleContext make_context(const ScenarioConfig& config, const ParameterTables& tables, Wgc wgc) {
    CycleContext ctx;
    ctx.wgc = wgc;
    ctx.prices = effective_prices(config, tables);
    ctx.tables = &tables;
    ctx.rent_usd_per_ha = rent_usd_per_ha(config.rent, ctx.prices);
    ctx.et_pct = config.et_pct;
    ctx.pricing = config.pricing_mode;
    if (ctx.pricing == PricingMode::Split && !tables.double_crop)
        throw ConfigError("split pricing requires wheat_yield and soy2_yield tables");
    for (double p : ctx.prices)
        if (!(p > 0.0)) throw ConfigError("crop prices must be positive");
    return ctx;
}

/// What an agent can observe about one neighbor during stage 4.
struct NeighborView {
    Position position;
    double profit = 0.0;
    double cal = 0.0;
    Allocation allocation{};
    TechLevel tl = TechLevel::Low;
};

struct GoalOutcome {
    bool econ_ok = false;
    bool env_ok = false;
    friend bool operator==(const GoalOutcome&, const GoalOutcome&) = default;
};

// ---------------------------------------------------------------------------
// Stage 1

/// Gross margin of one crop at full allocation, before rent. In combined
/// mode the double-crop yield is sold at the W/S price; split mode sells the
/// wheat at the W/S price and the second soybean at the soybean price.
inline double crop_margin(LandUse lu, TechLevel tl, const CycleContext& ctx) noexcept {
    const auto& t = *ctx.tables;
    const double cost = lookup(t, TableKind::Cost, lu, tl, ctx.wgc);
    if (lu == LandUse::WheatSoy && ctx.pricing == PricingMode::Split) {
        const auto& dc = *t.double_crop;
        return dc.wheat_t_per_ha[index(tl)][index(ctx.wgc)] * ctx.prices[index(LandUse::WheatSoy)] +
               dc.soy2_t_per_ha[index(tl)][index(ctx.wgc)] * ctx.prices[index(LandUse::Soybean)] - cost;
    }
    return lookup(t, TableKind::Yield, lu, tl, ctx.wgc) * ctx.prices[index(lu)] - cost;
}

/// US$/ha; negative values are allowed.
inline double compute_profit(const AgentState& agent, const CycleContext& ctx) noexcept {
    double p = 0.0;
    for (auto lu : kLandUses) p += agent.allocation[index(lu)] / 100.0 * crop_margin(lu, agent.tl, ctx);
    if (agent.tenure == Tenure::Tenant) p -= ctx.rent_usd_per_ha;
    return p;
}

/// Allocation-weighted renewability, %.
inline double compute_rl(const AgentState& agent, const CycleContext& ctx) noexcept {
    double rl = 0.0;
    for (auto lu : kLandUses)
        rl += agent.allocation[index(lu)] / 100.0 * lookup(*ctx.tables, TableKind::Renewability, lu, agent.tl, ctx.wgc);
    return rl;
}

// ---------------------------------------------------------------------------
// Stages 2 and 3

inline double climate_adjusted_aspiration(double al, Wgc wgc, const ParameterTables& tables) noexcept {
    return al + al * tables.alpha_wgc[index(wgc)];
}

/// Ties count as fulfilled.
inline GoalOutcome evaluate_goals(double profit, double cal, double rl, double et) noexcept {
    return {profit >= cal, rl >= et};
}

// ---------------------------------------------------------------------------
// Stage 4

/// Highest-profit neighbor; the earliest in scan order wins a tie.
inline std::optional<NeighborView> select_best_neighbor(std::span<const NeighborView> views) {
    if (views.empty()) return std::nullopt;
    const auto* best = &views.front();
    for (const auto& v : views.subspan(1))
        if (v.profit > best->profit) best = &v;
    return *best;
}

/// Aspiration level for the next cycle.
///   satisfied (p >= cal):          0.45 cal + 0.55 p
///   a neighbor beat cal:           bn.cal * (1 + alpha_bn[agent tl][bn tl])
///   otherwise:                     0.55 cal + 0.45 p
/// The result is floored at zero. The weighted averages are clamped to
/// [min(cal, p), max(cal, p)]: once AL has converged onto P, rounding could
/// otherwise push it one ulp above P and flip a satisfied agent.
inline double update_aspiration(double cal, double profit, const std::optional<NeighborView>& bn,
                                TechLevel agent_tl, const ParameterTables& tables) noexcept {
    const double lo = std::min(cal, profit);
    const double hi = std::max(cal, profit);
    double next;
    if (profit >= cal)
        next = std::clamp(0.45 * cal + 0.55 * profit, lo, hi);
    else if (bn && bn->profit > cal)
        next = bn->cal + bn->cal * tables.alpha_bn[index(agent_tl)][index(bn->tl)];
    else
        next = std::clamp(0.55 * cal + 0.45 * profit, lo, hi);
    return std::max(next, 0.0);
}

/// Working-capital rule; a threshold is reached at equality.
inline TechLevel update_technology(double profit, const ParameterTables& tables) noexcept {
    if (profit >= tables.wct_usd_per_ha[index(TechLevel::High)]) return TechLevel::High;
    if (profit >= tables.wct_usd_per_ha[index(TechLevel::Average)]) return TechLevel::Average;
    return TechLevel::Low;
}

/// A dissatisfied agent copies the best neighbor's allocation when that
/// neighbor's profit exceeds the agent's own CAL.
inline Allocation decide_land_use(double profit, double cal, const std::optional<NeighborView>& bn,
                                  const Allocation& current) noexcept {
    if (profit < cal && bn && bn->profit > cal) return bn->allocation;
    return current;
}

// ---------------------------------------------------------------------------

/// Stages 1-3: stores profit, RL, CAL and goal flags on every agent.
inline void realize_outcomes(Landscape& land, const CycleContext& ctx, std::size_t width = 1) {
    detail::parallel_for(land.size(), width, [&](std::size_t i) {
        auto& a = land.cells[i];
        a.last_profit_usd_per_ha = compute_profit(a, ctx);
        a.last_rl_pct = compute_rl(a, ctx);
        a.last_cal_usd_per_ha = climate_adjusted_aspiration(a.al_usd_per_ha, ctx.wgc, *ctx.tables);
        const auto goals = evaluate_goals(a.last_profit_usd_per_ha, a.last_cal_usd_per_ha, a.last_rl_pct, ctx.et_pct);
        a.econ_ok = goals.econ_ok;
        a.env_ok = goals.env_ok;
    });
}

/// Stage 4: next-cycle allocation, AL and TL for every agent, computed from
/// the stage 1-3 snapshot and committed after all cells are done.
inline void adapt(Landscape& land, const CycleContext& ctx, std::size_t width = 1) {
    struct Next {
        Allocation allocation;
        double al;
        TechLevel tl;
    };
    std::vector<Next> next(land.size());
    const Landscape& snapshot = land;

    detail::parallel_for(land.size(), width, [&](std::size_t i) {
        const auto& a = snapshot.cells[i];
        std::array<NeighborView, 8> views;
        std::size_t count = 0;
        for (const auto& pos : moore_neighbors(a.position, snapshot.rows, snapshot.cols)) {
            const auto& nb = snapshot.at(pos);
            views[count++] = {pos, nb.last_profit_usd_per_ha, nb.last_cal_usd_per_ha, nb.allocation, nb.tl};
        }
        const auto bn = select_best_neighbor(std::span<const NeighborView>(views.data(), count));
        const double p = a.last_profit_usd_per_ha;
        const double cal = a.last_cal_usd_per_ha;
        next[i] = {decide_land_use(p, cal, bn, a.allocation), update_aspiration(cal, p, bn, a.tl, *ctx.tables),
                   update_technology(p, *ctx.tables)};
    });

    for (std::size_t i = 0; i < land.size(); ++i) {
        auto& a = land.cells[i];
        a.allocation = next[i].allocation;
        a.al_usd_per_ha = next[i].al;
        a.tl = next[i].tl;
    }
}

/// Full cycle. The record reports outcomes realized this cycle, i.e. before
/// adaptation.
inline CycleRecord run_cycle(Landscape& land, const CycleContext& ctx, std::size_t cycle, std::size_t width = 1) {
    realize_outcomes(land, ctx, width);
    auto record = aggregate(land, cycle, ctx.wgc);
    adapt(land, ctx, width);
    return record;
}

}  // namespace agrodevs
