#pragma once

#include <agrodevs/climate.hpp>
#include <agrodevs/config.hpp>
#include <agrodevs/engine.hpp>
#include <agrodevs/landscape.hpp>
#include <agrodevs/metrics.hpp>

#include <optional>
#include <vector>

namespace agrodevs {

struct RunOptions {
    /// Worker threads used inside each stage.
    std::size_t threads = 1;
    /// Keep a full per-cycle copy of every agent (for agents.csv).
    bool record_agents = false;
};

/// Per-agent outcome series, in row-major agent order.
struct AgentTrajectory {
    std::vector<double> profit;
    std::vector<double> rl;
    std::vector<bool> econ_ok;
    std::vector<bool> env_ok;
};

struct RunSummary {
    std::size_t agents = 0;
    std::size_t cycles = 0;
    std::string climate;
    double mean_profit_usd_per_ha = 0.0;
    double mean_rl_pct = 0.0;
    metrics::DistributionSummary agent_mean_profit;
    metrics::DistributionSummary agent_mean_rl;
    /// Per-agent coefficient of variation of profit over time; agents whose
    /// mean profit is zero are left out.
    std::optional<metrics::DistributionSummary> agent_profit_cv;
    metrics::DistributionSummary econ_agreement_pct;
    metrics::DistributionSummary env_agreement_pct;
    PerLandUse<double> final_cover_pct{};
    PerTechLevel<std::size_t> final_tl_counts{};
};

struct RunResult {
    std::vector<CycleRecord> cycles;
    std::vector<AgentTrajectory> agents;
    /// Agent states as realized in each cycle (before adaptation); filled
    /// only with RunOptions::record_agents.
    std::vector<std::vector<AgentState>> agent_history;
    Landscape final_landscape;
    RunSummary summary;
};

inline RunSummary summarize(const std::vector<CycleRecord>& cycles, const std::vector<AgentTrajectory>& agents,
                            const ClimateRegime& regime) {
    RunSummary s;
    s.agents = agents.size();
    s.cycles = cycles.size();
    s.climate = regime_name(regime);
    if (cycles.empty() || agents.empty()) return s;

    double p = 0.0, rl = 0.0;
    for (const auto& r : cycles) {
        p += r.mean_profit_usd_per_ha;
        rl += r.mean_rl_pct;
    }
    s.mean_profit_usd_per_ha = p / static_cast<double>(cycles.size());
    s.mean_rl_pct = rl / static_cast<double>(cycles.size());

    std::vector<double> mp, mrl, cv, econ, env;
    for (const auto& a : agents) {
        const auto dp = metrics::describe(a.profit);
        mp.push_back(dp.mean);
        if (dp.cv) cv.push_back(*dp.cv);
        mrl.push_back(metrics::describe(a.rl).mean);
        econ.push_back(metrics::goal_agreement(a.econ_ok));
        env.push_back(metrics::goal_agreement(a.env_ok));
    }
    s.agent_mean_profit = metrics::describe(mp);
    s.agent_mean_rl = metrics::describe(mrl);
    if (!cv.empty()) s.agent_profit_cv = metrics::describe(cv);
    s.econ_agreement_pct = metrics::describe(econ);
    s.env_agreement_pct = metrics::describe(env);
    s.final_cover_pct = cycles.back().cover_pct;
    s.final_tl_counts = cycles.back().tl_counts;
    return s;
}

/// Runs a scenario from an already-built landscape. The climate stream is
/// drawn once per cycle before any cell work.
inline RunResult run_landscape(Landscape land, const ScenarioConfig& config, const ParameterTables& tables,
                               const RunOptions& options = {}) {
    RunResult out;
    auto climate_rng = derive_stream(config.seed, kClimateStream);
    out.agents.resize(land.size());
    for (auto& a : out.agents) {
        a.profit.reserve(config.cycles);
        a.rl.reserve(config.cycles);
    }
    out.cycles.reserve(config.cycles);

    for (std::size_t cycle = 0; cycle < config.cycles; ++cycle) {
        const Wgc wgc = wgc_for_cycle(config.climate, cycle, climate_rng);
        const auto ctx = make_context(config, tables, wgc);
        realize_outcomes(land, ctx, options.threads);
        out.cycles.push_back(aggregate(land, cycle, wgc));
        for (std::size_t i = 0; i < land.size(); ++i) {
            const auto& a = land.cells[i];
            auto& t = out.agents[i];
            t.profit.push_back(a.last_profit_usd_per_ha);
            t.rl.push_back(a.last_rl_pct);
            t.econ_ok.push_back(a.econ_ok);
            t.env_ok.push_back(a.env_ok);
        }
        if (options.record_agents) out.agent_history.push_back(land.cells);
        adapt(land, ctx, options.threads);
    }
    out.summary = summarize(out.cycles, out.agents, config.climate);
    out.final_landscape = std::move(land);
    return out;
}

inline RunResult run_scenario(const ScenarioConfig& config, const ParameterTables& tables,
                              const RunOptions& options = {}) {
    validate_config(config);
    auto init_rng = derive_stream(config.seed, kInitStream);
    return run_landscape(initialize(config, tables, init_rng), config, tables, options);
}

}  // namespace agrodevs
