// agrodevs: land use change simulator command line.
//
//   agrodevs run      --preset longterm --seed 1 --out-dir out
//   agrodevs validate --simulated out --observed observed.csv --series cover_s,cover_ws
//   agrodevs sweep    --preset pergamino-1988 --axis soy-price --values 141,277,346.4
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 undefined metric.

#include <agrodevs/agrodevs.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct ScenarioFlags {
    std::string config_path;
    std::string preset_name;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> cycles;
    std::string climate;
    std::optional<double> owner_share;
    std::string wgc_file;

    void add_to(CLI::App& app) {
        app.add_option("--config", config_path, "Scenario JSON file");
        app.add_option("--preset", preset_name, "Named scenario: pergamino-1988 or longterm");
        app.add_option("--seed", seed, "RNG seed");
        app.add_option("--cycles", cycles, "Number of cropping cycles")->check(CLI::PositiveNumber);
        app.add_option("--climate", climate,
                       "Climate regime: constant-unfavorable, constant-average, constant-favorable, seesaw, random, "
                       "explicit");
        app.add_option("--owner-share", owner_share, "Owner share of agents, %");
        app.add_option("--wgc-file", wgc_file, "Weather sequence, one code (VU/U/A/F/VF) per line");
    }

    agrodevs::ScenarioConfig resolve() const {
        using namespace agrodevs;
        if (!config_path.empty() && !preset_name.empty())
            throw ConfigError("give either --config or --preset, not both");
        ScenarioConfig c;
        if (!config_path.empty()) {
            c = parse_config(config_path);
        } else {
            const std::string name = preset_name.empty() ? "longterm" : preset_name;
            auto p = preset(name);
            if (!p) throw ConfigError("unknown preset '" + name + "' (expected pergamino-1988 or longterm)");
            c = *p;
        }
        if (seed) c.seed = *seed;
        if (!climate.empty()) {
            auto regime = regime_from_name(climate);
            if (!regime || std::holds_alternative<climate::AlternatingMix>(*regime))
                throw ConfigError("unknown --climate '" + climate + "'");
            c.climate = *regime;
        }
        if (!wgc_file.empty()) {
            auto levels = load_wgc_sequence(wgc_file);
            if (!std::holds_alternative<climate::ExplicitSequence>(c.climate) && !climate.empty())
                throw ConfigError("--wgc-file only applies to the explicit climate regime");
            if (!cycles) c.cycles = levels.size();
            c.climate = climate::ExplicitSequence{std::move(levels)};
        }
        if (cycles) c.cycles = *cycles;
        if (owner_share) c.owner_share_pct = *owner_share;
        return c;
    }
};

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const agrodevs::ConfigError*>(&e)) return 2;
    if (dynamic_cast<const agrodevs::IoError*>(&e)) return 3;
    if (dynamic_cast<const agrodevs::MetricError*>(&e)) return 4;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Agent-based cellular automata simulator of agricultural land use change"};
    app.require_subcommand(1);

    ScenarioFlags run_flags;
    std::string run_out = "out";
    bool emit_agents = false;
    std::size_t run_threads = 1;
    auto* run = app.add_subcommand("run", "Simulate a scenario and write cycles.csv and summary.json");
    run_flags.add_to(*run);
    run->add_option("--out-dir", run_out, "Output directory");
    run->add_flag("--emit-agents", emit_agents, "Also write agents.csv");
    run->add_option("--threads", run_threads, "Worker threads per stage")->check(CLI::PositiveNumber);

    std::string sim_path, obs_path, val_out = "out";
    std::vector<std::string> series{"cover_m", "cover_s", "cover_ws"};
    auto* validate = app.add_subcommand("validate", "Goodness of fit of simulated against observed series");
    validate->add_option("--simulated", sim_path, "cycles.csv or the run directory holding it")->required();
    validate->add_option("--observed", obs_path, "Observed series: year,cover_m,cover_s,cover_ws")->required();
    validate->add_option("--series", series, "Series to compare: cover_m, cover_s, cover_ws, mean_p, mean_rl")
        ->delimiter(',');
    validate->add_option("--out-dir", val_out, "Output directory for fit.csv");

    ScenarioFlags sweep_flags;
    std::string axis_name, axis_values, sweep_out = "out";
    std::size_t sweep_threads = 1;
    auto* sweep = app.add_subcommand("sweep", "One-at-a-time sensitivity sweep; writes sweep.csv");
    sweep_flags.add_to(*sweep);
    sweep->add_option("--axis", axis_name, "soy-price, maize-price, wheat-price, wgc-mix, owner-share or rent")
        ->required();
    sweep->add_option("--values", axis_values, "Comma-separated axis values")->required();
    sweep->add_option("--out-dir", sweep_out, "Output directory");
    sweep->add_option("--threads", sweep_threads, "Concurrent runs")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*run) {
            const auto config = run_flags.resolve();
            const auto files = agrodevs::command_run(config, run_out, emit_agents, run_threads);
            std::cout << "wrote " << files.cycles.string() << "\n";
            if (files.agents) std::cout << "wrote " << files.agents->string() << "\n";
            std::cout << "wrote " << files.summary.string() << "\n";
        } else if (*validate) {
            const auto fits = agrodevs::command_validate(sim_path, obs_path, series, val_out);
            std::cout << agrodevs::io::fit_csv(fits);
        } else if (*sweep) {
            const auto config = sweep_flags.resolve();
            const auto axis = agrodevs::parse_axis(axis_name, axis_values);
            const auto result = agrodevs::command_sweep(config, axis, sweep_out, sweep_threads);
            std::cout << "climate base: " << result.climate_base << "\n";
            std::cout << "wrote " << (std::filesystem::path(sweep_out) / "sweep.csv").string() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "agrodevs: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 0;
}
