#pragma once

// The three workflows behind the command line tool. Each computes first and
// writes its files only once everything succeeded.

#include <agrodevs/config.hpp>
#include <agrodevs/config_io.hpp>
#include <agrodevs/io.hpp>
#include <agrodevs/simulation.hpp>
#include <agrodevs/sweep.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace agrodevs {

namespace detail {
inline void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
}
}  // namespace detail

struct RunFiles {
    std::filesystem::path cycles;
    std::optional<std::filesystem::path> agents;
    std::filesystem::path summary;
};

/// Writes cycles.csv, summary.json and optionally agents.csv into `out_dir`.
inline RunFiles command_run(const ScenarioConfig& config, const std::filesystem::path& out_dir, bool emit_agents,
                            std::size_t threads = 1) {
    validate_config(config);
    const auto tables = resolve_tables(config);
    const auto result = run_scenario(config, tables, {threads, emit_agents});

    detail::ensure_dir(out_dir);
    RunFiles files{out_dir / "cycles.csv", std::nullopt, out_dir / "summary.json"};
    detail::write_file(files.cycles.string(), io::cycles_csv(result.cycles));
    detail::write_file(files.summary.string(), io::summary_json(result.summary, config.seed));
    if (emit_agents) {
        files.agents = out_dir / "agents.csv";
        detail::write_file(files.agents->string(), io::agents_csv(result.agent_history));
    }
    return files;
}

/// Compares simulated cycles.csv series with an observed file and writes
/// fit.csv. `simulated` may be the cycles.csv file or the run directory.
inline std::vector<io::NamedFit> command_validate(const std::filesystem::path& simulated,
                                                  const std::filesystem::path& observed,
                                                  const std::vector<std::string>& series,
                                                  const std::filesystem::path& out_dir) {
    auto sim_path = simulated;
    if (std::filesystem::is_directory(sim_path)) sim_path /= "cycles.csv";
    const auto records = io::load_cycles_csv(sim_path.string());
    const auto obs = io::load_observed_csv(observed.string());
    if (series.empty()) throw ConfigError("no series requested");

    std::vector<io::NamedFit> fits;
    for (const auto& name : series) {
        auto col = obs.columns.find(name);
        if (col == obs.columns.end())
            throw ConfigError(observed.string() + ": no column '" + name + "' in observed series");
        metrics::SeriesPair pair{col->second, io::series_of(records, name)};
        if (pair.observed.size() != pair.simulated.size())
            throw ConfigError("series '" + name + "': observed has " + std::to_string(pair.observed.size()) +
                              " rows but simulated has " + std::to_string(pair.simulated.size()));
        fits.push_back({name, metrics::fit(pair)});
    }
    detail::ensure_dir(out_dir);
    detail::write_file((out_dir / "fit.csv").string(), io::fit_csv(fits));
    return fits;
}

/// Parses a comma-separated value list for an axis.
inline SweepAxis parse_axis(std::string_view name, std::string_view values) {
    auto p = parse_sweep_parameter(name);
    if (!p)
        throw ConfigError("unknown sweep axis '" + std::string(name) +
                          "' (expected soy-price, maize-price, wheat-price, wgc-mix, owner-share or rent)");
    SweepAxis axis{*p, {}};
    for (const auto& field : detail::split_fields(values)) {
        if (field.empty()) continue;
        if (*p == SweepParameter::WgcMixLevel) {
            auto w = parse_wgc(field);
            if (!w) throw ConfigError("unknown weather code '" + field + "' in --values");
            axis.values.emplace_back(*w);
        } else {
            double v = 0.0;
            if (!detail::parse_double(field, v)) throw ConfigError("malformed number '" + field + "' in --values");
            axis.values.emplace_back(v);
        }
    }
    if (axis.values.empty()) throw ConfigError("--values is empty");
    return axis;
}

inline SweepResult command_sweep(const ScenarioConfig& config, const SweepAxis& axis,
                                 const std::filesystem::path& out_dir, std::size_t threads = 1) {
    const auto tables = resolve_tables(config);
    auto result = run_sweep(config, axis, tables, threads);
    detail::ensure_dir(out_dir);
    detail::write_file((out_dir / "sweep.csv").string(), io::sweep_csv(result));
    return result;
}

}  // namespace agrodevs
