#pragma once

// File formats. Every numeric column is written with six decimals, so the
// same inputs always give the same bytes.
//
//   cycles.csv  cycle,wgc,cover_m,cover_s,cover_ws,mean_p,mean_rl,pct_econ_ok,pct_env_ok,tl_l,tl_a,tl_h
//   agents.csv  cycle,row,col,tenure,alloc_m,alloc_s,alloc_ws,tl,al,cal,profit,rl,econ_ok,env_ok
//   sweep.csv   parameter,value,mean_profit,mean_rl,final_cover_m,final_cover_s,final_cover_ws,
//               final_tl_l,final_tl_a,final_tl_h
//   fit.csv     series,rmse,v,pm,iof
//   observed    year,cover_m,cover_s,cover_ws[,mean_p][,mean_rl]

#include <agrodevs/detail/csv.hpp>
#include <agrodevs/landscape.hpp>
#include <agrodevs/metrics.hpp>
#include <agrodevs/simulation.hpp>
#include <agrodevs/sweep.hpp>

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace agrodevs::io {

inline constexpr std::string_view kCyclesHeader =
    "cycle,wgc,cover_m,cover_s,cover_ws,mean_p,mean_rl,pct_econ_ok,pct_env_ok,tl_l,tl_a,tl_h";
inline constexpr std::string_view kAgentsHeader =
    "cycle,row,col,tenure,alloc_m,alloc_s,alloc_ws,tl,al,cal,profit,rl,econ_ok,env_ok";
inline constexpr std::string_view kSweepHeader =
    "parameter,value,mean_profit,mean_rl,final_cover_m,final_cover_s,final_cover_ws,final_tl_l,final_tl_a,final_tl_h";
inline constexpr std::string_view kFitHeader = "series,rmse,v,pm,iof";

/// Columns of cycles.csv usable as a validation series.
inline constexpr std::array<std::string_view, 5> kSeriesColumns{"cover_m", "cover_s", "cover_ws", "mean_p",
                                                                "mean_rl"};

using detail::fixed6;

inline std::string cycles_csv(const std::vector<CycleRecord>& records) {
    std::string out(kCyclesHeader);
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.cycle);
        out += ',';
        out += code(r.wgc);
        for (double v : r.cover_pct) out += "," + fixed6(v);
        out += "," + fixed6(r.mean_profit_usd_per_ha) + "," + fixed6(r.mean_rl_pct);
        out += "," + fixed6(r.pct_econ_ok) + "," + fixed6(r.pct_env_ok);
        for (auto c : r.tl_counts) out += "," + std::to_string(c);
        out += '\n';
    }
    return out;
}

inline std::string agents_csv(const std::vector<std::vector<AgentState>>& history) {
    std::string out(kAgentsHeader);
    out += '\n';
    for (std::size_t cycle = 0; cycle < history.size(); ++cycle)
        for (const auto& a : history[cycle]) {
            out += std::to_string(cycle) + "," + std::to_string(a.position.row) + "," +
                   std::to_string(a.position.col) + ",";
            out += code(a.tenure);
            for (double v : a.allocation) out += "," + fixed6(v);
            out += ",";
            out += code(a.tl);
            out += "," + fixed6(a.al_usd_per_ha) + "," + fixed6(a.last_cal_usd_per_ha) + "," +
                   fixed6(a.last_profit_usd_per_ha) + "," + fixed6(a.last_rl_pct);
            out += a.econ_ok ? ",1" : ",0";
            out += a.env_ok ? ",1" : ",0";
            out += '\n';
        }
    return out;
}

inline std::string sweep_csv(const SweepResult& result) {
    std::string out(kSweepHeader);
    out += '\n';
    for (const auto& row : result.rows) {
        out += std::string(code(result.parameter)) + "," + format_sweep_value(row.value);
        out += "," + fixed6(row.mean_profit_usd_per_ha) + "," + fixed6(row.mean_rl_pct);
        for (double v : row.final_cover_pct) out += "," + fixed6(v);
        for (auto c : row.final_tl_counts) out += "," + std::to_string(c);
        out += '\n';
    }
    return out;
}

struct NamedFit {
    std::string series;
    metrics::FitReport report;
};

inline std::string fit_csv(const std::vector<NamedFit>& fits) {
    std::string out(kFitHeader);
    out += '\n';
    for (const auto& f : fits)
        out += f.series + "," + fixed6(f.report.rmse) + "," + fixed6(f.report.v) + "," + fixed6(f.report.pm) + "," +
               fixed6(f.report.iof) + "\n";
    return out;
}

namespace detail {
inline nlohmann::ordered_json to_json(const metrics::DistributionSummary& d) {
    nlohmann::ordered_json j;
    j["min"] = d.min;
    j["q25"] = d.q25;
    j["median"] = d.median;
    j["q75"] = d.q75;
    j["max"] = d.max;
    j["mean"] = d.mean;
    j["cv"] = d.cv ? nlohmann::ordered_json(*d.cv) : nlohmann::ordered_json(nullptr);
    return j;
}
}  // namespace detail

inline std::string summary_json(const RunSummary& s, std::uint64_t seed) {
    nlohmann::ordered_json j;
    j["agents"] = s.agents;
    j["cycles"] = s.cycles;
    j["seed"] = seed;
    j["climate"] = s.climate;
    j["mean_profit"] = s.mean_profit_usd_per_ha;
    j["mean_rl"] = s.mean_rl_pct;
    j["agent_mean_profit"] = detail::to_json(s.agent_mean_profit);
    j["agent_mean_rl"] = detail::to_json(s.agent_mean_rl);
    j["agent_profit_cv"] = s.agent_profit_cv ? detail::to_json(*s.agent_profit_cv) : nlohmann::ordered_json(nullptr);
    j["econ_agreement_pct"] = detail::to_json(s.econ_agreement_pct);
    j["env_agreement_pct"] = detail::to_json(s.env_agreement_pct);
    j["final_cover_pct"] = {{"M", s.final_cover_pct[0]}, {"S", s.final_cover_pct[1]}, {"WS", s.final_cover_pct[2]}};
    j["final_tl_counts"] = {
        {"L", s.final_tl_counts[0]}, {"A", s.final_tl_counts[1]}, {"H", s.final_tl_counts[2]}};
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Readers

namespace detail {
inline double number(const agrodevs::detail::CsvTable& t, const agrodevs::detail::CsvTable::Row& row,
                     std::size_t col) {
    double v = 0.0;
    if (!agrodevs::detail::parse_double(row.fields[col], v))
        t.fail(row.line, "malformed number '" + row.fields[col] + "' in column " + t.header[col]);
    return v;
}

inline std::size_t count(const agrodevs::detail::CsvTable& t, const agrodevs::detail::CsvTable::Row& row,
                         std::size_t col) {
    const double v = number(t, row, col);
    if (v < 0.0 || v != std::floor(v)) t.fail(row.line, "expected a non-negative integer in column " + t.header[col]);
    return static_cast<std::size_t>(v);
}
}  // namespace detail

inline std::vector<CycleRecord> parse_cycles_csv(std::string_view text, const std::string& source) {
    const auto t = agrodevs::detail::parse_csv(text, source);
    if (t.header != agrodevs::detail::split_fields(kCyclesHeader))
        t.fail(1, "expected header '" + std::string(kCyclesHeader) + "'");
    std::vector<CycleRecord> out;
    for (const auto& row : t.rows) {
        if (row.fields.size() != t.header.size()) t.fail(row.line, "wrong number of fields");
        CycleRecord r;
        r.cycle = detail::count(t, row, 0);
        auto w = parse_wgc(row.fields[1]);
        if (!w) t.fail(row.line, "unknown weather code '" + row.fields[1] + "'");
        r.wgc = *w;
        for (std::size_t i = 0; i < 3; ++i) r.cover_pct[i] = detail::number(t, row, 2 + i);
        r.mean_profit_usd_per_ha = detail::number(t, row, 5);
        r.mean_rl_pct = detail::number(t, row, 6);
        r.pct_econ_ok = detail::number(t, row, 7);
        r.pct_env_ok = detail::number(t, row, 8);
        for (std::size_t i = 0; i < 3; ++i) r.tl_counts[i] = detail::count(t, row, 9 + i);
        out.push_back(r);
    }
    return out;
}

inline std::vector<CycleRecord> load_cycles_csv(const std::string& path) {
    return parse_cycles_csv(agrodevs::detail::read_file(path), path);
}

/// One series out of a list of cycle records, by cycles.csv column name.
inline std::vector<double> series_of(const std::vector<CycleRecord>& records, std::string_view column) {
    std::vector<double> out;
    for (const auto& r : records) {
        if (column == "cover_m") out.push_back(r.cover_pct[0]);
        else if (column == "cover_s") out.push_back(r.cover_pct[1]);
        else if (column == "cover_ws") out.push_back(r.cover_pct[2]);
        else if (column == "mean_p") out.push_back(r.mean_profit_usd_per_ha);
        else if (column == "mean_rl") out.push_back(r.mean_rl_pct);
        else throw ConfigError("unknown series '" + std::string(column) +
                               "' (expected cover_m, cover_s, cover_ws, mean_p or mean_rl)");
    }
    return out;
}

/// Observed series file. `year` must be the first column; every other
/// column is a named series.
struct ObservedSeries {
    std::vector<double> years;
    std::map<std::string, std::vector<double>> columns;
};

inline ObservedSeries parse_observed_csv(std::string_view text, const std::string& source) {
    const auto t = agrodevs::detail::parse_csv(text, source);
    if (t.header.empty() || t.header.front() != "year") t.fail(1, "first column must be 'year'");
    for (std::size_t i = 1; i < t.header.size(); ++i) {
        if (std::find(kSeriesColumns.begin(), kSeriesColumns.end(), t.header[i]) == kSeriesColumns.end())
            t.fail(1, "unknown column '" + t.header[i] + "'");
    }
    ObservedSeries out;
    for (std::size_t i = 1; i < t.header.size(); ++i) out.columns[t.header[i]];
    for (const auto& row : t.rows) {
        if (row.fields.size() != t.header.size()) t.fail(row.line, "wrong number of fields");
        out.years.push_back(detail::number(t, row, 0));
        for (std::size_t i = 1; i < t.header.size(); ++i) out.columns[t.header[i]].push_back(detail::number(t, row, i));
    }
    return out;
}

inline ObservedSeries load_observed_csv(const std::string& path) {
    return parse_observed_csv(agrodevs::detail::read_file(path), path);
}

}  // namespace agrodevs::io
