#pragma once

// Goodness of fit between observed and simulated series, and summary
// statistics over agents.
//
// Ordinal pattern analysis: every index pair i < j whose observed values
// differ is scored. The pair matches when the simulated values are ordered
// the same way; a simulated tie counts as a mismatch. Observed ties are left
// out.

#include <agrodevs/errors.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace agrodevs::metrics {

struct SeriesPair {
    std::vector<double> observed;
    std::vector<double> simulated;
};

struct FitReport {
    double rmse = 0.0;
    double v = 0.0;
    double pm = 0.0;
    double iof = 0.0;
};

struct RmseV {
    double rmse = 0.0;
    double v = 0.0;
};

struct OrdinalFit {
    double pm = 0.0;
    double iof = 0.0;
    std::size_t matches = 0;
    std::size_t mismatches = 0;
};

namespace detail {
inline void check_pair(const SeriesPair& p) {
    if (p.observed.size() != p.simulated.size())
        throw ConfigError("observed and simulated series differ in length (" + std::to_string(p.observed.size()) +
                          " vs " + std::to_string(p.simulated.size()) + ")");
    if (p.observed.empty()) throw ConfigError("series are empty");
}

inline int sign(double x) noexcept { return (x > 0.0) - (x < 0.0); }
}  // namespace detail

/// rmse = sqrt(mean((obs - sim)^2)), v = rmse / mean(obs).
inline RmseV rmse_and_v(const SeriesPair& pair) {
    detail::check_pair(pair);
    const double n = static_cast<double>(pair.observed.size());
    double sq = 0.0, obs_sum = 0.0;
    for (std::size_t i = 0; i < pair.observed.size(); ++i) {
        const double d = pair.observed[i] - pair.simulated[i];
        sq += d * d;
        obs_sum += pair.observed[i];
    }
    const double mean_obs = obs_sum / n;
    if (mean_obs == 0.0) throw MetricError("v is undefined: observed mean is zero");
    const double rmse = std::sqrt(sq / n);
    return {rmse, rmse / mean_obs};
}

inline OrdinalFit ordinal_fit(const SeriesPair& pair) {
    detail::check_pair(pair);
    OrdinalFit out;
    const auto& obs = pair.observed;
    const auto& sim = pair.simulated;
    for (std::size_t i = 0; i < obs.size(); ++i)
        for (std::size_t j = i + 1; j < obs.size(); ++j) {
            const int so = detail::sign(obs[i] - obs[j]);
            if (so == 0) continue;
            if (so == detail::sign(sim[i] - sim[j]))
                ++out.matches;
            else
                ++out.mismatches;
        }
    const std::size_t scored = out.matches + out.mismatches;
    if (scored == 0) throw MetricError("ordinal fit is undefined: every observed pair is tied");
    out.pm = static_cast<double>(out.matches) / static_cast<double>(scored);
    out.iof = 2.0 * out.pm - 1.0;
    return out;
}

inline FitReport fit(const SeriesPair& pair) {
    const auto a = rmse_and_v(pair);
    const auto b = ordinal_fit(pair);
    return {a.rmse, a.v, b.pm, b.iof};
}

/// Percentage of cycles in which a goal was met.
inline double goal_agreement(const std::vector<bool>& flags) {
    if (flags.empty()) throw MetricError("goal agreement of an empty series");
    const auto hits = std::count(flags.begin(), flags.end(), true);
    return 100.0 * static_cast<double>(hits) / static_cast<double>(flags.size());
}

/// Inclusive linear interpolation between order statistics: position
/// q * (n - 1) in the sorted sample.
inline double quantile_sorted(std::span<const double> sorted, double q) noexcept {
    if (sorted.size() == 1) return sorted.front();
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

struct DistributionSummary {
    double min = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
    double max = 0.0;
    double mean = 0.0;
    /// 100 * population stddev / |mean|; absent when the mean is zero.
    std::optional<double> cv;
};

/// Like distribution_summary but leaves cv empty instead of failing.
inline DistributionSummary describe(std::span<const double> values) {
    if (values.empty()) throw MetricError("summary of an empty sample");
    std::vector<double> s(values.begin(), values.end());
    std::sort(s.begin(), s.end());
    DistributionSummary d;
    d.min = s.front();
    d.max = s.back();
    d.q25 = quantile_sorted(s, 0.25);
    d.median = quantile_sorted(s, 0.5);
    d.q75 = quantile_sorted(s, 0.75);
    double sum = 0.0;
    for (double v : s) sum += v;
    d.mean = sum / static_cast<double>(s.size());
    double var = 0.0;
    for (double v : s) var += (v - d.mean) * (v - d.mean);
    var /= static_cast<double>(s.size());
    if (d.mean != 0.0) d.cv = 100.0 * std::sqrt(var) / std::abs(d.mean);
    return d;
}

inline DistributionSummary distribution_summary(std::span<const double> values) {
    auto d = describe(values);
    if (!d.cv) throw MetricError("coefficient of variation is undefined: mean is zero");
    return d;
}

}  // namespace agrodevs::metrics
