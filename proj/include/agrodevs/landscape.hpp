#pragma once

#include <agrodevs/config.hpp>
#include <agrodevs/domain.hpp>
#include <agrodevs/rng.hpp>

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

namespace agrodevs {

enum class Tenure { Owner, Tenant };

constexpr std::string_view code(Tenure t) noexcept { return t == Tenure::Owner ? "owner" : "tenant"; }

struct Position {
    std::size_t row = 0;
    std::size_t col = 0;
    friend bool operator==(const Position&, const Position&) = default;
};

/// Crop shares of a farm in percent of its area; components sum to 100.
using Allocation = PerLandUse<double>;

struct AgentState {
    Position position;
    Tenure tenure = Tenure::Owner;
    Allocation allocation{};
    TechLevel tl = TechLevel::Low;
    /// Aspiration level carried into the current cycle, US$/ha.
    double al_usd_per_ha = 0.0;

    // Outcomes of the most recent cycle.
    double last_profit_usd_per_ha = 0.0;
    double last_rl_pct = 0.0;
    double last_cal_usd_per_ha = 0.0;
    bool econ_ok = false;
    bool env_ok = false;
};

struct Landscape {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<AgentState> cells;  // row-major
    double et_pct = 50.0;
    RentSpec rent = RentSoyTons{};

    std::size_t size() const noexcept { return cells.size(); }
    std::size_t offset(Position p) const noexcept { return p.row * cols + p.col; }
    AgentState& at(Position p) noexcept { return cells[offset(p)]; }
    const AgentState& at(Position p) const noexcept { return cells[offset(p)]; }
};

struct CycleRecord {
    std::size_t cycle = 0;
    Wgc wgc = Wgc::Average;
    PerLandUse<double> cover_pct{};
    double mean_profit_usd_per_ha = 0.0;
    double mean_rl_pct = 0.0;
    double pct_econ_ok = 0.0;
    double pct_env_ok = 0.0;
    PerTechLevel<std::size_t> tl_counts{};

    friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

// ---------------------------------------------------------------------------

/// Up to eight neighbor positions in scan order NW, N, NE, W, E, SW, S, SE.
class NeighborList {
public:
    void push(Position p) noexcept { items_[size_++] = p; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    const Position* begin() const noexcept { return items_.data(); }
    const Position* end() const noexcept { return items_.data() + size_; }
    const Position& operator[](std::size_t i) const noexcept { return items_[i]; }

private:
    std::array<Position, 8> items_{};
    std::size_t size_ = 0;
};

/// Moore neighborhood on a non-wrapping grid; border cells get fewer than
/// eight neighbors.
inline NeighborList moore_neighbors(Position pos, std::size_t rows, std::size_t cols) noexcept {
    assert(pos.row < rows && pos.col < cols);
    static constexpr std::array<std::array<int, 2>, 8> offsets{
        {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};
    NeighborList out;
    for (const auto& [dr, dc] : offsets) {
        const auto r = static_cast<long long>(pos.row) + dr;
        const auto c = static_cast<long long>(pos.col) + dc;
        if (r < 0 || c < 0 || r >= static_cast<long long>(rows) || c >= static_cast<long long>(cols)) continue;
        out.push({static_cast<std::size_t>(r), static_cast<std::size_t>(c)});
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace detail {

/// Splits `total` items by percentage shares with the largest-remainder
/// method; ties go to the lower ordinal.
template <std::size_t N>
std::array<std::size_t, N> apportion(const std::array<double, N>& shares_pct, std::size_t total) {
    std::array<std::size_t, N> counts{};
    std::array<double, N> remainder{};
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < N; ++i) {
        const double exact = shares_pct[i] / 100.0 * static_cast<double>(total);
        counts[i] = static_cast<std::size_t>(std::floor(exact));
        remainder[i] = exact - std::floor(exact);
        assigned += counts[i];
    }
    std::array<std::size_t, N> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return remainder[a] > remainder[b]; });
    for (std::size_t k = 0; assigned < total; ++k, ++assigned) ++counts[order[k % N]];
    return counts;
}

/// Sum that does not depend on the order of `values`.
inline double ordered_sum(std::vector<double>& values) {
    std::sort(values.begin(), values.end());
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

/// Alternating column/row scaling (iterative proportional fitting): column
/// means converge to `target`, rows are left summing to 100.
inline void fit_allocations(std::span<Allocation> rows, const Allocation& target) {
    const double n = static_cast<double>(rows.size());
    for (int iter = 0; iter < 10000; ++iter) {
        double worst = 0.0;
        for (auto lu : kLandUses) {
            double mean = 0.0;
            for (const auto& a : rows) mean += a[index(lu)];
            mean /= n;
            worst = std::max(worst, std::abs(mean - target[index(lu)]));
            const double scale = mean > 0.0 ? target[index(lu)] / mean : 0.0;
            for (auto& a : rows) a[index(lu)] *= scale;
        }
        for (auto& a : rows) {
            const double s = a[0] + a[1] + a[2];
            for (double& x : a) x *= 100.0 / s;
        }
        if (worst < 1e-10) break;
    }
}

}  // namespace detail

/// Builds the initial landscape. The init stream is consumed in a fixed
/// order: tenure shuffle, tech level shuffle, then three exponential draws
/// per agent in row-major order (random allocation scheme only).
inline Landscape initialize(const ScenarioConfig& config, const ParameterTables& tables, SplitMix64& rng) {
    validate_config(config);
    const std::size_t n = config.agent_count();

    Landscape land;
    land.rows = config.grid_rows;
    land.cols = config.grid_cols;
    land.et_pct = config.et_pct;
    land.rent = config.rent;
    land.cells.resize(n);
    for (std::size_t i = 0; i < n; ++i) land.cells[i].position = {i / land.cols, i % land.cols};

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    const auto owners = static_cast<std::size_t>(std::floor(config.owner_share_pct / 100.0 * n + 0.5));
    shuffle(std::span(order), rng);
    for (std::size_t k = 0; k < n; ++k) land.cells[order[k]].tenure = k < owners ? Tenure::Owner : Tenure::Tenant;

    const auto tl_counts = detail::apportion(config.initial_tl_pct, n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    shuffle(std::span(order), rng);
    {
        std::size_t k = 0;
        for (auto tl : kTechLevels)
            for (std::size_t c = 0; c < tl_counts[index(tl)]; ++c) land.cells[order[k++]].tl = tl;
    }

    std::vector<Allocation> alloc(n, config.initial_cover_pct);
    if (config.allocation == AllocationScheme::Random) {
        for (auto& a : alloc) {
            // Symmetric Dirichlet(1): normalized unit exponentials.
            for (auto lu : kLandUses)
                a[index(lu)] = config.initial_cover_pct[index(lu)] > 0.0 ? -std::log(rng.unit_open()) : 0.0;
            const double s = a[0] + a[1] + a[2];
            for (double& x : a) x = s > 0.0 ? x * 100.0 / s : 100.0 / 3;
        }
        detail::fit_allocations(alloc, config.initial_cover_pct);
    }

    for (std::size_t i = 0; i < n; ++i) {
        auto& agent = land.cells[i];
        agent.allocation = alloc[i];
        agent.al_usd_per_ha = config.initial_al_factor * tables.wct_usd_per_ha[index(agent.tl)];
    }
    return land;
}

/// Landscape aggregates of the outcomes currently stored on the agents.
/// Means are unweighted over agents and independent of cell order.
inline CycleRecord aggregate(const Landscape& land, std::size_t cycle, Wgc wgc) {
    CycleRecord rec;
    rec.cycle = cycle;
    rec.wgc = wgc;
    const std::size_t n = land.size();
    if (n == 0) return rec;
    const double dn = static_cast<double>(n);

    std::vector<double> buf(n);
    auto mean_of = [&](auto&& field) {
        for (std::size_t i = 0; i < n; ++i) buf[i] = field(land.cells[i]);
        return detail::ordered_sum(buf) / dn;
    };
    for (auto lu : kLandUses) rec.cover_pct[index(lu)] = mean_of([&](const AgentState& a) { return a.allocation[index(lu)]; });
    rec.mean_profit_usd_per_ha = mean_of([](const AgentState& a) { return a.last_profit_usd_per_ha; });
    rec.mean_rl_pct = mean_of([](const AgentState& a) { return a.last_rl_pct; });

    std::size_t econ = 0, env = 0;
    for (const auto& a : land.cells) {
        econ += a.econ_ok;
        env += a.env_ok;
        ++rec.tl_counts[index(a.tl)];
    }
    rec.pct_econ_ok = 100.0 * static_cast<double>(econ) / dn;
    rec.pct_env_ok = 100.0 * static_cast<double>(env) / dn;
    return rec;
}

}  // namespace agrodevs
