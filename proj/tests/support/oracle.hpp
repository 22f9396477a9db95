#pragma once

// Straight-line re-implementation of the cycle equations over plain arrays.
// Shares nothing with the engine except the raw table data; used to check
// the engine end to end.

#include <agrodevs/domain.hpp>

#include <vector>

namespace oracle {

struct Farm {
    int row, col;
    bool tenant;
    double alloc[3];
    int tl;
    double al;
    // outcomes
    double profit, rl, cal;
    bool econ, env;
};

struct Grid {
    int rows, cols;
    std::vector<Farm> farms;
};

inline void step(Grid& g, const agrodevs::ParameterTables& t, int wgc, const double price[3], double rent, double et) {
    const int n = g.rows * g.cols;
    for (auto& f : g.farms) {
        double p = 0, rl = 0;
        for (int lu = 0; lu < 3; ++lu) {
            const double y = t.yield_t_per_ha[lu][f.tl][wgc];
            const double c = t.cost_usd_per_ha[lu][f.tl][wgc];
            p += f.alloc[lu] / 100 * (y * price[lu] - c);
            rl += f.alloc[lu] / 100 * t.renewability_pct[lu][f.tl][wgc];
        }
        if (f.tenant) p -= rent;
        f.profit = p;
        f.rl = rl;
        f.cal = f.al + f.al * t.alpha_wgc[wgc];
        f.econ = p >= f.cal;
        f.env = rl >= et;
    }
    std::vector<Farm> next = g.farms;
    for (int i = 0; i < n; ++i) {
        const Farm& f = g.farms[i];
        int best = -1;
        for (int dr = -1; dr <= 1; ++dr)
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                const int r = f.row + dr, c = f.col + dc;
                if (r < 0 || c < 0 || r >= g.rows || c >= g.cols) continue;
                const int j = r * g.cols + c;
                if (best < 0 || g.farms[j].profit > g.farms[best].profit) best = j;
            }
        Farm& out = next[i];
        double al;
        if (f.profit >= f.cal) {
            al = 0.45 * f.cal + 0.55 * f.profit;
            if (al > f.profit) al = f.profit;
            if (al < f.cal) al = f.cal;
        } else if (best >= 0 && g.farms[best].profit > f.cal) {
            al = g.farms[best].cal * (1 + t.alpha_bn[f.tl][g.farms[best].tl]);
            for (int lu = 0; lu < 3; ++lu) out.alloc[lu] = g.farms[best].alloc[lu];
        } else {
            al = 0.55 * f.cal + 0.45 * f.profit;
            if (al > f.cal) al = f.cal;
            if (al < f.profit) al = f.profit;
        }
        out.al = al < 0 ? 0 : al;
        if (f.profit >= t.wct_usd_per_ha[2])
            out.tl = 2;
        else if (f.profit >= t.wct_usd_per_ha[1])
            out.tl = 1;
        else
            out.tl = 0;
    }
    g.farms = next;
}

}  // namespace oracle
