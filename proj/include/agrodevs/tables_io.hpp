#pragma once

// CSV overrides for the parameter dataset. Each file replaces one table and
// must list every key of that table exactly once.
//
//   yield / cost / renewability   lu,tl,wgc,value
//   price                         lu,value
//   alpha_wgc                     wgc,value
//   alpha_bn                      tl,bn_tl,value
//   wct                           tl,value
//   wheat_yield / soy2_yield      tl,wgc,value   (split pricing mode)

#include <agrodevs/detail/csv.hpp>
#include <agrodevs/domain.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace agrodevs {

struct TableOverrides {
    std::optional<std::string> yield;
    std::optional<std::string> cost;
    std::optional<std::string> renewability;
    std::optional<std::string> price;
    std::optional<std::string> alpha_wgc;
    std::optional<std::string> alpha_bn;
    std::optional<std::string> wct;
    std::optional<std::string> wheat_yield;
    std::optional<std::string> soy2_yield;

    bool empty() const noexcept {
        return !yield && !cost && !renewability && !price && !alpha_wgc && !alpha_bn && !wct && !wheat_yield &&
               !soy2_yield;
    }
};

namespace detail {

template <class Enum>
struct EnumColumn {
    std::optional<Enum> (*parse)(std::string_view);
    const char* what;
};

inline void expect_header(const CsvTable& t, const std::vector<std::string>& expected) {
    if (t.header != expected) {
        std::string want;
        for (const auto& h : expected) want += (want.empty() ? "" : ",") + h;
        t.fail(1, "expected header '" + want + "'");
    }
}

/// Reads rows of `key columns..., value` into a map keyed by the ordinal
/// tuple. Rejects unknown codes, duplicate keys and malformed numbers.
inline std::map<std::vector<std::size_t>, double> read_keyed(
    const CsvTable& t, const std::vector<std::size_t (*)(const CsvTable&, std::size_t, const std::string&)>& cols) {
    std::map<std::vector<std::size_t>, double> out;
    for (const auto& row : t.rows) {
        if (row.fields.size() != cols.size() + 1)
            t.fail(row.line, "expected " + std::to_string(cols.size() + 1) + " fields");
        std::vector<std::size_t> key;
        for (std::size_t i = 0; i < cols.size(); ++i) key.push_back(cols[i](t, row.line, row.fields[i]));
        double v = 0.0;
        if (!parse_double(row.fields.back(), v)) t.fail(row.line, "malformed number '" + row.fields.back() + "'");
        if (!out.emplace(key, v).second) t.fail(row.line, "duplicate key");
    }
    return out;
}

inline std::size_t lu_col(const CsvTable& t, std::size_t line, const std::string& s) {
    if (auto v = parse_land_use(s)) return index(*v);
    t.fail(line, "unknown land use code '" + s + "' (expected M, S or WS)");
}
inline std::size_t tl_col(const CsvTable& t, std::size_t line, const std::string& s) {
    if (auto v = parse_tech_level(s)) return index(*v);
    t.fail(line, "unknown tech level code '" + s + "' (expected L, A or H)");
}
inline std::size_t wgc_col(const CsvTable& t, std::size_t line, const std::string& s) {
    if (auto v = parse_wgc(s)) return index(*v);
    t.fail(line, "unknown weather code '" + s + "' (expected VU, U, A, F or VF)");
}

inline double require(const CsvTable& t, const std::map<std::vector<std::size_t>, double>& m,
                      const std::vector<std::size_t>& key, const std::string& label) {
    auto it = m.find(key);
    if (it == m.end()) throw ConfigError(t.source + ": missing key " + label);
    return it->second;
}

}  // namespace detail

inline CropCube parse_crop_cube_csv(const detail::CsvTable& t) {
    detail::expect_header(t, {"lu", "tl", "wgc", "value"});
    const auto m = detail::read_keyed(t, {detail::lu_col, detail::tl_col, detail::wgc_col});
    CropCube c{};
    for (auto lu : kLandUses)
        for (auto tl : kTechLevels)
            for (auto w : kWgcLevels)
                c[index(lu)][index(tl)][index(w)] =
                    detail::require(t, m, {index(lu), index(tl), index(w)}, detail::cube_key(lu, tl, w));
    return c;
}

inline TechWgcGrid parse_tech_wgc_csv(const detail::CsvTable& t) {
    detail::expect_header(t, {"tl", "wgc", "value"});
    const auto m = detail::read_keyed(t, {detail::tl_col, detail::wgc_col});
    TechWgcGrid g{};
    for (auto tl : kTechLevels)
        for (auto w : kWgcLevels)
            g[index(tl)][index(w)] = detail::require(t, m, {index(tl), index(w)},
                                                     std::string(code(tl)) + "," + std::string(code(w)));
    return g;
}

/// Applies every override file to a copy of `base`. The split-mode component
/// tables must be supplied together.
inline ParameterTables apply_overrides(ParameterTables base, const TableOverrides& o) {
    using detail::load_csv;
    if (o.yield) base.yield_t_per_ha = parse_crop_cube_csv(load_csv(*o.yield));
    if (o.cost) base.cost_usd_per_ha = parse_crop_cube_csv(load_csv(*o.cost));
    if (o.renewability) base.renewability_pct = parse_crop_cube_csv(load_csv(*o.renewability));
    if (o.price) {
        const auto t = load_csv(*o.price);
        detail::expect_header(t, {"lu", "value"});
        const auto m = detail::read_keyed(t, {detail::lu_col});
        for (auto lu : kLandUses)
            base.price_usd_per_t[index(lu)] = detail::require(t, m, {index(lu)}, std::string(code(lu)));
    }
    if (o.alpha_wgc) {
        const auto t = load_csv(*o.alpha_wgc);
        detail::expect_header(t, {"wgc", "value"});
        const auto m = detail::read_keyed(t, {detail::wgc_col});
        for (auto w : kWgcLevels) base.alpha_wgc[index(w)] = detail::require(t, m, {index(w)}, std::string(code(w)));
    }
    if (o.alpha_bn) {
        const auto t = load_csv(*o.alpha_bn);
        detail::expect_header(t, {"tl", "bn_tl", "value"});
        const auto m = detail::read_keyed(t, {detail::tl_col, detail::tl_col});
        for (auto a : kTechLevels)
            for (auto b : kTechLevels)
                base.alpha_bn[index(a)][index(b)] = detail::require(
                    t, m, {index(a), index(b)}, std::string(code(a)) + "," + std::string(code(b)));
    }
    if (o.wct) {
        const auto t = load_csv(*o.wct);
        detail::expect_header(t, {"tl", "value"});
        const auto m = detail::read_keyed(t, {detail::tl_col});
        for (auto tl : kTechLevels)
            base.wct_usd_per_ha[index(tl)] = detail::require(t, m, {index(tl)}, std::string(code(tl)));
    }
    if (o.wheat_yield.has_value() != o.soy2_yield.has_value())
        throw ConfigError("table_overrides: wheat_yield and soy2_yield must be given together");
    if (o.wheat_yield) {
        base.double_crop = DoubleCropYields{parse_tech_wgc_csv(load_csv(*o.wheat_yield)),
                                            parse_tech_wgc_csv(load_csv(*o.soy2_yield))};
    }

    const auto report = validate_tables(base);
    if (!report.empty()) {
        std::string msg = "parameter tables failed validation:";
        for (const auto& v : report) msg += "\n  " + v.table + "[" + v.key + "]: " + v.rule;
        throw ConfigError(msg);
    }
    return base;
}

/// Renders a crop cube in the override format, handy as a template for
/// alternate regions.
inline std::string crop_cube_csv(const CropCube& c) {
    std::string out = "lu,tl,wgc,value\n";
    for (auto lu : kLandUses)
        for (auto tl : kTechLevels)
            for (auto w : kWgcLevels)
                out += detail::cube_key(lu, tl, w) + "," + detail::fixed6(c[index(lu)][index(tl)][index(w)]) + "\n";
    return out;
}

}  // namespace agrodevs
