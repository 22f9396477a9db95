#pragma once

// JSON scenario files. Every key is optional; unset keys keep the value of
// the preset named by "preset" (or the library defaults). Example:
//
//   {
//     "preset": "longterm",
//     "seed": 7,
//     "owner_share_pct": 90,
//     "climate": {"regime": "explicit", "sequence_file": "pergamino.wgc"},
//     "rent": {"usd_per_ha": 443.2},
//     "prices": {"S": 300},
//     "table_overrides": {"yield": "yield.csv"}
//   }
//
// Relative file paths resolve against the directory of the config file.

#include <agrodevs/climate.hpp>
#include <agrodevs/config.hpp>
#include <agrodevs/detail/csv.hpp>

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <algorithm>
#include <string>

namespace agrodevs {

/// Regime from its short name; "explicit" and "alternating" come back
/// without sequences.
inline std::optional<ClimateRegime> regime_from_name(std::string_view name) {
    if (name == "constant-unfavorable") return climate::ConstantUnfavorable{};
    if (name == "constant-average") return climate::ConstantAverage{};
    if (name == "constant-favorable") return climate::ConstantFavorable{};
    if (name == "seesaw") return climate::SeeSaw{};
    if (name == "random") return climate::RandomUniform{};
    if (name == "explicit") return climate::ExplicitSequence{};
    if (name == "alternating") return climate::AlternatingMix{};
    return std::nullopt;
}

namespace detail {

class ConfigReader {
public:
    ConfigReader(std::string_view text, std::string source, std::filesystem::path base_dir)
        : text_(text), source_(std::move(source)), base_dir_(std::move(base_dir)) {}

    [[noreturn]] void fail(std::string_view key, const std::string& what) const {
        throw ConfigError(source_ + ":" + std::to_string(line_of(key)) + ": " + what);
    }

    /// 1-based line of the first occurrence of "key" in the raw text.
    std::size_t line_of(std::string_view key) const {
        if (key.empty()) return 1;
        const std::string quoted = "\"" + std::string(key) + "\"";
        const auto pos = text_.find(quoted);
        if (pos == std::string_view::npos) return 1;
        return 1 + static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + pos, '\n'));
    }

    void allow_keys(const nlohmann::json& obj, std::string_view where, std::initializer_list<std::string_view> keys) const {
        if (!obj.is_object()) fail(where, "'" + std::string(where) + "' must be an object");
        for (const auto& [k, v] : obj.items()) {
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
                std::string known;
                for (auto k2 : keys) known += (known.empty() ? "" : ", ") + std::string(k2);
                fail(k, "unknown key '" + k + "' in " + std::string(where) + " (known: " + known + ")");
            }
        }
    }

    double number(const nlohmann::json& v, std::string_view key) const {
        if (!v.is_number()) fail(key, "'" + std::string(key) + "' must be a number");
        return v.get<double>();
    }

    std::size_t positive_int(const nlohmann::json& v, std::string_view key) const {
        if (!v.is_number_integer() || v.get<long long>() <= 0) fail(key, "'" + std::string(key) + "' must be a positive integer");
        return v.get<std::size_t>();
    }

    std::string string(const nlohmann::json& v, std::string_view key) const {
        if (!v.is_string()) fail(key, "'" + std::string(key) + "' must be a string");
        return v.get<std::string>();
    }

    std::string path(const nlohmann::json& v, std::string_view key) const {
        std::filesystem::path p = string(v, key);
        if (p.is_relative()) p = base_dir_ / p;
        return p.lexically_normal().string();
    }

    Wgc wgc(const nlohmann::json& v, std::string_view key) const {
        const auto s = string(v, key);
        auto w = parse_wgc(s);
        if (!w) fail(key, "unknown weather code '" + s + "' (expected VU, U, A, F or VF)");
        return *w;
    }

    std::vector<Wgc> wgc_list(const nlohmann::json& obj, std::string_view inline_key, std::string_view file_key) const {
        const bool has_inline = obj.contains(inline_key);
        const bool has_file = obj.contains(file_key);
        if (has_inline && has_file)
            fail(inline_key, "give either '" + std::string(inline_key) + "' or '" + std::string(file_key) + "', not both");
        if (has_file) return load_wgc_sequence(path(obj.at(std::string(file_key)), file_key));
        if (!has_inline) return {};
        const auto& arr = obj.at(std::string(inline_key));
        if (!arr.is_array()) fail(inline_key, "'" + std::string(inline_key) + "' must be an array of weather codes");
        std::vector<Wgc> out;
        for (const auto& e : arr) out.push_back(wgc(e, inline_key));
        return out;
    }

    template <class Enum, std::size_t N>
    std::array<double, N> shares(const nlohmann::json& obj, std::string_view key, std::array<double, N> current,
                                 const std::array<Enum, N>& levels) const {
        if (!obj.is_object()) fail(key, "'" + std::string(key) + "' must be an object");
        for (const auto& [k, v] : obj.items()) {
            bool found = false;
            for (auto e : levels)
                if (code(e) == k) {
                    current[index(e)] = number(v, k);
                    found = true;
                }
            if (!found) fail(k, "unknown key '" + k + "' in " + std::string(key));
        }
        return current;
    }

private:
    std::string_view text_;
    std::string source_;
    std::filesystem::path base_dir_;
};

inline ClimateRegime parse_regime_name(const ConfigReader& r, std::string_view key, const std::string& name) {
    if (auto regime = regime_from_name(name)) return *regime;
    r.fail(key, "unknown climate regime '" + name +
                    "' (expected constant-unfavorable, constant-average, constant-favorable, seesaw, random, "
                    "explicit or alternating)");
}

}  // namespace detail

/// Parses a config document. When the climate is an explicit sequence and
/// "cycles" is not given, the run length is the sequence length.
inline ScenarioConfig parse_config_text(std::string_view text, const std::string& source,
                                        const std::filesystem::path& base_dir = ".") {
    detail::ConfigReader r(text, source, base_dir);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        throw ConfigError(source + ":" + std::to_string(line) + ": malformed JSON: " + e.what());
    }
    r.allow_keys(doc, "config",
                 {"preset", "grid_rows", "grid_cols", "cycles", "seed", "owner_share_pct", "climate",
                  "initial_cover_pct", "initial_tl_pct", "allocation_scheme", "initial_al_factor", "et_pct", "rent",
                  "prices", "table_overrides", "pricing_mode"});

    ScenarioConfig c;
    if (doc.contains("preset")) {
        const auto name = r.string(doc["preset"], "preset");
        auto p = preset(name);
        if (!p) r.fail("preset", "unknown preset '" + name + "' (expected pergamino-1988 or longterm)");
        c = *p;
    }
    if (doc.contains("grid_rows")) c.grid_rows = r.positive_int(doc["grid_rows"], "grid_rows");
    if (doc.contains("grid_cols")) c.grid_cols = r.positive_int(doc["grid_cols"], "grid_cols");
    const bool cycles_given = doc.contains("cycles");
    if (cycles_given) c.cycles = r.positive_int(doc["cycles"], "cycles");
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned() && !(doc["seed"].is_number_integer() && doc["seed"].get<long long>() >= 0))
            r.fail("seed", "'seed' must be a non-negative integer");
        c.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("owner_share_pct")) c.owner_share_pct = r.number(doc["owner_share_pct"], "owner_share_pct");

    if (doc.contains("climate")) {
        const auto& cl = doc["climate"];
        if (cl.is_string()) {
            c.climate = detail::parse_regime_name(r, "climate", cl.get<std::string>());
            if (std::holds_alternative<climate::ExplicitSequence>(c.climate) ||
                std::holds_alternative<climate::AlternatingMix>(c.climate))
                r.fail("climate", "regime '" + cl.get<std::string>() + "' needs an object with a sequence");
        } else {
            r.allow_keys(cl, "climate", {"regime", "sequence", "sequence_file", "historical", "historical_file", "fixed"});
            if (!cl.contains("regime")) r.fail("climate", "climate object needs a 'regime'");
            c.climate = detail::parse_regime_name(r, "regime", r.string(cl["regime"], "regime"));
            if (auto* seq = std::get_if<climate::ExplicitSequence>(&c.climate)) {
                seq->levels = r.wgc_list(cl, "sequence", "sequence_file");
                if (seq->levels.empty()) r.fail("regime", "climate regime 'explicit' requires a non-empty weather sequence");
                if (!cycles_given) c.cycles = seq->levels.size();
            } else if (auto* mix = std::get_if<climate::AlternatingMix>(&c.climate)) {
                mix->historical = r.wgc_list(cl, "historical", "historical_file");
                if (mix->historical.empty()) r.fail("regime", "climate regime 'alternating' requires a historical sequence");
                if (!cl.contains("fixed")) r.fail("regime", "climate regime 'alternating' requires a 'fixed' level");
                mix->fixed = r.wgc(cl["fixed"], "fixed");
                if (!cycles_given) c.cycles = mix->historical.size();
            } else {
                for (auto k : {"sequence", "sequence_file", "historical", "historical_file", "fixed"})
                    if (cl.contains(k)) r.fail(k, "'" + std::string(k) + "' is only valid for explicit or alternating regimes");
            }
        }
    }

    if (doc.contains("initial_cover_pct"))
        c.initial_cover_pct = r.shares(doc["initial_cover_pct"], "initial_cover_pct", c.initial_cover_pct, kLandUses);
    if (doc.contains("initial_tl_pct"))
        c.initial_tl_pct = r.shares(doc["initial_tl_pct"], "initial_tl_pct", c.initial_tl_pct, kTechLevels);
    if (doc.contains("allocation_scheme")) {
        const auto s = r.string(doc["allocation_scheme"], "allocation_scheme");
        if (s == "random") c.allocation = AllocationScheme::Random;
        else if (s == "uniform") c.allocation = AllocationScheme::Uniform;
        else r.fail("allocation_scheme", "unknown allocation_scheme '" + s + "' (expected random or uniform)");
    }
    if (doc.contains("initial_al_factor")) c.initial_al_factor = r.number(doc["initial_al_factor"], "initial_al_factor");
    if (doc.contains("et_pct")) c.et_pct = r.number(doc["et_pct"], "et_pct");
    if (doc.contains("rent")) {
        const auto& rent = doc["rent"];
        r.allow_keys(rent, "rent", {"soy_tons", "usd_per_ha"});
        if (rent.size() != 1) r.fail("rent", "'rent' needs exactly one of soy_tons or usd_per_ha");
        if (rent.contains("soy_tons")) c.rent = RentSoyTons{r.number(rent["soy_tons"], "soy_tons")};
        else c.rent = RentUsd{r.number(rent["usd_per_ha"], "usd_per_ha")};
    }
    if (doc.contains("prices")) {
        auto base = c.prices.value_or(pergamino_tables().price_usd_per_t);
        c.prices = r.shares(doc["prices"], "prices", base, kLandUses);
    }
    if (doc.contains("table_overrides")) {
        const auto& o = doc["table_overrides"];
        r.allow_keys(o, "table_overrides",
                     {"yield", "cost", "renewability", "price", "alpha_wgc", "alpha_bn", "wct", "wheat_yield",
                      "soy2_yield"});
        auto opt = [&](const char* k) -> std::optional<std::string> {
            if (!o.contains(k)) return std::nullopt;
            return r.path(o[k], k);
        };
        c.table_overrides = {opt("yield"),    opt("cost"), opt("renewability"), opt("price"),     opt("alpha_wgc"),
                             opt("alpha_bn"), opt("wct"),  opt("wheat_yield"),  opt("soy2_yield")};
    }
    if (doc.contains("pricing_mode")) {
        const auto s = r.string(doc["pricing_mode"], "pricing_mode");
        if (s == "combined") c.pricing_mode = PricingMode::Combined;
        else if (s == "split") c.pricing_mode = PricingMode::Split;
        else r.fail("pricing_mode", "unknown pricing_mode '" + s + "' (expected combined or split)");
    }

    if (!detail::shares_sum_to_100(c.initial_cover_pct))
        r.fail("initial_cover_pct", "initial_cover_pct must be non-negative and sum to 100");
    if (!detail::shares_sum_to_100(c.initial_tl_pct))
        r.fail("initial_tl_pct", "initial_tl_pct must be non-negative and sum to 100");
    return c;
}

inline ScenarioConfig parse_config(const std::string& path) {
    const auto text = detail::read_file(path);
    return parse_config_text(text, path, std::filesystem::path(path).parent_path());
}

/// Tables for a scenario: the embedded dataset with the scenario's overrides.
inline ParameterTables resolve_tables(const ScenarioConfig& c) {
    if (c.table_overrides.empty()) return pergamino_tables();
    return apply_overrides(pergamino_tables(), c.table_overrides);
}

}  // namespace agrodevs
