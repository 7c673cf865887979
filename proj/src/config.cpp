// SPDX-License-Identifier: Apache-2.0
#include "tricoil/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include <json.hpp>

#include "tricoil/error.hpp"

namespace tricoil {

using nlohmann::json;

namespace {

const std::set<std::string> kTopKeys{
    "tx",          "rx",          "rx_center",   "current_amplitude", "omega",        "z_r",
    "z_l",         "p0",          "frame_mode",  "formula_mode",      "output_dir",   "seed",
    "delta",       "max_iter",    "angles",      "strategies",        "alpha",        "deltas",
    "oracle_samples", "oracle_angles", "weight_grid", "dipole_trials"};

const std::set<std::string> kCoilKeys{"turns", "radius", "wire_resistance_per_meter"};

int line_of(std::string_view text, std::size_t byte)
{
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

double number(const json& j, const std::string& field)
{
    if (!j.is_number())
        throw ValidationError(field, "expected a number");
    return j.get<double>();
}

long long integer(const json& j, const std::string& field)
{
    if (!j.is_number_integer())
        throw ValidationError(field, "expected an integer");
    return j.get<long long>();
}

std::string string(const json& j, const std::string& field)
{
    if (!j.is_string())
        throw ValidationError(field, "expected a string");
    return j.get<std::string>();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& prefix)
{
    for (const auto& item : obj.items())
        if (!allowed.contains(item.key()))
            throw ValidationError(prefix + item.key(), "unknown key");
}

CoilConfig read_coil(const json& j, const std::string& name)
{
    if (!j.is_object())
        throw ValidationError(name, "expected an object");
    reject_unknown(j, kCoilKeys, name + ".");
    CoilConfig c;
    if (j.contains("turns"))
        c.turns = static_cast<int>(integer(j["turns"], name + ".turns"));
    if (j.contains("radius"))
        c.radius = number(j["radius"], name + ".radius");
    if (j.contains("wire_resistance_per_meter"))
        c.wire_resistance_per_meter =
            number(j["wire_resistance_per_meter"], name + ".wire_resistance_per_meter");
    return c;
}

json write_coil(const CoilConfig& c)
{
    return {{"turns", c.turns}, {"radius", c.radius}, {"wire_resistance_per_meter", c.wire_resistance_per_meter}};
}

void check_coil(const CoilConfig& c, const std::string& name)
{
    if (c.turns < 1)
        throw ValidationError(name + ".turns", "must be >= 1");
    if (!(c.radius > 0.0) || !std::isfinite(c.radius))
        throw ValidationError(name + ".radius", "must be positive");
    if (!(c.wire_resistance_per_meter >= 0.0) || !std::isfinite(c.wire_resistance_per_meter))
        throw ValidationError(name + ".wire_resistance_per_meter", "must be non-negative");
}

void check_positive(const std::optional<double>& v, const std::string& name)
{
    if (v && (!(*v > 0.0) || !std::isfinite(*v)))
        throw ValidationError(name, "must be positive");
}

template <class F>
auto as_field(const std::string& field, F&& parse)
{
    try {
        return parse();
    } catch (const InvalidArgument& e) {
        throw ValidationError(field, e.what());
    }
}

} // namespace

void ScenarioConfig::validate() const
{
    check_coil(tx, "tx");
    check_coil(rx, "rx");
    for (double c : rx_center)
        if (!std::isfinite(c))
            throw ValidationError("rx_center", "must be finite");
    if (rx_center[0] == 0.0 && rx_center[1] == 0.0 && rx_center[2] == 0.0)
        throw ValidationError("rx_center", "must differ from the transmitter at the origin");
    if (!(current_amplitude > 0.0) || !std::isfinite(current_amplitude))
        throw ValidationError("current_amplitude", "must be positive");
    check_positive(omega, "omega");
    check_positive(z_r, "z_r");
    check_positive(z_l, "z_l");
    check_positive(p0, "p0");
    if (!z_r && !(tx.wire_resistance_per_meter > 0.0))
        throw ValidationError("z_r", "defaults to the coil resistance, which is zero; set it explicitly");
    if (!(tx.wire_resistance_per_meter > 0.0))
        throw ValidationError("tx.wire_resistance_per_meter", "transmit coil resistance must be positive");
    if (!(delta > 0.0))
        throw ValidationError("delta", "must be positive");
    if (max_iter < 1)
        throw ValidationError("max_iter", "must be >= 1");
    if (angles < 2)
        throw ValidationError("angles", "must be >= 2");
    if (strategies.empty())
        throw ValidationError("strategies", "must not be empty");
    if (!std::isfinite(alpha))
        throw ValidationError("alpha", "must be finite");
    if (deltas.empty())
        throw ValidationError("deltas", "must not be empty");
    for (std::size_t k = 0; k < deltas.size(); ++k)
        if (!(deltas[k] > 0.0) || (k > 0 && deltas[k] < deltas[k - 1]))
            throw ValidationError("deltas", "must be positive and ascending");
    if (oracle_samples < 1)
        throw ValidationError("oracle_samples", "must be positive");
    if (oracle_angles < 2)
        throw ValidationError("oracle_angles", "must be >= 2");
    if (weight_grid < 1)
        throw ValidationError("weight_grid", "must be positive");
    if (dipole_trials < 1)
        throw ValidationError("dipole_trials", "must be positive");
}

Scenario ScenarioConfig::scenario() const
{
    validate();
    Scenario scn;
    scn.tx = CoilSpec(tx.turns, tx.radius, tx.wire_resistance_per_meter);
    scn.rx = CoilSpec(rx.turns, rx.radius, rx.wire_resistance_per_meter);
    scn.rx_center = {rx_center[0], rx_center[1], rx_center[2]};
    scn.current_amplitude = current_amplitude;
    scn.link = default_link_params(scn.tx, current_amplitude);
    if (omega)
        scn.link.omega = *omega;
    if (z_r)
        scn.link.z_r = *z_r;
    if (z_l)
        scn.link.z_l = *z_l;
    if (p0)
        scn.link.p0 = *p0;
    scn.frame_mode = frame_mode;
    scn.formula_mode = formula_mode;
    scn.max_iter = max_iter;
    return scn;
}

ScenarioConfig parse_config(std::string_view text)
{
    ScenarioConfig cfg;
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }))
        return cfg;

    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    if (!doc.is_object())
        throw ValidationError("<root>", "expected a JSON object");
    reject_unknown(doc, kTopKeys, "");

    auto opt_number = [&](const char* key, std::optional<double>& out) {
        if (doc.contains(key) && !doc[key].is_null())
            out = number(doc[key], key);
    };

    if (doc.contains("tx"))
        cfg.tx = read_coil(doc["tx"], "tx");
    if (doc.contains("rx"))
        cfg.rx = read_coil(doc["rx"], "rx");
    if (doc.contains("rx_center")) {
        const json& c = doc["rx_center"];
        if (!c.is_array() || c.size() != 3)
            throw ValidationError("rx_center", "expected an array of 3 numbers");
        for (int k = 0; k < 3; ++k)
            cfg.rx_center[k] = number(c[k], "rx_center");
    }
    if (doc.contains("current_amplitude"))
        cfg.current_amplitude = number(doc["current_amplitude"], "current_amplitude");
    opt_number("omega", cfg.omega);
    opt_number("z_r", cfg.z_r);
    opt_number("z_l", cfg.z_l);
    opt_number("p0", cfg.p0);
    if (doc.contains("frame_mode"))
        cfg.frame_mode = as_field("frame_mode", [&] {
            return frame_mode_from_string(string(doc["frame_mode"], "frame_mode"));
        });
    if (doc.contains("formula_mode"))
        cfg.formula_mode = as_field("formula_mode", [&] {
            return formula_mode_from_string(string(doc["formula_mode"], "formula_mode"));
        });
    if (doc.contains("output_dir"))
        cfg.output_dir = string(doc["output_dir"], "output_dir");
    if (doc.contains("seed")) {
        const json& s = doc["seed"];
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
            throw ValidationError("seed", "expected a non-negative integer");
        cfg.seed = s.get<std::uint64_t>();
    }
    if (doc.contains("delta"))
        cfg.delta = number(doc["delta"], "delta");
    if (doc.contains("max_iter"))
        cfg.max_iter = static_cast<int>(integer(doc["max_iter"], "max_iter"));
    if (doc.contains("angles"))
        cfg.angles = static_cast<int>(integer(doc["angles"], "angles"));
    if (doc.contains("strategies")) {
        const json& list = doc["strategies"];
        if (!list.is_array())
            throw ValidationError("strategies", "expected an array of strings");
        cfg.strategies.clear();
        for (const auto& s : list)
            cfg.strategies.push_back(
                as_field("strategies", [&] { return strategy_from_string(string(s, "strategies")); }));
    }
    if (doc.contains("alpha"))
        cfg.alpha = number(doc["alpha"], "alpha");
    if (doc.contains("deltas")) {
        const json& list = doc["deltas"];
        if (!list.is_array())
            throw ValidationError("deltas", "expected an array of numbers");
        cfg.deltas.clear();
        for (const auto& d : list)
            cfg.deltas.push_back(number(d, "deltas"));
    }
    if (doc.contains("oracle_samples"))
        cfg.oracle_samples = integer(doc["oracle_samples"], "oracle_samples");
    if (doc.contains("oracle_angles"))
        cfg.oracle_angles = static_cast<int>(integer(doc["oracle_angles"], "oracle_angles"));
    if (doc.contains("weight_grid"))
        cfg.weight_grid = static_cast<int>(integer(doc["weight_grid"], "weight_grid"));
    if (doc.contains("dipole_trials"))
        cfg.dipole_trials = static_cast<int>(integer(doc["dipole_trials"], "dipole_trials"));

    cfg.validate();
    return cfg;
}

std::string serialize_config(const ScenarioConfig& c)
{
    json doc;
    doc["tx"] = write_coil(c.tx);
    doc["rx"] = write_coil(c.rx);
    doc["rx_center"] = c.rx_center;
    doc["current_amplitude"] = c.current_amplitude;
    if (c.omega)
        doc["omega"] = *c.omega;
    if (c.z_r)
        doc["z_r"] = *c.z_r;
    if (c.z_l)
        doc["z_l"] = *c.z_l;
    if (c.p0)
        doc["p0"] = *c.p0;
    doc["frame_mode"] = std::string(to_string(c.frame_mode));
    doc["formula_mode"] = std::string(to_string(c.formula_mode));
    doc["output_dir"] = c.output_dir;
    doc["seed"] = c.seed;
    doc["delta"] = c.delta;
    doc["max_iter"] = c.max_iter;
    doc["angles"] = c.angles;
    json strategies = json::array();
    for (Strategy s : c.strategies)
        strategies.push_back(std::string(to_string(s)));
    doc["strategies"] = strategies;
    doc["alpha"] = c.alpha;
    doc["deltas"] = c.deltas;
    doc["oracle_samples"] = c.oracle_samples;
    doc["oracle_angles"] = c.oracle_angles;
    doc["weight_grid"] = c.weight_grid;
    doc["dipole_trials"] = c.dipole_trials;
    return doc.dump(2) + "\n";
}

} // namespace tricoil
