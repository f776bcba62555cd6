#include "pdfade/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pdfade/errors.hpp"
#include "pdfade/optimizer.hpp"

namespace pdfade::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// key -> value, duplicate keys rejected
std::map<std::string, std::string> parse_pairs(const std::string& text) {
    std::map<std::string, std::string> pairs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) +
                               ": expected 'key = value', got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw config_error("config line " + std::to_string(lineno) +
                               ": empty key");
        if (pairs.count(key))
            throw config_error("duplicate key '" + key + "'");
        pairs[key] = value;
    }
    return pairs;
}

double to_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double parsed = 0;
    try {
        parsed = std::stod(value, &used);
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': expected a number, got '" + value + "'");
    }
    if (used != value.size())
        throw config_error("key '" + key + "': expected a number, got '" + value + "'");
    return parsed;
}

long to_long(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long parsed = 0;
    try {
        parsed = std::stol(value, &used);
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': expected an integer, got '" + value + "'");
    }
    if (used != value.size())
        throw config_error("key '" + key + "': expected an integer, got '" + value + "'");
    return parsed;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    unsigned long long parsed = 0;
    try {
        parsed = std::stoull(value, &used);
    } catch (const std::exception&) {
        throw config_error("key '" + key +
                           "': expected an unsigned integer, got '" + value + "'");
    }
    if (used != value.size() || value.find('-') != std::string::npos)
        throw config_error("key '" + key +
                           "': expected an unsigned integer, got '" + value + "'");
    return parsed;
}

std::vector<double> to_double_list(const std::string& key, const std::string& value) {
    std::vector<double> items;
    std::string part;
    std::istringstream in(value);
    while (std::getline(in, part, ',')) {
        const std::string item = trim(part);
        if (item.empty())
            throw config_error("key '" + key + "': empty list element");
        items.push_back(to_double(key, item));
    }
    if (items.empty())
        throw config_error("key '" + key + "': expected a comma-separated list");
    return items;
}

const std::set<std::string> kCommands = {"point",      "optimize",  "sweep-rate",
                                         "sweep-power", "trajectory", "validate-mc"};

const std::set<std::string> kKnownKeys = {
    "m",          "m_hat",      "k",           "l_f",        "T",
    "P_dB",       "epsilon",    "method",      "rc",         "t_values",
    "rate_start", "rate_stop",  "rate_points", "p_db_values", "re_fixed",
    "trials",     "seed",       "out",         "quad_abs_tol", "quad_rel_tol",
    "quad_max_subdivisions"};

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& command) {
    if (!kCommands.count(command))
        throw config_error(
            "unknown command '" + command +
            "' (expected point, optimize, sweep-rate, sweep-power, trajectory "
            "or validate-mc)");

    const auto pairs = parse_pairs(text);
    for (const auto& [key, value] : pairs)
        if (!kKnownKeys.count(key))
            throw config_error("unknown key '" + key + "'");

    auto required = [&](const std::string& key) -> const std::string& {
        const auto it = pairs.find(key);
        if (it == pairs.end())
            throw config_error("missing required key '" + key + "' for command '" +
                               command + "'");
        return it->second;
    };
    auto optional = [&](const std::string& key) {
        return pairs.find(key) != pairs.end();
    };

    RunConfig config;
    config.command = command;
    config.params.m = static_cast<int>(to_long("m", required("m")));
    config.params.m_hat = static_cast<int>(to_long("m_hat", required("m_hat")));
    config.params.k = to_double("k", required("k"));
    config.params.l_f = to_double("l_f", required("l_f"));
    config.P_dB = to_double("P_dB", required("P_dB"));
    config.params.P = std::pow(10.0, config.P_dB / 10.0);
    config.params.epsilon =
        optional("epsilon") ? to_double("epsilon", pairs.at("epsilon")) : 0.05;

    if (optional("method"))
        config.method = outage::parse_method(pairs.at("method"));
    if (optional("trials")) {
        config.trials = to_long("trials", pairs.at("trials"));
        if (config.trials < 1) throw config_error("key 'trials': must be >= 1");
    }
    if (optional("seed")) config.seed = to_u64("seed", pairs.at("seed"));
    if (optional("out")) config.out_path = pairs.at("out");
    if (optional("quad_abs_tol")) {
        config.quad.abs_tol = to_double("quad_abs_tol", pairs.at("quad_abs_tol"));
        if (!(config.quad.abs_tol > 0))
            throw config_error("key 'quad_abs_tol': must be positive");
    }
    if (optional("quad_rel_tol")) {
        config.quad.rel_tol = to_double("quad_rel_tol", pairs.at("quad_rel_tol"));
        if (!(config.quad.rel_tol > 0))
            throw config_error("key 'quad_rel_tol': must be positive");
    }
    if (optional("quad_max_subdivisions")) {
        config.quad.max_subdivisions = static_cast<int>(
            to_long("quad_max_subdivisions", pairs.at("quad_max_subdivisions")));
        if (config.quad.max_subdivisions < 1)
            throw config_error("key 'quad_max_subdivisions': must be >= 1");
    }

    const bool needs_t =
        command == "point" || command == "optimize" || command == "validate-mc";
    const bool is_sweep = command == "sweep-rate" || command == "sweep-power" ||
                          command == "trajectory";

    if (needs_t) config.params.T = to_double("T", required("T"));

    if (command == "point") {
        config.rc = to_double("rc", required("rc"));
        config.has_rc = true;
    }
    if (command == "trajectory") {
        config.re_fixed = to_double("re_fixed", required("re_fixed"));
        config.has_re_fixed = true;
    }
    if (command == "sweep-power")
        config.p_db_values = to_double_list("p_db_values", required("p_db_values"));

    if (is_sweep) {
        const bool has_list = optional("t_values");
        const bool has_range = optional("rate_start") || optional("rate_stop") ||
                               optional("rate_points");
        if (has_list && has_range)
            throw config_error(
                "give either 't_values' or the rate range keys, not both");
        if (has_list) {
            config.t_values = to_double_list("t_values", pairs.at("t_values"));
        } else if (has_range) {
            config.rate_start = to_double("rate_start", required("rate_start"));
            config.rate_stop = to_double("rate_stop", required("rate_stop"));
            config.rate_points =
                static_cast<int>(to_long("rate_points", required("rate_points")));
            if (!(config.rate_start >= config.rate_stop) ||
                !(config.rate_stop > 0))
                throw config_error(
                    "rate range: need rate_start >= rate_stop > 0");
            if (config.rate_points < 2)
                throw config_error("key 'rate_points': must be >= 2");
            config.has_rate_range = true;
        } else {
            throw config_error("command '" + command +
                               "' needs 't_values' or a rate range "
                               "(rate_start, rate_stop, rate_points)");
        }
    }

    // SystemParams invariants checked now so a bad document fails fast. For
    // sweeps T varies per row; validate the template against the largest T of
    // the schedule (each row re-checks its own T).
    if (is_sweep) {
        double t_max = 0;
        if (!config.t_values.empty())
            t_max = *std::max_element(config.t_values.begin(), config.t_values.end());
        else
            t_max = config.params.m * config.params.k / config.rate_stop;
        fading::SystemParams probe = config.params;
        probe.T = t_max;
        config.warnings = probe.validate();
    } else {
        config.warnings = config.params.validate();
    }
    return config;
}

RunConfig parse_config_file(const std::string& path, const std::string& command) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), command);
}

}  // namespace pdfade::cli
