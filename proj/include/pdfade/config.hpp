#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdfade/fading.hpp"
#include "pdfade/outage.hpp"
#include "pdfade/quadrature.hpp"

namespace pdfade::cli {

// One fully validated run request. Built by parse_config from a flat
// key = value document plus the command name; CLI flags may override
// individual fields afterwards.
struct RunConfig {
    std::string command;  // point | optimize | sweep-rate | sweep-power | trajectory | validate-mc

    fading::SystemParams params;  // params.P is linear, converted from P_dB
    double P_dB = 0;

    outage::ApproxMethod method = outage::ApproxMethod::Approx4;

    double rc = 0;        // point only
    bool has_rc = false;

    std::vector<double> t_values;    // explicit T list ...
    double rate_start = 0;           // ... or a geometric overall-rate range
    double rate_stop = 0;
    int rate_points = 0;
    bool has_rate_range = false;

    std::vector<double> p_db_values;  // sweep-power
    double re_fixed = 0;              // trajectory
    bool has_re_fixed = false;

    long trials = 1000000;
    std::uint64_t seed = 1;

    std::string out_path;  // empty -> CSV to stdout

    special::QuadratureSettings quad;

    std::vector<std::string> warnings;  // from SystemParams validation
};

// Parses the config document for the given command. Unknown keys, missing
// required keys, type mismatches and invariant violations all raise
// config_error naming the offending key.
RunConfig parse_config(const std::string& text, const std::string& command);

// Convenience: read the file and parse it (io_error on read failure).
RunConfig parse_config_file(const std::string& path, const std::string& command);

}  // namespace pdfade::cli
