#pragma once

#include <ostream>

#include "pdfade/config.hpp"

namespace pdfade::cli {

// Executes the configured command: writes CSV (to config.out_path, or to
// `fallback_csv` when the path is empty) and a one-line summary to `summary`.
// Returns the process exit status: 0 on success, 1 when validate-mc finds a
// deviation beyond its bound. Compute/config errors propagate as exceptions
// for main() to report.
int run(const RunConfig& config, std::ostream& summary, std::ostream& fallback_csv);

}  // namespace pdfade::cli
