#pragma once

#include <stdexcept>
#include <string>

namespace pdfade {

// Argument outside a function's mathematical domain (P <= 0, NaN input, ...).
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Violation of a system or grid constraint: rate bounds, packet-count
// integrality, m_hat * l_f <= T, empty search grid.
struct constraint_error : std::invalid_argument {
    explicit constraint_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numeric failure: quadrature did not converge, or a computed quantity is
// inconsistent (negative variance).
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or invalid run configuration.
struct config_error : std::invalid_argument {
    explicit config_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// File read/write failure.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pdfade
