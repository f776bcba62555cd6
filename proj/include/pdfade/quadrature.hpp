#pragma once

#include <functional>

namespace pdfade::special {

struct QuadratureSettings {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 200;
};

// Globally adaptive Gauss-Kronrod 7/15 integration of f over the finite
// interval [a, b]. The segment with the largest error estimate is bisected
// until  sum(err) <= max(abs_tol, rel_tol * |I|)  or the subdivision budget
// runs out (numeric_error).
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSettings& settings = {});

}  // namespace pdfade::special
