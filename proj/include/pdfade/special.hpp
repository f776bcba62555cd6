#pragma once

#include "pdfade/quadrature.hpp"

namespace pdfade::special {

// alpha(P) = int_{1/P}^inf e^-t / t dt          (the exponential integral E1(1/P))
// beta(P)  = int_{1/P}^inf log(t) e^-t / t dt   (sign change at t = 1)
//
// Both are evaluated by adaptive quadrature on a truncated interval; see the
// scaled variants below for how the e^{1/P} prefactors of the fading moments
// are cancelled analytically.
double alpha(double p, const QuadratureSettings& quad = {});
double beta(double p, const QuadratureSettings& quad = {});

// e^{1/P} * alpha(P) and e^{1/P} * beta(P), computed without forming e^{1/P}
// (which overflows for P < ~1/700). These are what the moment formulas
// actually consume.
double alpha_scaled(double p, const QuadratureSettings& quad = {});
double beta_scaled(double p, const QuadratureSettings& quad = {});

// Standard normal CDF. NaN input is a domain_error; +-inf give the limits.
double normal_cdf(double x);

// log Phi(x), natural log, finite and accurate far below the underflow point
// of Phi itself (continued-fraction tail for x <= -8).
double log_normal_cdf(double x);

}  // namespace pdfade::special
