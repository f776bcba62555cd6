#include "pdfade/special.hpp"

#include <cmath>
#include <numbers>

#include "pdfade/errors.hpp"

namespace pdfade::special {

namespace {

constexpr double kInvSqrt2 = 0.5 * std::numbers::sqrt2;

// Truncation length for the exponential tail: the discarded mass is below
// e^-70 ~ 4e-31 of the kept integral, far under any supported tolerance.
constexpr double kTailCut = 70.0;

void check_snr(double p) {
    if (!(p > 0) || !std::isfinite(p))
        throw domain_error("average SNR P must be positive and finite");
}

}  // namespace

// alpha_scaled(P) = int_{lo}^{lo+cut} e^{lo-t}/t dt  with lo = 1/P; this is
// e^{1/P} alpha(P) evaluated without the overflowing prefactor.
double alpha_scaled(double p, const QuadratureSettings& quad) {
    check_snr(p);
    const double lo = 1.0 / p;
    return integrate([lo](double t) { return std::exp(lo - t) / t; },
                     lo, lo + kTailCut, quad);
}

// beta_scaled(P) = int_{lo}^{lo+cut} log(t) e^{lo-t}/t dt. The integrand
// changes sign at t = 1, so the interval is split there whenever lo < 1.
double beta_scaled(double p, const QuadratureSettings& quad) {
    check_snr(p);
    const double lo = 1.0 / p;
    auto f = [lo](double t) { return std::log(t) * std::exp(lo - t) / t; };
    const double hi = lo + kTailCut;
    if (lo < 1.0)
        return integrate(f, lo, 1.0, quad) + integrate(f, 1.0, hi, quad);
    return integrate(f, lo, hi, quad);
}

double alpha(double p, const QuadratureSettings& quad) {
    const double scaled = alpha_scaled(p, quad);
    // exp(-1/P) underflows to 0 for tiny P, which is also alpha's limit
    return std::exp(-1.0 / p) * scaled;
}

double beta(double p, const QuadratureSettings& quad) {
    const double scaled = beta_scaled(p, quad);
    return std::exp(-1.0 / p) * scaled;
}

double normal_cdf(double x) {
    if (std::isnan(x)) throw domain_error("normal_cdf: NaN argument");
    return 0.5 * std::erfc(-x * kInvSqrt2);
}

namespace {

// sqrt(pi) e^{z^2} erfc(z) as the continued fraction
//   1 / (z + (1/2)/(z + 1/(z + (3/2)/(z + 2/(z + ...)))))
// evaluated with the modified Lentz method; fast and accurate in the
// z >= 5.6 regime it is used for.
double erfcx_cf_scaled(double z) {
    const double tiny = 1e-300;
    double f = z, c = z, d = 0.0;
    for (int nn = 1; nn < 200; ++nn) {
        const double a = 0.5 * nn;
        d = z + a * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = z + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 / f;
}

}  // namespace

double log_normal_cdf(double x) {
    if (std::isnan(x)) throw domain_error("log_normal_cdf: NaN argument");
    if (x >= 8.0) {
        // Phi(-x) is tiny; log(1 - tiny) via log1p
        return std::log1p(-0.5 * std::erfc(x * kInvSqrt2));
    }
    if (x > -8.0) {
        return std::log(0.5 * std::erfc(-x * kInvSqrt2));
    }
    // deep left tail: Phi(x) = (1/2) erfc(z) = e^{-z^2}/(2 sqrt(pi)) * CF(z)
    const double z = -x * kInvSqrt2;
    return -z * z +
           std::log(0.5 / std::sqrt(std::numbers::pi) * erfcx_cf_scaled(z));
}

}  // namespace pdfade::special
