#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "pdfade/quadrature.hpp"

namespace pdfade::fading {

// All fixed inputs of the problem. Power P is linear here; the CLI converts
// from dB. The decoding margin epsilon enters only through c = 2(1+epsilon).
struct SystemParams {
    int m = 0;          // message packets
    int m_hat = 0;      // packets the erasure decoder needs (>= m)
    double k = 0;       // nats per packet
    double l_f = 0;     // fade length, channel uses
    double T = 0;       // total channel uses
    double P = 0;       // average SNR, linear
    double epsilon = 0; // decoding margin

    double c() const { return 2.0 * (1.0 + epsilon); }

    // Throws domain_error/constraint_error on invariant violations; returns
    // human-readable warnings (l_f not << T) for the caller to surface.
    std::vector<std::string> validate() const;
};

// One candidate operating point: n = m/R_E = R_C T / k transmitted packets.
struct RateSplit {
    double rc = 0;
    double re = 0;
    long n = 0;
};

// Mean and variance of log(1+gamma), gamma ~ Exponential(1/P).
struct FadingStats {
    double mu = 0;
    double var = 0;
    double P = 0;
};

// Decomposition of x = k/(R_C l_f) fades: floor(x) full fades plus one
// fractionally weighted fade when x is not an integer.
struct FadeProfile {
    long full_fades = 0;
    long total_fades = 0;
    double fractional_weight = 0;
};

// Relative tolerance for snapping a nearly integral fade count or packet
// count to the integer it provably is (rc values are formed as n*k/T, so the
// ratios are integers up to rounding).
inline constexpr double kIntegerSnap = 1e-9;

// mu(P) = e^{1/P} alpha(P)
// Var(P) = 2 e^{1/P} beta(P) + 2 e^{1/P} log(P) alpha(P) - e^{2/P} alpha(P)^2
double mutual_info(double gamma);
FadingStats fading_stats(double p, const special::QuadratureSettings& quad = {});
FadeProfile fade_profile(const SystemParams& params, double rc);

// Admissible range k*m_hat/T <= rc <= k/l_f with snap slack; throws
// constraint_error outside it.
void check_rc(const SystemParams& params, double rc);

// One draw of gamma ~ Exponential(1/P) via inverse CDF; u in (0,1] keeps the
// result finite and makes gamma = 0 attainable.
template <class U01>
double draw_snr(double p, U01& stream) {
    return -p * std::log(stream.next_u01());
}

// One sample of the weighted average mutual information
//   W = (1/x) [ sum_{i=1}^{floor(x)} C(gamma_i) + (x - floor(x)) C(gamma_last) ],
// x = k/(rc l_f), C(g) = (1/2) log(1+g). Draws full fades first, then the
// fractional fade (nothing is drawn for it when the weight is zero).
template <class U01>
double sample_weighted_avg_mi(const SystemParams& params, double rc, U01& stream) {
    const FadeProfile prof = fade_profile(params, rc);
    const double x = params.k / (rc * params.l_f);
    double sum = 0;
    for (long i = 0; i < prof.full_fades; ++i)
        sum += mutual_info(draw_snr(params.P, stream));
    if (prof.fractional_weight > 0)
        sum += prof.fractional_weight * mutual_info(draw_snr(params.P, stream));
    return sum / x;
}

}  // namespace pdfade::fading
