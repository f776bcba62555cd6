#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "pdfade/fading.hpp"
#include "pdfade/rng.hpp"

namespace pdfade::validation {

// One frozen reference number: how it was produced, and how closely the
// library must reproduce it. tol_kind is "abs" or "rel".
struct GoldenRecord {
    std::string scenario;
    std::string inputs;
    double expected = 0;
    double tolerance = 0;
    std::string tol_kind;
    std::string provenance;
};

std::vector<GoldenRecord> load_golden_csv(const std::string& path);

// Empirical mean/variance of log(1+gamma) with standard errors, for
// cross-checking the quadrature moments. se_var uses the fourth central
// moment: SE(s^2) ~= sqrt((m4 - m2^2) / samples).
struct MomentEstimate {
    double mean = 0;
    double var = 0;
    double se_mean = 0;
    double se_var = 0;
    long samples = 0;
};

// Single pass over the stream with running central sums (Welford extended
// through the fourth moment).
template <class U01>
MomentEstimate oracle_moments_stream(double p, long samples, U01& stream) {
    double mean = 0, s2 = 0, s3 = 0, s4 = 0;
    for (long i = 1; i <= samples; ++i) {
        const double w = std::log1p(fading::draw_snr(p, stream));
        const double delta = w - mean;
        const double dn = delta / static_cast<double>(i);
        const double dn2 = dn * dn;
        const double term = delta * dn * static_cast<double>(i - 1);
        mean += dn;
        s4 += term * dn2 * static_cast<double>(i * i - 3 * i + 3) + 6.0 * dn2 * s2 -
              4.0 * dn * s3;
        s3 += term * dn * static_cast<double>(i - 2) - 3.0 * dn * s2;
        s2 += term;
    }
    MomentEstimate est;
    est.samples = samples;
    est.mean = mean;
    const double nd = static_cast<double>(samples);
    est.var = samples > 1 ? s2 / (nd - 1.0) : 0.0;
    est.se_mean = samples > 1 ? std::sqrt(est.var / nd) : 0.0;
    const double m2 = s2 / nd;
    const double m4 = s4 / nd;
    const double var_of_s2 = (m4 - m2 * m2) / nd;
    est.se_var = var_of_s2 > 0 ? std::sqrt(var_of_s2) : 0.0;
    return est;
}

MomentEstimate oracle_moments(double p, long samples, std::uint64_t seed);

// Exact q by enumerating all 2^n success patterns (n <= 20); the independent
// oracle for q_binomial.
double oracle_q_exhaustive(int n, int m_hat, double p_e);

}  // namespace pdfade::validation
