#pragma once

#include <cstdint>
#include <string>

#include "pdfade/fading.hpp"
#include "pdfade/rng.hpp"

namespace pdfade::outage {

enum class ApproxMethod { Approx1, Approx2, Approx3, Approx4, MonteCarlo };

std::string to_string(ApproxMethod method);
ApproxMethod parse_method(const std::string& name);

struct OutageEstimate {
    double p_e = 0;
    ApproxMethod method = ApproxMethod::Approx4;
    long mc_trials = 0;     // 0 for closed-form methods
    double mc_std_err = 0;  // sqrt(p_e (1-p_e) / trials) for Monte Carlo
};

// The four Gaussian approximations of the packet-erasure probability, with
// x = k/(rc l_f), c = 2(1+epsilon):
//
//   Approx1: Phi[ sqrt(x) (c rc - mu) / sqrt(Var) ]        (no floor, no last fade)
//   Approx2: Phi[ (c k/l_f - floor(x) mu) / sqrt(floor(x) Var) ]
//   Approx3: Approx1's value, admissible only when x is an integer
//   Approx4: Phi[ (c k/l_f - x mu) / sqrt(Var (floor(x) + frac(x)^2)) ]
OutageEstimate pe_approx1(const fading::SystemParams& params, double rc,
                          const fading::FadingStats& stats);
OutageEstimate pe_approx2(const fading::SystemParams& params, double rc,
                          const fading::FadingStats& stats);
OutageEstimate pe_approx3(const fading::SystemParams& params, double rc,
                          const fading::FadingStats& stats);
OutageEstimate pe_approx4(const fading::SystemParams& params, double rc,
                          const fading::FadingStats& stats);

// One draw of the rearranged outage event
//   sum_{i=1}^{floor(x)} W_i + frac(x) W_last < c k / l_f,   W = log(1+gamma).
// Consumes exactly one uniform per fade, in the same order as
// sample_weighted_avg_mi, so the two event formulations can be compared
// draw for draw on a shared stream.
bool outage_event(const fading::SystemParams& params, double rc, rng::Stream& stream);

// Empirical frequency of the event above. Trials are split into fixed-size
// blocks, each with a stream derived from (seed, block index); the counts are
// merged in block order, so the estimate does not depend on how blocks get
// scheduled across threads.
OutageEstimate pe_monte_carlo(const fading::SystemParams& params, double rc,
                              long trials, std::uint64_t seed);

}  // namespace pdfade::outage
