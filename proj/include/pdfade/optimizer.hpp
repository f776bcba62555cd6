#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdfade/message_error.hpp"
#include "pdfade/outage.hpp"

namespace pdfade::optim {

struct MonteCarloSettings {
    long trials = 1000000;
    std::uint64_t seed = 1;
};

struct GridPoint {
    fading::RateSplit split;
    outage::OutageEstimate p_e;
    message::MessageErrorResult q;  // GaussianCLT of the method's p_e
    double phi_argument = 0;
};

struct OptimizationResult {
    GridPoint best;
    std::vector<GridPoint> grid;
    outage::ApproxMethod method = outage::ApproxMethod::Approx4;
};

struct SweepRow {
    double overall_rate = 0;  // m k / T
    double T = 0;
    double P_dB = 0;
    double rc_star = 0;
    double re_star = 0;
    long n_star = 0;
    double p_e_star = 0;
    double log10_q_star = 0;
};

// Every integral packet count n in [m_hat, floor(T/l_f)] mapped to
// rc = n k / T, re = m / n. For Approx3 the grid is further restricted to
// integer fade counts k/(rc l_f) = T/(n l_f). Empty grid -> constraint_error.
std::vector<fading::RateSplit> admissible_grid(const fading::SystemParams& params,
                                               outage::ApproxMethod method);

// Exhaustive search: evaluates p_e with the requested method at every grid
// point and returns the argmin of the Gaussian-q Phi argument. Ties (both
// arguments -inf once p_e underflows to 0) are broken toward larger rc.
// MonteCarlo as a p_e method requires mc.trials >= 100000.
OptimizationResult optimize(const fading::SystemParams& params,
                            outage::ApproxMethod method,
                            const MonteCarloSettings& mc = {});

// Diagnostic variant of the search over a refinement of the grid that allows
// non-integral n in steps of 1/factor (Approx1/Approx4 only); used to check
// that the integral grid is not aliasing the optimum.
double optimize_dense_rc(const fading::SystemParams& params,
                         outage::ApproxMethod method, int factor);

// One optimize() per T, flattened to rows ordered by decreasing overall rate.
// Per-T constraint violations are collected into *skipped (if given), not fatal.
std::vector<SweepRow> sweep_overall_rate(const fading::SystemParams& params_template,
                                         const std::vector<double>& t_values,
                                         outage::ApproxMethod method,
                                         const MonteCarloSettings& mc = {},
                                         std::vector<std::string>* skipped = nullptr);

// Cross product of sweep_overall_rate over power levels given in dB.
std::vector<SweepRow> sweep_power(const fading::SystemParams& params_template,
                                  const std::vector<double>& t_values,
                                  const std::vector<double>& p_db_values,
                                  outage::ApproxMethod method,
                                  const MonteCarloSettings& mc = {},
                                  std::vector<std::string>* skipped = nullptr);

// Fixed-R_E incremental-redundancy trajectory: n = m/re_fixed is pinned
// (must be integral), rc = n k / T falls as T grows; one row per feasible T.
// Rows reuse SweepRow with re_star = re_fixed and rc_star = rc.
std::vector<SweepRow> fixed_re_trajectory(const fading::SystemParams& params_template,
                                          double re_fixed,
                                          const std::vector<double>& t_values,
                                          outage::ApproxMethod method,
                                          const MonteCarloSettings& mc = {},
                                          std::vector<std::string>* skipped = nullptr);

// Geometric schedule of T values spanning overall rates [rate_stop, rate_start]
// (emitted in decreasing-rate order), the axis for the rate and power sweeps.
std::vector<double> t_schedule_for_rates(const fading::SystemParams& params_template,
                                         double rate_start, double rate_stop,
                                         int points);

}  // namespace pdfade::optim
