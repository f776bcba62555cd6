#include "pdfade/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pdfade/errors.hpp"
#include "pdfade/special.hpp"

namespace pdfade::optim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

long max_packets(const fading::SystemParams& params) {
    return static_cast<long>(
        std::floor(params.T / params.l_f + fading::kIntegerSnap));
}

bool is_integral(double x) {
    return std::fabs(x - std::round(x)) <= fading::kIntegerSnap * std::max(1.0, x);
}

outage::OutageEstimate evaluate_pe(const fading::SystemParams& params, double rc,
                                   outage::ApproxMethod method,
                                   const fading::FadingStats& stats,
                                   const MonteCarloSettings& mc,
                                   std::uint64_t point_seed) {
    using outage::ApproxMethod;
    switch (method) {
        case ApproxMethod::Approx1: return outage::pe_approx1(params, rc, stats);
        case ApproxMethod::Approx2: return outage::pe_approx2(params, rc, stats);
        case ApproxMethod::Approx3: return outage::pe_approx3(params, rc, stats);
        case ApproxMethod::Approx4: return outage::pe_approx4(params, rc, stats);
        case ApproxMethod::MonteCarlo:
            return outage::pe_monte_carlo(params, rc, mc.trials, point_seed);
    }
    return outage::pe_approx4(params, rc, stats);
}

}  // namespace

std::vector<fading::RateSplit> admissible_grid(const fading::SystemParams& params,
                                               outage::ApproxMethod method) {
    params.validate();
    const long n_max = max_packets(params);
    if (n_max < params.m_hat) {
        std::ostringstream msg;
        msg << "empty search grid: floor(T/l_f) = " << n_max
            << " is below m_hat = " << params.m_hat
            << "; the admissibility condition m_hat <= T / l_f fails";
        throw constraint_error(msg.str());
    }
    std::vector<fading::RateSplit> grid;
    grid.reserve(static_cast<std::size_t>(n_max - params.m_hat + 1));
    for (long n = params.m_hat; n <= n_max; ++n) {
        if (method == outage::ApproxMethod::Approx3 &&
            !is_integral(params.T / (static_cast<double>(n) * params.l_f)))
            continue;  // diversity only in whole-fade chunks
        fading::RateSplit split;
        split.n = n;
        split.rc = static_cast<double>(n) * params.k / params.T;
        split.re = static_cast<double>(params.m) / static_cast<double>(n);
        grid.push_back(split);
    }
    if (grid.empty())
        throw constraint_error(
            "empty search grid: no admissible rate split under the "
            "integer-fade restriction");
    return grid;
}

OptimizationResult optimize(const fading::SystemParams& params,
                            outage::ApproxMethod method,
                            const MonteCarloSettings& mc) {
    if (method == outage::ApproxMethod::MonteCarlo && mc.trials < 100000)
        throw constraint_error(
            "MonteCarlo search requires at least 100000 trials per grid point");

    const std::vector<fading::RateSplit> splits = admissible_grid(params, method);
    fading::FadingStats stats{};
    if (method != outage::ApproxMethod::MonteCarlo)
        stats = fading::fading_stats(params.P);

    OptimizationResult result;
    result.method = method;
    result.grid.reserve(splits.size());
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < splits.size(); ++i) {
        const fading::RateSplit& split = splits[i];
        // one derived seed per grid point so a parallel sweep reproduces the
        // serial result
        const std::uint64_t point_seed =
            rng::Stream(mc.seed, 1000003u + static_cast<std::uint64_t>(i)).next_u64();
        GridPoint point;
        point.split = split;
        point.p_e = evaluate_pe(params, split.rc, method, stats, mc, point_seed);
        point.q = message::q_gaussian(split.n, params.m_hat, point.p_e.p_e);
        point.phi_argument =
            message::gaussian_phi_argument(split.n, params.m_hat, point.p_e.p_e);
        result.grid.push_back(point);

        const GridPoint& best = result.grid[best_idx];
        const bool better =
            point.phi_argument < best.phi_argument ||
            (point.phi_argument == best.phi_argument && split.rc > best.split.rc);
        if (i == 0 || better) best_idx = i;
    }
    result.best = result.grid[best_idx];
    return result;
}

double optimize_dense_rc(const fading::SystemParams& params,
                         outage::ApproxMethod method, int factor) {
    using outage::ApproxMethod;
    if (method != ApproxMethod::Approx1 && method != ApproxMethod::Approx4)
        throw domain_error("dense diagnostic supports Approx1 and Approx4 only");
    if (factor < 1) throw domain_error("refinement factor must be >= 1");
    params.validate();
    const long n_max = max_packets(params);
    if (n_max < params.m_hat)
        throw constraint_error("empty search grid: m_hat > T / l_f");

    const fading::FadingStats stats = fading::fading_stats(params.P);
    const double c = params.c();
    double best_arg = kInf, best_rc = 0;
    const long steps = (n_max - params.m_hat) * factor;
    for (long s = 0; s <= steps; ++s) {
        const double n = static_cast<double>(params.m_hat) +
                         static_cast<double>(s) / static_cast<double>(factor);
        const double rc = n * params.k / params.T;
        const double x = params.k / (rc * params.l_f);
        double arg_pe;
        if (method == ApproxMethod::Approx1) {
            arg_pe = std::sqrt(x) * (c * rc - stats.mu) / std::sqrt(stats.var);
        } else {
            const double fl = std::floor(x);
            const double fr = x - fl;
            arg_pe = (c * params.k / params.l_f - x * stats.mu) /
                     std::sqrt(stats.var * (fl + fr * fr));
        }
        const double pe = special::normal_cdf(arg_pe);
        double arg;
        if (pe == 0.0) {
            arg = -kInf;
        } else if (pe == 1.0) {
            arg = kInf;
        } else {
            arg = (static_cast<double>(params.m_hat - 1) - n * (1.0 - pe)) /
                  std::sqrt(n * pe * (1.0 - pe));
        }
        if (arg < best_arg || (arg == best_arg && rc > best_rc)) {
            best_arg = arg;
            best_rc = rc;
        }
    }
    return best_rc;
}

namespace {

SweepRow make_row(const fading::SystemParams& params, double p_db,
                  const GridPoint& best) {
    SweepRow row;
    row.overall_rate = params.m * params.k / params.T;
    row.T = params.T;
    row.P_dB = p_db;
    row.rc_star = best.split.rc;
    row.re_star = best.split.re;
    row.n_star = best.split.n;
    row.p_e_star = best.p_e.p_e;
    row.log10_q_star = best.q.log10_q;
    return row;
}

std::vector<SweepRow> sweep_rate_at_power(const fading::SystemParams& params_template,
                                          double p_db,
                                          const std::vector<double>& t_values,
                                          outage::ApproxMethod method,
                                          const MonteCarloSettings& mc,
                                          std::vector<std::string>* skipped) {
    std::vector<double> ts = t_values;
    std::sort(ts.begin(), ts.end());  // ascending T = descending overall rate
    std::vector<SweepRow> rows;
    rows.reserve(ts.size());
    for (double t : ts) {
        fading::SystemParams params = params_template;
        params.T = t;
        try {
            const OptimizationResult res = optimize(params, method, mc);
            rows.push_back(make_row(params, p_db, res.best));
        } catch (const constraint_error& err) {
            if (skipped) {
                std::ostringstream msg;
                msg << "T = " << t << ": " << err.what();
                skipped->push_back(msg.str());
            }
        }
    }
    return rows;
}

}  // namespace

std::vector<SweepRow> sweep_overall_rate(const fading::SystemParams& params_template,
                                         const std::vector<double>& t_values,
                                         outage::ApproxMethod method,
                                         const MonteCarloSettings& mc,
                                         std::vector<std::string>* skipped) {
    const double p_db = 10.0 * std::log10(params_template.P);
    return sweep_rate_at_power(params_template, p_db, t_values, method, mc, skipped);
}

std::vector<SweepRow> sweep_power(const fading::SystemParams& params_template,
                                  const std::vector<double>& t_values,
                                  const std::vector<double>& p_db_values,
                                  outage::ApproxMethod method,
                                  const MonteCarloSettings& mc,
                                  std::vector<std::string>* skipped) {
    std::vector<SweepRow> rows;
    for (double p_db : p_db_values) {
        fading::SystemParams params = params_template;
        params.P = std::pow(10.0, p_db / 10.0);
        const std::vector<SweepRow> part =
            sweep_rate_at_power(params, p_db, t_values, method, mc, skipped);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

std::vector<SweepRow> fixed_re_trajectory(const fading::SystemParams& params_template,
                                          double re_fixed,
                                          const std::vector<double>& t_values,
                                          outage::ApproxMethod method,
                                          const MonteCarloSettings& mc,
                                          std::vector<std::string>* skipped) {
    if (!(re_fixed > 0) || re_fixed > 1.0 + fading::kIntegerSnap)
        throw constraint_error("re_fixed must lie in (0, 1]");
    const double n_real = static_cast<double>(params_template.m) / re_fixed;
    if (!is_integral(n_real))
        throw constraint_error(
            "re_fixed must make m / re_fixed an integral packet count");
    const long n = static_cast<long>(std::round(n_real));

    std::vector<double> ts = t_values;
    std::sort(ts.begin(), ts.end());
    std::vector<SweepRow> rows;
    rows.reserve(ts.size());
    for (double t : ts) {
        fading::SystemParams params = params_template;
        params.T = t;
        try {
            params.validate();
            if (n < params.m_hat)
                throw constraint_error("fixed packet count n = " +
                                       std::to_string(n) + " is below m_hat");
            const double rc = static_cast<double>(n) * params.k / params.T;
            fading::check_rc(params, rc);
            fading::FadingStats stats{};
            outage::OutageEstimate pe;
            if (method == outage::ApproxMethod::MonteCarlo) {
                pe = outage::pe_monte_carlo(params, rc, mc.trials, mc.seed);
            } else {
                stats = fading::fading_stats(params.P);
                pe = evaluate_pe(params, rc, method, stats, mc, mc.seed);
            }
            GridPoint point;
            point.split = {rc, re_fixed, n};
            point.p_e = pe;
            point.q = message::q_gaussian(n, params.m_hat, pe.p_e);
            point.phi_argument =
                message::gaussian_phi_argument(n, params.m_hat, pe.p_e);
            rows.push_back(make_row(params, 10.0 * std::log10(params.P), point));
        } catch (const constraint_error& err) {
            if (skipped) {
                std::ostringstream msg;
                msg << "T = " << t << ": " << err.what();
                skipped->push_back(msg.str());
            }
        }
    }
    return rows;
}

std::vector<double> t_schedule_for_rates(const fading::SystemParams& params_template,
                                         double rate_start, double rate_stop,
                                         int points) {
    if (!(rate_start > 0) || !(rate_stop > 0))
        throw domain_error("overall rates must be positive");
    if (rate_start < rate_stop)
        throw domain_error("rate_start must be >= rate_stop");
    if (points < 2) throw domain_error("rate schedule needs at least 2 points");
    const double mk = params_template.m * params_template.k;
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(points));
    const double log_start = std::log(rate_start);
    const double log_stop = std::log(rate_stop);
    for (int i = 0; i < points; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(points - 1);
        const double rate = std::exp(log_start + (log_stop - log_start) * frac);
        ts.push_back(mk / rate);
    }
    return ts;
}

}  // namespace pdfade::optim
