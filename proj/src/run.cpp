#include "pdfade/run.hpp"

#include <cmath>
#include <fstream>
#include <vector>

#include "pdfade/csv.hpp"
#include "pdfade/errors.hpp"
#include "pdfade/message_error.hpp"
#include "pdfade/optimizer.hpp"
#include "pdfade/outage.hpp"
#include "pdfade/special.hpp"

namespace pdfade::cli {

namespace {

using csv::format_double;

outage::OutageEstimate point_pe(const RunConfig& config, double rc) {
    if (config.method == outage::ApproxMethod::MonteCarlo)
        return outage::pe_monte_carlo(config.params, rc, config.trials, config.seed);
    const fading::FadingStats stats =
        fading::fading_stats(config.params.P, config.quad);
    switch (config.method) {
        case outage::ApproxMethod::Approx1:
            return outage::pe_approx1(config.params, rc, stats);
        case outage::ApproxMethod::Approx2:
            return outage::pe_approx2(config.params, rc, stats);
        case outage::ApproxMethod::Approx3:
            return outage::pe_approx3(config.params, rc, stats);
        default:
            return outage::pe_approx4(config.params, rc, stats);
    }
}

long integral_packet_count(const RunConfig& config, double rc) {
    const double n_real = rc * config.params.T / config.params.k;
    const double n_round = std::round(n_real);
    if (std::fabs(n_real - n_round) >
        fading::kIntegerSnap * std::max(1.0, n_real))
        throw constraint_error(
            "rc T / k must be an integral packet count; rc = " +
            std::to_string(rc) + " gives " + std::to_string(n_real));
    return static_cast<long>(n_round);
}

void write_point_row(std::ostream& out, const fading::SystemParams& params,
                     const fading::RateSplit& split,
                     const outage::OutageEstimate& pe,
                     const message::MessageErrorResult& q) {
    const fading::FadeProfile prof = fading::fade_profile(params, split.rc);
    csv::write_row(out, {format_double(split.rc), format_double(split.re),
                         std::to_string(split.n), std::to_string(prof.full_fades),
                         format_double(prof.fractional_weight),
                         format_double(pe.p_e), format_double(q.q),
                         format_double(q.log10_q), outage::to_string(pe.method)});
}

const std::vector<std::string> kPointHeader = {
    "rc", "re", "n", "fades_full", "frac_weight", "p_e", "q", "log10_q", "method"};
const std::vector<std::string> kSweepHeader = {
    "overall_rate", "T", "P_dB", "rc_star", "re_star",
    "n_star",       "p_e_star", "log10_q_star", "method"};
const std::vector<std::string> kTrajectoryHeader = {
    "overall_rate", "T", "re_fixed", "rc", "log10_q"};
const std::vector<std::string> kValidateHeader = {
    "rc", "re", "n", "p_e_approx4", "p_e_mc", "mc_std_err", "abs_diff", "bound"};

std::vector<double> sweep_ts(const RunConfig& config) {
    if (!config.t_values.empty()) return config.t_values;
    return optim::t_schedule_for_rates(config.params, config.rate_start,
                                       config.rate_stop, config.rate_points);
}

void write_sweep_rows(std::ostream& out, const std::vector<optim::SweepRow>& rows,
                      outage::ApproxMethod method) {
    csv::write_row(out, kSweepHeader);
    for (const auto& row : rows)
        csv::write_row(out, {format_double(row.overall_rate), format_double(row.T),
                             format_double(row.P_dB), format_double(row.rc_star),
                             format_double(row.re_star), std::to_string(row.n_star),
                             format_double(row.p_e_star),
                             format_double(row.log10_q_star),
                             outage::to_string(method)});
}

int dispatch(const RunConfig& config, std::ostream& summary, std::ostream& out) {
    const optim::MonteCarloSettings mc{config.trials, config.seed};

    if (config.command == "point") {
        const long n = integral_packet_count(config, config.rc);
        fading::RateSplit split;
        split.rc = config.rc;
        split.re = static_cast<double>(config.params.m) / static_cast<double>(n);
        split.n = n;
        const outage::OutageEstimate pe = point_pe(config, config.rc);
        const message::MessageErrorResult q =
            message::q_gaussian(n, config.params.m_hat, pe.p_e);
        csv::write_row(out, kPointHeader);
        write_point_row(out, config.params, split, pe, q);
        summary << "point: rc=" << format_double(split.rc)
                << " re=" << format_double(split.re) << " n=" << n
                << " p_e=" << format_double(pe.p_e)
                << " log10_q=" << format_double(q.log10_q)
                << " method=" << outage::to_string(pe.method) << "\n";
        return 0;
    }

    if (config.command == "optimize") {
        const optim::OptimizationResult res =
            optim::optimize(config.params, config.method, mc);
        csv::write_row(out, kPointHeader);
        for (const auto& point : res.grid)
            write_point_row(out, config.params, point.split, point.p_e, point.q);
        summary << "optimize: rc_star=" << format_double(res.best.split.rc)
                << " re_star=" << format_double(res.best.split.re)
                << " n_star=" << res.best.split.n
                << " p_e_star=" << format_double(res.best.p_e.p_e)
                << " log10_q_star=" << format_double(res.best.q.log10_q)
                << " method=" << outage::to_string(res.method)
                << " grid_points=" << res.grid.size() << "\n";
        return 0;
    }

    if (config.command == "sweep-rate" || config.command == "sweep-power") {
        std::vector<std::string> skipped;
        std::vector<optim::SweepRow> rows;
        if (config.command == "sweep-rate")
            rows = optim::sweep_overall_rate(config.params, sweep_ts(config),
                                             config.method, mc, &skipped);
        else
            rows = optim::sweep_power(config.params, sweep_ts(config),
                                      config.p_db_values, config.method, mc,
                                      &skipped);
        write_sweep_rows(out, rows, config.method);
        summary << config.command << ": " << rows.size() << " rows";
        if (!skipped.empty()) summary << " (" << skipped.size() << " T values skipped)";
        summary << "\n";
        for (const auto& msg : skipped) summary << "  skipped " << msg << "\n";
        return 0;
    }

    if (config.command == "trajectory") {
        std::vector<std::string> skipped;
        const std::vector<optim::SweepRow> rows = optim::fixed_re_trajectory(
            config.params, config.re_fixed, sweep_ts(config), config.method, mc,
            &skipped);
        csv::write_row(out, kTrajectoryHeader);
        for (const auto& row : rows)
            csv::write_row(out,
                           {format_double(row.overall_rate), format_double(row.T),
                            format_double(config.re_fixed), format_double(row.rc_star),
                            format_double(row.log10_q_star)});
        summary << "trajectory: " << rows.size() << " rows";
        if (!skipped.empty()) summary << " (" << skipped.size() << " T values skipped)";
        summary << "\n";
        for (const auto& msg : skipped) summary << "  skipped " << msg << "\n";
        return 0;
    }

    // validate-mc: Approx4 against the Monte Carlo oracle over the full grid
    const fading::FadingStats stats =
        fading::fading_stats(config.params.P, config.quad);
    const std::vector<fading::RateSplit> grid =
        optim::admissible_grid(config.params, outage::ApproxMethod::Approx4);
    csv::write_row(out, kValidateHeader);
    double max_diff = 0, max_diff_rc = 0;
    bool all_within = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const fading::RateSplit& split = grid[i];
        const std::uint64_t point_seed =
            rng::Stream(config.seed, 1000003u + static_cast<std::uint64_t>(i))
                .next_u64();
        const outage::OutageEstimate approx =
            outage::pe_approx4(config.params, split.rc, stats);
        const outage::OutageEstimate mc_est = outage::pe_monte_carlo(
            config.params, split.rc, config.trials, point_seed);
        const double diff = std::fabs(approx.p_e - mc_est.p_e);
        const double bound = 3.0 * mc_est.mc_std_err + 0.03;
        if (diff > max_diff) {
            max_diff = diff;
            max_diff_rc = split.rc;
        }
        if (diff > bound) all_within = false;
        csv::write_row(out, {format_double(split.rc), format_double(split.re),
                             std::to_string(split.n), format_double(approx.p_e),
                             format_double(mc_est.p_e),
                             format_double(mc_est.mc_std_err), format_double(diff),
                             format_double(bound)});
    }
    summary << "validate-mc: max |approx4 - mc| = " << format_double(max_diff)
            << " at rc=" << format_double(max_diff_rc) << " over " << grid.size()
            << " grid points, trials=" << config.trials << ": "
            << (all_within ? "within bound" : "EXCEEDS bound") << "\n";
    return all_within ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& summary, std::ostream& fallback_csv) {
    if (config.out_path.empty()) return dispatch(config, summary, fallback_csv);
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) throw io_error("cannot open output file '" + config.out_path + "'");
    const int status = dispatch(config, summary, out);
    out.flush();
    if (!out) throw io_error("failed writing output file '" + config.out_path + "'");
    return status;
}

}  // namespace pdfade::cli
