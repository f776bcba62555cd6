#include "pdfade/outage.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "pdfade/errors.hpp"
#include "pdfade/special.hpp"

namespace pdfade::outage {

std::string to_string(ApproxMethod method) {
    switch (method) {
        case ApproxMethod::Approx1: return "Approx1";
        case ApproxMethod::Approx2: return "Approx2";
        case ApproxMethod::Approx3: return "Approx3";
        case ApproxMethod::Approx4: return "Approx4";
        case ApproxMethod::MonteCarlo: return "MonteCarlo";
    }
    return "Approx4";
}

ApproxMethod parse_method(const std::string& name) {
    if (name == "Approx1") return ApproxMethod::Approx1;
    if (name == "Approx2") return ApproxMethod::Approx2;
    if (name == "Approx3") return ApproxMethod::Approx3;
    if (name == "Approx4") return ApproxMethod::Approx4;
    if (name == "MonteCarlo") return ApproxMethod::MonteCarlo;
    throw domain_error("unknown method '" + name +
                       "' (expected Approx1..Approx4 or MonteCarlo)");
}

namespace {

OutageEstimate closed_form(double arg, ApproxMethod method) {
    OutageEstimate est;
    est.p_e = special::normal_cdf(arg);
    est.method = method;
    return est;
}

}  // namespace

OutageEstimate pe_approx1(const fading::SystemParams& params, double rc,
                          const fading::FadingStats& stats) {
    fading::check_rc(params, rc);
    const double x = params.k / (rc * params.l_f);
    const double arg =
        std::sqrt(x) * (params.c() * rc - stats.mu) / std::sqrt(stats.var);
    return closed_form(arg, ApproxMethod::Approx1);
}

OutageEstimate pe_approx2(const fading::SystemParams& params, double rc,
                          const fading::FadingStats& stats) {
    const fading::FadeProfile prof = fade_profile(params, rc);
    const double fl = static_cast<double>(prof.full_fades);
    const double arg = (params.c() * params.k / params.l_f - fl * stats.mu) /
                       std::sqrt(fl * stats.var);
    return closed_form(arg, ApproxMethod::Approx2);
}

OutageEstimate pe_approx3(const fading::SystemParams& params, double rc,
                          const fading::FadingStats& stats) {
    const fading::FadeProfile prof = fade_profile(params, rc);
    if (prof.fractional_weight != 0)
        throw constraint_error(
            "Approx3 requires an integer fade count k/(rc l_f); rc = " +
            std::to_string(rc) + " gives a fractional fade");
    OutageEstimate est = pe_approx1(params, rc, stats);
    est.method = ApproxMethod::Approx3;
    return est;
}

OutageEstimate pe_approx4(const fading::SystemParams& params, double rc,
                          const fading::FadingStats& stats) {
    const fading::FadeProfile prof = fade_profile(params, rc);
    const double x = params.k / (rc * params.l_f);
    const double fl = static_cast<double>(prof.full_fades);
    const double fr = prof.fractional_weight;
    const double mean_wg = x * stats.mu;
    const double var_wg = stats.var * (fl + fr * fr);
    const double arg =
        (params.c() * params.k / params.l_f - mean_wg) / std::sqrt(var_wg);
    return closed_form(arg, ApproxMethod::Approx4);
}

bool outage_event(const fading::SystemParams& params, double rc,
                  rng::Stream& stream) {
    const fading::FadeProfile prof = fade_profile(params, rc);
    const double threshold = params.c() * params.k / params.l_f;
    double sum = 0;
    for (long i = 0; i < prof.full_fades; ++i)
        sum += std::log1p(fading::draw_snr(params.P, stream));
    if (prof.fractional_weight > 0)
        sum += prof.fractional_weight *
               std::log1p(fading::draw_snr(params.P, stream));
    return sum < threshold;
}

OutageEstimate pe_monte_carlo(const fading::SystemParams& params, double rc,
                              long trials, std::uint64_t seed) {
    if (trials < 1) throw domain_error("pe_monte_carlo: trials must be >= 1");
    const fading::FadeProfile prof = fade_profile(params, rc);
    const double threshold = params.c() * params.k / params.l_f;
    const double p = params.P;
    const long full = prof.full_fades;
    const double fr = prof.fractional_weight;

    constexpr long kBlock = 65536;
    const long blocks = (trials + kBlock - 1) / kBlock;
    std::vector<long> counts(static_cast<std::size_t>(blocks), 0);

    auto run_block = [&](long b) {
        rng::Stream stream(seed, static_cast<std::uint64_t>(b));
        const long lo = b * kBlock;
        const long hi = std::min(trials, lo + kBlock);
        long count = 0;
        for (long t = lo; t < hi; ++t) {
            double sum = 0;
            for (long i = 0; i < full; ++i)
                sum += std::log1p(-p * std::log(stream.next_u01()));
            if (fr > 0)
                sum += fr * std::log1p(-p * std::log(stream.next_u01()));
            if (sum < threshold) ++count;
        }
        counts[static_cast<std::size_t>(b)] = count;
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers =
        static_cast<unsigned>(std::min<long>(blocks, static_cast<long>(hw)));
    if (workers <= 1) {
        for (long b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::atomic<long> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (long b = next.fetch_add(1); b < blocks; b = next.fetch_add(1))
                    run_block(b);
            });
        for (auto& th : pool) th.join();
    }

    long total = 0;
    for (long b = 0; b < blocks; ++b) total += counts[static_cast<std::size_t>(b)];

    OutageEstimate est;
    est.method = ApproxMethod::MonteCarlo;
    est.mc_trials = trials;
    est.p_e = static_cast<double>(total) / static_cast<double>(trials);
    est.mc_std_err =
        std::sqrt(est.p_e * (1.0 - est.p_e) / static_cast<double>(trials));
    return est;
}

}  // namespace pdfade::outage
