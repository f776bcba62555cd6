#include "pdfade/message_error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "pdfade/errors.hpp"
#include "pdfade/rng.hpp"
#include "pdfade/special.hpp"

namespace pdfade::message {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_q_inputs(long n, int m_hat, double p_e) {
    if (m_hat < 1) throw domain_error("m_hat must be >= 1");
    if (n < m_hat)
        throw constraint_error("n = " + std::to_string(n) +
                               " is below m_hat = " + std::to_string(m_hat));
    if (!(p_e >= 0.0 && p_e <= 1.0))
        throw domain_error("p_e must lie in [0, 1]");
}

// log C(n, i) via lgamma
double log_choose(long n, long i) {
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(i) + 1.0) -
           std::lgamma(static_cast<double>(n - i) + 1.0);
}

}  // namespace

std::string to_string(QMethod method) {
    switch (method) {
        case QMethod::BinomialExact: return "BinomialExact";
        case QMethod::GaussianCLT: return "GaussianCLT";
        case QMethod::FullMonteCarlo: return "FullMonteCarlo";
    }
    return "BinomialExact";
}

MessageErrorResult q_binomial(long n, int m_hat, double p_e) {
    check_q_inputs(n, m_hat, p_e);
    MessageErrorResult res;
    res.method = QMethod::BinomialExact;
    res.n = n;
    res.p_e_used = p_e;
    if (p_e == 0.0) {  // n >= m_hat packets always survive
        res.q = 0.0;
        res.log10_q = -kInf;
        return res;
    }
    if (p_e == 1.0) {
        res.q = 1.0;
        res.log10_q = 0.0;
        return res;
    }
    //   log term_i = log C(n,i) + i log(1-p_e) + (n-i) log(p_e),  i < m_hat
    const double log_pe = std::log(p_e);
    const double log_qe = std::log1p(-p_e);
    std::vector<double> terms(static_cast<std::size_t>(m_hat));
    double peak = -kInf;
    for (long i = 0; i < m_hat; ++i) {
        const double t = log_choose(n, i) + static_cast<double>(i) * log_qe +
                         static_cast<double>(n - i) * log_pe;
        terms[static_cast<std::size_t>(i)] = t;
        peak = std::max(peak, t);
    }
    double acc = 0;
    for (double t : terms) acc += std::exp(t - peak);
    const double log_q = peak + std::log(acc);
    res.q = std::exp(std::min(log_q, 0.0));
    res.log10_q = std::min(log_q, 0.0) / std::numbers::ln10;
    return res;
}

double gaussian_phi_argument(long n, int m_hat, double p_e) {
    check_q_inputs(n, m_hat, p_e);
    if (p_e == 0.0) return -kInf;
    if (p_e == 1.0) return kInf;
    // numerator written as (m_hat - 1 - n) + n p_e to dodge cancellation at
    // tiny p_e
    const double nd = static_cast<double>(n);
    const double num = static_cast<double>(m_hat - 1 - n) + nd * p_e;
    const double den = std::sqrt(nd * p_e * (1.0 - p_e));
    return num / den;
}

MessageErrorResult q_gaussian(long n, int m_hat, double p_e) {
    check_q_inputs(n, m_hat, p_e);
    MessageErrorResult res;
    res.method = QMethod::GaussianCLT;
    res.n = n;
    res.p_e_used = p_e;
    if (p_e == 0.0) {
        res.q = 0.0;
        res.log10_q = -kInf;
        return res;
    }
    if (p_e == 1.0) {
        res.q = 1.0;
        res.log10_q = 0.0;
        return res;
    }
    const double arg = gaussian_phi_argument(n, m_hat, p_e);
    res.q = special::normal_cdf(arg);
    res.log10_q = special::log_normal_cdf(arg) / std::numbers::ln10;
    return res;
}

MessageErrorResult q_full_monte_carlo(const fading::SystemParams& params,
                                      double rc, long trials,
                                      std::uint64_t seed) {
    if (trials < 1)
        throw domain_error("q_full_monte_carlo: trials must be >= 1");
    fading::check_rc(params, rc);
    const double n_real = rc * params.T / params.k;
    const double n_round = std::round(n_real);
    if (std::fabs(n_real - n_round) > fading::kIntegerSnap * std::max(1.0, n_real))
        throw constraint_error(
            "q_full_monte_carlo: rc T / k must be an integral packet count");
    const long n = static_cast<long>(n_round);
    if (n < params.m_hat)
        throw constraint_error("q_full_monte_carlo: n < m_hat");

    const double success_threshold = (1.0 + params.epsilon) * rc;

    constexpr long kBlock = 4096;
    const long blocks = (trials + kBlock - 1) / kBlock;
    std::vector<long> fail_counts(static_cast<std::size_t>(blocks), 0);

    auto run_block = [&](long b) {
        rng::Stream stream(seed, static_cast<std::uint64_t>(b));
        const long lo = b * kBlock;
        const long hi = std::min(trials, lo + kBlock);
        long fails = 0;
        for (long t = lo; t < hi; ++t) {
            long successes = 0;
            for (long pkt = 0; pkt < n; ++pkt) {
                const double w =
                    fading::sample_weighted_avg_mi(params, rc, stream);
                if (w > success_threshold) ++successes;
            }
            if (successes < params.m_hat) ++fails;
        }
        fail_counts[static_cast<std::size_t>(b)] = fails;
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

    long total_fails = 0;
    for (long b = 0; b < blocks; ++b)
        total_fails += fail_counts[static_cast<std::size_t>(b)];

    MessageErrorResult res;
    res.method = QMethod::FullMonteCarlo;
    res.n = n;
    res.p_e_used = kNaN;
    res.q = static_cast<double>(total_fails) / static_cast<double>(trials);
    res.log10_q = res.q > 0 ? std::log10(res.q) : -kInf;
    return res;
}

}  // namespace pdfade::message
