#include <cmath>
#include <limits>

#include "doctest.h"
#include "golden_util.hpp"
#include "pdfade/errors.hpp"
#include "pdfade/message_error.hpp"
#include "pdfade/outage.hpp"
#include "pdfade/rng.hpp"
#include "pdfade/special.hpp"
#include "pdfade/validation.hpp"

using namespace pdfade;
using testutil::check_golden;

namespace {

// independent survival-side sum, accumulated in plain double (the cases used
// with it keep all terms well inside the normal range)
double survival_sum(long n, int m_hat, double p_e) {
    double s = 0;
    for (long i = m_hat; i <= n; ++i) {
        const double logc = std::lgamma(static_cast<double>(n) + 1) -
                            std::lgamma(static_cast<double>(i) + 1) -
                            std::lgamma(static_cast<double>(n - i) + 1);
        s += std::exp(logc + static_cast<double>(i) * std::log1p(-p_e) +
                      static_cast<double>(n - i) * std::log(p_e));
    }
    return s;
}

}  // namespace

TEST_CASE("exact binomial tail reproduces the arbitrary-precision references") {
    check_golden("analytic.csv", "qb_n1000_mhat50_pe09",
                 message::q_binomial(1000, 50, 0.9).q);
    check_golden("analytic.csv", "qb_n100_mhat50_pe05",
                 message::q_binomial(100, 50, 0.5).q);
    check_golden("analytic.csv", "qb_n50_mhat50_pe001",
                 message::q_binomial(50, 50, 0.01).q);
}

TEST_CASE("log-domain accumulation survives tails far below double underflow") {
    const auto res = message::q_binomial(60, 50, 1e-30);
    check_golden("analytic.csv", "qb_log10_n60_mhat50_pe1em30", res.log10_q);
    CHECK(std::isfinite(res.log10_q));
}

TEST_CASE("binomial tail matches the exhaustive enumeration oracle") {
    rng::Stream stream(314);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(stream.next_u01() * 20);
        const int m_hat = 1 + static_cast<int>(stream.next_u01() * n);
        const double p_e = stream.next_u01() * 0.999;
        const double oracle = validation::oracle_q_exhaustive(n, m_hat, p_e);
        const double got = message::q_binomial(n, m_hat, p_e).q;
        INFO("n=", n, " m_hat=", m_hat, " p_e=", p_e);
        CHECK(std::fabs(got - oracle) <= 1e-12 * std::max(oracle, 1e-30));
    }
}

TEST_CASE("failure and survival sides of the binomial sum to one") {
    struct Case { long n; int m_hat; double p_e; };
    for (const auto& c : {Case{100, 50, 0.5}, Case{1000, 50, 0.9},
                          Case{200, 120, 0.35}, Case{64, 64, 0.25}}) {
        const double q = message::q_binomial(c.n, c.m_hat, c.p_e).q;
        const double s = survival_sum(c.n, c.m_hat, c.p_e);
        INFO("n=", c.n, " m_hat=", c.m_hat);
        CHECK(std::fabs(q + s - 1.0) <= 1e-12);
    }
}

TEST_CASE("binomial endpoints and ordering behave like a failure probability") {
    CHECK(message::q_binomial(100, 50, 0.0).q == 0.0);
    CHECK(message::q_binomial(100, 50, 0.0).log10_q ==
          -std::numeric_limits<double>::infinity());
    CHECK(message::q_binomial(100, 50, 1.0).q == 1.0);

    // nondecreasing in p_e
    double prev = -1;
    for (double p = 0.0; p <= 1.0; p += 0.05) {
        const double q = message::q_binomial(120, 80, p).q;
        CHECK(q >= prev);
        prev = q;
    }
    // more packets at the same p_e can only help
    CHECK(message::q_binomial(150, 50, 0.4).q <
          message::q_binomial(100, 50, 0.4).q);
    // needing more packets can only hurt
    CHECK(message::q_binomial(100, 60, 0.4).q >
          message::q_binomial(100, 50, 0.4).q);
}

TEST_CASE("input validation separates domain and constraint failures") {
    CHECK_THROWS_AS(message::q_binomial(100, 0, 0.5), domain_error);
    CHECK_THROWS_AS(message::q_binomial(49, 50, 0.5), constraint_error);
    CHECK_THROWS_AS(message::q_binomial(100, 50, -0.1), domain_error);
    CHECK_THROWS_AS(message::q_binomial(100, 50, 1.1), domain_error);
    CHECK_THROWS_AS(message::q_gaussian(49, 50, 0.5), constraint_error);
    CHECK_THROWS_AS(message::gaussian_phi_argument(100, 50, std::nan("")),
                    domain_error);
}

TEST_CASE("CLT approximation reproduces its reference and its own pieces") {
    check_golden("analytic.csv", "qg_n1000_mhat50_pe09",
                 message::q_gaussian(1000, 50, 0.9).q);
    const double arg = message::gaussian_phi_argument(1000, 50, 0.9);
    const auto res = message::q_gaussian(1000, 50, 0.9);
    CHECK(res.q == special::normal_cdf(arg));
    CHECK(res.log10_q ==
          doctest::Approx(special::log_normal_cdf(arg) / std::log(10.0))
              .epsilon(1e-15));
    CHECK(message::gaussian_phi_argument(100, 50, 0.0) ==
          -std::numeric_limits<double>::infinity());
    CHECK(message::gaussian_phi_argument(100, 50, 1.0) ==
          std::numeric_limits<double>::infinity());
}

TEST_CASE("CLT tracks the exact tail where the normal regime holds") {
    // n p_e (1-p_e) = 90 and the threshold sits at the mean: the worst
    // placement for a continuity-corrected-free CLT, still within 3%
    const double exact = message::q_binomial(1000, 101, 0.9).q;
    const double clt = message::q_gaussian(1000, 101, 0.9).q;
    CHECK(std::fabs(exact - clt) < 0.03);
}

TEST_CASE("full-system Monte Carlo composes erasures into message failures") {
    auto params = testutil::ref_params();
    const double rc = 0.25;  // n = 50 = m_hat: every packet must survive
    const long trials = 100000;
    const auto full = message::q_full_monte_carlo(params, rc, trials, 3);
    CHECK(full.n == 50);
    CHECK(std::isnan(full.p_e_used));

    // semi-analytic reference: exact binomial fed with a tight MC erasure rate
    const auto pe = outage::pe_monte_carlo(params, rc, 1000000, 21);
    const double ref = message::q_binomial(50, 50, pe.p_e).q;
    const double se_q = std::sqrt(full.q * (1 - full.q) / trials);
    // 50 (1-p)^49 ~ 21 amplifies the erasure-rate uncertainty
    const double tol = 3 * se_q + 21.0 * 3 * pe.mc_std_err;
    INFO("full ", full.q, " ref ", ref, " tol ", tol);
    CHECK(std::fabs(full.q - ref) <= tol);
}

TEST_CASE("full-system Monte Carlo is deterministic and validates its inputs") {
    auto params = testutil::ref_params();
    const auto a = message::q_full_monte_carlo(params, 0.25, 20000, 5);
    const auto b = message::q_full_monte_carlo(params, 0.25, 20000, 5);
    CHECK(a.q == b.q);
    // rc T / k = 60.02 packets: not an integral operating point
    CHECK_THROWS_AS(message::q_full_monte_carlo(params, 0.3001, 1000, 1),
                    constraint_error);
    CHECK_THROWS_AS(message::q_full_monte_carlo(params, 0.25, 0, 1),
                    domain_error);
}
