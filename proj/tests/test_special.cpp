#include <cmath>
#include <numbers>

#include "doctest.h"
#include "golden_util.hpp"
#include "pdfade/errors.hpp"
#include "pdfade/special.hpp"

using namespace pdfade::special;

TEST_CASE("alpha and beta reproduce the arbitrary-precision references") {
    testutil::check_golden("analytic.csv", "alpha_p1", alpha(1.0));
    testutil::check_golden("analytic.csv", "alpha_p10", alpha(10.0));
    testutil::check_golden("analytic.csv", "beta_p1", beta(1.0));
    testutil::check_golden("analytic.csv", "beta_p10", beta(10.0));
}

TEST_CASE("scaled forms match exp(1/P)-weighted plain forms at moderate P") {
    for (double p : {0.5, 1.0, 3.0, 31.622776601683793}) {
        const double s = std::exp(1.0 / p);
        CHECK(alpha_scaled(p) == doctest::Approx(s * alpha(p)).epsilon(1e-12));
        CHECK(beta_scaled(p) == doctest::Approx(s * beta(p)).epsilon(1e-11));
    }
}

TEST_CASE("scaled forms stay finite where exp(1/P) overflows") {
    // 1/P = 1000: exp overflows double range but the scaled integrals are
    // well-behaved and the leading asymptotics alpha_scaled ~ P hold
    const double p = 1e-3;
    const double a = alpha_scaled(p);
    CHECK(std::isfinite(a));
    CHECK(a > 0.0);
    CHECK(a < p);
    CHECK(a > p * (1 - 2 * p));
    CHECK(std::isfinite(beta_scaled(p)));
    // the unscaled values underflow to zero out here, which is their limit
    CHECK(alpha(p) == 0.0);
}

TEST_CASE("alpha rejects non-positive and non-finite power") {
    CHECK_THROWS_AS(alpha(0.0), pdfade::domain_error);
    CHECK_THROWS_AS(alpha(-2.0), pdfade::domain_error);
    CHECK_THROWS_AS(beta(std::nan("")), pdfade::domain_error);
}

TEST_CASE("normal_cdf matches erfc-based references and symmetry") {
    testutil::check_golden("analytic.csv", "normal_cdf_m3", normal_cdf(-3.0));
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    for (double x : {-5.0, -1.3, 0.2, 2.4, 7.0}) {
        CHECK(normal_cdf(x) + normal_cdf(-x) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(normal_cdf(std::nan("")), pdfade::domain_error);
}

TEST_CASE("log_normal_cdf agrees with references across all three branches") {
    testutil::check_golden("analytic.csv", "log_normal_cdf_m10",
                           log_normal_cdf(-10.0));
    testutil::check_golden("analytic.csv", "log_normal_cdf_p3",
                           log_normal_cdf(3.0));
    testutil::check_golden("analytic.csv", "log_normal_cdf_m40",
                           log_normal_cdf(-40.0));
}

TEST_CASE("log_normal_cdf is consistent with normal_cdf where both are exact") {
    // exp(log Phi) must reproduce Phi to 1e-12 wherever Phi >= 1e-300
    for (double x = -37.0; x <= 8.5; x += 0.173) {
        const double phi = normal_cdf(x);
        if (phi < 1e-300) continue;
        const double via_log = std::exp(log_normal_cdf(x));
        CHECK(std::fabs(via_log - phi) <= 1e-12 * phi);
    }
}

TEST_CASE("log_normal_cdf keeps at least six digits far into the left tail") {
    // local self-check: the three-term asymptotic series brackets the truth
    for (double x : {-12.0, -20.0, -30.0, -40.0}) {
        const double lp = log_normal_cdf(x);
        // log phi(x) - log(-x) is the leading behaviour
        const double lead = -0.5 * x * x -
                            0.5 * std::log(2 * std::numbers::pi) - std::log(-x);
        // series: lead + log(1 - 1/x^2 + 3/x^4 - ...)
        const double upper = lead;
        const double lower = lead + std::log1p(-1.0 / (x * x));
        CHECK(lp <= upper + 1e-12);
        CHECK(lp >= lower - 1e-12);
    }
}
