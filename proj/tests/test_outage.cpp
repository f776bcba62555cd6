#include <cmath>

#include "doctest.h"
#include "golden_util.hpp"
#include "pdfade/errors.hpp"
#include "pdfade/outage.hpp"
#include "pdfade/rng.hpp"

using namespace pdfade;
using testutil::check_golden;
using testutil::ref_params;

namespace {

const fading::SystemParams& refsys() {
    static const auto params = testutil::ref_params();
    return params;
}

const fading::FadingStats& refsys_stats() {
    static const auto stats = fading::fading_stats(refsys().P);
    return stats;
}

}  // namespace

TEST_CASE("closed forms reproduce the arbitrary-precision references") {
    check_golden("analytic.csv", "pe1_refsys_rc05",
                 outage::pe_approx1(refsys(), 0.5, refsys_stats()).p_e);
    check_golden("analytic.csv", "pe1_refsys_rc08",
                 outage::pe_approx1(refsys(), 0.8, refsys_stats()).p_e);
    check_golden("analytic.csv", "pe2_refsys_rc08",
                 outage::pe_approx2(refsys(), 0.8, refsys_stats()).p_e);
    check_golden("analytic.csv", "pe4_refsys_rc08",
                 outage::pe_approx4(refsys(), 0.8, refsys_stats()).p_e);
}

TEST_CASE("all four approximations coincide when the fade count is integral") {
    for (double rc : {0.25, 0.4, 0.5, 1.0, 2.0}) {  // x = 8, 5, 4, 2, 1
        const double p1 = outage::pe_approx1(refsys(), rc, refsys_stats()).p_e;
        const double p2 = outage::pe_approx2(refsys(), rc, refsys_stats()).p_e;
        const double p3 = outage::pe_approx3(refsys(), rc, refsys_stats()).p_e;
        const double p4 = outage::pe_approx4(refsys(), rc, refsys_stats()).p_e;
        INFO("rc = ", rc);
        CHECK(p1 == doctest::Approx(p2).epsilon(1e-12));
        CHECK(p1 == doctest::Approx(p3).epsilon(1e-15));
        CHECK(p1 == doctest::Approx(p4).epsilon(1e-12));
    }
}

TEST_CASE("the floor-based approximation is constant between integer fade counts") {
    // floor(k/(rc l_f)) = 2 for every rc in (2/3, 1]
    const double base = outage::pe_approx2(refsys(), 0.7, refsys_stats()).p_e;
    for (double rc : {0.68, 0.75, 0.8, 0.9, 0.99}) {
        CHECK(outage::pe_approx2(refsys(), rc, refsys_stats()).p_e == base);
    }
    CHECK(outage::pe_approx2(refsys(), 0.5, refsys_stats()).p_e != base);
}

TEST_CASE("erasure probability is nondecreasing in the channel-code rate") {
    double prev = 0.0;
    for (double rc = 0.25; rc <= 2.0; rc += 0.05) {
        const double pe = outage::pe_approx1(refsys(), rc, refsys_stats()).p_e;
        CHECK(pe >= prev);
        prev = pe;
    }
    CHECK(outage::pe_approx4(refsys(), 0.5, refsys_stats()).p_e <
          outage::pe_approx4(refsys(), 0.8, refsys_stats()).p_e);
}

TEST_CASE("erasure probability falls as power rises") {
    double prev = 1.0;
    for (double db : {0.0, 3.0, 5.0, 8.0, 12.0, 20.0}) {
        auto params = ref_params();
        params.P = std::pow(10.0, db / 10.0);
        const auto stats = fading::fading_stats(params.P);
        const double pe = outage::pe_approx4(params, 0.8, stats).p_e;
        CHECK(pe < prev);
        prev = pe;
    }
}

TEST_CASE("the integer-only approximation rejects fractional fade counts") {
    CHECK_THROWS_AS(outage::pe_approx3(refsys(), 0.8, refsys_stats()),
                    constraint_error);
    const auto est = outage::pe_approx3(refsys(), 0.5, refsys_stats());
    CHECK(est.method == outage::ApproxMethod::Approx3);
}

TEST_CASE("method names round-trip and bad names are rejected") {
    using outage::ApproxMethod;
    for (auto m : {ApproxMethod::Approx1, ApproxMethod::Approx2,
                   ApproxMethod::Approx3, ApproxMethod::Approx4,
                   ApproxMethod::MonteCarlo}) {
        CHECK(outage::parse_method(outage::to_string(m)) == m);
    }
    CHECK_THROWS_AS(outage::parse_method("approx9"), domain_error);
}

TEST_CASE("Monte Carlo agrees with the fractional-variance approximation") {
    for (double rc : {0.5, 0.8}) {
        const auto mc = outage::pe_monte_carlo(refsys(), rc, 100000, 11);
        const double pe4 = outage::pe_approx4(refsys(), rc, refsys_stats()).p_e;
        INFO("rc = ", rc, " mc ", mc.p_e, " approx ", pe4);
        CHECK(std::fabs(mc.p_e - pe4) <= 3 * mc.mc_std_err + 0.03);
        CHECK(mc.mc_trials == 100000);
        CHECK(mc.mc_std_err > 0);
    }
}

TEST_CASE("Monte Carlo is deterministic for a fixed seed and trial count") {
    const auto a = outage::pe_monte_carlo(refsys(), 0.8, 200000, 17);
    const auto b = outage::pe_monte_carlo(refsys(), 0.8, 200000, 17);
    CHECK(a.p_e == b.p_e);
    const auto c = outage::pe_monte_carlo(refsys(), 0.8, 200000, 18);
    CHECK(a.p_e != c.p_e);
    CHECK_THROWS_AS(outage::pe_monte_carlo(refsys(), 0.8, 0, 1), domain_error);
}

TEST_CASE("the outage event matches the weighted-average form draw for draw") {
    // same stream consumed by both forms must flag exactly the same trials
    const double rc = 0.8;
    rng::Stream s1(99), s2(99);
    long outages = 0;
    for (int t = 0; t < 100000; ++t) {
        const bool ev = outage::outage_event(refsys(), rc, s1);
        const double w = fading::sample_weighted_avg_mi(refsys(), rc, s2);
        const bool ev_avg = w < (1.0 + refsys().epsilon) * rc;
        CHECK(ev == ev_avg);
        outages += ev;
    }
    // sanity: the empirical rate is in the right ballpark
    const double rate = static_cast<double>(outages) / 100000.0;
    CHECK(rate > 0.8);
    CHECK(rate < 0.95);
}
