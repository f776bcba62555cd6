// Regenerates tests/golden/simulation.csv: the seeded-simulation and
// exhaustive-search reference numbers. Run once, commit the output, and only
// regenerate with a note in the provenance column.

#include <cstdio>
#include <iostream>

#include "pdfade/message_error.hpp"
#include "pdfade/optimizer.hpp"
#include "pdfade/outage.hpp"
#include "pdfade/validation.hpp"

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void row(const std::string& scenario, const std::string& inputs, double expected,
         const std::string& tol, const std::string& kind,
         const std::string& provenance) {
    std::cout << scenario << "," << inputs << "," << num(expected) << "," << tol
              << "," << kind << ",\"" << provenance << "\"\n";
}

}  // namespace

int main() {
    using namespace pdfade;

    fading::SystemParams ref;
    ref.m = 50;
    ref.m_hat = 50;
    ref.k = 20;
    ref.l_f = 10;
    ref.T = 4000;
    ref.P = std::pow(10.0, 0.5);
    ref.epsilon = 0.05;

    std::cout << "scenario,inputs,expected,tolerance,tol_kind,provenance\n";

    const auto pe_mc = outage::pe_monte_carlo(ref, 0.5, 1000000, 1);
    row("pe_mc_refsys_rc05", "m=50 m_hat=50 k=20 l_f=10 T=4000 P_dB=5 eps=0.05 "
        "rc=0.5 trials=1e6 seed=1",
        pe_mc.p_e, "1e-5", "abs",
        "seeded Monte Carlo oracle run of the rearranged outage event, "
        "frozen 2026-08-17; one flipped trial moves the estimate by 1e-6");

    const auto moments = validation::oracle_moments(ref.P, 1000000, 7);
    row("oracle_mean_5dB", "P_dB=5 samples=1e6 seed=7", moments.mean, "1e-12",
        "rel", "seeded sampling oracle for the log(1+gamma) moments, frozen "
        "2026-08-17");
    row("oracle_var_5dB", "P_dB=5 samples=1e6 seed=7", moments.var, "1e-12",
        "rel", "seeded sampling oracle for the log(1+gamma) moments, frozen "
        "2026-08-17");

    const auto best4 = optim::optimize(ref, outage::ApproxMethod::Approx4);
    row("opt_refsys_approx4_n", "reference system T=4000",
        static_cast<double>(best4.best.split.n), "0.5", "abs",
        "exhaustive search over the integral packet grid, frozen 2026-08-17; "
        "cross-checked against an independent scipy evaluation of the same "
        "closed forms");
    row("opt_refsys_approx4_rc", "reference system T=4000", best4.best.split.rc,
        "1e-12", "rel", "exhaustive search, frozen 2026-08-17");
    row("opt_refsys_approx4_log10q", "reference system T=4000",
        best4.best.q.log10_q, "1e-9", "abs",
        "exhaustive search, frozen 2026-08-17");
    row("opt_refsys_approx4_pe", "reference system T=4000", best4.best.p_e.p_e,
        "1e-12", "rel", "exhaustive search, frozen 2026-08-17");

    const auto best1 = optim::optimize(ref, outage::ApproxMethod::Approx1);
    row("opt_refsys_approx1_n", "reference system T=4000",
        static_cast<double>(best1.best.split.n), "0.5", "abs",
        "exhaustive search, frozen 2026-08-17");

    const auto qmc = message::q_full_monte_carlo(ref, 0.25, 100000, 3);
    row("qfullmc_refsys_n50", "reference system T=4000 rc=0.25 trials=1e5 seed=3",
        qmc.q, "1e-4", "abs",
        "seeded full-system Monte Carlo (packet-level composition), frozen "
        "2026-08-17; one flipped trial moves the estimate by 1e-5");

    return 0;
}
