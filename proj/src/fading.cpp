#include "pdfade/fading.hpp"

#include <cmath>
#include <sstream>

#include "pdfade/errors.hpp"
#include "pdfade/special.hpp"

namespace pdfade::fading {

std::vector<std::string> SystemParams::validate() const {
    if (m < 1) throw domain_error("m must be >= 1");
    if (m_hat < m) throw domain_error("m_hat must be >= m");
    if (!(k > 0)) throw domain_error("k must be positive");
    if (!(l_f >= 1)) throw domain_error("l_f must be >= 1");
    if (!(T > 0)) throw domain_error("T must be positive");
    if (!(P > 0)) throw domain_error("P must be positive");
    if (!(epsilon >= 0)) throw domain_error("epsilon must be >= 0");
    if (m_hat * l_f > T) {
        std::ostringstream msg;
        msg << "m_hat * l_f = " << m_hat * l_f << " exceeds T = " << T
            << "; the admissibility condition m_hat <= T / l_f fails";
        throw constraint_error(msg.str());
    }
    std::vector<std::string> warnings;
    if (l_f > T / 100.0) {
        std::ostringstream msg;
        msg << "l_f = " << l_f << " is not small against T = " << T
            << " (l_f << T assumed); results may be outside the model's regime";
        warnings.push_back(msg.str());
    }
    return warnings;
}

double mutual_info(double gamma) {
    if (!(gamma >= 0))  // also rejects NaN
        throw domain_error("mutual_info: SNR must be >= 0");
    return 0.5 * std::log1p(gamma);
}

FadingStats fading_stats(double p, const special::QuadratureSettings& quad) {
    // mu  = e^{1/P} alpha(P)                       = alpha_scaled
    // var = 2 e^{1/P} beta(P) + 2 e^{1/P} log(P) alpha(P) - e^{2/P} alpha(P)^2
    //     = 2 beta_scaled + 2 log(P) alpha_scaled - alpha_scaled^2
    const double a = special::alpha_scaled(p, quad);
    const double b = special::beta_scaled(p, quad);
    FadingStats stats;
    stats.P = p;
    stats.mu = a;
    stats.var = 2.0 * b + 2.0 * std::log(p) * a - a * a;
    if (!(stats.var > 0))
        throw numeric_error("fading_stats: computed variance is not positive; "
                            "quadrature settings are too loose");
    return stats;
}

void check_rc(const SystemParams& params, double rc) {
    const double lower = params.k * params.m_hat / params.T;
    const double upper = params.k / params.l_f;
    const double slack = kIntegerSnap;
    if (!(rc >= lower * (1.0 - slack)) || !(rc <= upper * (1.0 + slack))) {
        std::ostringstream msg;
        msg << "rc = " << rc << " outside the admissible range [" << lower
            << ", " << upper << "]";
        throw constraint_error(msg.str());
    }
}

FadeProfile fade_profile(const SystemParams& params, double rc) {
    check_rc(params, rc);
    const double x = params.k / (rc * params.l_f);
    FadeProfile prof;
    const double nearest = std::round(x);
    if (std::fabs(x - nearest) <= kIntegerSnap * std::max(1.0, x) && nearest >= 1.0) {
        // x is an integer up to rounding noise: no fractional fade
        prof.full_fades = static_cast<long>(nearest);
        prof.fractional_weight = 0.0;
    } else {
        prof.full_fades = static_cast<long>(std::floor(x));
        prof.fractional_weight = x - std::floor(x);
    }
    prof.total_fades = prof.full_fades + (prof.fractional_weight > 0 ? 1 : 0);
    return prof;
}

}  // namespace pdfade::fading
