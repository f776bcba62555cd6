#pragma once

#include <cstdint>
#include <string>

#include "pdfade/fading.hpp"

namespace pdfade::message {

enum class QMethod { BinomialExact, GaussianCLT, FullMonteCarlo };

std::string to_string(QMethod method);

struct MessageErrorResult {
    double q = 0;
    double log10_q = 0;   // log-domain value; finite even when q underflows.
                          // -inf only when q is mathematically zero.
    QMethod method = QMethod::BinomialExact;
    long n = 0;
    double p_e_used = 0;  // NaN for FullMonteCarlo (no single p_e exists)
};

// Exact tail of the binomial: the message fails when fewer than m_hat of the
// n packets survive, each surviving independently with probability 1 - p_e:
//
//   q = sum_{i=0}^{m_hat-1} C(n,i) (1-p_e)^i p_e^{n-i}
//
// Accumulated with log-sum-exp over lgamma-based log terms, so it stays exact
// to >= 10 significant digits for n up to 10^4 and arbitrarily deep tails.
MessageErrorResult q_binomial(long n, int m_hat, double p_e);

// CLT approximation  q = Phi[ ((m_hat-1) - n(1-p_e)) / sqrt(n p_e (1-p_e)) ].
// p_e in {0, 1} short-circuits to the exact limits.
MessageErrorResult q_gaussian(long n, int m_hat, double p_e);

// The Phi argument above; this is the quantity the optimizer minimizes.
// Returns -inf / +inf at the p_e = 0 / 1 endpoints.
double gaussian_phi_argument(long n, int m_hat, double p_e);

// Full-system Monte Carlo: per trial, n packets are each given an independent
// weighted-average mutual information draw; a packet succeeds when
// W > (1+epsilon) rc, the message fails when successes < m_hat.
MessageErrorResult q_full_monte_carlo(const fading::SystemParams& params, double rc,
                                      long trials, std::uint64_t seed);

}  // namespace pdfade::message
