/*
   Copyright 2026 The secrecylab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "secrecylab/secrecy.hpp"

// Adaptive encoding: phi, R_b and R_s are recomputed for every realization
// of Bob's channel so that each transmission meets the outage limit exactly.

namespace secrecylab::ae {

struct AeDesignPoint {
    double effective_gain = 0.0; ///< ||h||^2
    double effective_snr = 0.0;  ///< tau = P ||h||^2
    double phi = 1.0;
    WiretapRates rates;
    bool transmitting = false;
};

/// Transmission threshold mu* = lambda / P.
double transmit_threshold(const SecrecyBudget& budget, const SystemConfig& config);

/// Per-realization optimum. Silent (R_s = 0, phi = 1) when
/// ||h||^2 <= lambda / P. Otherwise
///   phi* = (tau - lambda) / (sqrt(tau lambda (tau - lambda + 1)) + tau),
///   R_b  = log2(1 + P phi* ||h||^2),
///   R_s  = 2 log2((tau + 1) / (sqrt(lambda tau) + sqrt(tau - lambda + 1))).
/// These are the conjugate forms of the textbook expressions, which divide
/// by (lambda - 1); they stay exact through lambda == 1. R_s is evaluated as
/// log1p of a square, so it keeps full relative accuracy just above the
/// threshold and at large tau.
AeDesignPoint adapt_design(double effective_gain, const SecrecyBudget& budget, const SystemConfig& config);

/// R_s^max(||h||^2) alone, zero below the threshold.
double max_message_rate(double effective_gain, const SecrecyBudget& budget, double power);

/// E[R_s^max(||h||^2)] with ||h||^2 ~ Gamma(N, 1), by adaptive Gauss-Kronrod
/// over (lambda/P, lambda/P + 50 + 10N]; the truncated tail is bounded
/// analytically below 1e-12. Throws ConvergenceError if the summed error
/// estimate exceeds 1e-9.
double throughput_exact(const SecrecyBudget& budget, const SystemConfig& config);

/// High-SNR approximation including the Q(N, lambda/P) and 2F2 correction
/// terms. Requires eps < 1.
double throughput_approx_full(const SecrecyBudget& budget, const SystemConfig& config);

/// eta_unconstrained = log2 P + psi(N) / ln 2, eta_loss = 2 log2(sqrt(lambda) + 1).
ThroughputDecomposition throughput_approx_simple(const SecrecyBudget& budget, const SystemConfig& config);

/// High-SNR AE-over-NAE gain:
/// log2(ln P) / N + psi(N) / ln 2 - log2((N-1)!) / N. Independent of eps.
double throughput_gain_approx(const SystemConfig& config);

struct AeThroughputReport {
    double exact_quadrature;
    double exact_monte_carlo;
    double exact_monte_carlo_half_width; ///< 95% confidence half-width
    double approx_full;                  ///< NaN when eps == 1
    double approx_simple;
    double loss;
};

} // namespace secrecylab::ae
