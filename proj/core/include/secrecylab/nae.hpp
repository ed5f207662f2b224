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

// Non-adaptive encoding: one codebook (R_b, R_s), one power split phi and one
// on-off threshold mu, fixed for every channel realization.

namespace secrecylab::nae {

struct NaeDesign {
    WiretapRates rates;
    double phi = 1.0;
    double threshold = 0.0; ///< mu; transmit iff ||h||^2 > mu
    double p_tx = 0.0;
    double throughput = 0.0; ///< p_tx * R_s
};

/// Maximizes the transmit probability for a fixed message rate under the
/// secrecy constraint. The constraint is active at the optimum (outage == eps
/// for eps < 1). For eps == 1 there is no artificial noise: phi = 1,
/// R_b = R_s and mu = (2^{R_s} - 1) / P.
NaeDesign delay_optimal_design(double message_rate, const SecrecyBudget& budget, const SystemConfig& config);

/// Throughput p_tx^max(R_s) * R_s of the delay-optimal design.
double throughput_at_rate(double message_rate, const SecrecyBudget& budget, const SystemConfig& config);

struct RateOptimum {
    double message_rate;
    NaeDesign design;
};

/// Throughput-maximizing message rate R_s*.
///
/// d eta / d R_s has a single sign change (+ then -). It is estimated by
/// central differences of ln(eta) with a relative step of 1e-6, bracketed from
/// [1e-6, 2e-6] by doubling, and bisected to 1e-8 bits.
RateOptimum optimal_message_rate(const SecrecyBudget& budget, const SystemConfig& config);

/// Lambert-W high-SNR approximation of R_s*:
///   (W0(e N! P^N / (sqrt(lambda) + 1)^{2N}) - 1) / (N ln 2),
/// with the argument formed in the log domain.
double rs_high_snr_approx(const SecrecyBudget& budget, const SystemConfig& config);

/// eta_unconstrained = log2 P - log2(ln P) / N + log2((N-1)!) / N,
/// eta_loss = 2 log2(sqrt(lambda) + 1). Requires P > 1.
ThroughputDecomposition throughput_high_snr_approx(const SecrecyBudget& budget, const SystemConfig& config);

struct PowerCost {
    /// 20 log10(sqrt(lambda(eps2)) + 1) when eps1 == 1, otherwise the
    /// small-epsilon form 10 / (N - 1) log10(eps1 / eps2).
    double approx_db;
    /// 20 log10((sqrt(lambda(eps2)) + 1) / (sqrt(lambda(eps1)) + 1)).
    double exact_form_db;
};

/// Extra power (dB) needed at fixed high-SNR throughput when tightening the
/// outage limit from eps1 to eps2 <= eps1.
PowerCost power_cost_db(double eps1, double eps2, int n_antennas);

/// Minimum power meeting outage <= eps and p_tx >= delta at message rate R_s.
double min_power(double message_rate, const SecrecyBudget& budget, double delta);

/// Linear power at which the optimized NAE throughput equals `target`.
/// Bisection in dB to `tol_db`.
double power_for_target_throughput(double target, const SecrecyBudget& budget, double tol_db = 1e-9);

} // namespace secrecylab::nae
