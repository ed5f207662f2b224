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

#include <cstdint>

namespace secrecylab {

/// Converts a power in dB to linear scale.
double db_to_linear(double db);
double linear_to_db(double linear);

/// Global run context for one (N, P) operating point.
///
/// Under the zero-noise eavesdropper model every closed form is invariant to
/// `eve_variance` (the Eve SNR is a ratio of two gains drawn from the same
/// distribution). It only scales the sampled Eve channel in simulation.
struct SystemConfig {
    int n_antennas = 2;
    double power = 1.0; ///< linear, P > 0
    double eve_variance = 1.0;
    std::uint64_t rng_seed = 0;

    /// Throws DomainError if N < 2, P <= 0 or eve_variance <= 0.
    void validate() const;
};

/// lambda(eps, N) = (N - 1) (eps^{1/(1-N)} - 1).
double lambda_quantity(double epsilon, int n_antennas);

/// Maximum allowable secrecy outage probability together with the derived
/// quantity lambda(eps, N) that every design formula consumes.
class SecrecyBudget {
public:
    SecrecyBudget(double epsilon, int n_antennas);

    double epsilon() const noexcept { return epsilon_; }
    int n_antennas() const noexcept { return n_antennas_; }
    double lambda() const noexcept { return lambda_; }

    /// True for eps == 1, where lambda == 0 and the secrecy constraint is void.
    bool unconstrained() const noexcept { return epsilon_ == 1.0; }

private:
    double epsilon_;
    int n_antennas_;
    double lambda_;
};

/// Rate pair of a wiretap code (bits per channel use).
struct WiretapRates {
    double codeword = 0.0; ///< R_b
    double message = 0.0;  ///< R_s

    /// Throws DomainError unless 0 <= message <= codeword.
    static WiretapRates make(double codeword, double message);

    double redundancy() const noexcept { return codeword - message; }
};

/// High-SNR throughput split into the unconstrained throughput and the
/// P-independent secrecy loss: eta = eta_unconstrained - eta_loss.
struct ThroughputDecomposition {
    double eta;
    double eta_unconstrained;
    double eta_loss;
};

/// 2 log2(sqrt(lambda) + 1), the secrecy loss shared by both schemes.
double secrecy_throughput_loss(const SecrecyBudget& budget);

/// Pr(gamma_e > gamma) = (1 + gamma (1/phi - 1) / (N - 1))^{1-N}, phi in (0, 1).
double eve_snr_ccdf(double gamma, double phi, int n_antennas);

/// Pr(C_e > R_b - R_s) for power split phi in (0, 1].
///
/// phi == 1 leaves no artificial noise, so a noiseless eavesdropper has
/// infinite SNR and the outage probability is 1 for every redundancy.
double secrecy_outage_probability(const WiretapRates& rates, double phi, int n_antennas);

/// p_tx(mu) = Q(N, mu): probability that ||h||^2 exceeds the threshold.
double transmit_probability(double threshold, int n_antennas);

/// log2(1 + P phi h2).
double capacity_bob(double power, double phi, double effective_gain);

} // namespace secrecylab
