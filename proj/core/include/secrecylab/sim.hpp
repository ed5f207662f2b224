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
#include <variant>
#include <vector>

#include "secrecylab/ae.hpp"
#include "secrecylab/nae.hpp"
#include "secrecylab/secrecy.hpp"

namespace secrecylab::sim {

/// Trials are cut into blocks of this size; block b draws from rng stream b.
inline constexpr std::uint64_t kBlockSize = 4096;

struct CampaignSpec {
    /// Fixed NAE design, or the budget from which AE designs are derived per trial.
    std::variant<nae::NaeDesign, SecrecyBudget> scheme;
    std::uint64_t trials = 1;
    SystemConfig config;
    int worker_streams = 1;
    /// Receiver noise at Eve. Zero is the worst case; positive values make
    /// the empirical outage an upper-bounded quantity.
    double eve_noise_variance = 0.0;
    /// Optional ascending ||h||^2 edges for per-bin outage calibration.
    std::vector<double> gain_bin_edges;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

struct Estimate {
    double value = 0.0;
    double half_width = 0.0; ///< 95% confidence half-width

    bool operator==(const Estimate&) const = default;
};

struct GainBin {
    double lower = 0.0;
    double upper = 0.0;
    std::uint64_t transmissions = 0;
    std::uint64_t secrecy_outages = 0;

    bool operator==(const GainBin&) const = default;
};

struct SimulationReport {
    std::uint64_t trials = 0;
    std::uint64_t transmissions = 0;
    std::uint64_t secrecy_outages = 0; ///< C_e > R_e among transmissions
    std::uint64_t decode_failures = 0; ///< R_b > C_b among transmissions
    Estimate p_tx;
    Estimate p_so; ///< conditional on transmission
    Estimate throughput;
    std::vector<GainBin> bins;

    bool operator==(const SimulationReport&) const = default;
};

/// Runs the on-off protocol for `trials` fading realizations.
///
/// Every trial samples h then g from its block's stream, whether or not it
/// transmits. Per-block tallies are merged in block order, so the report is
/// identical for any worker count.
SimulationReport simulate_campaign(const CampaignSpec& spec);

struct CcdfReference {
    enum class Kind { closed_form, exponential_limit };
    Kind kind = Kind::closed_form;
};

/// Max |empirical - reference| of the Eve SNR c.c.d.f. over 200 thresholds
/// spaced evenly in reference quantile over [0.001, 0.999]. Samples go
/// through the full beamforming path with P = 1 and zero receiver noise.
double validate_eve_ccdf(double phi, int n_antennas, std::uint64_t samples, std::uint64_t seed,
                         CcdfReference reference = {}, int workers = 1);

/// Quadrature, Monte Carlo and both high-SNR approximations of the AE
/// throughput at one operating point.
ae::AeThroughputReport ae_throughput_report(const SecrecyBudget& budget, const SystemConfig& config,
                                            std::uint64_t trials, int workers = 1);

} // namespace secrecylab::sim
