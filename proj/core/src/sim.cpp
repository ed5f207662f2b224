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

#include "secrecylab/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "secrecylab/channel.hpp"
#include "secrecylab/errors.hpp"
#include "secrecylab/rng.hpp"

namespace secrecylab::sim {

namespace {

struct BlockTally {
    std::uint64_t trials = 0;
    std::uint64_t transmissions = 0;
    std::uint64_t secrecy_outages = 0;
    std::uint64_t decode_failures = 0;
    double rate_sum = 0.0;
    double rate_sum_sq = 0.0;
    std::vector<std::uint64_t> bin_transmissions;
    std::vector<std::uint64_t> bin_outages;
};

std::uint64_t block_count(std::uint64_t items)
{
    return (items + kBlockSize - 1) / kBlockSize;
}

// Runs `body(block)` for every block, round-robin over `workers` threads.
template <typename Body>
void for_each_block(std::uint64_t blocks, int workers, Body&& body)
{
    const auto threads = static_cast<std::uint64_t>(std::max(1, workers));
    if (threads == 1 || blocks <= 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) {
            body(b);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::uint64_t w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t b = w; b < blocks; b += threads) {
                body(b);
            }
        });
    }
}

Estimate binomial(std::uint64_t hits, std::uint64_t n)
{
    if (n == 0) {
        return {};
    }
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return {p, 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

struct TrialDesign {
    bool transmitting;
    double phi;
    WiretapRates rates;
};

} // namespace

void CampaignSpec::validate() const
{
    if (trials < 1) {
        throw ConfigError("trials", "must be >= 1");
    }
    if (worker_streams < 1) {
        throw ConfigError("worker_streams", "must be >= 1");
    }
    if (!(eve_noise_variance >= 0.0)) {
        throw ConfigError("eve_noise_variance", "must be >= 0");
    }
    try {
        config.validate();
    } catch (const DomainError& e) {
        throw ConfigError("config", e.what());
    }
    if (!std::is_sorted(gain_bin_edges.begin(), gain_bin_edges.end()) || gain_bin_edges.size() == 1) {
        throw ConfigError("gain_bin_edges", "need zero or >= 2 ascending edges");
    }
    if (const auto* design = std::get_if<nae::NaeDesign>(&scheme)) {
        const bool rates_ok = design->rates.message >= 0.0 && design->rates.message <= design->rates.codeword;
        if (!rates_ok || !(design->phi > 0.0 && design->phi <= 1.0) || !(design->threshold >= 0.0)) {
            throw ConfigError("scheme", "NAE design violates 0 <= R_s <= R_b, phi in (0, 1] or mu >= 0");
        }
    } else if (std::get<SecrecyBudget>(scheme).n_antennas() != config.n_antennas) {
        throw ConfigError("scheme", "AE budget and config disagree on N");
    }
}

SimulationReport simulate_campaign(const CampaignSpec& spec)
{
    spec.validate();
    const SystemConfig& config = spec.config;
    const std::size_t bin_count = spec.gain_bin_edges.empty() ? 0 : spec.gain_bin_edges.size() - 1;

    const auto design_for = [&](double gain) -> TrialDesign {
        if (const auto* design = std::get_if<nae::NaeDesign>(&spec.scheme)) {
            return {gain > design->threshold, design->phi, design->rates};
        }
        const auto point = ae::adapt_design(gain, std::get<SecrecyBudget>(spec.scheme), config);
        return {point.transmitting, point.phi, point.rates};
    };

    const std::uint64_t blocks = block_count(spec.trials);
    std::vector<BlockTally> tallies(blocks);
    for_each_block(blocks, spec.worker_streams, [&](std::uint64_t block) {
        BlockTally& tally = tallies[block];
        tally.bin_transmissions.assign(bin_count, 0);
        tally.bin_outages.assign(bin_count, 0);
        rng::Stream stream(config.rng_seed, block);
        const std::uint64_t first = block * kBlockSize;
        tally.trials = std::min(kBlockSize, spec.trials - first);
        for (std::uint64_t t = 0; t < tally.trials; ++t) {
            const auto draw = channel::draw_channel(stream, config);
            const TrialDesign design = design_for(draw.effective_gain);
            if (!design.transmitting) {
                continue;
            }
            ++tally.transmissions;
            const auto split = channel::NoiseSplit::make(config.power, design.phi, config.n_antennas);
            const double eve_snr = channel::eve_snr_sample(draw, split, spec.eve_noise_variance);
            const double eve_capacity = std::log1p(eve_snr) / std::numbers::ln2;
            const bool outage = eve_capacity > design.rates.redundancy();
            tally.secrecy_outages += outage ? 1 : 0;
            if (design.rates.codeword > capacity_bob(config.power, design.phi, draw.effective_gain)) {
                ++tally.decode_failures;
            }
            tally.rate_sum += design.rates.message;
            tally.rate_sum_sq += design.rates.message * design.rates.message;

            if (bin_count > 0) {
                const auto it = std::upper_bound(spec.gain_bin_edges.begin(), spec.gain_bin_edges.end(),
                                                 draw.effective_gain);
                if (it != spec.gain_bin_edges.begin() && it != spec.gain_bin_edges.end()) {
                    const auto bin = static_cast<std::size_t>(it - spec.gain_bin_edges.begin() - 1);
                    ++tally.bin_transmissions[bin];
                    tally.bin_outages[bin] += outage ? 1 : 0;
                }
            }
        }
    });

    SimulationReport report;
    report.bins.resize(bin_count);
    for (std::size_t i = 0; i < bin_count; ++i) {
        report.bins[i].lower = spec.gain_bin_edges[i];
        report.bins[i].upper = spec.gain_bin_edges[i + 1];
    }
    double rate_sum = 0.0;
    double rate_sum_sq = 0.0;
    for (const auto& tally : tallies) {
        report.trials += tally.trials;
        report.transmissions += tally.transmissions;
        report.secrecy_outages += tally.secrecy_outages;
        report.decode_failures += tally.decode_failures;
        rate_sum += tally.rate_sum;
        rate_sum_sq += tally.rate_sum_sq;
        for (std::size_t i = 0; i < bin_count; ++i) {
            report.bins[i].transmissions += tally.bin_transmissions[i];
            report.bins[i].secrecy_outages += tally.bin_outages[i];
        }
    }

    report.p_tx = binomial(report.transmissions, report.trials);
    report.p_so = binomial(report.secrecy_outages, report.transmissions);
    const double n = static_cast<double>(report.trials);
    const double mean = rate_sum / n;
    report.throughput.value = mean;
    if (report.trials > 1) {
        const double variance = std::max(0.0, (rate_sum_sq - n * mean * mean) / (n - 1.0));
        report.throughput.half_width = 1.96 * std::sqrt(variance / n);
    }
    return report;
}

double validate_eve_ccdf(double phi, int n_antennas, std::uint64_t samples, std::uint64_t seed,
                         CcdfReference reference, int workers)
{
    detail::require_domain(phi > 0.0 && phi < 1.0, "validate_eve_ccdf: phi must lie in (0, 1)");
    detail::require_domain(n_antennas >= 2, "validate_eve_ccdf: n_antennas must be >= 2");
    detail::require_domain(samples >= 10000, "validate_eve_ccdf: need at least 1e4 samples");

    SystemConfig config;
    config.n_antennas = n_antennas;
    config.power = 1.0;
    config.rng_seed = seed;
    const auto split = channel::NoiseSplit::make(config.power, phi, n_antennas);

    std::vector<double> draws(samples);
    const std::uint64_t blocks = block_count(samples);
    for_each_block(blocks, workers, [&](std::uint64_t block) {
        rng::Stream stream(seed, block);
        const std::uint64_t first = block * kBlockSize;
        const std::uint64_t last = std::min(samples, first + kBlockSize);
        for (std::uint64_t i = first; i < last; ++i) {
            draws[i] = channel::eve_snr_sample(channel::draw_channel(stream, config), split);
        }
    });
    std::sort(draws.begin(), draws.end());

    const double m = n_antennas - 1.0;
    const double rate = (1.0 - phi) / phi;
    const auto ccdf = [&](double gamma) {
        if (reference.kind == CcdfReference::Kind::exponential_limit) {
            return std::exp(-gamma * rate);
        }
        return eve_snr_ccdf(gamma, phi, n_antennas);
    };
    // Inverse of the reference c.c.d.f.
    const auto threshold = [&](double q) {
        if (reference.kind == CcdfReference::Kind::exponential_limit) {
            return -std::log(q) / rate;
        }
        return std::expm1(-std::log(q) / m) * m / rate;
    };

    constexpr int kGrid = 200;
    double worst = 0.0;
    for (int i = 0; i < kGrid; ++i) {
        const double q = 0.001 + (0.999 - 0.001) * i / (kGrid - 1);
        const double gamma = threshold(q);
        const auto above = draws.end() - std::upper_bound(draws.begin(), draws.end(), gamma);
        const double empirical = static_cast<double>(above) / static_cast<double>(samples);
        worst = std::max(worst, std::abs(empirical - ccdf(gamma)));
    }
    return worst;
}

ae::AeThroughputReport ae_throughput_report(const SecrecyBudget& budget, const SystemConfig& config,
                                            std::uint64_t trials, int workers)
{
    CampaignSpec spec;
    spec.scheme = budget;
    spec.trials = trials;
    spec.config = config;
    spec.worker_streams = workers;
    const SimulationReport mc = simulate_campaign(spec);
    const auto simple = ae::throughput_approx_simple(budget, config);
    return ae::AeThroughputReport{
        ae::throughput_exact(budget, config),
        mc.throughput.value,
        mc.throughput.half_width,
        budget.unconstrained() ? std::numeric_limits<double>::quiet_NaN() : ae::throughput_approx_full(budget, config),
        simple.eta,
        simple.eta_loss,
    };
}

} // namespace secrecylab::sim
