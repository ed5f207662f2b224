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

#include <cmath>

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "secrecylab/errors.hpp"
#include "secrecylab/sim.hpp"

using namespace secrecylab;

namespace {

sim::CampaignSpec campaign(std::uint64_t trials, std::uint64_t seed)
{
    sim::CampaignSpec spec;
    spec.config.n_antennas = 4;
    spec.config.power = 100.0;
    spec.config.rng_seed = seed;
    spec.trials = trials;
    return spec;
}

bool within(double value, double target, double band)
{
    return std::abs(value - target) <= band;
}

} // namespace

TEST(Campaign, NaeCalibration)
{
    auto spec = campaign(300000, 1);
    const SecrecyBudget budget(0.01, 4);
    const auto design = nae::delay_optimal_design(2.0, budget, spec.config);
    spec.scheme = design;
    const auto r = sim::simulate_campaign(spec);
    EXPECT_EQ(r.trials, 300000u);
    EXPECT_EQ(r.decode_failures, 0u);
    const double tx = static_cast<double>(r.transmissions);
    EXPECT_TRUE(within(r.p_so.value, 0.01, 3.0 * std::sqrt(0.01 * 0.99 / tx))) << r.p_so.value;
    EXPECT_TRUE(within(r.p_tx.value, design.p_tx, 3.0 * std::sqrt(design.p_tx * (1 - design.p_tx) / 3e5)));
    EXPECT_NEAR(r.p_so.half_width, 1.96 * std::sqrt(r.p_so.value * (1 - r.p_so.value) / tx), 1e-15);
    // Throughput is R_s on every transmission, zero otherwise.
    EXPECT_NEAR(r.throughput.value, 2.0 * r.p_tx.value, 1e-12);
}

TEST(Campaign, AeCalibrationPerGainBin)
{
    auto spec = campaign(1000000, 2);
    const SecrecyBudget budget(0.01, 4);
    spec.scheme = budget;
    // Ten bins of equal Gamma(4, 1) probability above the threshold.
    const double mu = budget.lambda() / spec.config.power;
    const double above = boost::math::gamma_q(4.0, mu);
    for (int i = 0; i <= 10; ++i) {
        spec.gain_bin_edges.push_back(i == 10 ? 1e300 : boost::math::gamma_q_inv(4.0, above * (1.0 - i / 10.0)));
    }
    spec.gain_bin_edges.front() = mu;
    const auto r = sim::simulate_campaign(spec);
    EXPECT_EQ(r.decode_failures, 0u);
    ASSERT_EQ(r.bins.size(), 10u);
    std::uint64_t binned = 0;
    for (const auto& bin : r.bins) {
        ASSERT_GT(bin.transmissions, 0u);
        const double tx = static_cast<double>(bin.transmissions);
        EXPECT_TRUE(within(bin.secrecy_outages / tx, 0.01, 3.0 * std::sqrt(0.01 * 0.99 / tx)))
            << bin.lower << " " << bin.secrecy_outages / tx;
        binned += bin.transmissions;
    }
    EXPECT_EQ(binned, r.transmissions);
    const double exact = ae::throughput_exact(budget, spec.config);
    EXPECT_TRUE(within(r.throughput.value, exact, 1.5 * r.throughput.half_width)) << r.throughput.value;
}

TEST(Campaign, WorkerCountDoesNotChangeReport)
{
    for (int scheme = 0; scheme < 2; ++scheme) {
        auto spec = campaign(50000, 3);
        const SecrecyBudget budget(0.1, 4);
        if (scheme == 0) {
            spec.scheme = nae::delay_optimal_design(3.0, budget, spec.config);
        } else {
            spec.scheme = budget;
        }
        spec.gain_bin_edges = {0.0, 2.0, 4.0, 100.0};
        const auto reference = sim::simulate_campaign(spec);
        for (int workers : {2, 4, 16}) {
            spec.worker_streams = workers;
            EXPECT_EQ(sim::simulate_campaign(spec), reference) << workers;
        }
        spec.config.rng_seed = 4;
        EXPECT_NE(sim::simulate_campaign(spec), reference);
    }
}

TEST(Campaign, SilentTrialGivesZeroThroughput)
{
    auto spec = campaign(1, 5);
    nae::NaeDesign design;
    design.rates = WiretapRates::make(2.0, 1.0);
    design.phi = 0.5;
    design.threshold = 1e9;
    spec.scheme = design;
    const auto r = sim::simulate_campaign(spec);
    EXPECT_EQ(r.trials, 1u);
    EXPECT_EQ(r.transmissions, 0u);
    EXPECT_EQ(r.throughput.value, 0.0);
    EXPECT_EQ(r.p_so.value, 0.0);
}

TEST(Campaign, EveReceiverNoiseOnlyLowersOutage)
{
    auto spec = campaign(200000, 6);
    spec.scheme = nae::delay_optimal_design(2.0, SecrecyBudget(0.05, 4), spec.config);
    const auto noiseless = sim::simulate_campaign(spec);
    spec.eve_noise_variance = 10.0;
    const auto noisy = sim::simulate_campaign(spec);
    EXPECT_EQ(noisy.transmissions, noiseless.transmissions);
    EXPECT_LT(noisy.secrecy_outages, noiseless.secrecy_outages);
}

TEST(Campaign, ConfigErrorsNameTheField)
{
    auto spec = campaign(0, 0);
    spec.scheme = SecrecyBudget(0.1, 4);
    try {
        sim::simulate_campaign(spec);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.field(), "trials");
    }
    spec.trials = 10;
    spec.scheme = SecrecyBudget(0.1, 3);
    EXPECT_THROW(sim::simulate_campaign(spec), ConfigError);
    spec.scheme = SecrecyBudget(0.1, 4);
    spec.gain_bin_edges = {3.0, 1.0};
    EXPECT_THROW(sim::simulate_campaign(spec), ConfigError);
}

TEST(EveCcdfValidation, SmallRuns)
{
    using Kind = sim::CcdfReference::Kind;
    EXPECT_LT(sim::validate_eve_ccdf(0.5, 2, 200000, 1), 0.01);
    EXPECT_LT(sim::validate_eve_ccdf(0.3, 4, 200000, 2, {Kind::closed_form}, 3), 0.01);
    // Against the wrong reference, the N=2 law is visibly off.
    EXPECT_GT(sim::validate_eve_ccdf(0.5, 2, 200000, 1, {Kind::exponential_limit}), 0.05);
    EXPECT_EQ(sim::validate_eve_ccdf(0.3, 4, 20000, 9, {}, 1), sim::validate_eve_ccdf(0.3, 4, 20000, 9, {}, 4));
    EXPECT_THROW(sim::validate_eve_ccdf(1.0, 4, 20000, 1), DomainError);
    EXPECT_THROW(sim::validate_eve_ccdf(0.3, 4, 100, 1), DomainError);
}

TEST(AeReport, CombinesAllEstimates)
{
    SystemConfig config;
    config.n_antennas = 4;
    config.power = 100.0;
    const auto r = sim::ae_throughput_report(SecrecyBudget(0.01, 4), config, 100000, 2);
    EXPECT_NEAR(r.exact_quadrature, 4.264707755579698, 1e-9);
    EXPECT_NEAR(r.exact_monte_carlo, r.exact_quadrature, 3.0 * r.exact_monte_carlo_half_width);
    EXPECT_NEAR(r.loss, 4.212203047721241, 1e-12);
    EXPECT_TRUE(std::isfinite(r.approx_full));
    const auto open = sim::ae_throughput_report(SecrecyBudget(1.0, 4), config, 10000, 1);
    EXPECT_TRUE(std::isnan(open.approx_full));
    EXPECT_EQ(open.loss, 0.0);
}
