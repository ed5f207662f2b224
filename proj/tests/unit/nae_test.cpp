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
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "secrecylab/errors.hpp"
#include "secrecylab/nae.hpp"
#include "secrecylab/specfun.hpp"

using namespace secrecylab;

namespace {

SystemConfig config_of(int n, double power)
{
    SystemConfig c;
    c.n_antennas = n;
    c.power = power;
    return c;
}

} // namespace

TEST(DelayOptimalDesign, ReferencePoint)
{
    const SecrecyBudget budget(0.01, 4);
    const auto d = nae::delay_optimal_design(2.0, budget, config_of(4, 100.0));
    EXPECT_NEAR(d.phi, 0.2076157833454441, 1e-13);
    EXPECT_NEAR(d.rates.codeword, 3.949513312945939, 1e-13);
    EXPECT_EQ(d.rates.message, 2.0);
    EXPECT_NEAR(d.threshold, 0.6959860294278164, 1e-13);
    EXPECT_NEAR(d.p_tx, 0.9943597415207854, 1e-13);
    EXPECT_NEAR(d.throughput, 2.0 * d.p_tx, 1e-15);
    EXPECT_NEAR(secrecy_outage_probability(d.rates, d.phi, 4), 0.01, 1e-12);

    const auto low = nae::delay_optimal_design(2.0, budget, config_of(4, 10.0));
    EXPECT_NEAR(low.p_tx, 0.08388201579590641, 1e-13);
    EXPECT_EQ(low.phi, d.phi);
    EXPECT_EQ(low.rates.codeword, d.rates.codeword);
}

TEST(DelayOptimalDesign, UnconstrainedBranch)
{
    const auto d = nae::delay_optimal_design(3.0, SecrecyBudget(1.0, 4), config_of(4, 100.0));
    EXPECT_EQ(d.phi, 1.0);
    EXPECT_EQ(d.rates.codeword, 3.0);
    EXPECT_NEAR(d.threshold, 7.0 / 100.0, 1e-16);
}

TEST(DelayOptimalDesign, BeatsOrTiesBruteForceGrid)
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 40; ++i) {
        const int n = 2 + static_cast<int>(u(rng) * 7);
        const double rs = 0.5 + 5.5 * u(rng);
        const double eps = std::exp(std::log(1e-3) + u(rng) * (std::log(0.5) - std::log(1e-3)));
        const double power = std::pow(10.0, 4.0 * u(rng));
        const auto d = nae::delay_optimal_design(rs, SecrecyBudget(eps, n), config_of(n, power));
        const auto grid = oracle::nae_grid(rs, eps, n, power, 1e-3);
        EXPECT_LE(grid.best_p_tx, d.p_tx + 1e-9);
        EXPECT_NEAR(grid.argmin_mu, d.phi, 2e-3);
        EXPECT_LE(d.threshold, oracle::nae_threshold(grid.argmin_mu, rs, eps, n, power) * (1 + 1e-12));
    }
}

TEST(DelayOptimalDesign, RejectsBadInput)
{
    EXPECT_THROW(nae::delay_optimal_design(0.0, SecrecyBudget(0.01, 4), config_of(4, 100.0)), DomainError);
    EXPECT_THROW(nae::delay_optimal_design(1.0, SecrecyBudget(0.01, 3), config_of(4, 100.0)), DomainError);
}

TEST(OptimalMessageRate, ReferenceOptimum)
{
    const SecrecyBudget budget(0.01, 4);
    const auto config = config_of(4, 100.0);
    const auto opt = nae::optimal_message_rate(budget, config);
    EXPECT_NEAR(opt.message_rate, 3.4465326, 2e-6);
    EXPECT_NEAR(opt.design.throughput, 2.9683949, 2e-7);
    EXPECT_NEAR(nae::throughput_at_rate(2.8, budget, config), 2.69375, 1e-5);
    for (double delta : {-0.05, -0.01, 0.01, 0.05}) {
        EXPECT_LT(nae::throughput_at_rate(opt.message_rate + delta, budget, config), opt.design.throughput);
    }
    const auto hi = nae::optimal_message_rate(budget, config_of(4, 1e4));
    EXPECT_NEAR(hi.message_rate, 9.5118, 1e-4);
    EXPECT_NEAR(hi.design.throughput, 9.0501501, 1e-6);
}

TEST(OptimalMessageRate, WorksWhereTransmitProbabilityUnderflows)
{
    // lambda = 999 at P = 1: p_tx ~ e^{-1000} everywhere, far below DBL_MIN.
    const SecrecyBudget budget(1e-3, 2);
    const auto config = config_of(2, 1.0);
    const auto opt = nae::optimal_message_rate(budget, config);
    EXPECT_GT(opt.message_rate, 0.0);
    EXPECT_TRUE(std::isfinite(opt.message_rate));
    EXPECT_EQ(opt.design.throughput, 0.0);
    const auto log_eta = [&](double rate) {
        const auto d = nae::delay_optimal_design(rate, budget, config);
        return std::log(rate) + specfun::log_reg_upper_gamma(2, d.threshold);
    };
    for (double f : {0.9, 0.99, 1.01, 1.1}) {
        EXPECT_LT(log_eta(opt.message_rate * f), log_eta(opt.message_rate)) << f;
    }
}

TEST(HighSnr, RateApproximation)
{
    const SecrecyBudget budget(0.01, 4);
    EXPECT_NEAR(nae::rs_high_snr_approx(budget, config_of(4, 100.0)), 2.795536976533717, 1e-12);
    EXPECT_NEAR(nae::rs_high_snr_approx(budget, config_of(4, 1e4)), 9.045538093731821, 1e-12);
    // Relative gap to the exact optimum shrinks with P.
    double previous = 1.0;
    for (double power : {1e4, 1e6, 1e8, 1e12}) {
        const auto config = config_of(4, power);
        const double exact = nae::optimal_message_rate(budget, config).message_rate;
        const double gap = std::abs(nae::rs_high_snr_approx(budget, config) - exact) / exact;
        EXPECT_LT(gap, previous) << power;
        previous = gap;
    }
    EXPECT_LT(previous, 0.01);
    // Unconstrained case at 40 dB.
    const auto config = config_of(4, 1e4);
    const double approx = nae::rs_high_snr_approx(SecrecyBudget(1.0, 4), config);
    const double exact = nae::optimal_message_rate(SecrecyBudget(1.0, 4), config).message_rate;
    EXPECT_NEAR(approx, 13.1277, 1e-4);
    EXPECT_LT(std::abs(approx - exact) / exact, 0.05);
}

TEST(HighSnr, ThroughputDecomposition)
{
    const auto unconstrained = nae::throughput_high_snr_approx(SecrecyBudget(1.0, 4), config_of(4, 100.0));
    EXPECT_NEAR(unconstrained.eta, 6.739283196780082, 1e-12);
    EXPECT_EQ(unconstrained.eta_loss, 0.0);
    const auto d = nae::throughput_high_snr_approx(SecrecyBudget(0.01, 4), config_of(4, 1e4));
    EXPECT_NEAR(d.eta_unconstrained, 13.133139386554808, 1e-12);
    EXPECT_NEAR(d.eta_loss, 4.212203047721241, 1e-12);
    EXPECT_NEAR(d.eta, 8.920936338833567, 1e-12);
    EXPECT_THROW(nae::throughput_high_snr_approx(SecrecyBudget(0.01, 4), config_of(4, 1.0)), DomainError);
}

TEST(HighSnr, LossDecreasesToLimitInN)
{
    const double limit = 2.0 * std::log2(std::sqrt(-std::log(0.01)) + 1.0);
    EXPECT_NEAR(limit, 3.3070061819595, 1e-12);
    double previous = INFINITY;
    for (int n : {2, 4, 16, 64, 256, 4096, 1 << 20}) {
        const double loss = secrecy_throughput_loss(SecrecyBudget(0.01, n));
        EXPECT_LT(loss, previous);
        EXPECT_GT(loss, limit);
        previous = loss;
    }
    EXPECT_NEAR(previous, limit, 1e-4);
}

TEST(PowerCost, ClosedForms)
{
    const auto first = nae::power_cost_db(1.0, 0.1, 4);
    EXPECT_NEAR(first.approx_db, 9.130343346684542, 1e-12);
    EXPECT_NEAR(first.exact_form_db, first.approx_db, 1e-12);
    const auto second = nae::power_cost_db(0.1, 0.01, 4);
    EXPECT_NEAR(second.approx_db, 10.0 / 3.0, 1e-12);
    EXPECT_NEAR(second.exact_form_db, 3.5496513052287915, 1e-12);
    EXPECT_THROW(nae::power_cost_db(0.01, 0.1, 4), DomainError);
}

TEST(MinPower, RoundTripsThroughDesign)
{
    const SecrecyBudget budget(0.01, 4);
    const double p_tx = nae::delay_optimal_design(2.0, budget, config_of(4, 100.0)).p_tx;
    EXPECT_NEAR(nae::min_power(2.0, budget, p_tx), 100.0, 1e-8);
    EXPECT_NEAR(nae::min_power(2.0, budget, 0.99439), 100.1557, 1e-4);
    EXPECT_NEAR(nae::min_power(2.0, budget, 0.9), 39.88985389571808, 1e-9);
    EXPECT_THROW(nae::min_power(2.0, budget, 1.0), DomainError);
}

TEST(MinPower, DecreasesWithAntennas)
{
    double previous = INFINITY;
    for (int n = 2; n <= 64; n *= 2) {
        const double p = nae::min_power(2.0, SecrecyBudget(0.01, n), 0.9);
        EXPECT_LT(p, previous);
        previous = p;
    }
}

TEST(PowerForTarget, InvertsOptimizedThroughput)
{
    for (double eps : {1.0, 0.1, 0.01}) {
        const SecrecyBudget budget(eps, 4);
        const double p = nae::power_for_target_throughput(8.0, budget);
        EXPECT_NEAR(nae::optimal_message_rate(budget, config_of(4, p)).design.throughput, 8.0, 1e-7) << eps;
    }
    EXPECT_NEAR(linear_to_db(nae::power_for_target_throughput(8.0, SecrecyBudget(1.0, 4))), 23.9757, 1e-4);
    // Targets below the throughput at -20 dB are still found.
    const SecrecyBudget loose(1.0, 4);
    const double tiny = nae::optimal_message_rate(loose, config_of(4, 1e-3)).design.throughput;
    EXPECT_NEAR(nae::power_for_target_throughput(tiny, loose), 1e-3, 1e-9);
}
