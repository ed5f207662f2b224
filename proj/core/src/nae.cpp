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

#include "secrecylab/nae.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "secrecylab/errors.hpp"
#include "secrecylab/specfun.hpp"

namespace secrecylab::nae {

using detail::require_domain;

namespace {

void check_inputs(const SecrecyBudget& budget, const SystemConfig& config)
{
    config.validate();
    require_domain(budget.n_antennas() == config.n_antennas,
                   "nae: secrecy budget and system config disagree on N");
}

// (sqrt(2^{R_s} lambda) + sqrt(2^{R_s} - 1))^2, the threshold times P.
double scaled_threshold(double message_rate, double lambda)
{
    const double x = std::exp2(message_rate);
    const double xm1 = std::expm1(message_rate * std::numbers::ln2);
    const double root = std::sqrt(x * lambda) + std::sqrt(xm1);
    return root * root;
}

} // namespace

NaeDesign delay_optimal_design(double message_rate, const SecrecyBudget& budget, const SystemConfig& config)
{
    check_inputs(budget, config);
    require_domain(message_rate > 0.0 && std::isfinite(message_rate),
                   "delay_optimal_design: message rate must be positive");

    const double lambda = budget.lambda();
    const int n = config.n_antennas;
    NaeDesign design;
    if (budget.unconstrained()) {
        design.rates = WiretapRates::make(message_rate, message_rate);
        design.phi = 1.0;
    } else {
        const double x = std::exp2(message_rate);
        const double xm1 = std::expm1(message_rate * std::numbers::ln2);
        const double a = std::sqrt(x * lambda);
        const double b = std::sqrt(xm1);
        design.phi = b / (a + b);
        const double keep = -std::expm1(-message_rate * std::numbers::ln2); // 1 - 2^{-R_s}
        design.rates = WiretapRates::make(message_rate + std::log2(std::sqrt(keep * lambda) + 1.0), message_rate);
    }
    design.threshold = scaled_threshold(message_rate, lambda) / config.power;
    design.p_tx = transmit_probability(design.threshold, n);
    design.throughput = design.p_tx * message_rate;
    return design;
}

double throughput_at_rate(double message_rate, const SecrecyBudget& budget, const SystemConfig& config)
{
    return message_rate * specfun::reg_upper_gamma(
        config.n_antennas, scaled_threshold(message_rate, budget.lambda()) / config.power);
}

RateOptimum optimal_message_rate(const SecrecyBudget& budget, const SystemConfig& config)
{
    check_inputs(budget, config);

    // Central difference of ln(eta) = ln(R_s) + ln(p_tx^max): same sign as
    // d eta / d R_s, and finite even where p_tx underflows.
    const auto log_eta = [&](double rate) {
        return std::log(rate) + specfun::log_reg_upper_gamma(
            config.n_antennas, scaled_threshold(rate, budget.lambda()) / config.power);
    };
    const auto slope = [&](double rate) {
        const double step = 1e-6 * rate;
        return (log_eta(rate + step) - log_eta(rate - step)) / (2.0 * step);
    };

    // Rates beyond log2(1 + P * cap) need ||h||^2 > cap, which never
    // happens numerically for the caps used here.
    const double gain_cap = 1e3 + 100.0 * config.n_antennas;
    const double rate_cap = std::log2(1.0 + config.power * gain_cap);

    double lo = 1e-6;
    if (!(slope(lo) > 0.0)) {
        throw SearchError("optimal_message_rate: throughput slope not positive at the lower bracket");
    }
    double hi = 2.0 * lo;
    while (slope(hi) > 0.0) {
        if (hi >= rate_cap) {
            throw SearchError("optimal_message_rate: no sign change of the throughput slope");
        }
        lo = hi;
        hi = std::min(2.0 * hi, rate_cap);
    }
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        if (slope(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double rate = 0.5 * (lo + hi);
    return RateOptimum{rate, delay_optimal_design(rate, budget, config)};
}

double rs_high_snr_approx(const SecrecyBudget& budget, const SystemConfig& config)
{
    check_inputs(budget, config);
    const int n = config.n_antennas;
    const double log_arg = 1.0 + specfun::log_factorial(n) + n * std::log(config.power) -
                           2.0 * n * std::log(std::sqrt(budget.lambda()) + 1.0);
    return (specfun::lambert_w0_of_exp(log_arg) - 1.0) / (n * std::numbers::ln2);
}

ThroughputDecomposition throughput_high_snr_approx(const SecrecyBudget& budget, const SystemConfig& config)
{
    check_inputs(budget, config);
    require_domain(config.power > 1.0, "throughput_high_snr_approx: requires P > 1");
    const double n = config.n_antennas;
    const double unconstrained = std::log2(config.power) - std::log2(std::log(config.power)) / n +
                                 specfun::log_factorial(config.n_antennas - 1) / (n * std::numbers::ln2);
    const double loss = secrecy_throughput_loss(budget);
    return ThroughputDecomposition{unconstrained - loss, unconstrained, loss};
}

PowerCost power_cost_db(double eps1, double eps2, int n_antennas)
{
    require_domain(eps2 > 0.0 && eps2 <= eps1 && eps1 <= 1.0, "power_cost_db: require 0 < eps2 <= eps1 <= 1");
    const double root1 = std::sqrt(lambda_quantity(eps1, n_antennas)) + 1.0;
    const double root2 = std::sqrt(lambda_quantity(eps2, n_antennas)) + 1.0;
    PowerCost cost{};
    cost.exact_form_db = 20.0 * std::log10(root2 / root1);
    cost.approx_db = eps1 == 1.0 ? 20.0 * std::log10(root2)
                                 : 10.0 / (n_antennas - 1) * std::log10(eps1 / eps2);
    return cost;
}

double min_power(double message_rate, const SecrecyBudget& budget, double delta)
{
    require_domain(message_rate > 0.0, "min_power: message rate must be positive");
    require_domain(delta > 0.0 && delta < 1.0, "min_power: delta must lie in (0, 1)");
    return scaled_threshold(message_rate, budget.lambda()) /
           specfun::inv_reg_upper_gamma(budget.n_antennas(), delta);
}

double power_for_target_throughput(double target, const SecrecyBudget& budget, double tol_db)
{
    require_domain(target > 0.0 && std::isfinite(target), "power_for_target_throughput: target must be positive");
    require_domain(tol_db > 0.0, "power_for_target_throughput: tolerance must be positive");
    const auto eta_at = [&](double p_db) {
        SystemConfig config;
        config.n_antennas = budget.n_antennas();
        config.power = db_to_linear(p_db);
        return optimal_message_rate(budget, config).design.throughput;
    };
    double lo = -20.0;
    double hi = 0.0;
    while (eta_at(lo) >= target) {
        hi = lo;
        lo -= 20.0;
        if (lo < -200.0) {
            throw SearchError("power_for_target_throughput: target throughput too small");
        }
    }
    while (eta_at(hi) < target) {
        lo = hi;
        hi += 20.0;
        if (hi > 600.0) {
            throw SearchError("power_for_target_throughput: target throughput out of reach");
        }
    }
    while (hi - lo > tol_db) {
        const double mid = 0.5 * (lo + hi);
        if (eta_at(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return db_to_linear(0.5 * (lo + hi));
}

} // namespace secrecylab::nae
