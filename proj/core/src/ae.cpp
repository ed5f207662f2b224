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

#include "secrecylab/ae.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "secrecylab/errors.hpp"
#include "secrecylab/quadrature.hpp"
#include "secrecylab/specfun.hpp"

namespace secrecylab::ae {

using detail::require_domain;

namespace {

void check_inputs(const SecrecyBudget& budget, const SystemConfig& config)
{
    config.validate();
    require_domain(budget.n_antennas() == config.n_antennas,
                   "ae: secrecy budget and system config disagree on N");
}

// 2 log2((tau + 1) / (A + B)) with A = sqrt(lambda tau), B = sqrt(tau - lambda + 1).
// Since (tau + 1)^2 - (A + B)^2 = (X - Y)^2 with X = sqrt(tau (tau - lambda + 1)),
// Y = sqrt(lambda), and X - Y = (tau + 1)(tau - lambda) / (X + Y), the rate is a
// log1p of a square with no cancellation near the threshold tau = lambda.
double rate_from_snr(double tau, double lambda)
{
    const double a = std::sqrt(lambda * tau);
    const double b = std::sqrt(tau - lambda + 1.0);
    const double x = std::sqrt(tau * (tau - lambda + 1.0));
    const double y = std::sqrt(lambda);
    const double ratio = (tau + 1.0) * (tau - lambda) / ((x + y) * (a + b));
    return std::log1p(ratio * ratio) / std::numbers::ln2;
}

double gamma_pdf(int n, double r)
{
    if (r <= 0.0) {
        return n == 1 ? 1.0 : 0.0;
    }
    return std::exp((n - 1) * std::log(r) - r - specfun::log_factorial(n - 1));
}

} // namespace

double transmit_threshold(const SecrecyBudget& budget, const SystemConfig& config)
{
    return budget.lambda() / config.power;
}

AeDesignPoint adapt_design(double effective_gain, const SecrecyBudget& budget, const SystemConfig& config)
{
    check_inputs(budget, config);
    require_domain(effective_gain >= 0.0 && std::isfinite(effective_gain),
                   "adapt_design: effective gain must be finite and >= 0");

    AeDesignPoint point;
    point.effective_gain = effective_gain;
    point.effective_snr = config.power * effective_gain;
    point.transmitting = effective_gain > transmit_threshold(budget, config);
    if (!point.transmitting) {
        return point;
    }

    const double tau = point.effective_snr;
    const double lambda = budget.lambda();
    if (budget.unconstrained()) {
        const double capacity = capacity_bob(config.power, 1.0, effective_gain);
        point.phi = 1.0;
        point.rates = WiretapRates{capacity, capacity};
        return point;
    }
    point.phi = (tau - lambda) / (std::sqrt(tau * lambda * (tau - lambda + 1.0)) + tau);
    const double codeword = capacity_bob(config.power, point.phi, effective_gain);
    const double message = std::min(rate_from_snr(tau, lambda), codeword);
    point.rates = WiretapRates{codeword, message};
    return point;
}

double max_message_rate(double effective_gain, const SecrecyBudget& budget, double power)
{
    const double lambda = budget.lambda();
    if (!(effective_gain > lambda / power)) {
        return 0.0;
    }
    const double tau = power * effective_gain;
    if (budget.unconstrained()) {
        return std::log1p(tau) / std::numbers::ln2;
    }
    return rate_from_snr(tau, lambda);
}

double throughput_exact(const SecrecyBudget& budget, const SystemConfig& config)
{
    check_inputs(budget, config);
    const int n = config.n_antennas;
    const double power = config.power;
    const double lo = budget.lambda() / power;

    // Tail beyond `hi`: R_s <= log2(1 + P r) <= log2(1 + P) + log2(r) for r >= 1,
    // and E[ln r; r > hi] <= E[r; r > hi] = N Q(N + 1, hi).
    const auto tail_bound = [&](double hi) {
        return std::log2(1.0 + power) * specfun::reg_upper_gamma(n, hi) +
               n * specfun::reg_upper_gamma(n + 1, hi) / std::numbers::ln2;
    };
    double hi = lo + 50.0 + 10.0 * n;
    while (tail_bound(hi) > 1e-12) {
        hi += 10.0 * n;
    }

    // Break the interval around the bulk of the Gamma(N, 1) density.
    const double mode = n - 1.0;
    const double spread = 6.0 * std::sqrt(static_cast<double>(n));
    std::vector<double> knots{lo};
    for (double k : {mode - spread, mode, mode + spread}) {
        if (k > knots.back() && k < hi) {
            knots.push_back(k);
        }
    }
    knots.push_back(hi);

    const auto integrand = [&](double r) { return max_message_rate(r, budget, power) * gamma_pdf(n, r); };
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const auto piece = numerics::integrate(integrand, knots[i], knots[i + 1], 1e-12, 1e-11);
        value += piece.value;
        error += piece.error_estimate;
    }
    if (error > 1e-9) {
        throw ConvergenceError("throughput_exact: quadrature error above 1e-9");
    }
    return value;
}

double throughput_approx_full(const SecrecyBudget& budget, const SystemConfig& config)
{
    check_inputs(budget, config);
    require_domain(!budget.unconstrained(), "throughput_approx_full: requires eps < 1");
    const int n = config.n_antennas;
    const double lambda = budget.lambda();
    const double x = lambda / config.power;
    const double root = std::sqrt(lambda);
    return std::log2(config.power / lambda) + specfun::digamma_int(n) / std::numbers::ln2 +
           2.0 * std::log2(root / (root + 1.0)) * specfun::reg_upper_gamma(n, x) +
           specfun::gamma_log_excess(n, x) / std::numbers::ln2;
}

ThroughputDecomposition throughput_approx_simple(const SecrecyBudget& budget, const SystemConfig& config)
{
    check_inputs(budget, config);
    const double unconstrained =
        std::log2(config.power) + specfun::digamma_int(config.n_antennas) / std::numbers::ln2;
    const double loss = secrecy_throughput_loss(budget);
    return ThroughputDecomposition{unconstrained - loss, unconstrained, loss};
}

double throughput_gain_approx(const SystemConfig& config)
{
    config.validate();
    require_domain(config.power > 1.0, "throughput_gain_approx: requires P > 1");
    const double n = config.n_antennas;
    return std::log2(std::log(config.power)) / n + specfun::digamma_int(config.n_antennas) / std::numbers::ln2 -
           specfun::log_factorial(config.n_antennas - 1) / (n * std::numbers::ln2);
}

} // namespace secrecylab::ae
