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

#include "secrecylab/secrecy.hpp"

#include <cmath>
#include <numbers>

#include "secrecylab/errors.hpp"
#include "secrecylab/specfun.hpp"

namespace secrecylab {

using detail::require_domain;

double db_to_linear(double db)
{
    require_domain(std::isfinite(db), "db_to_linear: value must be finite");
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear)
{
    require_domain(linear > 0.0, "linear_to_db: value must be positive");
    return 10.0 * std::log10(linear);
}

void SystemConfig::validate() const
{
    require_domain(n_antennas >= 2, "SystemConfig: n_antennas must be >= 2");
    require_domain(power > 0.0 && std::isfinite(power), "SystemConfig: power must be positive and finite");
    require_domain(eve_variance > 0.0 && std::isfinite(eve_variance),
                   "SystemConfig: eve_variance must be positive and finite");
}

double lambda_quantity(double epsilon, int n_antennas)
{
    require_domain(epsilon > 0.0 && epsilon <= 1.0, "lambda_quantity: epsilon must lie in (0, 1]");
    require_domain(n_antennas >= 2, "lambda_quantity: n_antennas must be >= 2");
    if (epsilon == 1.0) {
        return 0.0;
    }
    // eps^{1/(1-N)} - 1 = expm1(-ln(eps) / (N - 1)), accurate when eps is near 1.
    const double m = n_antennas - 1.0;
    return m * std::expm1(-std::log(epsilon) / m);
}

SecrecyBudget::SecrecyBudget(double epsilon, int n_antennas)
    : epsilon_(epsilon), n_antennas_(n_antennas), lambda_(lambda_quantity(epsilon, n_antennas))
{}

WiretapRates WiretapRates::make(double codeword, double message)
{
    require_domain(message >= 0.0 && std::isfinite(codeword), "WiretapRates: message rate must be >= 0");
    require_domain(message <= codeword, "WiretapRates: message rate exceeds codeword rate");
    return WiretapRates{codeword, message};
}

double secrecy_throughput_loss(const SecrecyBudget& budget)
{
    return 2.0 * std::log2(std::sqrt(budget.lambda()) + 1.0);
}

double eve_snr_ccdf(double gamma, double phi, int n_antennas)
{
    require_domain(gamma >= 0.0, "eve_snr_ccdf: gamma must be >= 0");
    require_domain(phi > 0.0 && phi < 1.0, "eve_snr_ccdf: phi must lie in (0, 1)");
    require_domain(n_antennas >= 2, "eve_snr_ccdf: n_antennas must be >= 2");
    const double m = n_antennas - 1.0;
    return std::exp(-m * std::log1p(gamma * (1.0 / phi - 1.0) / m));
}

double secrecy_outage_probability(const WiretapRates& rates, double phi, int n_antennas)
{
    require_domain(rates.message >= 0.0 && rates.message <= rates.codeword,
                   "secrecy_outage_probability: require 0 <= R_s <= R_b");
    require_domain(phi > 0.0 && phi <= 1.0, "secrecy_outage_probability: phi must lie in (0, 1]");
    if (phi == 1.0) {
        return 1.0;
    }
    return eve_snr_ccdf(std::expm1(rates.redundancy() * std::numbers::ln2), phi, n_antennas);
}

double transmit_probability(double threshold, int n_antennas)
{
    require_domain(threshold >= 0.0, "transmit_probability: threshold must be >= 0");
    return specfun::reg_upper_gamma(n_antennas, threshold);
}

double capacity_bob(double power, double phi, double effective_gain)
{
    require_domain(power > 0.0, "capacity_bob: power must be positive");
    require_domain(phi > 0.0 && phi <= 1.0, "capacity_bob: phi must lie in (0, 1]");
    require_domain(effective_gain >= 0.0, "capacity_bob: effective gain must be >= 0");
    return std::log1p(power * phi * effective_gain) / std::numbers::ln2;
}

} // namespace secrecylab
