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

#include "secrecylab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "secrecylab/errors.hpp"
#include "secrecylab/quadrature.hpp"

namespace secrecylab::specfun {

namespace {

// Below this the plain e^{-x} * sum form cannot underflow or overflow.
constexpr double kDirectGammaLimit = 600.0;

// Above this the alternating 2F2 series loses too many digits.
constexpr double kHyp2f2SeriesLimit = 10.0;

double log_gamma_pdf(int n, double x)
{
    // log of x^{n-1} e^{-x} / (n-1)!
    if (x == 0.0) {
        return n == 1 ? 0.0 : -std::numeric_limits<double>::infinity();
    }
    return (n - 1) * std::log(x) - x - log_factorial(n - 1);
}

double log_upper_gamma_sum(int n, double x)
{
    // log( sum_{k<n} x^k / k! ) via log-sum-exp; only used for large x.
    const double lx = std::log(x);
    std::vector<double> logs(static_cast<std::size_t>(n));
    double lt = 0.0;
    double peak = 0.0;
    for (int k = 0; k < n; ++k) {
        if (k > 0) {
            lt += lx - std::log(static_cast<double>(k));
        }
        logs[static_cast<std::size_t>(k)] = lt;
        peak = std::max(peak, lt);
    }
    double acc = 0.0;
    for (double l : logs) {
        acc += std::exp(l - peak);
    }
    return peak + std::log(acc);
}

} // namespace

void Tolerance::validate() const
{
    detail::require_domain(series_rel_tol > 0.0 && root_abs_tol > 0.0,
                           "specfun tolerance: tolerances must be positive");
    detail::require_domain(max_iterations >= 10, "specfun tolerance: max_iterations must be >= 10");
}

double log_factorial(int n)
{
    detail::require_domain(n >= 0, "log_factorial: n must be >= 0");
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double reg_upper_gamma(int n, double x)
{
    detail::require_domain(n >= 1, "reg_upper_gamma: order must be >= 1");
    detail::require_domain(x >= 0.0, "reg_upper_gamma: x must be >= 0");
    if (x == 0.0) {
        return 1.0;
    }
    if (std::isinf(x)) {
        return 0.0;
    }
    if (x < kDirectGammaLimit) {
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < n; ++k) {
            term *= x / k;
            sum += term;
        }
        return std::min(1.0, std::exp(-x) * sum);
    }
    return std::exp(log_reg_upper_gamma(n, x));
}

double log_reg_upper_gamma(int n, double x)
{
    detail::require_domain(n >= 1, "log_reg_upper_gamma: order must be >= 1");
    detail::require_domain(x >= 0.0, "log_reg_upper_gamma: x must be >= 0");
    if (x == 0.0) {
        return 0.0;
    }
    if (std::isinf(x)) {
        return -std::numeric_limits<double>::infinity();
    }
    if (x < kDirectGammaLimit) {
        return std::log(reg_upper_gamma(n, x));
    }
    return -x + log_upper_gamma_sum(n, x);
}

double inv_reg_upper_gamma(int n, double p, const Tolerance& tol)
{
    tol.validate();
    detail::require_domain(n >= 1, "inv_reg_upper_gamma: order must be >= 1");
    detail::require_domain(p > 0.0 && p <= 1.0, "inv_reg_upper_gamma: p must lie in (0, 1]");
    if (p == 1.0) {
        return 0.0;
    }

    const double log_p = std::log(p);
    auto residual = [&](double x) { return log_reg_upper_gamma(n, x) - log_p; };

    double lo = 0.0;
    double hi = std::max(1.0, static_cast<double>(n));
    for (int i = 0; residual(hi) > 0.0; ++i) {
        if (i > tol.max_iterations) {
            throw ConvergenceError("inv_reg_upper_gamma: failed to bracket the root");
        }
        lo = hi;
        hi *= 2.0;
    }

    // Newton on log Q(n, x) - log p, which is well scaled in both tails.
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < tol.max_iterations; ++i) {
        const double r = residual(x);
        if (r > 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        const double slope = -std::exp(log_gamma_pdf(n, x) - log_reg_upper_gamma(n, x));
        double next = (slope < 0.0) ? x - r / slope : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const double step = std::abs(next - x);
        x = next;
        if (step <= tol.root_abs_tol * std::max(1.0, x) || hi - lo <= tol.root_abs_tol) {
            return x;
        }
    }
    throw ConvergenceError("inv_reg_upper_gamma: iteration budget exhausted");
}

double lambert_w0(double x, const Tolerance& tol)
{
    tol.validate();
    constexpr double inv_e = 1.0 / std::numbers::e;
    detail::require_domain(!std::isnan(x) && x >= -inv_e - 4.0 * std::numeric_limits<double>::epsilon(),
                           "lambert_w0: x must be >= -1/e");
    if (x <= -inv_e) {
        return -1.0;
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (std::isinf(x)) {
        return x;
    }

    double w;
    if (x < -0.32) {
        // Branch-point series in p = sqrt(2(ex + 1)).
        const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * 11.0 / 72.0));
    } else if (x > std::numbers::e) {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    } else {
        // Winitzki's approximation.
        const double l = std::log1p(x);
        w = l * (1.0 - std::log1p(l) / (2.0 + l));
    }

    for (int i = 0; i < tol.max_iterations; ++i) {
        // Halley step written with t = (w e^w - x) e^{-w} so large x cannot overflow.
        const double t = w - x * std::exp(-w);
        const double wp1 = w + 1.0;
        if (wp1 == 0.0) {
            return w;
        }
        const double step = t / (wp1 - (w + 2.0) * t / (2.0 * wp1));
        w -= step;
        if (w < -1.0) {
            w = -1.0;
        }
        if (std::abs(step) <= tol.root_abs_tol * (1.0 + std::abs(w))) {
            return w;
        }
    }
    throw ConvergenceError("lambert_w0: Halley iteration did not converge");
}

double lambert_w0_of_exp(double log_x, const Tolerance& tol)
{
    tol.validate();
    detail::require_domain(!std::isnan(log_x), "lambert_w0_of_exp: log_x must not be NaN");
    if (log_x < 700.0) {
        return lambert_w0(std::exp(log_x), tol);
    }
    // w + ln w = log_x, monotone and nearly linear for large log_x.
    double w = log_x - std::log(log_x);
    for (int i = 0; i < tol.max_iterations; ++i) {
        const double step = (w + std::log(w) - log_x) / (1.0 + 1.0 / w);
        w -= step;
        if (std::abs(step) <= tol.root_abs_tol * (1.0 + w)) {
            return w;
        }
    }
    throw ConvergenceError("lambert_w0_of_exp: Newton iteration did not converge");
}

double digamma_int(int n)
{
    detail::require_domain(n >= 1, "digamma_int: n must be >= 1");
    double harmonic = 0.0;
    for (int k = n - 1; k >= 1; --k) {
        harmonic += 1.0 / k;
    }
    return harmonic - std::numbers::egamma;
}

namespace {

// [n / (n + k)]^2 (-x)^k / k! summed over k >= 0.
double hyp2f2_series(int n, double x, const Tolerance& tol)
{
    long double power = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k <= tol.max_iterations; ++k) {
        power *= -static_cast<long double>(x) / k;
        const long double ratio = static_cast<long double>(n) / (n + k);
        const long double term = power * ratio * ratio;
        sum += term;
        if (k > x && std::abs(term) < tol.series_rel_tol * std::abs(sum)) {
            return static_cast<double>(sum);
        }
    }
    throw ConvergenceError("hyp2f2_nn: series did not converge within max_iterations");
}

// int_0^x ln(x/s) s^{n-1} e^{-s} ds / (n-1)!. With s = x e^{-t} this is
// int_0^inf t exp(n ln x - ln (n-1)! - n t - x e^{-t}) dt. The exponent is
// regrouped so that no large terms cancel, keeping the integrand smooth to
// rounding for large n.
double log_excess_integral(int n, double x)
{
    const double dn = n;
    const double head = 80.0 / dn + 10.0;
    double lower = 0.0;
    double width = 0.0;
    std::function<double(double)> integrand;
    if (x >= dn) {
        // Shift to u = t - ln(x/n); the peak sits at u = 0 with width 1/sqrt(n).
        const double centre = std::log(x / dn);
        const double level = dn * std::log(dn) - dn - log_factorial(n - 1);
        integrand = [dn, centre, level](double u) {
            return (centre + u) * std::exp(level - dn * (u + std::expm1(-u)));
        };
        lower = -centre;
        width = 1.0 / std::sqrt(dn);
    } else {
        // The integrand rises from t = 0 and falls off at rate n - x.
        const double level = dn * std::log(x) - log_factorial(n - 1) - x;
        integrand = [dn, x, level](double t) {
            return t * std::exp(level - (dn - x) * t - x * (t + std::expm1(-t)));
        };
        width = 1.0 / std::max(std::sqrt(dn), dn - x);
    }
    const double peak = std::max(0.0, lower) + (x >= dn ? 0.0 : width);
    const double height = std::max(integrand(std::max(peak, lower + width)), std::numeric_limits<double>::min());
    // Past `upper`, the integrand is below e^{-80} times its peak.
    const double upper = peak + head;
    std::vector<double> knots{lower};
    for (double k : {-16.0, -8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0}) {
        const double knot = peak + k * width;
        if (knot > knots.back() + 0.5 * width && knot < upper - 0.5 * width) {
            knots.push_back(knot);
        }
    }
    knots.push_back(upper);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        total += numerics::integrate(integrand, knots[i], knots[i + 1], 1e-12 * height * width, 1e-12).value;
    }
    return total;
}

void check_hyp2f2_args(int n, double x, const Tolerance& tol, const char* name)
{
    tol.validate();
    detail::require_domain(n >= 2, (std::string(name) + ": n must be >= 2").c_str());
    detail::require_domain(x >= 0.0 && std::isfinite(x), (std::string(name) + ": x must be finite and >= 0").c_str());
}

} // namespace

double hyp2f2_nn(int n, double x, const Tolerance& tol)
{
    check_hyp2f2_args(n, x, tol, "hyp2f2_nn");
    if (x == 0.0) {
        return 1.0;
    }
    if (x <= kHyp2f2SeriesLimit) {
        return hyp2f2_series(n, x, tol);
    }
    const double dn = n;
    return dn * dn * log_excess_integral(n, x) * std::exp(log_factorial(n - 1) - dn * std::log(x));
}

double gamma_log_excess(int n, double x, const Tolerance& tol)
{
    check_hyp2f2_args(n, x, tol, "gamma_log_excess");
    if (x == 0.0) {
        return 0.0;
    }
    const double dn = n;
    if (x <= kHyp2f2SeriesLimit) {
        return std::exp(dn * std::log(x) - log_factorial(n - 1)) / (dn * dn) * hyp2f2_series(n, x, tol);
    }
    return log_excess_integral(n, x);
}

} // namespace secrecylab::specfun
