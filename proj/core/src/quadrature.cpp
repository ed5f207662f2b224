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

#include "secrecylab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "secrecylab/errors.hpp"

namespace secrecylab::numerics {

namespace {

// Subdivision budget; beyond this an unmet tolerance is reported, not chased.
constexpr int kMaxSegments = 4000;

struct Segment {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Segment& other) const { return error < other.error; }
};

// One 15-point Kronrod / 7-point Gauss pair on [a, b]. The error estimate is
// scaled by the half-width, so narrow segments are not over-refined.
Segment apply_rule(const std::function<double(double)>& f, double a, double b)
{
    using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
    using Gauss = boost::math::quadrature::gauss<double, 7>;
    const auto& nodes = Kronrod::abscissa();
    const auto& kronrod_weights = Kronrod::weights();
    const auto& gauss_weights = Gauss::weights();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double centre = f(mid);
    double kronrod = centre * kronrod_weights[0];
    double gauss = centre * gauss_weights[0];
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double pair = f(mid + half * nodes[i]) + f(mid - half * nodes[i]);
        kronrod += pair * kronrod_weights[i];
        if (i % 2 == 0) {
            gauss += pair * gauss_weights[i / 2];
        }
    }
    const double value = half * kronrod;
    const double error = std::max(half * std::abs(kronrod - gauss),
                                  2.0 * std::numeric_limits<double>::epsilon() * std::abs(value));
    return {a, b, value, error};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, double rel_tol)
{
    detail::require_domain(std::isfinite(a) && std::isfinite(b) && a <= b,
                           "integrate: interval must be finite and ordered");
    if (a == b) {
        return {0.0, 0.0};
    }
    // Global adaptive bisection: always split the segment with the largest error.
    std::priority_queue<Segment> segments;
    segments.push(apply_rule(f, a, b));
    double value = segments.top().value;
    double error = segments.top().error;
    while (error > std::max(abs_tol, rel_tol * std::abs(value)) &&
           static_cast<int>(segments.size()) < kMaxSegments && std::isfinite(value)) {
        const Segment worst = segments.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            break;
        }
        segments.pop();
        const Segment left = apply_rule(f, worst.a, mid);
        const Segment right = apply_rule(f, mid, worst.b);
        segments.push(left);
        segments.push(right);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
    }
    // Re-sum to shed the drift of the running totals.
    value = 0.0;
    error = 0.0;
    for (; !segments.empty(); segments.pop()) {
        value += segments.top().value;
        error += segments.top().error;
    }
    const double budget = std::max(abs_tol, rel_tol * std::abs(value));
    if (!std::isfinite(value) || error > budget) {
        char message[96];
        std::snprintf(message, sizeof message, "integrate: error estimate %.3g exceeds target %.3g", error, budget);
        throw ConvergenceError(message);
    }
    return {value, error};
}

} // namespace secrecylab::numerics
