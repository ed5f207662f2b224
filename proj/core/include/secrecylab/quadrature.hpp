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

#include <functional>

namespace secrecylab::numerics {

struct QuadratureResult {
    double value;
    double error_estimate;
};

/// Globally adaptive 15-point Gauss-Kronrod over the finite interval [a, b].
///
/// Throws ConvergenceError when the error estimate exceeds
/// max(abs_tol, rel_tol * |value|).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-12, double rel_tol = 1e-10);

} // namespace secrecylab::numerics
