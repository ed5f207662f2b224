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

// Special functions used by the closed-form design formulas. Orders are
// integers throughout: the antenna count is the only order that appears.

namespace secrecylab::specfun {

struct Tolerance {
    double series_rel_tol = 1e-14;
    double root_abs_tol = 1e-12;
    int max_iterations = 200;

    /// Throws DomainError unless all fields are positive and
    /// max_iterations >= 10.
    void validate() const;
};

/// ln(n!) for n >= 0.
double log_factorial(int n);

/// Regularized upper incomplete gamma Q(n, x) = e^{-x} sum_{k<n} x^k / k!.
///
/// Evaluated as an exact finite sum; for large x the terms are combined in
/// the log domain so the result underflows gracefully instead of producing
/// inf * 0.
double reg_upper_gamma(int n, double x);

/// Natural log of reg_upper_gamma(n, x); finite for every finite x.
double log_reg_upper_gamma(int n, double x);

/// Solves reg_upper_gamma(n, x) = p for x >= 0. inv(n, 1) == 0.
///
/// Safeguarded Newton iteration inside a bisection bracket; converges to
/// `tol.root_abs_tol` in x.
double inv_reg_upper_gamma(int n, double p, const Tolerance& tol = {});

/// Principal branch W0 of the Lambert W function (w * e^w = x, w >= -1).
double lambert_w0(double x, const Tolerance& tol = {});

/// W0(exp(log_x)), for arguments too large to represent directly.
double lambert_w0_of_exp(double log_x, const Tolerance& tol = {});

/// psi(n) = -gamma_E + sum_{k=1}^{n-1} 1/k.
double digamma_int(int n);

/// 2F2(n, n; n+1, n+1; -x) for n >= 2, x >= 0.
///
/// Direct term-wise series while it is well conditioned (x <= 10). Beyond
/// that the alternating series cancels catastrophically, so the value is
/// taken from the equivalent integral
///   x^n / n^2 * 2F2(...) = int_0^x ln(x/t) t^{n-1} e^{-t} dt.
/// Underflows to zero once x^n / (n-1)! exceeds the double range.
/// Throws ConvergenceError if the series exhausts `tol.max_iterations`.
double hyp2f2_nn(int n, double x, const Tolerance& tol = {});

/// E[max(ln(x / T), 0)] for T ~ Gamma(n, 1), which equals
///   x^n / (n^2 (n-1)!) * 2F2(n, n; n+1, n+1; -x).
/// Stays representable where hyp2f2_nn and the prefactor separately do not.
double gamma_log_excess(int n, double x, const Tolerance& tol = {});

} // namespace secrecylab::specfun
