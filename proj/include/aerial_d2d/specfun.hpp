// SPDX-License-Identifier: Apache-2.0
//
// aerial-d2d: stochastic-geometry toolkit for D2D-enabled aerial networks
// Copyright (C) 2026 The aerial-d2d authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef AERIAL_D2D_SPECFUN_HPP
#define AERIAL_D2D_SPECFUN_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace aerial_d2d::specfun {

// Tolerances for adaptive Gauss-Kronrod quadrature. A subinterval is
// accepted once the total error estimate is below max(abs_tol, rel_tol*|I|).
struct QuadratureSpec
{
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;

    void validate() const;
};

// Raised when adaptive quadrature runs out of subdivisions. Carries the best
// estimate so callers may decide whether it is good enough.
class ConvergenceError : public std::runtime_error
{
  public:
    ConvergenceError(const std::string &what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

  private:
    double estimate_;
    double error_bound_;
};

using Integrand = std::function<double(double)>;

struct QuadratureResult
{
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
};

// Upper incomplete gamma function Gamma(s, x) = int_x^inf t^(s-1) e^(-t) dt.
// Series for x < s + 1, Lentz continued fraction otherwise.
// Throws std::domain_error for s <= 0, x < 0 or non-finite arguments.
double upper_incomplete_gamma(double s, double x);

// exp(x) * Gamma(s, x), finite for arguments where Gamma(s, x) itself
// underflows (x of several hundred and more).
double scaled_upper_incomplete_gamma(double s, double x);

// Adaptive 15-point Gauss-Kronrod quadrature over [a, b]. Deterministic for
// identical inputs. Throws ConvergenceError when max_subdivisions is hit.
QuadratureResult integrate_detailed(const Integrand &f, double a, double b,
                                    const QuadratureSpec &spec = {});

double integrate(const Integrand &f, double a, double b, const QuadratureSpec &spec = {});

// Integral over [a, inf) for integrands that decay at least exponentially.
// The upper limit starts at a + length_hint and is pushed out in doubling
// steps until the added tail falls below tolerance and the integrand at the
// cutoff is below abs_tol times the largest value seen.
double integrate_to_infinity(const Integrand &f, double a, const QuadratureSpec &spec = {},
                             double length_hint = 1.0);

} // namespace aerial_d2d::specfun

#endif
