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

#include "aerial_d2d/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace aerial_d2d::specfun {

namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 10000;

void check_gamma_args(double s, double x)
{
    if (!std::isfinite(s) || !std::isfinite(x) || s <= 0.0 || x < 0.0)
        throw std::domain_error("upper_incomplete_gamma: require finite s > 0 and x >= 0");
}

// x^s * sum_n x^n / (s (s+1) ... (s+n)) = e^x * lower incomplete gamma
double scaled_lower_series(double s, double x)
{
    double term = 1.0 / s;
    double sum = term;
    double ap = s;
    for (int n = 0; n < kMaxIter; ++n)
    {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps)
            return sum * std::pow(x, s);
    }
    throw std::runtime_error("upper_incomplete_gamma: series failed to converge");
}

// Modified Lentz evaluation; returns e^x * Gamma(s, x)
double scaled_upper_cf(double s, double x)
{
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i)
    {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            return std::exp(s * std::log(x)) * h;
    }
    throw std::runtime_error("upper_incomplete_gamma: continued fraction failed to converge");
}

// 15-point Kronrod nodes on [-1, 1] (non-negative half) with the embedded
// 7-point Gauss weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment
{
    double a;
    double b;
    double value;
    double error;
};

double eval_finite(const Integrand &f, double x)
{
    const double y = f(x);
    if (!std::isfinite(y))
        throw std::domain_error("integrate: integrand is not finite at x = " + std::to_string(x));
    return y;
}

Segment gk15(const Integrand &f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = eval_finite(f, center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j)
    {
        const double dx = half * kXgk[j];
        const double f1 = eval_finite(f, center - dx);
        const double f2 = eval_finite(f, center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

struct ByError
{
    bool operator()(const Segment &l, const Segment &r) const
    {
        if (l.error != r.error) return l.error < r.error;
        return l.a > r.a;
    }
};

} // namespace

void QuadratureSpec::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: abs_tol > 0, rel_tol > 0, max_subdivisions >= 1");
}

double upper_incomplete_gamma(double s, double x)
{
    check_gamma_args(s, x);
    if (x == 0.0) return std::tgamma(s);
    if (x < s + 1.0)
        return std::tgamma(s) - std::exp(-x) * scaled_lower_series(s, x);
    return std::exp(-x) * scaled_upper_cf(s, x);
}

double scaled_upper_incomplete_gamma(double s, double x)
{
    check_gamma_args(s, x);
    if (x == 0.0) return std::tgamma(s);
    if (x < s + 1.0)
        return std::exp(x) * std::tgamma(s) - scaled_lower_series(s, x);
    return scaled_upper_cf(s, x);
}

QuadratureResult integrate_detailed(const Integrand &f, double a, double b, const QuadratureSpec &spec)
{
    spec.validate();
    if (!std::isfinite(a) || !std::isfinite(b) || a > b)
        throw std::domain_error("integrate: require finite a <= b");
    if (a == b) return {};

    std::priority_queue<Segment, std::vector<Segment>, ByError> work;
    Segment first = gk15(f, a, b);
    work.push(first);
    double total = first.value;
    double total_err = first.error;
    int subdivisions = 0;

    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
    {
        if (subdivisions >= spec.max_subdivisions)
            throw ConvergenceError("integrate: maximum number of subdivisions reached", total, total_err);
        const Segment worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw ConvergenceError("integrate: interval too small to subdivide", total, total_err);
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
        ++subdivisions;
    }

    // Resum in interval order so the result does not carry running-sum drift.
    std::vector<Segment> parts;
    parts.reserve(work.size());
    while (!work.empty())
    {
        parts.push_back(work.top());
        work.pop();
    }
    std::sort(parts.begin(), parts.end(), [](const Segment &l, const Segment &r) { return l.a < r.a; });
    QuadratureResult out;
    for (const auto &p : parts)
    {
        out.value += p.value;
        out.error += p.error;
    }
    out.subdivisions = subdivisions;
    return out;
}

double integrate(const Integrand &f, double a, double b, const QuadratureSpec &spec)
{
    return integrate_detailed(f, a, b, spec).value;
}

double integrate_to_infinity(const Integrand &f, double a, const QuadratureSpec &spec, double length_hint)
{
    spec.validate();
    if (!std::isfinite(a) || !(length_hint > 0.0))
        throw std::domain_error("integrate_to_infinity: require finite a and length_hint > 0");

    auto sample_peak = [&f](double lo, double hi, double peak) {
        constexpr int n = 16;
        for (int i = 0; i <= n; ++i)
            peak = std::max(peak, std::abs(f(lo + (hi - lo) * i / n)));
        return peak;
    };

    double len = length_hint;
    double b = a + len;
    double total = integrate(f, a, b, spec);
    double peak = sample_peak(a, b, 0.0);

    for (int step = 0; step < 200; ++step)
    {
        const double tail = integrate(f, b, b + len, spec);
        total += tail;
        peak = sample_peak(b, b + len, peak);
        b += len;
        const bool tail_small = std::abs(tail) <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        const bool edge_small = std::abs(f(b)) <= spec.abs_tol * peak;
        if (tail_small && edge_small) return total;
        len *= 2.0;
    }
    throw ConvergenceError("integrate_to_infinity: cutoff did not stabilise", total,
                           std::numeric_limits<double>::infinity());
}

} // namespace aerial_d2d::specfun
