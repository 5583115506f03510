// SPDX-License-Identifier: Apache-2.0
//
// voclink - VOC-based interplant molecular communication link model
// Copyright (C) 2026 The voclink authors
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

#include "voclink/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>

namespace voclink::oracle {

namespace {

struct Panel {
    double a, fa, m, fm, b, fb, whole;
};

double simpson(double a, double fa, double fm, double b, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const ScalarFn &f, const Panel &p, double tol, int depth)
{
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, p.fa, flm, p.m, p.fm);
    const double right = simpson(p.m, p.fm, frm, p.b, p.fb);
    const double delta = left + right - p.whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth <= 0)
        throw NoConvergence("adaptive Simpson exceeded maximum depth near t = " + std::to_string(p.m));
    return adapt(f, {p.a, p.fa, lm, flm, p.m, p.fm, left}, 0.5 * tol, depth - 1) +
           adapt(f, {p.m, p.fm, rm, frm, p.b, p.fb, right}, 0.5 * tol, depth - 1);
}

} // namespace

double quad_integrate(const ScalarFn &f, double a, double b, double tol, std::size_t panels, int max_depth)
{
    if (!(b > a) || panels == 0 || !(tol > 0.0))
        throw std::invalid_argument("quad_integrate: need b > a, panels >= 1, tol > 0");
    const double width = (b - a) / static_cast<double>(panels);
    const double panel_tol = tol / static_cast<double>(panels);
    double total = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
        const double lo = a + width * static_cast<double>(i);
        const double hi = i + 1 == panels ? b : lo + width;
        const double mid = 0.5 * (lo + hi);
        const double flo = f(lo), fmid = f(mid), fhi = f(hi);
        total += adapt(f, {lo, flo, mid, fmid, hi, fhi, simpson(lo, flo, fmid, hi, fhi)}, panel_tol, max_depth);
    }
    return total;
}

double quad_integrate_relative(const ScalarFn &f, double a, double b, double rel_tol, std::size_t panels)
{
    const double coarse = quad_integrate(f, a, b, 1e300, panels * 8, 0);
    const double scale = std::abs(coarse) > 0.0 ? std::abs(coarse) : 1.0;
    return quad_integrate(f, a, b, rel_tol * scale, panels);
}

Spectrum dft_magnitude(std::span<const double> series, double dt)
{
    if (series.size() < 2 || !(dt > 0.0))
        throw std::invalid_argument("dft_magnitude: need >= 2 samples and dt > 0");
    const std::size_t n = series.size();
    Spectrum s;
    for (std::size_t k = 0; k <= n / 2; ++k) {
        std::complex<double> acc{};
        for (std::size_t i = 0; i < n; ++i) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>((k * i) % n) / static_cast<double>(n);
            acc += series[i] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        s.frequency.push_back(static_cast<double>(k) / (static_cast<double>(n) * dt));
        s.magnitude.push_back(dt * std::abs(acc));
    }
    return s;
}

double dtft_magnitude(std::span<const double> series, double dt, double f)
{
    std::complex<double> acc{};
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double angle = -2.0 * std::numbers::pi * f * dt * static_cast<double>(i);
        acc += series[i] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return dt * std::abs(acc);
}

double fd_derivative(const ScalarFn &f, double x, double h)
{
    if (!(h > 0.0))
        throw std::invalid_argument("fd_derivative: h must be > 0");
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

SineFit::SineFit(double frequency, double t0, double time_scale)
    : frequency_(frequency), t0_(t0), scale_(time_scale)
{
}

std::array<double, 4> SineFit::basis(double t) const
{
    const double phase = 2.0 * std::numbers::pi * frequency_ * t;
    return {1.0, (t - t0_) / scale_, std::sin(phase), std::cos(phase)};
}

void SineFit::add(double t, double y)
{
    const auto v = basis(t);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c)
            normal_[r][c] += v[r] * v[c];
        rhs_[r] += v[r] * y;
    }
    ++count_;
}

double SineFit::amplitude() const
{
    // Gaussian elimination with partial pivoting on the 4x4 normal equations.
    auto m = normal_;
    auto rhs = rhs_;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < 4; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col]))
                pivot = r;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        if (m[col][col] == 0.0)
            throw NoConvergence("SineFit: singular normal equations");
        for (std::size_t r = col + 1; r < 4; ++r) {
            const double factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < 4; ++c)
                m[r][c] -= factor * m[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    std::array<double, 4> x{};
    for (std::size_t i = 4; i-- > 0;) {
        double acc = rhs[i];
        for (std::size_t c = i + 1; c < 4; ++c)
            acc -= m[i][c] * x[c];
        x[i] = acc / m[i][i];
    }
    return std::hypot(x[2], x[3]);
}

} // namespace voclink::oracle
