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

#pragma once

// Naive numerical reference methods for the test suites. Nothing here depends
// on the voclink model code.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace voclink::oracle {

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ScalarFn = std::function<double(double)>;

/// Adaptive Simpson quadrature on [a, b] to absolute tolerance `tol`. The
/// interval is first cut into `panels` equal pieces so narrow features are
/// not stepped over. Throws NoConvergence past `max_depth` bisections.
double quad_integrate(const ScalarFn &f, double a, double b, double tol, std::size_t panels = 1,
                      int max_depth = 50);

/// As quad_integrate, with `rel_tol` taken relative to a coarse estimate of the integral.
double quad_integrate_relative(const ScalarFn &f, double a, double b, double rel_tol, std::size_t panels);

struct Spectrum {
    std::vector<double> frequency; // k / (N dt), k = 0 .. N/2
    std::vector<double> magnitude; // dt * |sum_n x_n exp(-j 2 pi k n / N)|
};

/// Direct O(N^2) DFT magnitudes of a uniformly sampled series.
Spectrum dft_magnitude(std::span<const double> series, double dt);

/// dt * |sum_n x_n exp(-j 2 pi f n dt)| at an arbitrary frequency.
double dtft_magnitude(std::span<const double> series, double dt, double f);

/// Central difference (f(x + h) - f(x - h)) / 2h.
double fd_derivative(const ScalarFn &f, double x, double h);

/// Streaming least-squares fit y(t) ~ c0 + c1 (t - t0) + a sin(2 pi f t) + b cos(2 pi f t).
/// The linear term absorbs slowly decaying transients.
class SineFit {
public:
    SineFit(double frequency, double t0, double time_scale);

    void add(double t, double y);
    /// sqrt(a^2 + b^2) of the fitted tone.
    double amplitude() const;
    std::size_t count() const noexcept { return count_; }

private:
    std::array<double, 4> basis(double t) const;

    double frequency_;
    double t0_;
    double scale_;
    std::array<std::array<double, 4>, 4> normal_{};
    std::array<double, 4> rhs_{};
    std::size_t count_ = 0;
};

} // namespace voclink::oracle
