//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qdscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qdscat/grid.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qdscat/kernels.hpp"

namespace qdscat {

/// Uniform radial grid r_i = i*h, i = 0..n-1.
struct UniformGrid {
    double h = 0.0;
    std::size_t n = 0;

    double r(std::size_t i) const { return h * static_cast<double>(i); }
    double r_max() const { return h * static_cast<double>(n - 1); }

    std::vector<double> radii() const
    {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = r(i);
        return out;
    }
};

/// Trapezoid rule with endpoint-derivative correction (two-point Hermite),
/// O(h^4) on smooth integrands.  f and df are samples of the integrand and
/// its derivative on the abscissas x.
inline double hermite_trapezoid(std::span<const double> x, std::span<const double> f,
                                std::span<const double> df)
{
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double h = x[i + 1] - x[i];
        acc += 0.5 * h * (f[i] + f[i + 1]) + h * h / 12.0 * (df[i] - df[i + 1]);
    }
    return acc;
}

/// Same rule on a uniform grid, in-place cumulative form: out[i] = integral
/// from x_0 to x_i.
inline void hermite_cumulative(double h, std::span<const double> f,
                               std::span<const double> df, std::span<double> out)
{
    out[0] = 0.0;
    const double c = h * h / 12.0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        out[i + 1] = out[i] + 0.5 * h * (f[i] + f[i + 1]) + c * (df[i] - df[i + 1]);
}

inline double trapezoid(std::span<const double> x, std::span<const double> f)
{
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        acc += 0.5 * (x[i + 1] - x[i]) * (f[i] + f[i + 1]);
    return acc;
}

/// Composite Simpson weights for a uniform grid (trapezoid closure on the
/// last panel when the point count is even).
inline std::vector<double> simpson_weights(std::size_t n, double h)
{
    std::vector<double> w(n, 0.0);
    if (n < 2)
        return w;
    std::size_t last = n - 1;
    if (n % 2 == 0)
        last = n - 2; // leave final panel for trapezoid closure
    if (last >= 2) {
        w[0] += h / 3.0;
        w[last] += h / 3.0;
        for (std::size_t i = 1; i < last; ++i)
            w[i] += (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
    }
    if (last != n - 1) {
        w[n - 2] += 0.5 * h;
        w[n - 1] += 0.5 * h;
    }
    return w;
}

} // namespace qdscat
