//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qdscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qdscat/kernels.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace qdscat::kern {

/// Data-parallel primitives used by the quadrature and amplitude-assembly
/// inner loops.  Every entry has a scalar reference implementation and an
/// AVX2 variant; the active set is resolved once at startup and recorded in
/// run manifests so a run can be replayed with the same arithmetic.
struct Ops {
    const char* name;
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*dot3)(const double* a, const double* b, const double* c, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    void (*mul)(const double* a, const double* b, double* out, std::size_t n);
    void (*axpy)(double s, const double* x, double* y, std::size_t n);
    // out[i] += c * x[i] * y[i]
    void (*fmadd_xy)(double c, const double* x, const double* y, double* out, std::size_t n);
};

const Ops& scalar_ops();
const Ops& avx2_ops();
bool avx2_supported();

/// Active kernel set.  Resolution order: explicit select(), the
/// QDSCAT_KERNELS environment variable, then runtime CPU detection.
const Ops& active();

/// Force a kernel set: "scalar", "avx2" or "auto".  Throws std::runtime_error
/// for unknown names or unsupported instruction sets.
void select(std::string_view which);

inline double dot(std::span<const double> a, std::span<const double> b)
{
    return active().dot(a.data(), b.data(), a.size());
}

inline double dot3(std::span<const double> a, std::span<const double> b,
                   std::span<const double> c)
{
    return active().dot3(a.data(), b.data(), c.data(), a.size());
}

inline double sum(std::span<const double> a)
{
    return active().sum(a.data(), a.size());
}

} // namespace qdscat::kern
