//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qdscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file src/kernels_scalar.cpp
//---------------------------------------------------------------------------//
#include "qdscat/kernels.hpp"

namespace qdscat::kern {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * b[i];
    return acc;
}

double dot3_scalar(const double* a, const double* b, const double* c, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * b[i] * c[i];
    return acc;
}

double sum_scalar(const double* a, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i];
    return acc;
}

void mul_scalar(const double* a, const double* b, double* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a[i] * b[i];
}

void axpy_scalar(double s, const double* x, double* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        y[i] += s * x[i];
}

void fmadd_xy_scalar(double c, const double* x, const double* y, double* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] += c * x[i] * y[i];
}

} // namespace

const Ops& scalar_ops()
{
    static const Ops ops{"scalar",   dot_scalar,  dot3_scalar,
                         sum_scalar, mul_scalar,  axpy_scalar,
                         fmadd_xy_scalar};
    return ops;
}

} // namespace qdscat::kern
