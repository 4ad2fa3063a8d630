//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qdscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file src/kernels.cpp
//---------------------------------------------------------------------------//
#include "qdscat/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qdscat::kern {

bool avx2_supported()
{
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

std::atomic<const Ops*> g_active{nullptr};

const Ops* resolve(std::string_view which)
{
    if (which == "scalar")
        return &scalar_ops();
    if (which == "avx2") {
        if (!avx2_supported())
            throw std::runtime_error("kernel set 'avx2' not supported on this CPU");
        return &avx2_ops();
    }
    if (which == "auto")
        return avx2_supported() ? &avx2_ops() : &scalar_ops();
    throw std::runtime_error("unknown kernel set '" + std::string(which) + "'");
}

} // namespace

const Ops& active()
{
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (!ops) {
        const char* env = std::getenv("QDSCAT_KERNELS");
        ops = resolve(env ? env : "auto");
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

void select(std::string_view which)
{
    g_active.store(resolve(which), std::memory_order_release);
}

} // namespace qdscat::kern
