//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qdscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qdscat/units.hpp
//---------------------------------------------------------------------------//
#pragma once

namespace qdscat::units {

// Internal convention: energies in Rydberg, lengths in Bohr, momenta in
// 1/Bohr with k^2 = E.  Conversions happen only at file/CLI boundaries.
inline constexpr double ry_in_ev = 13.6057;
inline constexpr double ry_in_inv_cm = 109737.316;

inline constexpr double ev_to_ry(double e_ev) { return e_ev / ry_in_ev; }
inline constexpr double ry_to_ev(double e_ry) { return e_ry * ry_in_ev; }
inline constexpr double inv_cm_to_ry(double e_cm) { return e_cm / ry_in_inv_cm; }

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double deg_to_rad(double d) { return d * pi / 180.0; }
inline constexpr double rad_to_deg(double r) { return r * 180.0 / pi; }

} // namespace qdscat::units
