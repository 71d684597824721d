#pragma once

#include <array>

#include "slideocam/cam_geometry.hpp"
#include "slideocam/design_optimizer.hpp"
#include "slideocam/force_transmission.hpp"

/// Constants of the Orthoglide ball-screw drive the transmission replaces.
namespace slideocam::orthoglide {

inline constexpr double torque_Nm = 1.2;
inline constexpr double pitch = 20.0;
inline constexpr double shaft_tau_max = 150.0;
inline constexpr int lobes = 1;
inline constexpr int cams = 2;

/// Reported optimum.
inline constexpr double phi_bear = 6.7;
inline constexpr double phi_cam = 3.8;

/// Maximal Hertz pressure at the optimum, MPa, for L = 10, 20, ..., 60 mm.
inline constexpr std::array<double, 6> table2_lengths{10.0, 20.0, 30.0, 40.0, 50.0, 60.0};
inline constexpr std::array<double, 6> table2_steel{974.0, 689.0, 562.0, 487.0, 435.0, 397.0};
inline constexpr std::array<double, 6> table2_aluminum{558.0, 394.0, 322.0, 279.0, 249.0, 228.0};

LoadCase load();
DesignParams optimum_design();

/// phi_bear in [1.8, 12], phi_cam in [3.75, 12] at about 0.1 mm, L in
/// {20, 30, 40, 50}, improved steel on both bodies.
DesignSpace design_space();

} // namespace slideocam::orthoglide
