#pragma once

#include "slideocam/cam_geometry.hpp"

namespace slideocam {

/// Motor torque and allowable shaft stresses. Units: N mm, MPa.
struct LoadCase {
    double torque;    ///< C_m, also written M_t
    double tau_c_max; ///< camshaft allowable (shear + bending)
    double tau_b_max; ///< bearing-shaft allowable (shear)

    /// Throws Error(InvalidArgument) unless all three are positive.
    void validate() const;
};

/// Pressure angle folded into (-pi/2, pi/2]. `singular` marks s(psi) = 0,
/// where the angle is exactly pi/2 and no force is transmitted.
struct PressureAngle {
    double mu;
    bool singular;
};

struct DrivingCam {
    int index;
    double local_psi; ///< lobe-local angle of that cam at the contact
    double mu;
};

/// Force state on the driving roller. Forces in N.
struct ContactState {
    double psi;
    double mu;
    double theta;
    double f_x;
    double f_y;
    double F;
    int driving_cam;
    double local_psi;
};

/// Location and value of the largest |mu| seen by the driving cam.
struct PressureAngleMaximum {
    double psi; ///< lobe-local angle on the driving window
    double mu_max;
};

/// Default high-speed pressure-angle limit, 30 degrees.
inline constexpr double default_mu_limit = numerics::pi / 6.0;

/// tan mu = (s' - e) / s at a lobe-local angle.
PressureAngle pressure_angle(const DesignParams& params, double psi);

/// Cam driving the follower at camshaft angle psi. Cam k sits at lobe-local
/// phase psi + k beta; a cam drives when that phase lies on its driving
/// window and the profile is convex there. Hand-over instants, where two
/// cams qualify, go to the smaller |mu| then the lower index.
DrivingCam driving_cam(const DesignParams& params, double psi);
DrivingCam driving_cam(const DesignParams& params, double psi, double delta);

/// Maximum |mu| of the driving cam over a camshaft turn.
PressureAngleMaximum max_pressure_angle(const DesignParams& params);
PressureAngleMaximum max_pressure_angle(const DesignParams& params, double delta);

/// Axial load f_y = 2 pi C_m / p.
double axial_load(const DesignParams& params, const LoadCase& load);

/// Force on the roller when the cam contact sits at lobe-local angle
/// `local_psi`: theta = pi/2 - |mu|, f_x = f_y / tan theta.
ContactState contact_force(const DesignParams& params, const LoadCase& load, double local_psi);

/// Force state at camshaft angle psi, using the driving cam.
ContactState transmitted_force(const DesignParams& params, const LoadCase& load, double psi);

/// Left-hand side of the camshaft shear + bending constraint (MPa).
double camshaft_stress(const DesignParams& params, const LoadCase& load);

/// Left-hand side of the bearing-shaft shear constraint (MPa).
double bearing_shaft_stress(const DesignParams& params, const LoadCase& load);

/// Smallest camshaft diameter meeting `tau_max` for the given torque and pitch.
double min_camshaft_diameter(double torque, double pitch, double tau_max);

/// Smallest bearing-shaft diameter meeting `tau_max`.
double min_bearing_shaft_diameter(double torque, double pitch, double tau_max);

} // namespace slideocam
