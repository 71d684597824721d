#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slideocam/cam_geometry.hpp"
#include "slideocam/force_transmission.hpp"

namespace slideocam {

/// Elastic constants and allowable contact pressures. E and pressures in MPa.
///
/// Allowable pressures that the material table gives as a range are stored
/// as the upper end, with the lower end kept in the *_min fields for
/// reporting. For single values the *_min field equals the value.
struct Material {
    std::string name;
    double E = 0.0;
    double nu = 0.0;
    double P_stat = 0.0;
    double P_max_recommended = 0.0;
    double P_stat_min = 0.0;
    double P_max_recommended_min = 0.0;

    /// Throws Error(InvalidArgument) unless E > 0, 0 < nu < 0.5 and both
    /// allowable pressures are positive.
    void validate() const;
};

/// Stainless steel, improved steel, grey cast iron, aluminum, polyamide.
const std::vector<Material>& builtin_materials();

/// Looks up a built-in material by name ("steel" and "aluminium" are
/// accepted as aliases).
std::optional<Material> find_material(std::string_view name);

/// Two cylinders in line contact: roller radius, local cam radius, width.
struct ContactGeometry {
    double R1;
    double R2;
    double L;
};

struct HertzResult {
    double band_width; ///< B, mm
    double pressure;   ///< P_h, MPa
    bool zero_load;    ///< F <= 0: both reported as 0
};

struct HertzMaximum {
    double P_h_max;
    double psi_crit;      ///< lobe-local angle of the maximum
    double psi_predicted; ///< pi/n - delta, for comparison only
    double force;
    double band_width;
    double cam_radius;
    double mu;
};

struct CheckResult {
    bool within_static;
    bool within_fatigue;
};

/// K = (1 - nu^2) / (pi E), 1/MPa.
double material_coefficient(const Material& mat);

/// R1 R2 / (R1 + R2); R2 = +inf gives R1.
double equivalent_radius(const ContactGeometry& geom);

/// Width of the band of contact, mm. F = 0 gives 0.
double contact_band_width(double force, const ContactGeometry& geom, const Material& mat1,
                          const Material& mat2);

/// Maximum contact pressure 4F / (L pi B).
HertzResult hertz_pressure(double force, const ContactGeometry& geom, const Material& mat1,
                           const Material& mat2);

/// Largest Hertz pressure over the driving window of one cam, treating the
/// cam as a cylinder of radius rho_c at each contact.
HertzMaximum max_hertz_pressure(const DesignParams& params, const LoadCase& load, double width,
                                const Material& mat_cam, const Material& mat_roller);
HertzMaximum max_hertz_pressure(const DesignParams& params, const LoadCase& load, double width,
                                const Material& mat_cam, const Material& mat_roller, double delta);

/// Hertz pressure when the cam contact sits at lobe-local angle `local_psi`.
double hertz_pressure_at(const DesignParams& params, const LoadCase& load, double width,
                         const Material& mat_cam, const Material& mat_roller, double local_psi);

CheckResult fatigue_check(double pressure, const Material& mat);

} // namespace slideocam
