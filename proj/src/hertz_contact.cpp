#include "slideocam/hertz_contact.hpp"

#include <cmath>
#include <sstream>

#include "slideocam/error.hpp"

namespace slideocam {

using numerics::pi;

namespace {

constexpr std::size_t pressure_scan_points = 4096;
constexpr double pressure_tolerance = 1e-10;

void require_valid_geometry(const ContactGeometry& geom)
{
    if (!(geom.R1 > 0.0) || !(geom.L > 0.0)) {
        throw Error(Errc::InvalidArgument, "roller radius and contact width must be positive");
    }
    if (!(geom.R2 > 0.0)) {
        std::ostringstream msg;
        msg << "cam radius " << geom.R2 << " mm is not a pushing contact";
        throw Error(Errc::InvalidArgument, msg.str());
    }
}

} // namespace

void Material::validate() const
{
    if (!(E > 0.0) || !(nu > 0.0 && nu < 0.5) || !(P_stat > 0.0) || !(P_max_recommended > 0.0)) {
        throw Error(Errc::InvalidArgument,
                    "material '" + name + "' needs E > 0, 0 < nu < 0.5 and positive pressures");
    }
}

const std::vector<Material>& builtin_materials()
{
    // Allowable pressures: upper end of each range, lower end in *_min.
    static const std::vector<Material> table{
        {"stainless_steel", 193000.0, 0.29, 650.0, 260.0, 650.0, 260.0},
        {"improved_steel", 210000.0, 0.30, 2000.0, 800.0, 1600.0, 640.0},
        {"grey_cast_iron", 110000.0, 0.26, 700.0, 280.0, 400.0, 60.0},
        {"aluminum", 69000.0, 0.33, 62.5, 150.0, 62.5, 25.0},
        {"polyamide", 3000.0, 0.39, 25.0, 10.0, 25.0, 10.0},
    };
    return table;
}

std::optional<Material> find_material(std::string_view name)
{
    if (name == "steel") name = "improved_steel";
    if (name == "aluminium") name = "aluminum";
    for (const auto& mat : builtin_materials()) {
        if (mat.name == name) return mat;
    }
    return std::nullopt;
}

double material_coefficient(const Material& mat)
{
    return (1.0 - mat.nu * mat.nu) / (pi * mat.E);
}

double equivalent_radius(const ContactGeometry& geom)
{
    if (std::isinf(geom.R2)) return geom.R1;
    return geom.R1 * geom.R2 / (geom.R1 + geom.R2);
}

double contact_band_width(double force, const ContactGeometry& geom, const Material& mat1,
                          const Material& mat2)
{
    require_valid_geometry(geom);
    if (force < 0.0) throw Error(Errc::InvalidArgument, "contact force must be non-negative");
    const double compliance = material_coefficient(mat1) + material_coefficient(mat2);
    return std::sqrt(16.0 * force * compliance * equivalent_radius(geom) / geom.L);
}

HertzResult hertz_pressure(double force, const ContactGeometry& geom, const Material& mat1,
                           const Material& mat2)
{
    if (!(force > 0.0)) {
        require_valid_geometry(geom);
        return {0.0, 0.0, true};
    }
    const double band = contact_band_width(force, geom, mat1, mat2);
    return {band, 4.0 * force / (geom.L * pi * band), false};
}

double hertz_pressure_at(const DesignParams& params, const LoadCase& load, double width,
                         const Material& mat_cam, const Material& mat_roller, double local_psi)
{
    const double radius = profile_radius(params, local_psi);
    if (!(radius > 0.0)) {
        throw Error(Errc::NoDrivingCam, "cam is not convex at the driving contact", local_psi);
    }
    const auto force = contact_force(params, load, local_psi);
    return hertz_pressure(force.F, {params.a4(), radius, width}, mat_cam, mat_roller).pressure;
}

HertzMaximum max_hertz_pressure(const DesignParams& params, const LoadCase& load, double width,
                                const Material& mat_cam, const Material& mat_roller)
{
    return max_hertz_pressure(params, load, width, mat_cam, mat_roller, extended_angle(params));
}

HertzMaximum max_hertz_pressure(const DesignParams& params, const LoadCase& load, double width,
                                const Material& mat_cam, const Material& mat_roller, double delta)
{
    // All cams share the same driving window, so one window covers the turn.
    const auto window = driving_window(params, delta);
    auto pressure = [&](double local) {
        return hertz_pressure_at(params, load, width, mat_cam, mat_roller, local);
    };
    const auto best = numerics::scan_maximize(pressure, window.start, window.end,
                                              pressure_scan_points, pressure_tolerance);

    const double radius = profile_radius(params, best.x);
    const auto force = contact_force(params, load, best.x);
    const auto hertz = hertz_pressure(force.F, {params.a4(), radius, width}, mat_cam, mat_roller);
    return {
        best.value,
        best.x,
        pi / params.n() - delta,
        force.F,
        hertz.band_width,
        radius,
        force.mu,
    };
}

CheckResult fatigue_check(double pressure, const Material& mat)
{
    return {pressure <= mat.P_stat, pressure <= mat.P_max_recommended};
}

} // namespace slideocam
