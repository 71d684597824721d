#include "slideocam/force_transmission.hpp"

#include <cmath>
#include <sstream>

#include "slideocam/error.hpp"

namespace slideocam {

using numerics::pi;
using numerics::two_pi;

namespace {

constexpr std::size_t angle_scan_points = 4096;
constexpr double angle_tolerance = 1e-10;
constexpr double window_slack = 1e-12;
constexpr double min_force_angle = 1e-6;

bool pushing_at(const DesignParams& params, double local_psi)
{
    try {
        return profile_radius(params, local_psi) > 0.0;
    } catch (const Error&) {
        return false;
    }
}

void require_positive_diameter(double diameter, const char* name)
{
    if (!(diameter > 0.0)) {
        std::ostringstream msg;
        msg << name << " diameter must be positive, got " << diameter;
        throw Error(Errc::InvalidArgument, msg.str());
    }
}

} // namespace

void LoadCase::validate() const
{
    if (!(torque > 0.0) || !(tau_c_max > 0.0) || !(tau_b_max > 0.0)) {
        throw Error(Errc::InvalidArgument, "torque and allowable stresses must be positive");
    }
}

PressureAngle pressure_angle(const DesignParams& params, double psi)
{
    const double s = displacement(params, psi);
    if (s == 0.0) return {pi / 2.0, true};
    return {std::atan((params.displacement_rate() - params.e()) / s), false};
}

DrivingCam driving_cam(const DesignParams& params, double psi)
{
    return driving_cam(params, psi, extended_angle(params));
}

DrivingCam driving_cam(const DesignParams& params, double psi, double delta)
{
    const auto window = driving_window(params, delta);
    const auto offsets = conjugate_offsets(params);
    const double period = params.lobe_period();

    bool found = false;
    DrivingCam best{0, 0.0, 0.0};
    for (int k = 0; k < params.m(); ++k) {
        const double phase = lobe_local_angle(params, psi + offsets[static_cast<std::size_t>(k)]);
        for (int wrap = -1; wrap <= 1; ++wrap) {
            const double local = phase + wrap * period;
            if (local < window.start - window_slack || local > window.end + window_slack) continue;
            if (!pushing_at(params, local)) continue;
            const double mu = pressure_angle(params, local).mu;
            if (!found || std::abs(mu) < std::abs(best.mu)) {
                best = {k, local, mu};
                found = true;
            }
        }
    }
    if (!found) {
        throw Error(Errc::NoDrivingCam, "no conjugate cam is in a pushing configuration", psi);
    }
    return best;
}

PressureAngleMaximum max_pressure_angle(const DesignParams& params)
{
    return max_pressure_angle(params, extended_angle(params));
}

PressureAngleMaximum max_pressure_angle(const DesignParams& params, double delta)
{
    // Every cam sweeps the same driving window once per camshaft turn, so
    // the turn maximum is the window maximum.
    const auto window = driving_window(params, delta);
    bool all_pushing = true;
    auto abs_mu = [&](double local) {
        if (!pushing_at(params, local)) all_pushing = false;
        return std::abs(pressure_angle(params, local).mu);
    };
    const auto best =
        numerics::scan_maximize(abs_mu, window.start, window.end, angle_scan_points, angle_tolerance);
    if (!all_pushing) {
        throw Error(Errc::NoDrivingCam, "driving window contains a non-convex contact");
    }
    return {best.x, best.value};
}

double axial_load(const DesignParams& params, const LoadCase& load)
{
    return two_pi * load.torque / params.p();
}

ContactState contact_force(const DesignParams& params, const LoadCase& load, double local_psi)
{
    const double mu = pressure_angle(params, local_psi).mu;
    const double theta = pi / 2.0 - std::abs(mu);
    if (theta <= min_force_angle) {
        throw Error(Errc::ForceSingular, "pressure angle at 90 degrees, no force transmitted",
                    local_psi);
    }
    const double f_y = axial_load(params, load);
    const double f_x = f_y / std::tan(theta);
    return {local_psi, mu, theta, f_x, f_y, std::hypot(f_x, f_y), 0, local_psi};
}

ContactState transmitted_force(const DesignParams& params, const LoadCase& load, double psi)
{
    const auto cam = driving_cam(params, psi);
    ContactState state = contact_force(params, load, cam.local_psi);
    state.psi = psi;
    state.driving_cam = cam.index;
    return state;
}

double camshaft_stress(const DesignParams& params, const LoadCase& load)
{
    const double d = params.phi_cam();
    require_positive_diameter(d, "camshaft");
    return 8.0 * load.torque * (2.0 / (pi * d * d * d) + 1.0 / (params.p() * d * d));
}

double bearing_shaft_stress(const DesignParams& params, const LoadCase& load)
{
    const double d = params.phi_bear();
    require_positive_diameter(d, "bearing shaft");
    return 8.0 * load.torque / (params.p() * d * d);
}

double min_camshaft_diameter(double torque, double pitch, double tau_max)
{
    auto excess = [&](double d) {
        return 8.0 * torque * (2.0 / (pi * d * d * d) + 1.0 / (pitch * d * d)) - tau_max;
    };
    // Stress is strictly decreasing in d.
    double hi = 1.0;
    while (excess(hi) > 0.0) hi *= 2.0;
    return numerics::bisect(excess, 1e-9, hi, 1e-12);
}

double min_bearing_shaft_diameter(double torque, double pitch, double tau_max)
{
    return std::sqrt(8.0 * torque / (pitch * tau_max));
}

} // namespace slideocam
