#include "slideocam/cam_geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "slideocam/error.hpp"

namespace slideocam {

using numerics::pi;
using numerics::two_pi;

namespace {

constexpr std::size_t root_scan_points = 4096;
constexpr double root_tolerance = 1e-12;
constexpr std::size_t radius_scan_points = 2048;
constexpr double radius_tolerance = 1e-10;

void require_nondegenerate(const DesignParams& params)
{
    if (params.eta_degenerate()) {
        std::ostringstream msg;
        msg << "eta = " << params.eta() << " is within " << degenerate_eta_tolerance
            << " of n/(2 pi); profile coefficients are undefined";
        throw Error(Errc::DegenerateEta, msg.str());
    }
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

} // namespace

DesignParams::DesignParams(double pitch, double offset, double roller_radius, int lobes, int cams)
    : p_(pitch), e_(offset), a4_(roller_radius), n_(lobes), m_(cams)
{
    if (!positive_finite(p_) || !positive_finite(e_) || !positive_finite(a4_)) {
        throw Error(Errc::InvalidArgument, "pitch, offset and roller radius must be positive");
    }
    if (n_ < 1 || m_ < 1) {
        throw Error(Errc::InvalidArgument, "lobe and cam counts must be at least 1");
    }
}

DesignParams DesignParams::from_diameters(double pitch, double phi_bear, double phi_cam, int lobes,
                                          int cams)
{
    if (!positive_finite(phi_bear) || !positive_finite(phi_cam)) {
        throw Error(Errc::InvalidArgument, "shaft diameters must be positive");
    }
    const double a4 = 0.5 * phi_bear;
    return DesignParams(pitch, 0.5 * phi_cam + a4, a4, lobes, cams);
}

bool DesignParams::eta_degenerate() const noexcept
{
    return std::abs(eta() - n_ / two_pi) < degenerate_eta_tolerance;
}

double displacement(const DesignParams& params, double psi)
{
    return params.displacement_rate() * psi - 0.5 * params.p();
}

double lobe_local_angle(const DesignParams& params, double psi)
{
    const double period = params.lobe_period();
    double local = std::fmod(psi, period);
    if (local < 0.0) local += period;
    if (local >= period) local -= period;
    return local;
}

ProfileCoefficients profile_coefficients(const DesignParams& params, double psi)
{
    require_nondegenerate(params);
    // With alpha1 = -pi/2: b2 = s', b3 = |(e - s', s)|, delta = atan(s / (e - s')).
    const double scale = params.p() / two_pi;
    const double n = params.n();
    const double offset_term = two_pi * params.eta() - n;
    const double angle_term = n * psi - pi;
    return {
        params.displacement_rate(),
        scale * std::hypot(offset_term, angle_term),
        std::atan2(angle_term, offset_term),
    };
}

Point2 cam_profile_point(const DesignParams& params, double psi)
{
    const auto [b2, b3, delta] = profile_coefficients(params, psi);
    const double arm = b3 - params.a4();
    return {
        b2 * std::cos(psi) + arm * std::cos(delta - psi),
        -b2 * std::sin(psi) + arm * std::sin(delta - psi),
    };
}

Point2 pitch_curve_point(const DesignParams& params, double psi)
{
    const double s = displacement(params, psi);
    const double c = std::cos(psi);
    const double sn = std::sin(psi);
    return {params.e() * c + s * sn, -params.e() * sn + s * c};
}

double extended_angle(const DesignParams& params)
{
    require_nondegenerate(params);
    auto v_c = [&params](double psi) { return cam_profile_point(params, psi).v; };

    const double step = pi / static_cast<double>(root_scan_points - 1);
    // Walk from zero toward -pi so the first bracket holds the root nearest zero.
    double right = 0.0;
    double f_right = v_c(right);
    for (std::size_t i = 1; i < root_scan_points; ++i) {
        const double left = (i + 1 == root_scan_points) ? -pi : -step * static_cast<double>(i);
        const double f_left = v_c(left);
        if (f_left == 0.0) return left;
        if ((f_left < 0.0) != (f_right < 0.0)) {
            const double root = numerics::bisect(v_c, left, right, root_tolerance);
            if (root < 0.0) return root;
        }
        right = left;
        f_right = f_left;
    }
    std::ostringstream msg;
    msg << "v_c has no sign change on (-pi, 0) for p=" << params.p() << " e=" << params.e()
        << " a4=" << params.a4() << " n=" << params.n();
    throw Error(Errc::NoRoot, msg.str());
}

LobeSpan lobe_span(const DesignParams& params, double delta)
{
    return {delta, params.lobe_period() - delta};
}

LobeSpan lobe_span(const DesignParams& params) { return lobe_span(params, extended_angle(params)); }

LobeSpan driving_window(const DesignParams& params, double delta)
{
    const double end = params.lobe_period() - delta;
    return {end - params.lobe_period() / params.m(), end};
}

LobeSpan driving_window(const DesignParams& params)
{
    return driving_window(params, extended_angle(params));
}

double pitch_curvature(const DesignParams& params, double psi)
{
    require_nondegenerate(params);
    // kappa = (s^2 + (s'-e)(2s'-e)) / (s^2 + (s'-e)^2)^(3/2), written in eta.
    const double n = params.n();
    const double offset_term = n - two_pi * params.eta();
    const double angle_term = n * psi - pi;
    const double a2 = angle_term * angle_term;
    const double num = a2 + offset_term * (offset_term + n);
    const double den = std::pow(a2 + offset_term * offset_term, 1.5);
    return two_pi * num / (params.p() * den);
}

namespace {

// d(kappa_p)/d(psi) up to a positive factor.
double curvature_slope(const DesignParams& params, double psi)
{
    const double n = params.n();
    const double offset_term = n - two_pi * params.eta();
    const double angle_term = n * psi - pi;
    const double b = offset_term * offset_term;
    const double a = offset_term * (offset_term + n);
    return (b - 1.5 * a - 0.5 * angle_term * angle_term) * angle_term;
}

} // namespace

double profile_radius(const DesignParams& params, double psi)
{
    const double kappa = pitch_curvature(params, psi);
    const double cusp = 1.0 - params.a4() * kappa;
    if (std::abs(cusp) < cusp_tolerance) {
        throw Error(Errc::CurvatureSingularity, "cusp on the cam profile", psi);
    }
    if (kappa == 0.0) return std::numeric_limits<double>::infinity();
    return cusp / kappa;
}

RadiusMinimum min_profile_radius(const DesignParams& params, double psi_lo, double psi_hi)
{
    if (!(psi_lo < psi_hi)) {
        throw Error(Errc::InvalidArgument, "min_profile_radius requires psi_lo < psi_hi");
    }
    auto rho = [&params](double psi) { return profile_radius(params, psi); };
    const auto best = numerics::scan_minimize(rho, psi_lo, psi_hi, radius_scan_points, radius_tolerance);

    // Comparing values pins a flat minimum only to about sqrt(eps) in psi.
    // rho' = -kappa'/kappa^2, so polish on the sign of kappa' when the
    // bracket holds an interior maximum of kappa > 0 or minimum of kappa < 0.
    const double h = (psi_hi - psi_lo) / static_cast<double>(radius_scan_points - 1);
    const double lo = std::max(psi_lo, best.x - h);
    const double hi = std::min(psi_hi, best.x + h);
    const double k_lo = pitch_curvature(params, lo);
    const double k_hi = pitch_curvature(params, hi);
    if ((k_lo > 0.0) != (k_hi > 0.0)) return {best.x, best.value};
    auto rho_slope = [&](double psi) {
        return k_lo > 0.0 ? -curvature_slope(params, psi) : curvature_slope(params, psi);
    };
    if (!(rho_slope(lo) < 0.0 && rho_slope(hi) > 0.0)) return {best.x, best.value};
    const double x = numerics::bisect(rho_slope, lo, hi, 1e-15);
    return {x, profile_radius(params, x)};
}

ValidityReport profile_validity(const DesignParams& params)
{
    ValidityReport report;
    const double eta_floor = params.n() / two_pi;
    report.eta_above_lower_bound = params.eta() > eta_floor && !params.eta_degenerate();
    report.convex_everywhere = params.eta() > 2.0 * eta_floor;
    if (params.eta_degenerate()) return report;

    try {
        report.extended_angle = extended_angle(params);
        report.closed = true;
    } catch (const Error&) {
        return report;
    }

    const auto window = driving_window(params, *report.extended_angle);
    try {
        const auto minimum = min_profile_radius(params, window.start, window.end);
        report.min_driving_radius = minimum.rho_min;
        report.pushing_side_valid = minimum.rho_min > 0.0;
    } catch (const Error&) {
        report.pushing_side_valid = false;
    }
    return report;
}

std::vector<double> conjugate_offsets(const DesignParams& params)
{
    const double beta = two_pi / (params.n() * params.m());
    std::vector<double> offsets;
    offsets.reserve(static_cast<std::size_t>(params.m()));
    for (int k = 0; k < params.m(); ++k) offsets.push_back(k * beta);
    return offsets;
}

std::vector<ProfileSample> sample_profile(const DesignParams& params, std::size_t count)
{
    if (count < 16) throw Error(Errc::InvalidArgument, "sample_profile needs at least 16 samples");
    const auto span = lobe_span(params);
    const double step = (span.end - span.start) / static_cast<double>(count - 1);

    std::vector<ProfileSample> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double psi = (i + 1 == count) ? span.end : span.start + step * static_cast<double>(i);
        try {
            const Point2 contact = cam_profile_point(params, psi);
            const Point2 centre = pitch_curve_point(params, psi);
            samples.push_back({psi, contact.u, contact.v, centre.u, centre.v,
                               pitch_curvature(params, psi), profile_radius(params, psi)});
        } catch (const Error& err) {
            throw Error(err.code(), err.what(), psi);
        }
    }
    return samples;
}

Point2 rotate(Point2 point, double angle)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * point.u - s * point.v, s * point.u + c * point.v};
}

} // namespace slideocam
