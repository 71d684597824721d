#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "slideocam/numerics.hpp"

namespace slideocam {

/// Directed angle between the cam axis and the follower translation.
inline constexpr double follower_axis_angle = -numerics::pi / 2.0;

/// Rejection band around the degenerate offset ratio eta = n/(2 pi).
inline constexpr double degenerate_eta_tolerance = 1e-9;

/// Rejection band for cusps, |1 - a4 * kappa_p|.
inline constexpr double cusp_tolerance = 1e-12;

/// Geometric description of one Slide-o-Cam design. Lengths in mm.
///
/// The shaft diameters are derived from (e, a4); they are not stored.
/// Construction only checks positivity: a degenerate eta or e <= a4 is a
/// property of the design that individual operations reject or report.
class DesignParams {
public:
    /// Throws Error(InvalidArgument) unless p, e, a4 > 0 and n, m >= 1.
    DesignParams(double pitch, double offset, double roller_radius, int lobes = 1, int cams = 1);

    /// Inverse of the shaft-diameter definitions: a4 = phi_bear/2,
    /// e = phi_cam/2 + a4.
    static DesignParams from_diameters(double pitch, double phi_bear, double phi_cam, int lobes,
                                       int cams);

    double p() const noexcept { return p_; }
    double e() const noexcept { return e_; }
    double a4() const noexcept { return a4_; }
    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }

    double phi_cam() const noexcept { return 2.0 * (e_ - a4_); }
    double phi_bear() const noexcept { return 2.0 * a4_; }
    double eta() const noexcept { return e_ / p_; }

    /// Camshaft rotation spanned by one lobe, 2 pi / n.
    double lobe_period() const noexcept { return numerics::two_pi / n_; }

    /// Follower velocity ratio ds/dpsi within a lobe, n p / (2 pi).
    double displacement_rate() const noexcept { return n_ * p_ / numerics::two_pi; }

    /// True when |eta - n/(2 pi)| falls inside the rejection band.
    bool eta_degenerate() const noexcept;

private:
    double p_;
    double e_;
    double a4_;
    int n_;
    int m_;
};

struct Point2 {
    double u;
    double v;
};

struct ProfileCoefficients {
    double b2;
    double b3;
    double delta;
};

/// One evaluated point of the cam profile.
struct ProfileSample {
    double psi;
    double u_c;
    double v_c;
    double u_p;
    double v_p;
    double kappa_p;
    double rho_c;
};

struct RadiusMinimum {
    double psi_min;
    double rho_min;
};

/// Closed lobe span [delta, 2 pi/n - delta] in lobe-local angle.
struct LobeSpan {
    double start;
    double end;
};

struct ValidityReport {
    bool eta_above_lower_bound = false;
    bool convex_everywhere = false;
    bool pushing_side_valid = false;
    bool closed = false;
    std::optional<double> extended_angle;
    std::optional<double> min_driving_radius;

    bool valid() const noexcept { return eta_above_lower_bound && pushing_side_valid && closed; }
};

// All angles below are lobe-local cam angles in radians; lobe j of a cam is
// lobe 0 rotated by -2 pi j / n in the cam frame.

/// Follower displacement s = (n p / 2 pi) psi - p/2.
double displacement(const DesignParams& params, double psi);

/// Reduces a camshaft angle to the lobe-local angle in [0, 2 pi/n).
double lobe_local_angle(const DesignParams& params, double psi);

ProfileCoefficients profile_coefficients(const DesignParams& params, double psi);

/// Contact point between cam and roller, cam frame.
Point2 cam_profile_point(const DesignParams& params, double psi);

/// Roller-centre trajectory, cam frame.
Point2 pitch_curve_point(const DesignParams& params, double psi);

/// Negative root of v_c nearest to zero. Throws NoRoot when v_c does not
/// change sign on (-pi, 0).
double extended_angle(const DesignParams& params);

LobeSpan lobe_span(const DesignParams& params, double delta);
LobeSpan lobe_span(const DesignParams& params);

/// Portion of the lobe span over which a cam drives the follower: the
/// trailing 2 pi/(n m) of the span, ending where the roller leaves the lobe.
LobeSpan driving_window(const DesignParams& params, double delta);
LobeSpan driving_window(const DesignParams& params);

/// Signed curvature of the pitch curve (1/mm).
double pitch_curvature(const DesignParams& params, double psi);

/// Signed radius of curvature of the cam profile, rho_p - a4. Positive
/// means locally convex toward the roller. Returns +infinity where the
/// pitch curve is straight.
double profile_radius(const DesignParams& params, double psi);

/// Global minimum of profile_radius on [psi_lo, psi_hi].
RadiusMinimum min_profile_radius(const DesignParams& params, double psi_lo, double psi_hi);

ValidityReport profile_validity(const DesignParams& params);

/// Phase offsets {0, beta, ..., (m-1) beta} with beta = 2 pi/(n m).
std::vector<double> conjugate_offsets(const DesignParams& params);

/// `count` uniformly spaced samples over the lobe span, endpoints included.
std::vector<ProfileSample> sample_profile(const DesignParams& params, std::size_t count);

/// Rotates a cam-frame point by `angle` (counter-clockwise).
Point2 rotate(Point2 point, double angle);

} // namespace slideocam
