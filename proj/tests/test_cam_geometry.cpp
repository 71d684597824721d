#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "slideocam/cam_geometry.hpp"
#include "slideocam/error.hpp"

using namespace slideocam;
using numerics::pi;
using numerics::two_pi;

namespace {

const DesignParams case_study(20.0, 5.25, 3.35, 1, 2);
const DesignParams lobed(50.0, 9.0, 10.0, 1, 2);
const DesignParams convex(20.0, 7.0, 3.0, 1, 2);

oracle::Design as_oracle(const DesignParams& d)
{
    return {d.p(), d.e(), d.a4(), d.n(), d.m()};
}

} // namespace

TEST(DesignParams, DiametersRoundTrip)
{
    const auto d = DesignParams::from_diameters(20.0, 6.7, 3.8, 1, 2);
    EXPECT_DOUBLE_EQ(d.a4(), 3.35);
    EXPECT_DOUBLE_EQ(d.e(), 5.25);
    EXPECT_DOUBLE_EQ(d.phi_bear(), 6.7);
    EXPECT_NEAR(d.phi_cam(), 3.8, 1e-12);
    EXPECT_DOUBLE_EQ(d.eta(), 0.2625);
}

TEST(DesignParams, RejectsNonPositive)
{
    EXPECT_THROW(DesignParams(0.0, 1.0, 1.0), Error);
    EXPECT_THROW(DesignParams(20.0, -1.0, 1.0), Error);
    EXPECT_THROW(DesignParams(20.0, 5.0, 0.0), Error);
    EXPECT_THROW(DesignParams(20.0, 5.0, 1.0, 0, 1), Error);
    EXPECT_THROW(DesignParams(20.0, 5.0, 1.0, 1, 0), Error);
}

TEST(DesignParams, DegenerateEtaGuard)
{
    const DesignParams near(20.0, 20.0 / two_pi + 1e-11, 3.0);
    EXPECT_TRUE(near.eta_degenerate());
    EXPECT_THROW(pitch_curvature(near, 1.0), Error);
    try {
        extended_angle(near);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::DegenerateEta);
    }
}

TEST(Displacement, Law)
{
    EXPECT_DOUBLE_EQ(displacement(case_study, 0.0), -10.0);
    EXPECT_NEAR(displacement(case_study, pi), 0.0, 1e-14);
    EXPECT_NEAR(displacement(case_study, two_pi) - displacement(case_study, 0.0), 20.0, 1e-12);
    const DesignParams two(20.0, 5.0, 3.0, 2, 2);
    EXPECT_NEAR(displacement(two, pi) - displacement(two, 0.0), 20.0, 1e-12);
}

TEST(PitchCurve, Examples)
{
    const auto a = pitch_curve_point(case_study, 0.0);
    EXPECT_NEAR(a.u, 5.25, 1e-14);
    EXPECT_NEAR(a.v, -10.0, 1e-14);
    const auto b = pitch_curve_point(case_study, pi);
    EXPECT_NEAR(b.u, -5.25, 1e-12);
    EXPECT_NEAR(b.v, 0.0, 1e-12);
    for (double psi = -1.0; psi < 7.0; psi += 0.37) {
        const auto q = pitch_curve_point(case_study, psi);
        EXPECT_NEAR(std::hypot(q.u, q.v), std::hypot(5.25, displacement(case_study, psi)), 1e-12);
    }
}

TEST(CamProfile, MatchesNormalOffsetOfPitchCurve)
{
    for (const auto& d : {case_study, lobed, convex, DesignParams(50.0, 9.0, 10.0, 2, 2)}) {
        const auto o = as_oracle(d);
        for (double psi = -1.2; psi < 2.0 * pi + 1.2; psi += 0.01) {
            const auto got = cam_profile_point(d, psi);
            const auto want = oracle::contact(o, psi);
            EXPECT_NEAR(got.u, static_cast<double>(want.x), 1e-11) << psi;
            EXPECT_NEAR(got.v, static_cast<double>(want.y), 1e-11) << psi;
        }
    }
}

TEST(CamProfile, ContactAtRollerRadius)
{
    for (double psi = -1.0; psi < 7.0; psi += 0.013) {
        const auto c = cam_profile_point(lobed, psi);
        const auto q = pitch_curve_point(lobed, psi);
        EXPECT_NEAR(std::hypot(c.u - q.u, c.v - q.v) / lobed.a4(), 1.0, 1e-9);
    }
}

TEST(CamProfile, Coefficients)
{
    const auto k = profile_coefficients(case_study, 1.0);
    EXPECT_NEAR(k.b2, 20.0 / two_pi, 1e-14);
    EXPECT_NEAR(k.b3, 20.0 / two_pi * std::hypot(two_pi * 0.2625 - 1.0, 1.0 - pi), 1e-12);
    EXPECT_NEAR(k.delta, std::atan2(1.0 - pi, two_pi * 0.2625 - 1.0), 1e-14);
}

TEST(ExtendedAngle, AgreesWithDenseScan)
{
    for (const auto& d : {case_study, lobed, convex}) {
        const double delta = extended_angle(d);
        const auto want = oracle::extended_angle(as_oracle(d));
        ASSERT_TRUE(want.has_value());
        EXPECT_LT(delta, 0.0);
        EXPECT_NEAR(delta, static_cast<double>(*want), 1e-8);
        EXPECT_NEAR(cam_profile_point(d, delta).v, 0.0, 1e-9);
        EXPECT_NEAR(cam_profile_point(d, pi).v, 0.0, 1e-9);
        EXPECT_NEAR(cam_profile_point(d, two_pi - delta).v, 0.0, 1e-9);
    }
}

TEST(ExtendedAngle, CaseStudyValue)
{
    EXPECT_NEAR(extended_angle(case_study), -1.13943, 1e-5);
}

TEST(ExtendedAngle, RollerTooLargeHasNoRoot)
{
    // The contact point never crosses v = 0 on (-pi, 0) when the roller
    // swallows the whole pitch curve there.
    try {
        extended_angle(DesignParams(20.0, 5.25, 15.0));
        FAIL() << "expected NoRoot";
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::NoRoot);
    }
}

TEST(Curvature, AnalyticMatchesFiniteDifference)
{
    for (const auto& d : {convex, DesignParams(30.0, 12.0, 4.0), DesignParams(20.0, 14.0, 3.0, 2, 2)}) {
        const auto o = as_oracle(d);
        const double delta = extended_angle(d);
        const double lo = delta, hi = d.lobe_period() - delta;
        for (int i = 0; i < 10000; ++i) {
            const double psi = lo + (hi - lo) * i / 9999.0;
            const auto want = oracle::fd_curvature(o, psi);
            EXPECT_NEAR(pitch_curvature(d, psi) / static_cast<double>(want), 1.0, 1e-6) << psi;
        }
    }
}

TEST(Curvature, HandDerivedFormula)
{
    for (const auto& d : {case_study, lobed, DesignParams(50.0, 9.0, 10.0, 2, 2)}) {
        const auto o = as_oracle(d);
        for (double psi = -1.0; psi < 7.0; psi += 0.07) {
            EXPECT_NEAR(pitch_curvature(d, psi), static_cast<double>(oracle::curvature(o, psi)),
                        1e-12 * (1.0 + std::abs(pitch_curvature(d, psi))));
        }
    }
}

TEST(Curvature, Symmetry)
{
    for (double x = 0.0; x < 2.0; x += 0.1) {
        EXPECT_NEAR(pitch_curvature(case_study, pi + x), pitch_curvature(case_study, pi - x), 1e-15);
        EXPECT_NEAR(std::abs(cam_profile_point(case_study, pi + x).v),
                    std::abs(cam_profile_point(case_study, pi - x).v), 1e-9);
    }
}

TEST(Curvature, ZeroAtBoundaryEta)
{
    const DesignParams d(20.0, 20.0 / pi, 3.0);
    EXPECT_NEAR(pitch_curvature(d, pi), 0.0, 1e-15);
    EXPECT_TRUE(std::isinf(profile_radius(d, pi)));
}

TEST(ProfileRadius, OffsetIdentity)
{
    for (const auto& d : {case_study, lobed, convex}) {
        for (double psi = -1.0; psi < 7.0; psi += 0.011) {
            const double rho_p = 1.0 / pitch_curvature(d, psi);
            const double rho_c = profile_radius(d, psi);
            EXPECT_NEAR((rho_p - rho_c) / d.a4(), 1.0, 1e-9);
        }
    }
}

TEST(ProfileRadius, SmallRollerLimit)
{
    const DesignParams tiny(20.0, 5.25, 1e-9);
    for (double psi = 0.0; psi < 2.0; psi += 0.3) {
        EXPECT_NEAR(profile_radius(tiny, psi) * pitch_curvature(tiny, psi), 1.0, 1e-8);
    }
}

TEST(ProfileRadius, CuspIsReported)
{
    // Choose a4 = rho_p at psi = 0.5 exactly.
    const DesignParams probe(20.0, 7.0, 1.0);
    const double a4 = 1.0 / pitch_curvature(probe, 0.5);
    const DesignParams cusp(20.0, 7.0, a4);
    try {
        profile_radius(cusp, 0.5);
        FAIL() << "expected CurvatureSingularity";
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::CurvatureSingularity);
    }
}

TEST(ProfileRadius, ConcaveBelowConvexBound)
{
    // For eta < 1/pi the pitch curve bends the other way around psi = pi.
    EXPECT_LT(profile_radius(case_study, pi), 0.0);
    EXPECT_GT(profile_radius(convex, pi), 0.0);
}

TEST(MinProfileRadius, ConvexClosedForm)
{
    for (double e : {6.5, 7.0, 8.0, 10.0}) {
        const DesignParams d(20.0, e, 2.0);
        const auto o = as_oracle(d);
        const auto want = oracle::convex_radius_minimum_psi(o);
        ASSERT_TRUE(want.has_value());
        const auto got = min_profile_radius(d, pi, 2.0 * pi - extended_angle(d));
        EXPECT_NEAR(got.psi_min, static_cast<double>(want->second), 1e-8);
        EXPECT_GT(got.rho_min, 0.0);
    }
}

TEST(MinProfileRadius, DenseScan)
{
    struct Case {
        DesignParams d;
        double lo, hi;
    };
    const double dc = extended_angle(case_study);
    const double dx = extended_angle(convex);
    const double dl = extended_angle(lobed);
    const Case cases[] = {
        {case_study, pi - dc, two_pi - dc},
        {convex, dx, two_pi - dx},
        {lobed, pi + 1.0, two_pi - dl},
    };
    for (const auto& c : cases) {
        const auto o = as_oracle(c.d);
        const auto want = oracle::dense_minimum([&](oracle::real x) { return oracle::cam_radius(o, x); },
                                                c.lo, c.hi);
        const auto got = min_profile_radius(c.d, c.lo, c.hi);
        EXPECT_NEAR(got.psi_min, static_cast<double>(want.first), 1e-8);
        EXPECT_NEAR(got.rho_min, static_cast<double>(want.second), 1e-9);
    }
}

TEST(MinProfileRadius, ConvexRegimePositive)
{
    const DesignParams d(20.0, 8.0, 3.0);
    const double delta = extended_angle(d);
    EXPECT_GT(min_profile_radius(d, delta, two_pi - delta).rho_min, 0.0);
}

TEST(Validity, CaseStudy)
{
    const auto r = profile_validity(case_study);
    EXPECT_TRUE(r.eta_above_lower_bound);
    EXPECT_FALSE(r.convex_everywhere);
    EXPECT_TRUE(r.pushing_side_valid);
    EXPECT_TRUE(r.closed);
    EXPECT_TRUE(r.valid());
    ASSERT_TRUE(r.min_driving_radius.has_value());
    const auto window = driving_window(case_study);
    EXPECT_DOUBLE_EQ(*r.min_driving_radius,
                     min_profile_radius(case_study, window.start, window.end).rho_min);
}

TEST(Validity, Flags)
{
    EXPECT_TRUE(profile_validity(DesignParams(20.0, 8.0, 3.0)).convex_everywhere);
    const auto boundary = profile_validity(DesignParams(20.0, 20.0 / two_pi + 1e-12, 3.0));
    EXPECT_FALSE(boundary.eta_above_lower_bound);
    EXPECT_FALSE(boundary.valid());
    EXPECT_FALSE(profile_validity(DesignParams(20.0, 5.25, 15.0)).closed);
}

TEST(Validity, LapBackOnDrivingFlank)
{
    // A roller much larger than the pitch radius of curvature on the window.
    const auto r = profile_validity(DesignParams(20.0, 5.25, 9.0, 1, 2));
    EXPECT_TRUE(r.closed);
    EXPECT_FALSE(r.pushing_side_valid);
    EXPECT_FALSE(r.valid());
}

TEST(ConjugateOffsets, Values)
{
    EXPECT_EQ(conjugate_offsets(DesignParams(20.0, 5.0, 3.0, 1, 1)), std::vector<double>{0.0});
    const auto two = conjugate_offsets(DesignParams(20.0, 5.0, 3.0, 1, 2));
    ASSERT_EQ(two.size(), 2u);
    EXPECT_DOUBLE_EQ(two[1], pi);
    const auto lobes = conjugate_offsets(DesignParams(20.0, 5.0, 3.0, 2, 2));
    EXPECT_DOUBLE_EQ(lobes[1], pi / 2.0);
}

TEST(SampleProfile, Grid)
{
    const auto samples = sample_profile(case_study, 16);
    ASSERT_EQ(samples.size(), 16u);
    const double delta = extended_angle(case_study);
    EXPECT_DOUBLE_EQ(samples.front().psi, delta);
    EXPECT_DOUBLE_EQ(samples.back().psi, two_pi - delta);
    for (const auto& s : samples) {
        const auto c = cam_profile_point(case_study, s.psi);
        EXPECT_EQ(s.u_c, c.u);
        EXPECT_EQ(s.v_c, c.v);
        EXPECT_EQ(s.kappa_p, pitch_curvature(case_study, s.psi));
        EXPECT_EQ(s.rho_c, profile_radius(case_study, s.psi));
    }
    EXPECT_THROW(sample_profile(case_study, 15), Error);
}

TEST(SampleProfile, Deterministic)
{
    const auto a = sample_profile(lobed, 500);
    const auto b = sample_profile(lobed, 500);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].u_c, b[i].u_c);
        EXPECT_EQ(a[i].rho_c, b[i].rho_c);
    }
}

TEST(LobeLocalAngle, Reduction)
{
    const DesignParams two(20.0, 8.0, 3.0, 2, 2);
    EXPECT_NEAR(lobe_local_angle(two, pi + 0.25), 0.25, 1e-15);
    EXPECT_NEAR(lobe_local_angle(two, -0.25), pi - 0.25, 1e-15);
    EXPECT_NEAR(lobe_local_angle(case_study, 7.0), 7.0 - two_pi, 1e-15);
}

TEST(DrivingWindow, Layout)
{
    const double delta = extended_angle(case_study);
    const auto w = driving_window(case_study, delta);
    EXPECT_NEAR(w.start, pi - delta, 1e-15);
    EXPECT_NEAR(w.end, two_pi - delta, 1e-15);
    const auto span = lobe_span(case_study, delta);
    EXPECT_DOUBLE_EQ(span.start, delta);
    EXPECT_DOUBLE_EQ(span.end, two_pi - delta);
}
