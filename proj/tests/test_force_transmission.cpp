#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "slideocam/error.hpp"
#include "slideocam/force_transmission.hpp"
#include "slideocam/presets.hpp"

using namespace slideocam;
using numerics::pi;
using numerics::two_pi;

namespace {

const DesignParams case_study(20.0, 5.25, 3.35, 1, 2);
const LoadCase orthoglide_load{1200.0, 150.0, 150.0};

oracle::Design as_oracle(const DesignParams& d) { return {d.p(), d.e(), d.a4(), d.n(), d.m()}; }

double deg(double rad) { return rad * 180.0 / pi; }

} // namespace

TEST(PressureAngle, MatchesFollowerLaw)
{
    for (const auto& d : {case_study, DesignParams(50.0, 9.0, 10.0, 2, 2)}) {
        const auto o = as_oracle(d);
        for (double psi = -1.0; psi < 7.0; psi += 0.013) {
            if (std::abs(displacement(d, psi)) < 1e-9) continue;
            EXPECT_NEAR(pressure_angle(d, psi).mu, static_cast<double>(oracle::pressure_angle(o, psi)),
                        1e-14);
        }
    }
}

TEST(PressureAngle, SimplifiedSingleLobeForm)
{
    const double eta = case_study.eta();
    for (double psi = -1.1; psi < 7.4; psi += 0.001) {
        if (std::abs(psi - pi) < 1e-6) continue;
        const double simplified = (1.0 - two_pi * eta) / (psi - pi);
        EXPECT_NEAR(std::tan(pressure_angle(case_study, psi).mu), simplified,
                    1e-12 * std::max(1.0, std::abs(simplified)));
    }
}

TEST(PressureAngle, SingularAtZeroDisplacement)
{
    const auto at_pi = pressure_angle(DesignParams(20.0, 5.0, 2.0), pi);
    // s(pi) rounds to zero or to a tiny value; either way |mu| is 90 degrees.
    EXPECT_NEAR(std::abs(at_pi.mu), pi / 2.0, 1e-12);
}

TEST(PressureAngle, MonotoneInEta)
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> psi_dist(-1.0, pi - 0.05);
    for (int trial = 0; trial < 25; ++trial) {
        const double psi = psi_dist(rng);
        double previous = -1.0;
        for (double eta = 1.0 / two_pi + 0.005; eta <= 0.5; eta += 0.005) {
            const double mu = std::abs(pressure_angle(DesignParams(20.0, 20.0 * eta, 2.0), psi).mu);
            EXPECT_GT(mu, previous) << "psi=" << psi << " eta=" << eta;
            previous = mu;
        }
    }
}

TEST(DrivingCam, SingleCamAlwaysZero)
{
    // With m = 1 the window is the whole lobe span, so every angle has a
    // driver as long as the profile is convex.
    const DesignParams d(20.0, 8.0, 3.0, 1, 1);
    for (double psi = 0.0; psi < two_pi; psi += 0.05) EXPECT_EQ(driving_cam(d, psi).index, 0);
}

TEST(DrivingCam, HandOverAtWindowBoundary)
{
    const double delta = extended_angle(case_study);
    const auto window = driving_window(case_study, delta);
    // Camshaft angles where cam 0 enters and leaves its window.
    const double enter = lobe_local_angle(case_study, window.start);
    const double leave = lobe_local_angle(case_study, window.end);

    const int points = 100000;
    int switches = 0;
    std::vector<double> switch_at;
    int previous = driving_cam(case_study, 0.0, delta).index;
    for (int i = 1; i <= points; ++i) {
        const double psi = two_pi * i / points;
        const int index = driving_cam(case_study, psi, delta).index;
        if (index != previous) {
            ++switches;
            switch_at.push_back(psi);
        }
        previous = index;
    }
    EXPECT_EQ(switches, 2);
    const double tol = two_pi / points + 1e-12;
    for (double psi : switch_at) {
        const bool near_boundary = std::abs(psi - enter) <= tol || std::abs(psi - leave) <= tol;
        EXPECT_TRUE(near_boundary) << psi;
    }
}

TEST(DrivingCam, PeriodicInBeta)
{
    const double beta = pi;
    for (double psi = 0.05; psi < pi; psi += 0.1) {
        const auto a = driving_cam(case_study, psi);
        const auto b = driving_cam(case_study, psi + beta);
        EXPECT_NE(a.index, b.index);
        EXPECT_NEAR(a.local_psi, b.local_psi, 1e-12);
    }
}

TEST(DrivingCam, NoPushingCam)
{
    const DesignParams lapped(20.0, 5.25, 9.0, 1, 2);
    bool thrown = false;
    for (double psi = 0.0; psi < two_pi && !thrown; psi += 0.01) {
        try {
            driving_cam(lapped, psi);
        } catch (const Error& err) {
            EXPECT_EQ(err.code(), Errc::NoDrivingCam);
            thrown = true;
        }
    }
    EXPECT_TRUE(thrown);
}

TEST(MaxPressureAngle, CaseStudyAgainstDenseScan)
{
    const auto o = as_oracle(case_study);
    const auto window = driving_window(case_study);
    const auto want = oracle::dense_maximum(
        [&](oracle::real x) { return std::abs(oracle::pressure_angle(o, x)); }, window.start,
        window.end, 100000);
    const auto got = max_pressure_angle(case_study);
    EXPECT_NEAR(got.mu_max, static_cast<double>(want.second), 1e-10);
    EXPECT_LT(deg(got.mu_max), 30.0);
    EXPECT_NEAR(deg(got.mu_max), 29.68, 0.01);
}

TEST(MaxPressureAngle, DecreasesWithConjugateCams)
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> eta_dist(0.22, 0.45);
    std::uniform_real_distribution<double> a4_dist(0.5, 3.0);
    int checked = 0;
    while (checked < 25) {
        const double e = 20.0 * eta_dist(rng);
        const double a4 = a4_dist(rng);
        double previous = 10.0;
        bool ok = true;
        std::vector<double> values;
        for (int m = 1; m <= 3; ++m) {
            try {
                values.push_back(max_pressure_angle(DesignParams(20.0, e, a4, 1, m)).mu_max);
            } catch (const Error&) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (double v : values) {
            EXPECT_LT(v, previous) << "e=" << e << " a4=" << a4;
            previous = v;
        }
        ++checked;
    }
}

TEST(MaxPressureAngle, NonDecreasingInRollerRadius)
{
    double previous = 0.0;
    for (double a4 = 1.0; a4 <= 4.0; a4 += 0.25) {
        const double mu = max_pressure_angle(DesignParams(20.0, 5.25, a4, 1, 2)).mu_max;
        EXPECT_GE(mu, previous - 1e-12) << a4;
        previous = mu;
    }
}

TEST(Force, AxialLoad)
{
    EXPECT_NEAR(axial_load(case_study, orthoglide_load), 376.99111843077515, 1e-9);
    EXPECT_LT(std::abs(axial_load(case_study, orthoglide_load) / 376.0 - 1.0), 0.003);
}

TEST(Force, Decomposition)
{
    for (double psi = 0.0; psi < two_pi; psi += 0.01) {
        const auto st = transmitted_force(case_study, orthoglide_load, psi);
        EXPECT_NEAR(st.F * st.F / (st.f_x * st.f_x + st.f_y * st.f_y), 1.0, 1e-9);
        EXPECT_NEAR(st.f_y / axial_load(case_study, orthoglide_load), 1.0, 1e-12);
        EXPECT_NEAR(st.theta, pi / 2.0 - std::abs(st.mu), 1e-15);
        EXPECT_NEAR(st.F, static_cast<double>(oracle::contact_force(1200.0, 20.0, st.mu)),
                    1e-9 * st.F);
    }
}

TEST(Force, SpecialAngles)
{
    // |mu| = 45 deg where psi - pi = -(1 - 2 pi eta); mu -> 0 as s' -> e.
    const double eta = case_study.eta();
    const double psi45 = pi - (1.0 - two_pi * eta);
    const auto st = contact_force(case_study, orthoglide_load, psi45);
    EXPECT_NEAR(std::abs(st.mu), pi / 4.0, 1e-12);
    EXPECT_NEAR(st.f_x, st.f_y, 1e-9);
    EXPECT_NEAR(st.F, st.f_y * std::sqrt(2.0), 1e-9);

    const DesignParams flat(20.0, 20.0 / two_pi + 1e-6, 1.0);
    const auto zero = contact_force(flat, orthoglide_load, 0.0);
    EXPECT_NEAR(zero.f_x, 0.0, 1e-4);
    EXPECT_NEAR(zero.F, zero.f_y, 1e-6);
}

TEST(Force, SingularAtNinetyDegrees)
{
    const DesignParams d(16.0, 5.0, 2.0);
    try {
        contact_force(d, orthoglide_load, pi);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::ForceSingular);
    }
}

TEST(ShaftStress, Camshaft)
{
    const auto d375 = DesignParams::from_diameters(20.0, 6.7, 3.75, 1, 2);
    const auto d38 = DesignParams::from_diameters(20.0, 6.7, 3.8, 1, 2);
    EXPECT_NEAR(camshaft_stress(d375, orthoglide_load), 150.1, 0.1);
    EXPECT_NEAR(camshaft_stress(d38, orthoglide_load), 144.6, 0.1);
    EXPECT_NEAR(camshaft_stress(d38, orthoglide_load),
                static_cast<double>(oracle::camshaft_stress(1200.0, 20.0, d38.phi_cam())), 1e-9);
    EXPECT_NEAR(min_camshaft_diameter(1200.0, 20.0, 150.0), 3.75, 0.01);
}

TEST(ShaftStress, CamshaftPowerLaws)
{
    const double d = 4.0;
    const double bend = 16.0 * 1200.0 / (pi * d * d * d);
    const double shear = 8.0 * 1200.0 / (20.0 * d * d);
    const auto one = DesignParams(20.0, 3.0 + d / 2.0, 3.0);
    const auto two = DesignParams(20.0, 3.0 + d, 3.0);
    EXPECT_NEAR(camshaft_stress(one, orthoglide_load), bend + shear, 1e-10);
    EXPECT_NEAR(camshaft_stress(two, orthoglide_load), bend / 8.0 + shear / 4.0, 1e-10);
}

TEST(ShaftStress, Bearing)
{
    const auto d = DesignParams::from_diameters(20.0, 6.7, 3.8, 1, 2);
    EXPECT_NEAR(bearing_shaft_stress(d, orthoglide_load), 10.69, 0.01);
    EXPECT_NEAR(min_bearing_shaft_diameter(1200.0, 20.0, 150.0), 1.789, 0.001);
    const auto quad = DesignParams::from_diameters(20.0, 4.0 * 6.7, 3.8, 1, 2);
    EXPECT_NEAR(bearing_shaft_stress(quad, orthoglide_load) * 16.0, bearing_shaft_stress(d, orthoglide_load),
                1e-12);
}

TEST(ShaftStress, StrictlyDecreasing)
{
    double prev_c = 1e300, prev_b = 1e300;
    for (double phi = 0.5; phi < 20.0; phi += 0.1) {
        const auto d = DesignParams::from_diameters(20.0, phi, phi, 1, 2);
        EXPECT_LT(camshaft_stress(d, orthoglide_load), prev_c);
        EXPECT_LT(bearing_shaft_stress(d, orthoglide_load), prev_b);
        prev_c = camshaft_stress(d, orthoglide_load);
        prev_b = bearing_shaft_stress(d, orthoglide_load);
    }
}

TEST(ShaftStress, NonPositiveDiameterRejected)
{
    EXPECT_THROW(camshaft_stress(DesignParams(50.0, 9.0, 10.0), orthoglide_load), Error);
}

TEST(LoadCase, Validate)
{
    EXPECT_NO_THROW(orthoglide_load.validate());
    EXPECT_THROW((LoadCase{0.0, 1.0, 1.0}.validate()), Error);
    EXPECT_THROW((LoadCase{1.0, -1.0, 1.0}.validate()), Error);
}
