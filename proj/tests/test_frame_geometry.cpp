#include <doctest.h>

#include "shellfe/frame_geometry.hpp"
#include "support.hpp"

using namespace shellfe;
using namespace testsupport;

namespace {

void check_same_point(const FramePointData& a, const FramePointData& b, double tol) {
    CHECK(rel_err(a.a1, b.a1, 1e-12) < tol);
    CHECK(rel_err(a.a2, b.a2, 1e-12) < tol);
    CHECK(rel_err(a.a3, b.a3, 1e-12) < tol);
    CHECK(rel_err(a.b1, b.b1, 1e-12) < tol);
    CHECK(rel_err(a.b2, b.b2, 1e-12) < tol);
    CHECK(rel_err(a.b3, b.b3, 1e-12) < tol);
    CHECK(rel_err(a.c1, b.c1, 1e-12) < tol);
    CHECK(rel_err(a.c2, b.c2, 1e-12) < tol);
    CHECK(rel_err(a.c3, b.c3, 1e-12) < tol);
    CHECK(rel_err(a.c4, b.c4, 1e-12) < tol);
    CHECK(rel_err(a.g, b.g, 1e-12) < tol);
    CHECK(rel_err(a.alpha4, b.alpha4, 1e-12) < tol);
    CHECK(rel_err(a.alpha5, b.alpha5, 1e-12) < tol);
    CHECK(rel_err(a.xi, b.xi, 1e-12) < tol);
}

} // namespace

TEST_CASE("cylinder and sphere reference values") {
    const FramePointData cyl = frame_coefficients(GeometryKind::cylinder(1.0), 0.4, 0.7, 0.0);
    CHECK(cyl.c1 == doctest::Approx(1.0));
    CHECK(cyl.c2 == 0.0);
    CHECK(cyl.c3 == 0.0);
    CHECK(cyl.c4 == doctest::Approx(1.0));
    CHECK(cyl.g == doctest::Approx(1.0));
    CHECK(volume_weight(frame_coefficients(GeometryKind::cylinder(1.0), 0.1, 0.0, 0.1)) ==
          doctest::Approx(1.1));

    CHECK(volume_weight(frame_coefficients(GeometryKind::sphere(2.0), M_PI / 2, 0.3, 0.0)) ==
          doctest::Approx(4.0));
    CHECK(volume_weight(frame_coefficients(GeometryKind::sphere(1.0), M_PI / 6, 1.0, 0.0)) ==
          doctest::Approx(0.5));

    const FramePointData plate = frame_coefficients(GeometryKind::plate(), 0.2, 0.5, 0.04);
    CHECK(plate.c1 == 1.0);
    CHECK(plate.c4 == 1.0);
    CHECK(plate.c2 == 0.0);
    CHECK(plate.c3 == 0.0);
    CHECK(plate.g == 1.0);
    CHECK(plate.a1 == 0.0);
    CHECK(plate.b3 == 0.0);
}

TEST_CASE("constant-radius tube reference values") {
    // Bent tube, radius 0.3, curvature 0.5 about M1 only, at theta = 0.
    const GeometryKind tube = GeometryKind::constant_tube(0.3, CurveFrame::constant(0.5, 0, 0));
    const FramePointData d = frame_coefficients(tube, 0.0, 1.0, 0.0);
    CHECK(d.xi == doctest::Approx(0.85));
    CHECK(d.g == doctest::Approx(0.255));
    CHECK(d.kappa_hat1 == doctest::Approx(0.5));
    CHECK(d.kappa_hat2 == doctest::Approx(0.0));
}

TEST_CASE("spiral tube coefficients are independent of the cross-section angle") {
    const GeometryKind tube = GeometryKind::constant_tube(0.3, CurveFrame::frenet(0.5, -0.5));
    auto& gen = rng(30);
    for (int trial = 0; trial < 50; ++trial) {
        const double theta = uniform(gen, 0.0, 2 * M_PI);
        const double s = uniform(gen, 0.0, 12.0);
        const FramePointData d = frame_coefficients(tube, theta, s, 0.0);
        CHECK(d.a2 == doctest::Approx(-1.0));
        CHECK(d.a1 == 0.0);
        CHECK(d.a3 == 0.0);
        CHECK(d.b1 == doctest::Approx(d.kappa_hat2));
        CHECK(d.b2 == doctest::Approx(0.5)); // -kappa3 = -torsion
        CHECK(d.b3 == doctest::Approx(d.kappa_hat1));
        CHECK(d.alpha5 == doctest::Approx(0.3));
    }
}

TEST_CASE("reduction chain: general tube -> circular tube -> constant tube -> cylinder") {
    auto& gen = rng(31);
    // Varying curvatures exercise the dkappa/ds terms on both code paths.
    const char* k1 = "0.3+0.05*sin(s/2)";
    const char* k2 = "0.1*cos(s/3)";
    const char* k3 = "-0.2+0.04*s/10";

    const GeometryKind general = GeometryKind::general_tube(
        RadiusProfile::from_expression("0.3+0.05*sin(s)"), CurveFrame::from_expressions(k1, k2, k3));
    const GeometryKind circular = GeometryKind::circular_tube(
        RadiusProfile::from_expression("0.3+0.05*sin(s)"), CurveFrame::from_expressions(k1, k2, k3));

    for (int trial = 0; trial < 500; ++trial) {
        const double theta = uniform(gen, 0.0, 2 * M_PI);
        const double s = uniform(gen, 0.0, 8.0);
        const double zeta = uniform(gen, -0.02, 0.02);
        check_same_point(frame_coefficients(general, theta, s, zeta),
                         frame_coefficients(circular, theta, s, zeta), 1e-12);
    }

    const GeometryKind circular_const = GeometryKind::circular_tube(
        RadiusProfile::constant(0.3), CurveFrame::from_expressions(k1, k2, k3));
    const GeometryKind constant =
        GeometryKind::constant_tube(0.3, CurveFrame::from_expressions(k1, k2, k3));
    for (int trial = 0; trial < 500; ++trial) {
        const double theta = uniform(gen, 0.0, 2 * M_PI);
        const double s = uniform(gen, 0.0, 8.0);
        const double zeta = uniform(gen, -0.02, 0.02);
        check_same_point(frame_coefficients(circular_const, theta, s, zeta),
                         frame_coefficients(constant, theta, s, zeta), 1e-12);
    }

    const GeometryKind constant_straight =
        GeometryKind::constant_tube(0.7, CurveFrame::straight());
    const GeometryKind cylinder = GeometryKind::cylinder(0.7);
    for (int trial = 0; trial < 500; ++trial) {
        const double theta = uniform(gen, 0.0, 2 * M_PI);
        const double s = uniform(gen, -4.0, 4.0);
        const double zeta = uniform(gen, -0.05, 0.05);
        check_same_point(frame_coefficients(constant_straight, theta, s, zeta),
                         frame_coefficients(cylinder, theta, s, zeta), 1e-12);
    }
}

TEST_CASE("reduction chain: circular tube -> surface of revolution -> cylinder") {
    auto& gen = rng(32);
    const GeometryKind circular_no_curve = GeometryKind::circular_tube(
        RadiusProfile::from_expression("1.5*sqrt(1+(s/2)^2)"), CurveFrame::straight());
    const GeometryKind revolution = GeometryKind::surface_of_revolution(
        RadiusProfile::from_expression("1.5*sqrt(1+(s/2)^2)"));
    for (int trial = 0; trial < 500; ++trial) {
        const double theta = uniform(gen, 0.0, 2 * M_PI);
        const double s = uniform(gen, -3.0, 3.0);
        const double zeta = uniform(gen, -0.1, 0.1);
        check_same_point(frame_coefficients(circular_no_curve, theta, s, zeta),
                         frame_coefficients(revolution, theta, s, zeta), 1e-12);
    }

    const GeometryKind revolution_const =
        GeometryKind::surface_of_revolution(RadiusProfile::constant(0.9));
    const GeometryKind cylinder = GeometryKind::cylinder(0.9);
    for (int trial = 0; trial < 500; ++trial) {
        const double theta = uniform(gen, 0.0, 2 * M_PI);
        const double s = uniform(gen, -3.0, 3.0);
        const double zeta = uniform(gen, -0.08, 0.08);
        check_same_point(frame_coefficients(revolution_const, theta, s, zeta),
                         frame_coefficients(cylinder, theta, s, zeta), 1e-12);
    }
}

TEST_CASE("general tube with constant radius and straight axis equals the cylinder") {
    auto& gen = rng(33);
    const GeometryKind general = GeometryKind::general_tube(
        RadiusProfile::from_expression("1.25"), CurveFrame::straight());
    const GeometryKind cylinder = GeometryKind::cylinder(1.25);
    for (int trial = 0; trial < 500; ++trial) {
        const double theta = uniform(gen, 0.0, 2 * M_PI);
        const double s = uniform(gen, -5.0, 5.0);
        const double zeta = uniform(gen, -0.1, 0.1);
        check_same_point(frame_coefficients(general, theta, s, zeta),
                         frame_coefficients(cylinder, theta, s, zeta), 1e-12);
    }
}

TEST_CASE("volume density stays positive across the thickness") {
    auto& gen = rng(34);
    const std::vector<GeometryKind> kinds = {
        GeometryKind::cylinder(1.0),
        GeometryKind::sphere(2.0),
        GeometryKind::plate(),
        GeometryKind::constant_tube(0.3, CurveFrame::frenet(0.5, -0.5)),
        GeometryKind::surface_of_revolution(RadiusProfile::hyperboloid(7.5, 11.547)),
        GeometryKind::circular_tube(RadiusProfile::from_expression("0.4+0.05*cos(s)"),
                                    CurveFrame::frenet(0.3, 0.1)),
        GeometryKind::general_tube(
            RadiusProfile::from_expression("0.4+0.03*cos(2*theta)+0.05*sin(s)"),
            CurveFrame::frenet(0.3, -0.2)),
    };
    for (const GeometryKind& kind : kinds) {
        const double min_radius =
            kind.family() == SurfaceFamily::Plate ? 1.0 : 0.25; // smallest radius above
        for (int trial = 0; trial < 1000; ++trial) {
            const double eta1 = kind.family() == SurfaceFamily::Sphere
                                    ? uniform(gen, 0.3, M_PI - 0.3)
                                    : uniform(gen, 0.0, 2 * M_PI);
            const double eta2 = uniform(gen, 0.0, 5.0);
            const double zeta = uniform(gen, -0.1, 0.1) * min_radius;
            CHECK(frame_coefficients(kind, eta1, eta2, zeta).g > 0.0);
        }
    }
}

TEST_CASE("geometry error paths") {
    CHECK_THROWS_AS(frame_coefficients(GeometryKind::sphere(1.0), 0.0, 0.2, 0.0), DomainError);
    CHECK_THROWS_AS(frame_coefficients(GeometryKind::sphere(1.0), M_PI, 0.2, 0.0), DomainError);
    // Tube bent more tightly than its own radius: xi < 0 on the inner side.
    const GeometryKind over_bent = GeometryKind::constant_tube(0.5, CurveFrame::frenet(3.0, 0.0));
    CHECK_THROWS_AS(frame_coefficients(over_bent, 0.0, 1.0, 0.0), NonpositiveJacobian);
    // Offsetting past the cylinder axis inverts the volume element.
    CHECK_THROWS_AS(frame_coefficients(GeometryKind::cylinder(0.2), 0.0, 0.0, -0.25),
                    NonpositiveJacobian);
}
