#pragma once

#include <string>

#include "shellfe/expression.hpp"
#include "shellfe/types.hpp"

namespace shellfe {

/// Cartan coefficients of the axis frame (T, M1, M2) of a tubular surface,
/// as functions of the arc-length coordinate. The first-derivative
/// expressions are produced symbolically, never by finite differences.
struct CurveFrame {
    Expression kappa1, kappa2, kappa3;
    Expression dkappa1, dkappa2, dkappa3;

    static CurveFrame straight();
    static CurveFrame constant(double k1, double k2, double k3);
    /// Frenet frame of a curve with the given curvature and torsion.
    static CurveFrame frenet(double curvature, double torsion);
    static CurveFrame from_expressions(const std::string& k1, const std::string& k2,
                                       const std::string& k3);

    bool is_straight() const;
    bool is_constant() const;
};

/// Cross-section radius profile R(eta1, eta2) with the partial derivatives
/// the frame coefficients need. Variables are named ("theta", "s").
struct RadiusProfile {
    Expression r;
    Expression r_t, r_s;        // dR/dtheta, dR/ds
    Expression r_tt, r_ss, r_ts;

    static RadiusProfile constant(double radius);
    static RadiusProfile from_expression(const std::string& text);
    /// R(s) = waist * sqrt(1 + (s/c)^2).
    static RadiusProfile hyperboloid(double waist, double flare);

    bool depends_on_theta() const { return !r_t.is_zero() || !r_ts.is_zero() || !r_tt.is_zero(); }
};

enum class SurfaceFamily {
    GeneralTube,         // R(theta, s) around a framed space curve
    CircularTube,        // R(s) around a framed space curve
    ConstantTube,        // constant R around a framed space curve
    SurfaceOfRevolution, // R(s) around a straight axis
    Cylinder,            // constant R around a straight axis
    Sphere,              // (eta1, eta2) = (phi, theta)
    Plate                // Cartesian (x, y)
};

/// Shell reference-surface description. For tube-like surfaces the surface
/// coordinates are (theta, s); for the sphere (phi, theta); for the plate
/// (x, y).
class GeometryKind {
public:
    static GeometryKind general_tube(RadiusProfile radius, CurveFrame curve);
    static GeometryKind circular_tube(RadiusProfile radius, CurveFrame curve);
    static GeometryKind constant_tube(double radius, CurveFrame curve);
    static GeometryKind surface_of_revolution(RadiusProfile radius);
    static GeometryKind cylinder(double radius);
    static GeometryKind sphere(double radius);
    static GeometryKind plate();

    SurfaceFamily family() const { return family_; }
    const RadiusProfile& radius() const { return radius_; }
    const CurveFrame& curve() const { return curve_; }
    double constant_radius() const { return constant_radius_; }

    std::string describe() const;

private:
    GeometryKind() = default;

    SurfaceFamily family_ = SurfaceFamily::Plate;
    RadiusProfile radius_ = RadiusProfile::constant(1.0);
    CurveFrame curve_ = CurveFrame::straight();
    double constant_radius_ = 0.0;
};

/// All local geometric coefficients at one quadrature point.
///
/// The a (dimensionless) and b (1/length) coefficients couple the frame
/// rotation into the displacement gradient; c1..c4 invert the in-plane part
/// of the length element; g is the volume-element density. The alpha, xi,
/// kappa_hat fields are tube-family intermediates kept for stress recovery
/// and the Cartesian embedding of results; they are filled with benign
/// values for the sphere and the plate.
struct FramePointData {
    double alpha1 = 0.0, alpha2 = 0.0, alpha3 = 0.0, alpha4 = 1.0, alpha5 = 1.0;
    double xi = 1.0;
    double kappa_hat1 = 0.0, kappa_hat2 = 0.0;
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;
    double b1 = 0.0, b2 = 0.0, b3 = 0.0;
    double c1 = 1.0, c2 = 0.0, c3 = 0.0, c4 = 1.0;
    double g = 1.0;
};

/// Evaluate the moving-frame coefficients at (eta1, eta2, zeta).
/// Throws NonpositiveJacobian if the volume-element density is <= 0 and
/// DomainError at the polar axis of a sphere.
FramePointData frame_coefficients(const GeometryKind& kind, double eta1, double eta2,
                                  double zeta);

/// Quadrature weight density: dV = volume_weight * d(eta1) d(eta2) d(zeta).
inline double volume_weight(const FramePointData& data) { return data.g; }

/// Area density of the lateral surface zeta = const (used by pressure
/// loads); identical to the volume density evaluated on that surface.
inline double lateral_area_weight(const FramePointData& data) { return data.g; }

} // namespace shellfe
