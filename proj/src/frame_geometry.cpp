#include "shellfe/frame_geometry.hpp"

#include <cmath>
#include <sstream>

namespace shellfe {

namespace {

const std::vector<std::string> kRadiusVars = {"theta", "s"};
const std::vector<std::string> kCurveVars = {"s"};

[[noreturn]] void bad_jacobian(const GeometryKind& kind, double eta1, double eta2, double zeta,
                               double g) {
    std::ostringstream msg;
    msg << "volume-element density g = " << g << " <= 0 at (eta1, eta2, zeta) = (" << eta1
        << ", " << eta2 << ", " << zeta << ") on " << kind.describe();
    throw NonpositiveJacobian(msg.str());
}

void check_positive(const GeometryKind& kind, double eta1, double eta2, double zeta,
                    FramePointData& d) {
    if (!(d.g > 0.0)) bad_jacobian(kind, eta1, eta2, zeta, d.g);
}

} // namespace

CurveFrame CurveFrame::straight() { return constant(0.0, 0.0, 0.0); }

CurveFrame CurveFrame::constant(double k1, double k2, double k3) {
    CurveFrame f;
    f.kappa1 = Expression::constant(k1);
    f.kappa2 = Expression::constant(k2);
    f.kappa3 = Expression::constant(k3);
    f.dkappa1 = Expression::constant(0.0);
    f.dkappa2 = Expression::constant(0.0);
    f.dkappa3 = Expression::constant(0.0);
    return f;
}

CurveFrame CurveFrame::frenet(double curvature, double torsion) {
    return constant(curvature, 0.0, torsion);
}

CurveFrame CurveFrame::from_expressions(const std::string& k1, const std::string& k2,
                                        const std::string& k3) {
    CurveFrame f;
    f.kappa1 = Expression::parse(k1, kCurveVars);
    f.kappa2 = Expression::parse(k2, kCurveVars);
    f.kappa3 = Expression::parse(k3, kCurveVars);
    f.dkappa1 = f.kappa1.derivative("s");
    f.dkappa2 = f.kappa2.derivative("s");
    f.dkappa3 = f.kappa3.derivative("s");
    return f;
}

bool CurveFrame::is_straight() const {
    return kappa1.is_zero() && kappa2.is_zero() && kappa3.is_zero();
}

bool CurveFrame::is_constant() const {
    return kappa1.is_constant() && kappa2.is_constant() && kappa3.is_constant();
}

RadiusProfile RadiusProfile::constant(double radius) {
    RadiusProfile p;
    p.r = Expression::constant(radius);
    p.r_t = p.r_s = p.r_tt = p.r_ss = p.r_ts = Expression::constant(0.0);
    return p;
}

RadiusProfile RadiusProfile::from_expression(const std::string& text) {
    RadiusProfile p;
    p.r = Expression::parse(text, kRadiusVars);
    p.r_t = p.r.derivative("theta");
    p.r_s = p.r.derivative("s");
    p.r_tt = p.r_t.derivative("theta");
    p.r_ss = p.r_s.derivative("s");
    p.r_ts = p.r_t.derivative("s");
    return p;
}

RadiusProfile RadiusProfile::hyperboloid(double waist, double flare) {
    std::ostringstream text;
    text.precision(17);
    text << waist << "*sqrt(1+(s/" << flare << ")^2)";
    return from_expression(text.str());
}

GeometryKind GeometryKind::general_tube(RadiusProfile radius, CurveFrame curve) {
    GeometryKind k;
    k.family_ = SurfaceFamily::GeneralTube;
    k.radius_ = std::move(radius);
    k.curve_ = std::move(curve);
    return k;
}

GeometryKind GeometryKind::circular_tube(RadiusProfile radius, CurveFrame curve) {
    GeometryKind k;
    k.family_ = SurfaceFamily::CircularTube;
    k.radius_ = std::move(radius);
    k.curve_ = std::move(curve);
    return k;
}

GeometryKind GeometryKind::constant_tube(double radius, CurveFrame curve) {
    GeometryKind k;
    k.family_ = SurfaceFamily::ConstantTube;
    k.constant_radius_ = radius;
    k.radius_ = RadiusProfile::constant(radius);
    k.curve_ = std::move(curve);
    return k;
}

GeometryKind GeometryKind::surface_of_revolution(RadiusProfile radius) {
    GeometryKind k;
    k.family_ = SurfaceFamily::SurfaceOfRevolution;
    k.radius_ = std::move(radius);
    k.curve_ = CurveFrame::straight();
    return k;
}

GeometryKind GeometryKind::cylinder(double radius) {
    GeometryKind k;
    k.family_ = SurfaceFamily::Cylinder;
    k.constant_radius_ = radius;
    k.radius_ = RadiusProfile::constant(radius);
    k.curve_ = CurveFrame::straight();
    return k;
}

GeometryKind GeometryKind::sphere(double radius) {
    GeometryKind k;
    k.family_ = SurfaceFamily::Sphere;
    k.constant_radius_ = radius;
    k.radius_ = RadiusProfile::constant(radius);
    return k;
}

GeometryKind GeometryKind::plate() {
    GeometryKind k;
    k.family_ = SurfaceFamily::Plate;
    return k;
}

std::string GeometryKind::describe() const {
    switch (family_) {
        case SurfaceFamily::GeneralTube: return "general tube";
        case SurfaceFamily::CircularTube: return "circular tube";
        case SurfaceFamily::ConstantTube: return "constant-radius tube";
        case SurfaceFamily::SurfaceOfRevolution: return "surface of revolution";
        case SurfaceFamily::Cylinder: return "cylinder";
        case SurfaceFamily::Sphere: return "sphere";
        case SurfaceFamily::Plate: return "plate";
    }
    return "?";
}

namespace {

// Full tube-family coefficients for R(theta, s) around a framed curve.
FramePointData general_tube_point(const GeometryKind& kind, double theta, double s,
                                  double zeta) {
    const RadiusProfile& rp = kind.radius();
    const CurveFrame& cf = kind.curve();

    const double r = rp.r(theta, s);
    const double rt = rp.r_t(theta, s);
    const double rs = rp.r_s(theta, s);
    const double rtt = rp.r_tt(theta, s);
    const double rss = rp.r_ss(theta, s);
    const double rts = rp.r_ts(theta, s);

    const double k1 = cf.kappa1(s);
    const double k2 = cf.kappa2(s);
    const double k3 = cf.kappa3(s);
    const double dk1 = cf.dkappa1(s);
    const double dk2 = cf.dkappa2(s);
    const double dk3 = cf.dkappa3(s);

    const double cth = std::cos(theta);
    const double sth = std::sin(theta);

    FramePointData d;
    d.kappa_hat1 = k1 * cth + k2 * sth;
    d.kappa_hat2 = k1 * sth - k2 * cth;
    d.xi = 1.0 - r * d.kappa_hat1;

    d.alpha1 = k3 * rt - rs;
    d.alpha2 = rt * sth + r * cth;
    d.alpha3 = rt * cth - r * sth;
    d.alpha5 = std::sqrt(rt * rt + r * r);
    d.alpha4 = std::sqrt(r * r * d.alpha1 * d.alpha1 +
                         d.xi * d.xi * (d.alpha2 * d.alpha2 + d.alpha3 * d.alpha3));
    if (!(d.alpha5 > 0.0))
        throw DomainError("tube radius profile vanished at (theta, s) = (" +
                          std::to_string(theta) + ", " + std::to_string(s) + ")");

    const double a2_t = rtt * sth + 2.0 * rt * cth - r * sth;
    const double a3_t = rtt * cth - 2.0 * rt * sth - r * cth;
    const double a2_s = rts * sth + rs * cth;
    const double a3_s = rts * cth - rs * sth;
    const double a1_t = k3 * rtt - rts;
    const double a1_s = dk3 * rt + k3 * rts - rss;
    const double a5_t = (rt * rtt + r * rt) / d.alpha5;
    const double a5_s = (rt * rts + r * rs) / d.alpha5;
    const double kh1_s = dk1 * cth + dk2 * sth;
    const double xi_s = -(rs * d.kappa_hat1 + r * kh1_s);

    const double a4 = d.alpha4;
    const double a5 = d.alpha5;
    const double a4sq = a4 * a4;

    d.a1 = r * d.alpha1 * (r * r + 2.0 * rt * rt - r * rtt) / (a4 * a5 * a5);
    d.a2 = d.xi * (d.alpha2 * a3_t - d.alpha3 * a2_t) / (a4 * a5);
    d.a3 = d.alpha1 * a5 * (r * r * d.kappa_hat2 - rt) / a4sq +
           r * d.xi * (d.alpha1 * a5_t - a5 * a1_t) / a4sq;

    d.b1 = r * k3 * d.alpha1 / a4 - d.xi * (d.kappa_hat1 * rt - r * d.kappa_hat2) / a4 +
           r * d.alpha1 * (rs * rt - r * rts) / (a4 * a5 * a5);
    d.b2 = -d.xi * k3 * a5 / a4 -
           r * d.alpha1 * (d.kappa_hat1 * rt - r * d.kappa_hat2) / (a4 * a5) +
           d.xi * (d.alpha2 * a3_s - d.alpha3 * a2_s) / (a4 * a5);
    d.b3 = (r * d.kappa_hat1 + rt * d.kappa_hat2) / a5 -
           d.alpha1 * a5 * (d.xi * rs + r * xi_s) / a4sq -
           r * d.xi * (a5 * a1_s - d.alpha1 * a5_s) / a4sq;

    // The two in-plane rows of the length element at this zeta.
    const double w_ts = (rs * rt + k3 * r * r) / a5; // ds-coefficient of the eta1 row
    const double row11 = a5 - d.a2 * zeta;
    const double row12 = w_ts - d.b2 * zeta;
    const double row21 = -d.a3 * zeta;
    const double row22 = a4 / a5 - d.b3 * zeta;

    d.g = row11 * row22 - row12 * row21;
    if (d.g > 0.0) {
        d.c1 = row22 / d.g;
        d.c2 = -row12 / d.g;
        d.c3 = -row21 / d.g;
        d.c4 = row11 / d.g;
    }
    return d;
}

// Specialization for R = R(s): dR/dtheta terms drop out.
FramePointData circular_tube_point(const GeometryKind& kind, double theta, double s,
                                   double zeta) {
    const RadiusProfile& rp = kind.radius();
    const CurveFrame& cf = kind.curve();

    const double r = rp.r(theta, s);
    const double rs = rp.r_s(theta, s);
    const double rss = rp.r_ss(theta, s);
    const double k1 = cf.kappa1(s);
    const double k2 = cf.kappa2(s);
    const double k3 = cf.kappa3(s);
    const double dk1 = cf.dkappa1(s);
    const double dk2 = cf.dkappa2(s);

    const double cth = std::cos(theta);
    const double sth = std::sin(theta);

    FramePointData d;
    d.kappa_hat1 = k1 * cth + k2 * sth;
    d.kappa_hat2 = k1 * sth - k2 * cth;
    d.xi = 1.0 - r * d.kappa_hat1;
    d.alpha1 = -rs;
    d.alpha2 = r * cth;
    d.alpha3 = -r * sth;
    d.alpha5 = r;
    const double q = std::sqrt(d.alpha1 * d.alpha1 + d.xi * d.xi);
    d.alpha4 = r * q;

    const double kh1_s = dk1 * cth + dk2 * sth;
    const double xi_s = -(rs * d.kappa_hat1 + r * kh1_s);

    d.a1 = d.alpha1 / q;
    d.a2 = -d.xi / q;
    d.a3 = d.alpha1 * r * d.kappa_hat2 / (q * q);
    d.b1 = (k3 * d.alpha1 + d.xi * d.kappa_hat2) / q;
    d.b2 = (-d.xi * k3 + d.alpha1 * d.kappa_hat2) / q;
    d.b3 = d.kappa_hat1 + (xi_s * rs + d.xi * rss) / (q * q);

    const double row11 = r - d.a2 * zeta;
    const double row12 = k3 * r - d.b2 * zeta;
    const double row21 = -d.a3 * zeta;
    const double row22 = q - d.b3 * zeta;

    d.g = row11 * row22 - row12 * row21;
    if (d.g > 0.0) {
        d.c1 = row22 / d.g;
        d.c2 = -row12 / d.g;
        d.c3 = -row21 / d.g;
        d.c4 = row11 / d.g;
    }
    return d;
}

FramePointData constant_tube_point(const GeometryKind& kind, double theta, double s,
                                   double zeta) {
    const double r = kind.constant_radius();
    const CurveFrame& cf = kind.curve();
    const double k1 = cf.kappa1(s);
    const double k2 = cf.kappa2(s);
    const double k3 = cf.kappa3(s);

    const double cth = std::cos(theta);
    const double sth = std::sin(theta);

    FramePointData d;
    d.kappa_hat1 = k1 * cth + k2 * sth;
    d.kappa_hat2 = k1 * sth - k2 * cth;
    d.xi = 1.0 - r * d.kappa_hat1;
    d.alpha1 = 0.0;
    d.alpha2 = r * cth;
    d.alpha3 = -r * sth;
    d.alpha4 = r * d.xi;
    d.alpha5 = r;

    d.a1 = 0.0;
    d.a2 = -1.0;
    d.a3 = 0.0;
    d.b1 = d.kappa_hat2;
    d.b2 = -k3;
    d.b3 = d.kappa_hat1;

    const double hoop = r + zeta;
    const double axial = d.xi - d.kappa_hat1 * zeta;
    d.g = hoop * axial;
    if (d.g > 0.0) {
        d.c1 = 1.0 / hoop;
        d.c2 = -k3 / axial;
        d.c3 = 0.0;
        d.c4 = 1.0 / axial;
    }
    return d;
}

FramePointData surface_of_revolution_point(const GeometryKind& kind, double theta, double s,
                                           double zeta) {
    const RadiusProfile& rp = kind.radius();
    const double r = rp.r(theta, s);
    const double rs = rp.r_s(theta, s);
    const double rss = rp.r_ss(theta, s);

    FramePointData d;
    d.alpha1 = -rs;
    d.alpha2 = r * std::cos(theta);
    d.alpha3 = -r * std::sin(theta);
    d.alpha5 = r;
    const double q = std::sqrt(rs * rs + 1.0);
    d.alpha4 = r * q;

    d.a1 = -rs / q;
    d.a2 = -1.0 / q;
    d.a3 = 0.0;
    d.b1 = 0.0;
    d.b2 = 0.0;
    d.b3 = rss / (q * q);

    const double hoop = r - d.a2 * zeta;
    const double merid = q - d.b3 * zeta;
    d.g = hoop * merid;
    if (d.g > 0.0) {
        d.c1 = 1.0 / hoop;
        d.c2 = 0.0;
        d.c3 = 0.0;
        d.c4 = 1.0 / merid;
    }
    return d;
}

FramePointData cylinder_point(const GeometryKind& kind, double theta, double /*s*/,
                              double zeta) {
    const double r = kind.constant_radius();
    FramePointData d;
    d.alpha1 = 0.0;
    d.alpha2 = r * std::cos(theta);
    d.alpha3 = -r * std::sin(theta);
    d.alpha4 = r;
    d.alpha5 = r;
    d.a2 = -1.0;
    d.g = r + zeta;
    if (d.g > 0.0) {
        d.c1 = 1.0 / (r + zeta);
        d.c4 = 1.0;
    }
    return d;
}

FramePointData sphere_point(const GeometryKind& kind, double phi, double /*theta*/,
                            double zeta) {
    const double r = kind.constant_radius();
    const double sp = std::sin(phi);
    const double cp = std::cos(phi);
    if (std::abs(sp) < 1e-14)
        throw DomainError("spherical patch touches the polar axis (sin(phi) = 0 at phi = " +
                          std::to_string(phi) + ")");

    FramePointData d;
    d.alpha4 = d.alpha5 = r;
    d.a2 = -1.0;
    d.b1 = cp;
    d.b3 = -sp;
    const double rad = r + zeta;
    d.g = rad * rad * sp;
    if (d.g > 0.0) {
        d.c1 = 1.0 / rad;
        d.c4 = 1.0 / (rad * sp);
    }
    return d;
}

} // namespace

FramePointData frame_coefficients(const GeometryKind& kind, double eta1, double eta2,
                                  double zeta) {
    FramePointData d;
    switch (kind.family()) {
        case SurfaceFamily::GeneralTube: d = general_tube_point(kind, eta1, eta2, zeta); break;
        case SurfaceFamily::CircularTube: d = circular_tube_point(kind, eta1, eta2, zeta); break;
        case SurfaceFamily::ConstantTube: d = constant_tube_point(kind, eta1, eta2, zeta); break;
        case SurfaceFamily::SurfaceOfRevolution:
            d = surface_of_revolution_point(kind, eta1, eta2, zeta);
            break;
        case SurfaceFamily::Cylinder: d = cylinder_point(kind, eta1, eta2, zeta); break;
        case SurfaceFamily::Sphere: d = sphere_point(kind, eta1, eta2, zeta); break;
        case SurfaceFamily::Plate: return d;
    }
    check_positive(kind, eta1, eta2, zeta, d);
    return d;
}

} // namespace shellfe
