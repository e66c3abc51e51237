#include "shellfe/embedding.hpp"

#include <cmath>

namespace shellfe {

namespace {

Mat3 skew_from_curvatures(double k1, double k2, double k3) {
    Mat3 m;
    m << 0.0, k1, k2, //
        -k1, 0.0, k3, //
        -k2, -k3, 0.0;
    return m;
}

Mat3 rotation_exp(const Mat3& omega, double s) {
    const double w = std::sqrt(0.5 * (omega * omega.transpose()).trace());
    if (w * std::abs(s) < 1e-12) return Mat3::Identity() + s * omega + 0.5 * s * s * omega * omega;
    const double a = std::sin(w * s) / w;
    const double b = (1.0 - std::cos(w * s)) / (w * w);
    return Mat3::Identity() + a * omega + b * omega * omega;
}

// Integral of the rotation exponential from 0 to s, for the centre line.
Mat3 rotation_exp_integral(const Mat3& omega, double s) {
    const double w = std::sqrt(0.5 * (omega * omega.transpose()).trace());
    if (w * std::abs(s) < 1e-12)
        return s * Mat3::Identity() + 0.5 * s * s * omega + s * s * s / 6.0 * omega * omega;
    const double a = (1.0 - std::cos(w * s)) / (w * w);
    const double b = (s - std::sin(w * s) / w) / (w * w);
    return s * Mat3::Identity() + a * omega + b * omega * omega;
}

bool is_tube(SurfaceFamily family) {
    return family == SurfaceFamily::GeneralTube || family == SurfaceFamily::CircularTube ||
           family == SurfaceFamily::ConstantTube ||
           family == SurfaceFamily::SurfaceOfRevolution ||
           family == SurfaceFamily::Cylinder;
}

} // namespace

GeometryEmbedding::GeometryEmbedding(const GeometryKind& kind) : kind_(kind) {
    frame0_ << 0.0, 0.0, 1.0, // T along z
        1.0, 0.0, 0.0,        // M1 along x
        0.0, 1.0, 0.0;        // M2 along y
}

void GeometryEmbedding::set_anchor(const Vec3& origin, const Mat3& frame_rows) {
    origin_ = origin;
    frame0_ = frame_rows;
}

void GeometryEmbedding::axis_state(double s, Mat3& frame_rows, Vec3& centre) const {
    const CurveFrame& cf = kind_.curve();
    if (cf.is_constant()) {
        const Mat3 omega =
            skew_from_curvatures(cf.kappa1(0.0), cf.kappa2(0.0), cf.kappa3(0.0));
        frame_rows = rotation_exp(omega, s) * frame0_;
        // Centre = origin + integral of the first frame row.
        centre = origin_ + (rotation_exp_integral(omega, s) * frame0_).row(0).transpose();
        return;
    }
    // Varying curvatures: classical RK4 on the frame rows and the centre.
    const int steps = std::max(64, static_cast<int>(std::ceil(std::abs(s) * 64.0)));
    const double h = s / steps;
    frame_rows = frame0_;
    centre = origin_;
    auto rhs = [&](double at, const Mat3& w) {
        return skew_from_curvatures(cf.kappa1(at), cf.kappa2(at), cf.kappa3(at)) * w;
    };
    double at = 0.0;
    for (int i = 0; i < steps; ++i) {
        const Mat3 k1 = rhs(at, frame_rows);
        const Mat3 k2 = rhs(at + 0.5 * h, frame_rows + 0.5 * h * k1);
        const Mat3 k3 = rhs(at + 0.5 * h, frame_rows + 0.5 * h * k2);
        const Mat3 k4 = rhs(at + h, frame_rows + h * k3);
        const Vec3 t0 = frame_rows.row(0).transpose();
        frame_rows += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        const Vec3 t1 = frame_rows.row(0).transpose();
        centre += 0.5 * h * (t0 + t1);
        at += h;
    }
}

Vec3 GeometryEmbedding::position(double eta1, double eta2, double zeta) const {
    switch (kind_.family()) {
        case SurfaceFamily::Plate:
            return Vec3(eta1, eta2, zeta);
        case SurfaceFamily::Sphere: {
            const double phi = eta1, theta = eta2;
            const Vec3 n(std::cos(theta) * std::sin(phi), std::sin(theta) * std::sin(phi),
                         std::cos(phi));
            return (kind_.constant_radius() + zeta) * n;
        }
        default: {
            const double theta = eta1, s = eta2;
            Mat3 w;
            Vec3 centre;
            axis_state(s, w, centre);
            const Vec3 m1 = w.row(1).transpose();
            const Vec3 m2 = w.row(2).transpose();
            const double r = kind_.radius().r(theta, s);
            Vec3 e1, e2, n;
            frame(eta1, eta2, e1, e2, n);
            return centre + r * (std::cos(theta) * m1 + std::sin(theta) * m2) + zeta * n;
        }
    }
}

void GeometryEmbedding::frame(double eta1, double eta2, Vec3& e1, Vec3& e2, Vec3& n) const {
    switch (kind_.family()) {
        case SurfaceFamily::Plate:
            e1 = Vec3::UnitX();
            e2 = Vec3::UnitY();
            n = Vec3::UnitZ();
            return;
        case SurfaceFamily::Sphere: {
            const double phi = eta1, theta = eta2;
            e1 = Vec3(std::cos(theta) * std::cos(phi), std::sin(theta) * std::cos(phi),
                      -std::sin(phi));
            e2 = Vec3(-std::sin(theta), std::cos(theta), 0.0);
            n = Vec3(std::cos(theta) * std::sin(phi), std::sin(theta) * std::sin(phi),
                     std::cos(phi));
            return;
        }
        default: {
            const double theta = eta1, s = eta2;
            Mat3 w;
            Vec3 centre;
            axis_state(s, w, centre);
            const Vec3 t = w.row(0).transpose();
            const Vec3 m1 = w.row(1).transpose();
            const Vec3 m2 = w.row(2).transpose();
            const FramePointData d = frame_coefficients(kind_, eta1, eta2, 0.0);
            const double r = kind_.radius().r(theta, s);
            e1 = (d.alpha3 * m1 + d.alpha2 * m2) / d.alpha5;
            e2 = (d.xi * d.alpha5 * d.alpha5 * t - r * d.alpha1 * d.alpha2 * m1 +
                  r * d.alpha1 * d.alpha3 * m2) /
                 (d.alpha5 * d.alpha4);
            n = (r * d.alpha1 * t + d.xi * d.alpha2 * m1 - d.xi * d.alpha3 * m2) / d.alpha4;
            return;
        }
    }
}

Vec3 GeometryEmbedding::displacement_to_global(double eta1, double eta2,
                                               const Vec3& u_frame) const {
    Vec3 e1, e2, n;
    frame(eta1, eta2, e1, e2, n);
    return u_frame(0) * e1 + u_frame(1) * e2 + u_frame(2) * n;
}

Vec3 GeometryEmbedding::deformed_position(double eta1, double eta2, double zeta,
                                          const Vec3& u_frame) const {
    return position(eta1, eta2, zeta) + displacement_to_global(eta1, eta2, u_frame);
}

} // namespace shellfe
