#pragma once

#include "shellfe/frame_geometry.hpp"
#include "shellfe/types.hpp"

namespace shellfe {

/// Cartesian placement of a shell surface: positions of material points and
/// the orthonormal surface frame, used to export deformed shapes and to map
/// frame-resolved displacements to global vectors. The analysis itself never
/// needs this mapping.
class GeometryEmbedding {
public:
    explicit GeometryEmbedding(const GeometryKind& kind);

    /// Anchor of the axis curve at s = 0 for the tube family: origin and the
    /// initial frame rows (T, M1, M2). Defaults to the axis along z with
    /// M1 = x, M2 = y.
    void set_anchor(const Vec3& origin, const Mat3& frame_rows);

    Vec3 position(double eta1, double eta2, double zeta) const;

    /// Orthonormal surface frame (e_eta1, e_eta2, n) at a surface point.
    void frame(double eta1, double eta2, Vec3& e1, Vec3& e2, Vec3& n) const;

    /// Reference position plus the frame-resolved displacement as a global
    /// vector sum.
    Vec3 deformed_position(double eta1, double eta2, double zeta,
                           const Vec3& u_frame) const;

    Vec3 displacement_to_global(double eta1, double eta2, const Vec3& u_frame) const;

private:
    /// Axis state at arc length s: frame rows (T, M1, M2) and centre point.
    void axis_state(double s, Mat3& frame_rows, Vec3& centre) const;

    GeometryKind kind_;
    Vec3 origin_ = Vec3::Zero();
    Mat3 frame0_; // rows T, M1, M2
};

} // namespace shellfe
