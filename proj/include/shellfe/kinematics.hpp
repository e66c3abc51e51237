#pragma once

#include <Eigen/Dense>

#include "shellfe/frame_geometry.hpp"
#include "shellfe/thickness_basis.hpp"
#include "shellfe/types.hpp"

namespace shellfe {

/// Matrices mapping the per-point DOF vector and its surface derivatives to
/// the nine-component displacement-gradient column:
///   L = G1 * phi + G2 * d(phi)/d(eta1) + G3 * d(phi)/d(eta2).
struct GradientOperators {
    Eigen::Matrix<double, 9, Eigen::Dynamic> g1, g2, g3;
};

GradientOperators gradient_operators(const FramePointData& data, const ThicknessBasis& basis,
                                     double zeta);

/// Kinematic scalars of a deformation state: I1 = tr(C), I2 = tr(C^2), and
/// the determinant J of the deformation gradient (evaluated through the
/// invariant expansion of the displacement gradient, not a 3x3 determinant).
struct Invariants {
    double i1 = 3.0, i2 = 3.0, j = 1.0;
};

Invariants invariants(const Vec9& l);

// Constant coefficient matrices.
Mat9 b1_matrix();  // jacobian of 2L + L^T
Mat9 g0_matrix();  // jacobian of tr(L) I - L^T

// State-dependent coefficient matrices: jacobians with respect to L of the
// column forms of L^T L + L^2 + L L^T, of L L^T L, and of the cofactor
// matrix of L. Each is symmetric, and by Euler's relation acting on L itself
// recovers twice / three times / twice the underlying column vector.
Mat9 b2_matrix(const Vec9& l);
Mat9 b3_matrix(const Vec9& l);
Mat9 gcof_matrix(const Vec9& l);

/// Everything the residual and tangent assembly need at one kinematic state.
struct InvariantDerivatives {
    Vec9 d_i1, d_i2, d_j;
    Mat9 b1, b2, b3, g0, gcof;
};

InvariantDerivatives invariant_derivatives(const Vec9& l);

} // namespace shellfe
