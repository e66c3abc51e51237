#include "shellfe/kinematics.hpp"

namespace shellfe {

GradientOperators gradient_operators(const FramePointData& d, const ThicknessBasis& basis,
                                     double zeta) {
    const BasisRows rows = basis.rows(zeta);
    const int n1 = basis.count_eta1();
    const int n2 = basis.count_eta2();
    const int n3 = basis.count_zeta();
    const int ndof = basis.dofs_per_node();
    const int o1 = basis.offset_eta1();
    const int o2 = basis.offset_eta2();
    const int o3 = basis.offset_zeta();

    GradientOperators ops;
    ops.g1.setZero(9, ndof);
    ops.g2.setZero(9, ndof);
    ops.g3.setZero(9, ndof);

    // Frame-rotation couplings resolved through the inverted length element.
    const double p11 = d.a1 * d.c1 + d.b1 * d.c3;
    const double p12 = d.a1 * d.c2 + d.b1 * d.c4;
    const double p21 = d.a2 * d.c1 + d.b2 * d.c3;
    const double p22 = d.a2 * d.c2 + d.b2 * d.c4;
    const double p31 = d.a3 * d.c1 + d.b3 * d.c3;
    const double p32 = d.a3 * d.c2 + d.b3 * d.c4;

    // Row order: (11, 12, 13, 21, 22, 23, 31, 32, 33) with 1 = eta1,
    // 2 = eta2, 3 = zeta. Uniform thickness keeps the basis rows independent
    // of the surface coordinates, so G1 carries only rotation couplings and
    // zeta derivatives.
    ops.g1.block(0, o2, 1, n2) = -p11 * rows.a_eta2;
    ops.g1.block(0, o3, 1, n3) = -p21 * rows.a_zeta;
    ops.g1.block(1, o2, 1, n2) = -p12 * rows.a_eta2;
    ops.g1.block(1, o3, 1, n3) = -p22 * rows.a_zeta;
    ops.g1.block(2, o1, 1, n1) = rows.da_eta1;
    ops.g1.block(3, o1, 1, n1) = p11 * rows.a_eta1;
    ops.g1.block(3, o3, 1, n3) = -p31 * rows.a_zeta;
    ops.g1.block(4, o1, 1, n1) = p12 * rows.a_eta1;
    ops.g1.block(4, o3, 1, n3) = -p32 * rows.a_zeta;
    ops.g1.block(5, o2, 1, n2) = rows.da_eta2;
    ops.g1.block(6, o1, 1, n1) = p21 * rows.a_eta1;
    ops.g1.block(6, o2, 1, n2) = p31 * rows.a_eta2;
    ops.g1.block(7, o1, 1, n1) = p22 * rows.a_eta1;
    ops.g1.block(7, o2, 1, n2) = p32 * rows.a_eta2;
    ops.g1.block(8, o3, 1, n3) = rows.da_zeta;

    ops.g2.block(0, o1, 1, n1) = d.c1 * rows.a_eta1;
    ops.g2.block(1, o1, 1, n1) = d.c2 * rows.a_eta1;
    ops.g2.block(3, o2, 1, n2) = d.c1 * rows.a_eta2;
    ops.g2.block(4, o2, 1, n2) = d.c2 * rows.a_eta2;
    ops.g2.block(6, o3, 1, n3) = d.c1 * rows.a_zeta;
    ops.g2.block(7, o3, 1, n3) = d.c2 * rows.a_zeta;

    ops.g3.block(0, o1, 1, n1) = d.c3 * rows.a_eta1;
    ops.g3.block(1, o1, 1, n1) = d.c4 * rows.a_eta1;
    ops.g3.block(3, o2, 1, n2) = d.c3 * rows.a_eta2;
    ops.g3.block(4, o2, 1, n2) = d.c4 * rows.a_eta2;
    ops.g3.block(6, o3, 1, n3) = d.c3 * rows.a_zeta;
    ops.g3.block(7, o3, 1, n3) = d.c4 * rows.a_zeta;

    return ops;
}

Mat9 b1_matrix() {
    Mat9 b = 2.0 * Mat9::Identity();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            b(3 * i + j, 3 * j + i) += 1.0;
    return b;
}

Mat9 g0_matrix() {
    Mat9 g = Mat9::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) g(3 * i + j, 3 * k + k) += (i == j) ? 1.0 : 0.0;
            g(3 * i + j, 3 * j + i) -= 1.0;
        }
    return g;
}

Mat9 b2_matrix(const Vec9& l) {
    const Mat3 m = from_column(l);
    Mat9 b = Mat9::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int row = 3 * i + j;
            for (int k = 0; k < 3; ++k)
                for (int q = 0; q < 3; ++q) {
                    const int col = 3 * k + q;
                    double v = 0.0;
                    // d(L^T L)_ij
                    if (q == i) v += m(k, j);
                    if (q == j) v += m(k, i);
                    // d(L L)_ij
                    if (i == k) v += m(q, j);
                    if (j == q) v += m(i, k);
                    // d(L L^T)_ij
                    if (i == k) v += m(j, q);
                    if (j == k) v += m(i, q);
                    b(row, col) += v;
                }
        }
    return b;
}

Mat9 b3_matrix(const Vec9& l) {
    const Mat3 m = from_column(l);
    const Mat3 ltl = m.transpose() * m;
    const Mat3 llt = m * m.transpose();
    Mat9 b = Mat9::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int row = 3 * i + j;
            for (int k = 0; k < 3; ++k)
                for (int q = 0; q < 3; ++q) {
                    // d(L L^T L)_ij / dL_kq
                    double v = m(i, q) * m(k, j);
                    if (i == k) v += ltl(q, j);
                    if (j == q) v += llt(i, k);
                    b(row, 3 * k + q) = v;
                }
        }
    return b;
}

Mat9 gcof_matrix(const Vec9& l) {
    const Mat3 m = from_column(l);
    // Nonzero entries of the permutation symbol, as (i, j, k, sign).
    static constexpr int eps[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                                      {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}};
    Mat9 g = Mat9::Zero();
    for (const auto& r : eps)
        for (const auto& c : eps)
            g(3 * r[0] + c[0], 3 * r[1] + c[1]) += r[3] * c[3] * m(r[2], c[2]);
    return g;
}

Invariants invariants(const Vec9& l) {
    const Mat3 lm = from_column(l);
    const Mat3 f = Mat3::Identity() + lm;
    const Mat3 c = f.transpose() * f;

    Invariants inv;
    inv.i1 = c.trace();
    inv.i2 = (c * c).trace();

    // J through the invariant expansion of the displacement gradient.
    const Vec9 iv = identity_column();
    const Vec9 g1 = g0_matrix() * l;
    const Vec9 lcof = 0.5 * (gcof_matrix(l) * l);
    inv.j = 1.0 + (iv + 0.5 * g1 + lcof / 3.0).dot(l);
    return inv;
}

InvariantDerivatives invariant_derivatives(const Vec9& l) {
    InvariantDerivatives d;
    d.b1 = b1_matrix();
    d.b2 = b2_matrix(l);
    d.b3 = b3_matrix(l);
    d.g0 = g0_matrix();
    d.gcof = gcof_matrix(l);

    const Vec9 iv = identity_column();
    d.d_i1 = 2.0 * (iv + l);
    d.d_i2 = 4.0 * (iv + (d.b1 + 0.5 * d.b2 + d.b3 / 3.0) * l);
    d.d_j = iv + (d.g0 + 0.5 * d.gcof) * l;
    return d;
}

} // namespace shellfe
