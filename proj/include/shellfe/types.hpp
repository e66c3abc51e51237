#pragma once

#include <Eigen/Dense>

namespace shellfe {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// The nine frame components of a second-order tensor, listed row-major:
// (11, 12, 13, 21, 22, 23, 31, 32, 33) with 1 = eta1, 2 = eta2, 3 = zeta.
using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat9 = Eigen::Matrix<double, 9, 9>;

inline Vec9 to_column(const Mat3& m) {
    Vec9 v;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            v(3 * i + j) = m(i, j);
    return v;
}

inline Mat3 from_column(const Vec9& v) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m(i, j) = v(3 * i + j);
    return m;
}

/// Column form of the identity tensor (ones at the diagonal slots 0, 4, 8).
inline Vec9 identity_column() {
    Vec9 v = Vec9::Zero();
    v(0) = v(4) = v(8) = 1.0;
    return v;
}

} // namespace shellfe
