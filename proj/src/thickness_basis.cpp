#include "shellfe/thickness_basis.hpp"

namespace shellfe {

void legendre_values(int max_order, double x, Eigen::RowVectorXd& p, Eigen::RowVectorXd& dp) {
    p.resize(max_order + 1);
    dp.resize(max_order + 1);
    p(0) = 1.0;
    dp(0) = 0.0;
    if (max_order == 0) return;
    p(1) = x;
    dp(1) = 1.0;
    for (int k = 1; k < max_order; ++k) {
        p(k + 1) = ((2 * k + 1) * x * p(k) - k * p(k - 1)) / (k + 1);
        dp(k + 1) = dp(k - 1) + (2 * k + 1) * p(k);
    }
}

ThicknessBasis::ThicknessBasis(BasisOrders orders, BasisFamily family, double zeta_bottom,
                               double zeta_top)
    : orders_(orders), family_(family), zeta_bottom_(zeta_bottom), zeta_top_(zeta_top) {
    if (orders.n < 0 || orders.m < 0 || orders.p < 0)
        throw InvalidOrder("thickness expansion orders must be non-negative, got (" +
                           std::to_string(orders.n) + ", " + std::to_string(orders.m) + ", " +
                           std::to_string(orders.p) + ")");
    if (!(zeta_bottom < zeta_top))
        throw InvalidOrder("thickness bounds must satisfy zeta_bottom < zeta_top");
    scale_mid_ = 0.5 * (zeta_top + zeta_bottom);
    scale_half_ = 0.5 * (zeta_top - zeta_bottom);
}

void ThicknessBasis::fill(double zeta, int count, Eigen::RowVectorXd& a,
                          Eigen::RowVectorXd& da) const {
    if (family_ == BasisFamily::Monomial) {
        a.resize(count);
        da.resize(count);
        double power = 1.0;
        for (int i = 0; i < count; ++i) {
            a(i) = power;
            da(i) = (i == 0) ? 0.0 : i * a(i - 1);
            power *= zeta;
        }
    } else {
        const double x = (zeta - scale_mid_) / scale_half_;
        legendre_values(count - 1, x, a, da);
        da /= scale_half_;
    }
}

BasisRows ThicknessBasis::rows(double zeta) const {
    BasisRows rows;
    fill(zeta, count_eta1(), rows.a_eta1, rows.da_eta1);
    fill(zeta, count_eta2(), rows.a_eta2, rows.da_eta2);
    fill(zeta, count_zeta(), rows.a_zeta, rows.da_zeta);
    return rows;
}

} // namespace shellfe
