#pragma once

#include <Eigen/Dense>

#include "shellfe/errors.hpp"

namespace shellfe {

enum class BasisFamily { Monomial, Legendre };

/// Approximation orders of the three displacement components through the
/// thickness: (1,1,2) gives the 7-parameter theory, (3,3,3) the 12-parameter
/// theory.
struct BasisOrders {
    int n = 1; // eta1 component
    int m = 1; // eta2 component
    int p = 2; // zeta component
};

/// Basis-function rows evaluated at one zeta, with exact derivatives.
struct BasisRows {
    Eigen::RowVectorXd a_eta1, a_eta2, a_zeta;
    Eigen::RowVectorXd da_eta1, da_eta2, da_zeta; // d/dzeta
};

/// Thickness-direction expansion basis for the displacement components.
///
/// Monomial rows are (1, zeta, zeta^2, ...); Legendre rows are orthogonal
/// polynomials in the thickness coordinate rescaled to [-1, 1].
class ThicknessBasis {
public:
    ThicknessBasis() : ThicknessBasis(BasisOrders{}, BasisFamily::Monomial, -0.5, 0.5) {}
    ThicknessBasis(BasisOrders orders, BasisFamily family, double zeta_bottom, double zeta_top);

    BasisRows rows(double zeta) const;

    const BasisOrders& orders() const { return orders_; }
    BasisFamily family() const { return family_; }
    double zeta_bottom() const { return zeta_bottom_; }
    double zeta_top() const { return zeta_top_; }

    /// Midpoint and half-width of the thickness interval (Legendre scaling).
    double scale_mid() const { return scale_mid_; }
    double scale_half() const { return scale_half_; }

    int dofs_per_node() const { return orders_.n + orders_.m + orders_.p + 3; }

    // Per-node DOF layout: all eta1 coefficients, then eta2, then zeta.
    int offset_eta1() const { return 0; }
    int offset_eta2() const { return orders_.n + 1; }
    int offset_zeta() const { return orders_.n + orders_.m + 2; }
    int count_eta1() const { return orders_.n + 1; }
    int count_eta2() const { return orders_.m + 1; }
    int count_zeta() const { return orders_.p + 1; }

private:
    void fill(double zeta, int count, Eigen::RowVectorXd& a, Eigen::RowVectorXd& da) const;

    BasisOrders orders_;
    BasisFamily family_ = BasisFamily::Monomial;
    double zeta_bottom_ = -0.5, zeta_top_ = 0.5;
    double scale_mid_ = 0.0, scale_half_ = 0.5;
};

/// Values and first derivatives of the Legendre polynomials P_0..P_k at x.
void legendre_values(int max_order, double x, Eigen::RowVectorXd& p, Eigen::RowVectorXd& dp);

} // namespace shellfe
