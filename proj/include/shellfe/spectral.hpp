#pragma once

#include <vector>

#include <Eigen/Dense>

namespace shellfe {

/// One-dimensional quadrature rule on [-1, 1].
struct QuadratureRule1D {
    Eigen::VectorXd points;
    Eigen::VectorXd weights;
};

/// Gauss-Legendre rule with the given number of points.
QuadratureRule1D gauss_rule(int count);

/// Gauss-Lobatto-Legendre node set for a degree-p element (p + 1 nodes,
/// including the endpoints).
Eigen::VectorXd gauss_lobatto_points(int degree);

/// Lagrange interpolation basis over an arbitrary 1D node set, evaluated via
/// barycentric weights.
class Lagrange1D {
public:
    explicit Lagrange1D(Eigen::VectorXd nodes);

    int count() const { return static_cast<int>(nodes_.size()); }
    const Eigen::VectorXd& nodes() const { return nodes_; }

    /// Values of all node polynomials at x.
    Eigen::VectorXd values(double x) const;
    /// First derivatives of all node polynomials at x.
    Eigen::VectorXd derivatives(double x) const;

private:
    Eigen::VectorXd nodes_;
    Eigen::VectorXd bary_;
};

/// Tensor-product Lagrange shape functions on the reference square, with
/// nodes at the Gauss-Lobatto-Legendre points. Node ordering is row-major
/// over (i, j) with i (the first coordinate) fastest.
class SpectralElement {
public:
    explicit SpectralElement(int degree);

    int degree() const { return degree_; }
    int node_count() const { return basis_.count() * basis_.count(); }
    const Lagrange1D& basis_1d() const { return basis_; }

    /// Shape values and reference-coordinate derivatives at (xi, eta).
    void evaluate(double xi, double eta, Eigen::VectorXd& values, Eigen::VectorXd& d_xi,
                  Eigen::VectorXd& d_eta) const;

private:
    int degree_;
    Lagrange1D basis_;
};

} // namespace shellfe
