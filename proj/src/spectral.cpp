#include "shellfe/spectral.hpp"

#include <cmath>

#include "shellfe/errors.hpp"
#include "shellfe/thickness_basis.hpp"

namespace shellfe {

QuadratureRule1D gauss_rule(int count) {
    if (count < 1) throw InvalidOrder("quadrature rule needs at least one point");
    QuadratureRule1D rule;
    rule.points.resize(count);
    rule.weights.resize(count);
    // Newton iteration on the Legendre polynomial from the Chebyshev guess.
    for (int i = 0; i < count; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (count + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 1; k < count; ++k) {
                const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
                p0 = p1;
                p1 = p2;
            }
            dp = count * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.points(count - 1 - i) = x;
        rule.weights(count - 1 - i) = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

Eigen::VectorXd gauss_lobatto_points(int degree) {
    if (degree < 1) throw InvalidOrder("spectral element degree must be >= 1");
    const int count = degree + 1;
    Eigen::VectorXd nodes(count);
    nodes(0) = -1.0;
    nodes(count - 1) = 1.0;
    // Interior nodes are the roots of P'_degree; polish the Chebyshev-Lobatto
    // guess with Newton on P'.
    Eigen::RowVectorXd p, dp;
    for (int i = 1; i < count - 1; ++i) {
        double x = -std::cos(M_PI * i / degree);
        for (int it = 0; it < 100; ++it) {
            legendre_values(degree, x, p, dp);
            // d2 from the Legendre ODE: (1-x^2) P'' = 2x P' - n(n+1) P
            const double d2 = (2.0 * x * dp(degree) - degree * (degree + 1) * p(degree)) /
                              (1.0 - x * x);
            const double dx = dp(degree) / d2;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes(i) = x;
    }
    return nodes;
}

Lagrange1D::Lagrange1D(Eigen::VectorXd nodes) : nodes_(std::move(nodes)) {
    const int n = count();
    bary_.resize(n);
    for (int i = 0; i < n; ++i) {
        double w = 1.0;
        for (int j = 0; j < n; ++j)
            if (j != i) w *= nodes_(i) - nodes_(j);
        bary_(i) = 1.0 / w;
    }
}

Eigen::VectorXd Lagrange1D::values(double x) const {
    const int n = count();
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        if (std::abs(x - nodes_(i)) < 1e-14) {
            v(i) = 1.0;
            return v;
        }
    }
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= x - nodes_(i);
    for (int i = 0; i < n; ++i) v(i) = prod * bary_(i) / (x - nodes_(i));
    return v;
}

Eigen::VectorXd Lagrange1D::derivatives(double x) const {
    const int n = count();
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    // Differentiate the product form directly; robust at the nodes too.
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            double term = bary_(i);
            for (int j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                term *= x - nodes_(j);
            }
            sum += term;
        }
        d(i) = sum;
    }
    return d;
}

SpectralElement::SpectralElement(int degree)
    : degree_(degree), basis_(gauss_lobatto_points(degree)) {}

void SpectralElement::evaluate(double xi, double eta, Eigen::VectorXd& values,
                               Eigen::VectorXd& d_xi, Eigen::VectorXd& d_eta) const {
    const Eigen::VectorXd vx = basis_.values(xi);
    const Eigen::VectorXd ve = basis_.values(eta);
    const Eigen::VectorXd dx = basis_.derivatives(xi);
    const Eigen::VectorXd de = basis_.derivatives(eta);
    const int n = basis_.count();
    values.resize(n * n);
    d_xi.resize(n * n);
    d_eta.resize(n * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int a = j * n + i;
            values(a) = vx(i) * ve(j);
            d_xi(a) = dx(i) * ve(j);
            d_eta(a) = vx(i) * de(j);
        }
}

} // namespace shellfe
