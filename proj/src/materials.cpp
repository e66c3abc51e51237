#include "shellfe/materials.hpp"

#include <cmath>

#include "shellfe/kinematics.hpp"

namespace shellfe {

MaterialModel MaterialModel::saint_venant_kirchhoff(double lambda, double mu) {
    return MaterialModel(MaterialKind::SaintVenantKirchhoff, lambda, mu, 0.0);
}

MaterialModel MaterialModel::neo_hookean(double lambda, double mu) {
    return MaterialModel(MaterialKind::NeoHookean, lambda, mu, 0.0);
}

MaterialModel MaterialModel::mooney_rivlin(double c1, double c2, double bulk) {
    return MaterialModel(MaterialKind::MooneyRivlin, c1, c2, bulk);
}

bool MaterialModel::residual_stress_at_identity() const {
    return kind_ == MaterialKind::MooneyRivlin && p2_ != 0.0;
}

std::string MaterialModel::describe() const {
    switch (kind_) {
        case MaterialKind::SaintVenantKirchhoff: return "saint_venant_kirchhoff";
        case MaterialKind::NeoHookean: return "neo_hookean";
        case MaterialKind::MooneyRivlin: return "mooney_rivlin";
    }
    return "?";
}

MaterialResponse evaluate(const MaterialModel& model, double i1, double i2, double j) {
    if (!(j > 0.0))
        throw NonpositiveJacobian("deformation jacobian J = " + std::to_string(j) +
                                  " <= 0 in material evaluation (element inversion)");
    MaterialResponse r;
    switch (model.kind()) {
        case MaterialKind::SaintVenantKirchhoff: {
            const double lambda = model.lambda();
            const double mu = model.mu();
            r.psi = 0.25 * mu * (i2 - 2.0 * i1 + 3.0) + 0.125 * lambda * (i1 - 3.0) * (i1 - 3.0);
            r.beta1 = 0.5 * lambda * (i1 - 3.0) - mu;
            r.beta2 = mu;
            r.beta3 = 0.0;
            r.beta_derivs(0, 0) = lambda;
            break;
        }
        case MaterialKind::NeoHookean: {
            const double lambda = model.lambda();
            const double mu = model.mu();
            const double logj = std::log(j);
            r.psi = 0.5 * lambda * logj * logj - mu * logj + 0.5 * mu * (i1 - 3.0);
            r.beta1 = mu;
            r.beta2 = 0.0;
            r.beta3 = (lambda * logj - mu) / j;
            // d(beta3)/dJ, consistent with psi above.
            r.beta_derivs(2, 2) = (lambda - (lambda * logj - mu)) / (j * j);
            break;
        }
        case MaterialKind::MooneyRivlin: {
            const double c1 = model.c1();
            const double c2 = model.c2();
            const double k = model.bulk();
            const double jm23 = std::pow(j, -2.0 / 3.0);
            const double jm53 = std::pow(j, -5.0 / 3.0);
            const double jm83 = std::pow(j, -8.0 / 3.0);
            const double second = 0.5 * (i1 * i1 - i2);
            r.psi = c1 * (jm23 * i1 - 3.0) + c2 * (jm23 * second - 3.0) +
                    0.5 * k * (j - 1.0) * (j - 1.0);
            r.beta1 = 2.0 * jm23 * (c1 + c2 * i1);
            r.beta2 = -2.0 * c2 * jm23;
            r.beta3 = -(2.0 / 3.0) * jm53 * (c1 * i1 + c2 * second) + k * (j - 1.0);
            r.beta_derivs(0, 0) = 4.0 * c2 * jm23;
            r.beta_derivs(0, 2) = -(4.0 / 3.0) * jm53 * (c1 + c2 * i1);
            r.beta_derivs(1, 2) = (4.0 / 3.0) * c2 * jm53;
            r.beta_derivs(2, 0) = -(4.0 / 3.0) * jm53 * (c1 + c2 * i1);
            r.beta_derivs(2, 1) = (4.0 / 3.0) * c2 * jm53;
            r.beta_derivs(2, 2) = (10.0 / 9.0) * jm83 * (c1 * i1 + c2 * second) + k;
            break;
        }
    }
    return r;
}

Vec9 first_pk_stress(const MaterialModel& model, const Vec9& f) {
    const Mat3 fm = from_column(f);
    const double j = fm.determinant();
    if (!(j > 0.0))
        throw NonpositiveJacobian("deformation jacobian J = " + std::to_string(j) +
                                  " <= 0 in stress evaluation");
    const Mat3 c = fm.transpose() * fm;
    const MaterialResponse r = evaluate(model, c.trace(), (c * c).trace(), j);
    const Mat3 p =
        r.beta3 * j * fm.inverse().transpose() + r.beta1 * fm + r.beta2 * fm * c;
    return to_column(p);
}

Vec9 cauchy_stress(const MaterialModel& model, const Vec9& f) {
    const Mat3 fm = from_column(f);
    const double j = fm.determinant();
    if (!(j > 0.0))
        throw NonpositiveJacobian("deformation jacobian J = " + std::to_string(j) +
                                  " <= 0 in stress evaluation");
    const Mat3 c = fm.transpose() * fm;
    const Mat3 b = fm * fm.transpose();
    const MaterialResponse r = evaluate(model, c.trace(), (c * c).trace(), j);
    const Mat3 sigma = r.beta3 * Mat3::Identity() + (r.beta1 / j) * b + (r.beta2 / j) * b * b;
    return to_column(sigma);
}

} // namespace shellfe
