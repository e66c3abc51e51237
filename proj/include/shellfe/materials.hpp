#pragma once

#include <string>

#include "shellfe/errors.hpp"
#include "shellfe/types.hpp"

namespace shellfe {

enum class MaterialKind { SaintVenantKirchhoff, NeoHookean, MooneyRivlin };

/// Compressible isotropic hyperelastic model, parameterized by the energy
/// density psi(I1, I2, J).
class MaterialModel {
public:
    static MaterialModel saint_venant_kirchhoff(double lambda, double mu);
    static MaterialModel neo_hookean(double lambda, double mu);
    static MaterialModel mooney_rivlin(double c1, double c2, double bulk);

    MaterialKind kind() const { return kind_; }
    double lambda() const { return p1_; }
    double mu() const { return p2_; }
    double c1() const { return p1_; }
    double c2() const { return p2_; }
    double bulk() const { return p3_; }

    /// True when the model carries a nonzero stress in the undeformed state
    /// (the Mooney-Rivlin form does whenever c2 != 0); callers surface this
    /// as a configuration warning.
    bool residual_stress_at_identity() const;

    std::string describe() const;

private:
    MaterialModel(MaterialKind kind, double p1, double p2, double p3)
        : kind_(kind), p1_(p1), p2_(p2), p3_(p3) {}

    MaterialKind kind_;
    double p1_, p2_, p3_;
};

/// Energy density, the scaled first derivatives
///   beta1 = 2 dpsi/dI1, beta2 = 4 dpsi/dI2, beta3 = dpsi/dJ,
/// and the scaled second derivatives beta_derivs(n, i) with the same
/// (2, 4, 1) column scaling applied to d(beta_n).
struct MaterialResponse {
    double psi = 0.0;
    double beta1 = 0.0, beta2 = 0.0, beta3 = 0.0;
    Mat3 beta_derivs = Mat3::Zero();
};

/// Evaluate the response at a kinematic state. Throws NonpositiveJacobian
/// when J <= 0 (inverted element; the solver rejects the step).
MaterialResponse evaluate(const MaterialModel& model, double i1, double i2, double j);

/// First Piola-Kirchhoff stress in the nine-component column ordering.
Vec9 first_pk_stress(const MaterialModel& model, const Vec9& f);

/// Cauchy stress (symmetric) in the nine-component column ordering.
Vec9 cauchy_stress(const MaterialModel& model, const Vec9& f);

/// Lame parameters from engineering constants.
inline double lame_lambda_from_poisson(double mu, double nu) {
    return 2.0 * mu * nu / (1.0 - 2.0 * nu);
}
inline double shear_modulus_from_young(double young, double nu) {
    return young / (2.0 * (1.0 + nu));
}

} // namespace shellfe
