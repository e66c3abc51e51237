#pragma once

#include <Eigen/Sparse>

#include "shellfe/kinematics.hpp"
#include "shellfe/model.hpp"

namespace shellfe {

/// What element_ops should compute; internal force and energy are cheap,
/// the secant stiffness and the consistent tangent each add a 9x9-weighted
/// congruence product per quadrature point.
enum ElementWants : unsigned {
    WantInternal = 1u,
    WantStiffness = 2u,
    WantTangent = 4u,
    WantEnergy = 8u,
};

/// Element-level output. `k` is the secant stiffness and `f_conf` the
/// configuration force from the beta-sum terms, so that
/// f_int = k * u_element + f_conf holds identically at the quadrature level;
/// `t` is the consistent tangent (dead loads carry no follower term).
struct ElementResult {
    Eigen::MatrixXd k;
    Eigen::MatrixXd t;
    Eigen::VectorXd f_int;
    Eigen::VectorXd f_conf;
    double energy = 0.0;
};

ElementResult element_ops(const ShellModel& model, int element,
                          const Eigen::VectorXd& u_element, unsigned wants);

/// Reference external load vector (load factor 1): dead pressure on a
/// lateral surface, body force, and point loads.
Eigen::VectorXd external_force(const ShellModel& model);

/// Global internal force (gradient of the stored energy) at a full-size
/// state vector.
Eigen::VectorXd internal_force(const ShellModel& model, const Eigen::VectorXd& u_full);

/// Global consistent tangent at a full-size state vector.
Eigen::SparseMatrix<double> tangent_matrix(const ShellModel& model,
                                           const Eigen::VectorXd& u_full);

/// Global secant stiffness (for the k*u - f = 0 form of the equations).
Eigen::SparseMatrix<double> stiffness_matrix(const ShellModel& model,
                                             const Eigen::VectorXd& u_full);

double total_strain_energy(const ShellModel& model, const Eigen::VectorXd& u_full);

/// Internal force and tangent in one element sweep (the Newton hot path).
void assemble_system(const ShellModel& model, const Eigen::VectorXd& u_full,
                     Eigen::VectorXd& f_int, Eigen::SparseMatrix<double>& tangent);

} // namespace shellfe
