#pragma once

#include <functional>
#include <vector>

#include "shellfe/assembly.hpp"
#include "shellfe/model.hpp"

namespace shellfe {

enum class SolveMethod { Newton, ArcLength };

struct ContinuationSettings {
    SolveMethod method = SolveMethod::ArcLength;
    double tolerance = 1e-3; // relative residual
    int max_iterations = 30;
    int max_steps = 200;
    /// First step load-factor increment; sets the initial arc radius.
    double initial_increment = 0.1;
    /// Stop once the load factor reaches this value (arc-length), or trace
    /// the schedule up to it (Newton).
    double lambda_stop = 1.0;
    /// Number of Newton load steps from 0 to lambda_stop.
    int newton_steps = 10;
    int desired_iterations = 5;
    double radius_min_scale = 1.0 / 64.0; // bounds relative to the initial radius
    double radius_max_scale = 8.0;
    /// Load-factor weight in the arc-length constraint
    /// |dU|^2 + psi_scale^2 dlambda^2 = radius^2 (0 = cylindrical).
    double psi_scale = 0.0;
    /// Residual norm floor: convergence tests use |r| / max(|f_ext|, floor).
    double force_floor = 1.0;
    int max_halvings = 5;
};

struct EquilibriumState {
    Eigen::VectorXd u;    // full-size DOF vector
    double lambda = 0.0;  // load factor
    int step = 0;
    int iterations = 0;
    std::vector<double> residual_history; // relative norms per iteration
    double arc_radius = 0.0;              // radius used (arc-length only)
};

/// Called after every accepted step (streaming output hook).
using StepCallback = std::function<void(const EquilibriumState&)>;

class EquilibriumSolver {
public:
    explicit EquilibriumSolver(const ShellModel& model);

    /// Newton-Raphson under a prescribed load-factor schedule, with up to
    /// `max_halvings` automatic subdivisions of a failed increment.
    std::vector<EquilibriumState> newton_solve(const std::vector<double>& lambda_schedule,
                                               const ContinuationSettings& settings,
                                               const StepCallback& on_step = {});

    /// Crisfield arc-length continuation; traverses limit points.
    std::vector<EquilibriumState> arc_length_solve(const ContinuationSettings& settings,
                                                   const StepCallback& on_step = {});

    const Eigen::VectorXd& reference_load() const { return f_ext_; }

private:
    struct Reduced {
        Eigen::VectorXd r;     // reduced residual
        double rel_norm = 0.0; // |r| / max(lambda |f_ext|, floor)
    };

    Reduced residual(const Eigen::VectorXd& u_red, double lambda,
                     const ContinuationSettings& settings) const;
    bool factor_tangent(const Eigen::VectorXd& u_red,
                        Eigen::SparseLU<Eigen::SparseMatrix<double>>& lu) const;

    const ShellModel& model_;
    Eigen::VectorXd f_ext_;     // full reference load
    Eigen::VectorXd f_ext_red_; // reduced reference load
};

} // namespace shellfe
