#include "shellfe/solver.hpp"

#include <cmath>
#include <sstream>

namespace shellfe {

namespace {

// Count near-null directions of a (symmetrized) reduced tangent; used only
// for the diagnostics attached to SingularSystem on small systems.
int count_rigid_modes(const Eigen::SparseMatrix<double>& k) {
    if (k.rows() > 2500) return -1;
    Eigen::MatrixXd dense = Eigen::MatrixXd(k);
    dense = 0.5 * (dense + dense.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dense);
    const double scale = eig.eigenvalues().cwiseAbs().maxCoeff();
    int modes = 0;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
        if (std::abs(eig.eigenvalues()(i)) < 1e-9 * scale) ++modes;
    return modes;
}

} // namespace

EquilibriumSolver::EquilibriumSolver(const ShellModel& model) : model_(model) {
    f_ext_ = external_force(model);
    f_ext_red_ = model.constraints().reduce_vector(f_ext_);
}

EquilibriumSolver::Reduced EquilibriumSolver::residual(const Eigen::VectorXd& u_red,
                                                       double lambda,
                                                       const ContinuationSettings& settings) const {
    const Eigen::VectorXd u_full = model_.constraints().expand(u_red);
    const Eigen::VectorXd f_int = internal_force(model_, u_full);
    Reduced out;
    out.r = model_.constraints().reduce_vector(f_int) - lambda * f_ext_red_;
    const double denom = std::max(std::abs(lambda) * f_ext_red_.norm(), settings.force_floor);
    out.rel_norm = out.r.norm() / denom;
    return out;
}

bool EquilibriumSolver::factor_tangent(const Eigen::VectorXd& u_red,
                                       Eigen::SparseLU<Eigen::SparseMatrix<double>>& lu) const {
    const Eigen::VectorXd u_full = model_.constraints().expand(u_red);
    const Eigen::SparseMatrix<double> t_full = tangent_matrix(model_, u_full);
    const Eigen::SparseMatrix<double> t_red = model_.constraints().reduce_matrix(t_full);
    lu.compute(t_red);
    if (lu.info() != Eigen::Success) {
        const int modes = count_rigid_modes(t_red);
        std::ostringstream msg;
        msg << "tangent factorization failed (" << t_red.rows() << " dofs)";
        if (modes >= 0) msg << "; near-null-space dimension " << modes;
        msg << " - check boundary conditions for unconstrained rigid modes";
        throw SingularSystem(msg.str());
    }
    return true;
}

std::vector<EquilibriumState> EquilibriumSolver::newton_solve(
    const std::vector<double>& lambda_schedule, const ContinuationSettings& settings,
    const StepCallback& on_step) {
    const int nred = model_.constraints().reduced_size();
    Eigen::VectorXd u = Eigen::VectorXd::Zero(nred);
    double lambda = 0.0;

    std::vector<EquilibriumState> path;
    int step_index = 0;

    // Pending targets, in reverse so failed increments can be subdivided.
    std::vector<std::pair<double, int>> pending; // (target, halvings used)
    for (auto it = lambda_schedule.rbegin(); it != lambda_schedule.rend(); ++it)
        pending.emplace_back(*it, 0);

    while (!pending.empty()) {
        const auto [target, halvings] = pending.back();
        pending.pop_back();

        const Eigen::VectorXd u_saved = u;
        bool converged = false;
        EquilibriumState state;
        state.residual_history.clear();

        try {
            Reduced res = residual(u, target, settings);
            state.residual_history.push_back(res.rel_norm);
            int iter = 0;
            converged = res.rel_norm <= settings.tolerance;
            while (!converged && iter < settings.max_iterations) {
                Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
                factor_tangent(u, lu);
                const Eigen::VectorXd du = lu.solve(-res.r);
                u += du;
                res = residual(u, target, settings);
                ++iter;
                state.residual_history.push_back(res.rel_norm);
                converged = res.rel_norm <= settings.tolerance;
            }
            state.iterations = iter;
        } catch (const NonpositiveJacobian&) {
            converged = false;
        }

        if (!converged) {
            u = u_saved;
            if (halvings >= settings.max_halvings)
                throw NonConvergence("newton step to lambda = " + std::to_string(target) +
                                     " failed after " + std::to_string(halvings) +
                                     " subdivisions");
            const double midpoint = 0.5 * (lambda + target);
            pending.emplace_back(target, halvings + 1);
            pending.emplace_back(midpoint, halvings + 1);
            continue;
        }

        lambda = target;
        state.u = model_.constraints().expand(u);
        state.lambda = lambda;
        state.step = step_index++;
        path.push_back(state);
        if (on_step) on_step(path.back());
    }
    return path;
}

std::vector<EquilibriumState> EquilibriumSolver::arc_length_solve(
    const ContinuationSettings& settings, const StepCallback& on_step) {
    const int nred = model_.constraints().reduced_size();
    Eigen::VectorXd u = Eigen::VectorXd::Zero(nred);
    double lambda = 0.0;

    std::vector<EquilibriumState> path;

    // Record the trivial state so emitted curves start at the origin.
    {
        EquilibriumState zero;
        zero.u = Eigen::VectorXd::Zero(model_.total_dofs());
        zero.residual_history.push_back(0.0);
        path.push_back(zero);
        if (on_step) on_step(path.back());
    }

    const double psi2 = settings.psi_scale * settings.psi_scale;

    // First tangential solve sets the radius from the requested initial
    // load-factor increment.
    double radius = 0.0;
    {
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
        factor_tangent(u, lu);
        const Eigen::VectorXd ut = lu.solve(f_ext_red_);
        radius = std::abs(settings.initial_increment) *
                 std::sqrt(ut.squaredNorm() + psi2);
    }
    const double radius_min = radius * settings.radius_min_scale;
    const double radius_max = radius * settings.radius_max_scale;

    Eigen::VectorXd du_prev; // previous converged increment
    double dlambda_prev = 0.0;

    int step = 1;
    int consecutive_failures = 0;
    while (step <= settings.max_steps) {
        bool accepted = false;
        EquilibriumState state;
        Eigen::VectorXd du = Eigen::VectorXd::Zero(nred);
        double dlambda = 0.0;

        try {
            Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
            factor_tangent(u, lu);
            Eigen::VectorXd ut = lu.solve(f_ext_red_);

            // Tangential predictor; direction follows the previous increment.
            double sign = 1.0;
            if (du_prev.size() > 0) {
                const double along = du_prev.dot(ut) + psi2 * dlambda_prev;
                sign = along >= 0.0 ? 1.0 : -1.0;
            }
            const double dl0 = sign * radius / std::sqrt(ut.squaredNorm() + psi2);
            du = dl0 * ut;
            dlambda = dl0;

            Reduced res = residual(u + du, lambda + dlambda, settings);
            state.residual_history.push_back(res.rel_norm);
            int iter = 0;
            bool converged = res.rel_norm <= settings.tolerance;
            bool failed = false;
            while (!converged && iter < settings.max_iterations) {
                Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_it;
                factor_tangent(u + du, lu_it);
                const Eigen::VectorXd dur = lu_it.solve(-res.r);
                ut = lu_it.solve(f_ext_red_);

                // Roots of the cylindrical constraint
                // |du + dur + x ut|^2 + psi2 (dlambda + x)^2 = radius^2.
                const Eigen::VectorXd base = du + dur;
                const double a = ut.squaredNorm() + psi2;
                const double b = 2.0 * (base.dot(ut) + psi2 * dlambda);
                const double c = base.squaredNorm() + psi2 * dlambda * dlambda -
                                 radius * radius;
                const double disc = b * b - 4.0 * a * c;
                if (disc < 0.0) {
                    failed = true; // complex roots: retry with a smaller radius
                    break;
                }
                const double sq = std::sqrt(disc);
                const double x1 = (-b + sq) / (2.0 * a);
                const double x2 = (-b - sq) / (2.0 * a);
                // Keep the root whose increment stays aligned with the
                // current one.
                const auto cosine = [&](double x) {
                    return (base + x * ut).dot(du) + psi2 * (dlambda + x) * dlambda;
                };
                const double x = cosine(x1) >= cosine(x2) ? x1 : x2;

                du = base + x * ut;
                dlambda += x;
                res = residual(u + du, lambda + dlambda, settings);
                ++iter;
                state.residual_history.push_back(res.rel_norm);
                converged = res.rel_norm <= settings.tolerance;
            }
            state.iterations = iter;
            accepted = converged && !failed;
        } catch (const NonpositiveJacobian&) {
            accepted = false;
        }

        if (!accepted) {
            if (++consecutive_failures > settings.max_halvings)
                throw NonConvergence("arc-length step " + std::to_string(step) +
                                     " failed to converge at radius " + std::to_string(radius));
            radius = std::max(0.5 * radius, radius_min * 0x1p-8);
            continue;
        }
        consecutive_failures = 0;

        u += du;
        lambda += dlambda;
        du_prev = du;
        dlambda_prev = dlambda;

        state.u = model_.constraints().expand(u);
        state.lambda = lambda;
        state.step = step;
        state.arc_radius = radius;
        path.push_back(state);
        if (on_step) on_step(path.back());
        ++step;

        if (lambda >= settings.lambda_stop) break;

        // Radius adaptation toward the desired iteration count.
        const int actual = std::max(state.iterations, 1);
        radius *= std::sqrt(static_cast<double>(settings.desired_iterations) / actual);
        radius = std::min(std::max(radius, radius_min), radius_max);
    }
    return path;
}

} // namespace shellfe
