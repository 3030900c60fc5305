#pragma once

#include <Eigen/Dense>

#include <functional>

#include "livens/system_model.hpp"
#include "livens/trajectory.hpp"

namespace livens {

struct SolverSettings {
    double h = 0.01;              // step size
    double t_end = 1.0;           // horizon
    double newton_tol = 1e-9;     // residual tolerance, ||R||_inf
    int max_iter = 50;            // Newton iteration cap
    double dd_tol = 1e-10;        // discrete-gradient degeneracy threshold
    double fd_step_scale = 1e-7;  // relative step of the finite-difference Jacobian
};

// Throws ValidationError on h <= 0, t_end < h, newton_tol <= 0, max_iter < 1,
// dd_tol <= 0 or fd_step_scale <= 0.
void validate(const SolverSettings& settings);

struct StepResult {
    State next;
    int iterations = 0;
    double final_residual_norm = 0.0;
};

// p0 = M(q0) v0. Well-defined even for singular M.
Eigen::VectorXd initialize_momentum(const SystemModel& model,
                                    const Eigen::VectorXd& q0,
                                    const Eigen::VectorXd& v0);

// Packs the step unknowns (q^{n+1}, v^{n+1}, p^{n+1}, lambda) in that order.
Eigen::VectorXd pack_step_unknowns(const Eigen::VectorXd& q, const Eigen::VectorXd& v,
                                   const Eigen::VectorXd& p,
                                   const Eigen::VectorXd& lambda);

// Residual of the discrete scheme in the unknowns u = (q^{n+1}, v^{n+1},
// p^{n+1}, lambda), size 3d+m:
//
//   R_q = q^{n+1} - q^n - h v^{n+1/2}
//   R_p = p^{n+1} - p^n - h Dbar1 L + h sum_k lambda_k Dbar g_k
//   R_v = p^{n+1/2} - Dbar2 L
//   R_g = g(q^{n+1})
//
// with v^{n+1/2} = (v^n + v^{n+1})/2 and p^{n+1/2} = (p^n + p^{n+1})/2.
Eigen::VectorXd step_residual(const SystemModel& model, const State& prev,
                              const Eigen::VectorXd& u,
                              const SolverSettings& settings);

// Forward-difference Jacobian: column j = [f(u + d_j e_j) - f(u)] / d_j with
// d_j = fd_step_scale * max(|u_j|, 1).
Eigen::MatrixXd fd_jacobian(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residual,
                            const Eigen::VectorXd& u, double fd_step_scale);

// One step of the scheme by full Newton iteration (no damping) from the
// initial guess (q^n, v^n, p^n, lambda=0). The iteration terminates when the
// residual used for the latest update satisfies ||R||_inf <= newton_tol; the
// returned state is that update, so its own residual is one Newton
// contraction deeper. Throws NoConvergenceError past max_iter or on a
// non-finite residual, SingularMatrixError from the linear solver.
StepResult newton_solve_step(const SystemModel& model, const State& prev,
                             const SolverSettings& settings);

// Runs round(t_end/h) steps from (q0, v0) with p0 = M(q0) v0. Requires
// ||g(q0)||_inf <= 1e-9, ||Dg(q0)v0||_inf <= 1e-9 and rank Dg(q0) = m
// (InconsistentInitialStateError otherwise). Fails fast on the first
// non-converged step, reporting its index.
Trajectory integrate(const SystemModel& model, const Eigen::VectorXd& q0,
                     const Eigen::VectorXd& v0, const SolverSettings& settings);

// Baseline oracle: implicit midpoint rule on the canonical equations
// qdot = M(q)^{-1} p, pdot = -D1 T(q,p) - DV(q). Unconstrained nonsingular
// systems only; throws SingularMassError where M(q) cannot be inverted (so
// models with redundant coordinates are rejected up front). Velocities are
// recovered as v = M(q)^{-1} p per grid point.
Trajectory integrate_midpoint_canonical(const SystemModel& model,
                                        const Eigen::VectorXd& q0,
                                        const Eigen::VectorXd& v0,
                                        const SolverSettings& settings);

}  // namespace livens
