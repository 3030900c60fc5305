#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>

#include "livens/errors.hpp"

namespace livens {

// A mechanical system with Lagrangian L(q,v) = 1/2 v.M(q)v - V(q) and m
// scleronomic holonomic constraints g(q) = 0. All callables are pure; a
// constructed model is immutable and safe to share between threads.
//
// M(q) must be symmetric positive semidefinite but may be singular and may
// depend on q. Analytic gradients are required for V and g only; derivatives
// of M are optional (mass_directional_derivative may be left empty, in which
// case kinetic-energy gradients fall back to central finite differences).
struct SystemModel {
    int dim = 0;               // number of coordinates d
    int constraint_count = 0;  // number of holonomic constraints m
    std::string name;

    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> mass;

    // (q, u) -> sum_i u_i dM/dq_i. Optional.
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&, const Eigen::VectorXd&)>
        mass_directional_derivative;

    std::function<double(const Eigen::VectorXd&)> potential;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> potential_gradient;

    // Empty when constraint_count == 0.
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> constraints;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> constraint_jacobian;
};

Eigen::MatrixXd mass_matrix(const SystemModel& model, const Eigen::VectorXd& q);

// T(q,v) = 1/2 v.M(q)v
double kinetic_energy(const SystemModel& model, const Eigen::VectorXd& q,
                      const Eigen::VectorXd& v);

double potential_energy(const SystemModel& model, const Eigen::VectorXd& q);

// E_tot(q,v) = T(q,v) + V(q)
double total_energy(const SystemModel& model, const Eigen::VectorXd& q,
                    const Eigen::VectorXd& v);

// E(q,v,p) = p.v - L(q,v). Coincides with the Hamiltonian when p = M(q)v;
// well-defined for singular M. This is the quantity the integrator conserves.
double generalized_energy(const SystemModel& model, const Eigen::VectorXd& q,
                          const Eigen::VectorXd& v, const Eigen::VectorXd& p);

// H(q,p) = 1/2 p.M(q)^{-1}p + V(q). Throws SingularMassError when M(q) has no
// inverse (expected on models with redundant coordinates).
double hamiltonian(const SystemModel& model, const Eigen::VectorXd& q,
                   const Eigen::VectorXd& p);

double lagrangian(const SystemModel& model, const Eigen::VectorXd& q,
                  const Eigen::VectorXd& v);

// D1 L(q,v), the q-gradient 1/2 v.(dM/dq_i)v - dV/dq_i. Uses the model's
// analytic mass derivative when present, central finite differences of the
// kinetic energy otherwise.
Eigen::VectorXd lagrangian_position_gradient(const SystemModel& model,
                                             const Eigen::VectorXd& q,
                                             const Eigen::VectorXd& v);

// D2 L(q,v) = M(q) v, the fiber derivative.
Eigen::VectorXd lagrangian_velocity_gradient(const SystemModel& model,
                                             const Eigen::VectorXd& q,
                                             const Eigen::VectorXd& v);

// g(q); zero-length vector for unconstrained models.
Eigen::VectorXd constraints(const SystemModel& model, const Eigen::VectorXd& q);

// Dg(q), one row per constraint; 0 x d for unconstrained models.
Eigen::MatrixXd constraint_jacobian(const SystemModel& model,
                                    const Eigen::VectorXd& q);

// Dg(q) v, the hidden velocity-constraint residual.
Eigen::VectorXd constraint_velocity(const SystemModel& model,
                                    const Eigen::VectorXd& q,
                                    const Eigen::VectorXd& v);

}  // namespace livens
