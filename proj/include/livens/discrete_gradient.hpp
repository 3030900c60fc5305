#pragma once

#include <Eigen/Dense>

#include <functional>
#include <utility>

#include "livens/system_model.hpp"

namespace livens {

// A scalar function of R^k together with its analytic gradient.
struct ScalarField {
    int dim = 0;
    std::function<double(const Eigen::VectorXd&)> value;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
};

// Gonzalez discrete derivative between x and y:
//
//   Dbar f(x,y) = Df(z) + [f(y) - f(x) - Df(z).v] / ||v||^2 * v,
//   z = (x+y)/2,  v = y - x.
//
// Satisfies the directionality condition Dbar f(x,y).(y-x) = f(y) - f(x)
// identically and is symmetric in (x,y). When ||v|| < eps_dd * max(1, ||x||,
// ||y||) the correction is skipped and the midpoint gradient Df(z) is
// returned. Throws NonFiniteValueError if f or Df produces NaN/Inf.
Eigen::VectorXd discrete_gradient(const ScalarField& field,
                                  const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& y, double eps_dd);

// Partitioned discrete derivative of the Lagrangian between (qn, vn) and
// (qn1, vn1), returning (Dbar1 L, Dbar2 L). Each slot is a Gonzalez
// derivative with the other argument frozen at both endpoints and averaged:
//
//   Dbar1 L = 1/2 [ Dbar_q L(., vn) + Dbar_q L(., vn1) ](qn, qn1)
//   Dbar2 L = 1/2 [ Dbar_v L(qn, .) + Dbar_v L(qn1, .) ](vn, vn1)
//
// The four one-slot directionality identities telescope, so
//
//   Dbar1 L . (qn1-qn) + Dbar2 L . (vn1-vn) = L(qn1,vn1) - L(qn,vn)
//
// holds exactly. For constant M the velocity slot reduces to M v^{n+1/2},
// which is what propagates p^n = M v^n step to step.
std::pair<Eigen::VectorXd, Eigen::VectorXd> partitioned_discrete_gradient_lagrangian(
    const SystemModel& model, const Eigen::VectorXd& qn, const Eigen::VectorXd& vn,
    const Eigen::VectorXd& qn1, const Eigen::VectorXd& vn1, double eps_dd);

// Row k is the Gonzalez derivative of g_k between qn and qn1, so each row
// satisfies Dbar g_k . (qn1-qn) = g_k(qn1) - g_k(qn). Returns 0 x d for
// unconstrained models.
Eigen::MatrixXd discrete_constraint_gradients(const SystemModel& model,
                                              const Eigen::VectorXd& qn,
                                              const Eigen::VectorXd& qn1,
                                              double eps_dd);

}  // namespace livens
