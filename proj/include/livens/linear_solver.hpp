#pragma once

#include <Eigen/Dense>

namespace livens {

// Solves A x = b by dense LU with partial pivoting. Throws SingularMatrixError
// when any pivot magnitude falls below 1e-14 * ||A||_inf, which is how a
// rank-deficient constraint Jacobian or a degenerate Newton system surfaces.
Eigen::VectorXd solve_linear(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

}  // namespace livens
