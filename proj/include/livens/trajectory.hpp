#pragma once

#include <Eigen/Dense>

#include <vector>

namespace livens {

// One time-grid point. q, v, p have length d; lambda has length m.
struct State {
    double t = 0.0;
    Eigen::VectorXd q;
    Eigen::VectorXd v;
    Eigen::VectorXd p;
    Eigen::VectorXd lambda;
};

struct StepDiagnostics {
    double energy = 0.0;                    // E^n = p.v - L  (conserved quantity)
    double total_energy = 0.0;              // E_tot^n = T + V
    double constraint_norm = 0.0;           // ||g(q^n)||_inf
    double velocity_constraint_norm = 0.0;  // ||Dg(q^n) v^n||_inf
    int newton_iterations = 0;              // 0 for the initial state
};

// States at t_n = n h, together with per-state diagnostics (same length).
struct Trajectory {
    std::vector<State> states;
    std::vector<StepDiagnostics> diagnostics;
};

}  // namespace livens
