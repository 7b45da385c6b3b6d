#pragma once
#include <Eigen/Dense>

#include "ade/grid.hpp"

namespace ade {

// Dense one-step update matrix of the averaged two-sweep scheme for
// u_t = u_xx with zero Dirichlet data: built from the triangular splitting
// B = L + D/2, C = U + D/2 of the (m-1)x(m-1) second-difference matrix as
//   0.5 [ (I - dt B)^{-1} (I + dt C) + (I - dt C)^{-1} (I + dt B) ].
// Analysis tool only; refuses m > 200.
Eigen::MatrixXd build_step_matrix_1d(int m, double dt, double dx);

double spectral_radius(const Eigen::MatrixXd& a);

// max_i | step(u)_i - (S u)_i | over interior nodes, zero Dirichlet and zero
// source; ties the sweep kernels to the dense operator.
double apply_step_equivalence_check(const Field1D& u, double dt, const Eigen::MatrixXd& step);

}  // namespace ade
