#pragma once
#include <vector>

#include "ade/boundary.hpp"
#include "ade/grid.hpp"

namespace ade {

// One step of u_t = u_xx + b as two directional sweeps plus an average.
// Boundary data is pre-evaluated at the two time levels the sweeps read.
struct AdeStepInput1D {
    Field1D u_old;               // u^n, boundary entries included
    double dt = 0.0;
    BcKind bc = BcKind::TimeDirichlet;
    std::vector<double> b_half;  // source at t_{n+1/2}, one entry per node
    double f_old = 0.0, f_new = 0.0;  // left Dirichlet data at t_n, t_{n+1}
    double g_old = 0.0, g_new = 0.0;  // right Dirichlet data at t_n, t_{n+1}
};

// Ascending sweep. Solves, for i = 1..M-1 in order,
//   (p_i^{n+1} - p_i^n)/dt = (p_{i-1}^{n+1} - p_i^{n+1} - p_i^n + p_{i+1}^n)/dx^2 + b_i,
// reading the already-updated left neighbour and the old right neighbour.
// Dirichlet: p_0^{n+1} = f(t_{n+1}); the right boundary stays at g(t_n).
// Neumann: the pre-sweep field is mirrored (u_0 = u_1, u_M = u_{M-1}) and
// p_0^{n+1} = (1-r) p_1^n + r p_2^n + dt b_1 with r = dt/dx^2, which makes
// the i = 1 solve land exactly on p_1^{n+1} = p_0^{n+1}.
Field1D sweep_forward_1d(const AdeStepInput1D& in);

// Descending mirror image: q_M^{n+1} = g(t_{n+1}) (Dirichlet) or
// q_M^{n+1} = r q_{M-2}^n + (1-r) q_{M-1}^n + dt b_{M-1} (Neumann), then
//   (q_i^{n+1} - q_i^n)/dt = (q_{i-1}^n - q_i^n - q_i^{n+1} + q_{i+1}^{n+1})/dx^2 + b_i
// for i = M-1..1.
Field1D sweep_backward_1d(const AdeStepInput1D& in);

struct AdeStepResult1D {
    Field1D u;  // averaged step, boundary filled at t_{n+1}
    Field1D p;  // forward sweep output
    Field1D q;  // backward sweep output
};

AdeStepResult1D ade_step_1d_detailed(const AdeStepInput1D& in);
Field1D ade_step_1d(const AdeStepInput1D& in);

}  // namespace ade
