#pragma once
#include <array>
#include <vector>

#include "ade/boundary.hpp"
#include "ade/grid.hpp"
#include "ade/parallel.hpp"

namespace ade {

enum class SweepDir { Ascending, Descending };

struct SweepDirection2D {
    SweepDir x = SweepDir::Ascending;
    SweepDir y = SweepDir::Ascending;
};

// The four sweeps averaged by a 2D step, in (x,y) direction order:
// (A,A), (A,D), (D,A), (D,D).
extern const std::array<SweepDirection2D, 4> kAllSweeps2D;

// Pointwise equation each sweep solves at an interior node:
//   time_coeff*(s^{n+1} - base) = diff_coeff*[split Laplacian] +
//                                 implicit_linear*s^{n+1} + source.
// The split Laplacian reads the already-updated neighbour behind the sweep
// at level n+1 and the untouched neighbour ahead at level n, per axis.
// Heat: time_coeff = 1/dt, base = u^n. Other solvers rescale the time term
// and fold an implicit reaction term into the denominator.
struct SweepEquation2D {
    double time_coeff = 1.0;
    double diff_coeff = 1.0;
    double implicit_linear = 0.0;
    const Field2D* base = nullptr;          // defaults to u_old when null
    const std::vector<double>* source = nullptr;  // defaults to zero when null
};

// Dirichlet boundary values along the four edges of the rectangle.
struct EdgeValues2D {
    std::vector<double> x_lo, x_hi;  // i = 0 and i = m1 edges, indexed by j
    std::vector<double> y_lo, y_hi;  // j = 0 and j = m2 edges, indexed by i
};

EdgeValues2D eval_boundary_2d(const Grid2D& g,
                              const std::function<double(double, double, double)>& psi, double t);

// One directional sweep. Dirichlet: edges the sweep enters hold data at
// t_{n+1} (bv_new), edges it leaves hold data at t_n (bv_old). Neumann: the
// pre-sweep field is mirrored and the entering-edge-adjacent solve is
// constrained so the updated boundary value equals its interior neighbour.
Field2D ade_sweep_2d_core(const Field2D& u_old, SweepDirection2D dir, const Boundary2D& bc,
                          const SweepEquation2D& eq, const EdgeValues2D* bv_old,
                          const EdgeValues2D* bv_new);

// All four sweeps from the same u^n, averaged with weight 1/4, boundary of
// the result filled at t_{n+1}. The sweeps run concurrently under OpenMP.
Field2D ade_step_2d_core(const Field2D& u_old, const Boundary2D& bc, const SweepEquation2D& eq,
                         const EdgeValues2D* bv_old, const EdgeValues2D* bv_new,
                         Exec exec = Exec::OpenMP);

// Heat-equation front ends: u_t = coeff * Lap(u) + b.
Field2D ade_sweep_2d(const Field2D& u_old, SweepDirection2D dir, const Boundary2D& bc,
                     const std::vector<double>& b_half, double dt, double coeff, double t_old,
                     double t_new);
Field2D ade_step_2d(const Field2D& u_old, const Boundary2D& bc, const std::vector<double>& b_half,
                    double dt, double coeff, double t_old, double t_new,
                    Exec exec = Exec::OpenMP);

}  // namespace ade
