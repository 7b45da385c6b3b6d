#include "ade/engine2d.hpp"

#include <stdexcept>

namespace ade {

const std::array<SweepDirection2D, 4> kAllSweeps2D = {{
    {SweepDir::Ascending, SweepDir::Ascending},
    {SweepDir::Ascending, SweepDir::Descending},
    {SweepDir::Descending, SweepDir::Ascending},
    {SweepDir::Descending, SweepDir::Descending},
}};

EdgeValues2D eval_boundary_2d(const Grid2D& g,
                              const std::function<double(double, double, double)>& psi, double t) {
    EdgeValues2D bv;
    bv.x_lo.resize(g.ny());
    bv.x_hi.resize(g.ny());
    bv.y_lo.resize(g.nx());
    bv.y_hi.resize(g.nx());
    for (int j = 0; j <= g.m2; ++j) {
        bv.x_lo[j] = psi(g.x_min, g.y(j), t);
        bv.x_hi[j] = psi(g.x_max, g.y(j), t);
    }
    for (int i = 0; i <= g.m1; ++i) {
        bv.y_lo[i] = psi(g.x(i), g.y_min, t);
        bv.y_hi[i] = psi(g.x(i), g.y_max, t);
    }
    return bv;
}

namespace {

void validate(const Field2D& u_old, const Boundary2D& bc, const SweepEquation2D& eq,
              const EdgeValues2D* bv_old, const EdgeValues2D* bv_new) {
    const Grid2D& g = u_old.grid;
    if (g.m1 < 2 || g.m2 < 2) throw std::invalid_argument("ade 2d: need at least 2 cells per axis");
    if (!(eq.time_coeff > 0)) throw std::invalid_argument("ade 2d: time coefficient must be positive");
    if (eq.source && eq.source->size() != static_cast<std::size_t>(g.nodes()))
        throw std::invalid_argument("ade 2d: source must have one entry per node");
    if (bc.kind == BcKind::TimeDirichlet && (!bv_old || !bv_new))
        throw std::invalid_argument("ade 2d: Dirichlet sweeps need boundary values at both levels");
    const double kx = eq.diff_coeff / (g.dx * g.dx);
    const double ky = eq.diff_coeff / (g.dy * g.dy);
    const double corner = eq.time_coeff - eq.implicit_linear;
    const double den = bc.kind == BcKind::ZeroNeumann ? corner : corner + kx + ky;
    if (!(den > 0)) throw std::invalid_argument("ade 2d: non-positive pointwise denominator");
}

void mirror_edges(Field2D& s) {
    const int m1 = s.grid.m1, m2 = s.grid.m2;
    for (int j = 0; j <= m2; ++j) {
        s.at(0, j) = s.at(1, j);
        s.at(m1, j) = s.at(m1 - 1, j);
    }
    for (int i = 0; i <= m1; ++i) {
        s.at(i, 0) = s.at(i, 1);
        s.at(i, m2) = s.at(i, m2 - 1);
    }
}

void set_dirichlet_edges(Field2D& s, SweepDirection2D dir, const EdgeValues2D& bv_old,
                         const EdgeValues2D& bv_new) {
    const int m1 = s.grid.m1, m2 = s.grid.m2;
    const bool xa = dir.x == SweepDir::Ascending;
    const bool ya = dir.y == SweepDir::Ascending;
    // The edge a sweep enters is read as the updated implicit neighbour and
    // carries data at t_{n+1}; the edge it leaves stays at t_n.
    for (int j = 0; j <= m2; ++j) {
        s.at(0, j) = (xa ? bv_new : bv_old).x_lo[j];
        s.at(m1, j) = (xa ? bv_old : bv_new).x_hi[j];
    }
    for (int i = 0; i <= m1; ++i) {
        s.at(i, 0) = (ya ? bv_new : bv_old).y_lo[i];
        s.at(i, m2) = (ya ? bv_old : bv_new).y_hi[i];
    }
}

}  // namespace

Field2D ade_sweep_2d_core(const Field2D& u_old, SweepDirection2D dir, const Boundary2D& bc,
                          const SweepEquation2D& eq, const EdgeValues2D* bv_old,
                          const EdgeValues2D* bv_new) {
    validate(u_old, bc, eq, bv_old, bv_new);
    const Grid2D& g = u_old.grid;
    const int m1 = g.m1, m2 = g.m2;
    const int stride = m2 + 1;
    const bool neumann = bc.kind == BcKind::ZeroNeumann;

    Field2D s = u_old;
    if (neumann)
        mirror_edges(s);
    else
        set_dirichlet_edges(s, dir, *bv_old, *bv_new);

    const double kx = eq.diff_coeff / (g.dx * g.dx);
    const double ky = eq.diff_coeff / (g.dy * g.dy);
    const double at = eq.time_coeff;
    const double den0 = at - eq.implicit_linear;
    const double* base = eq.base ? eq.base->v.data() : u_old.v.data();
    const double* src = eq.source ? eq.source->data() : nullptr;

    const bool xa = dir.x == SweepDir::Ascending;
    const bool ya = dir.y == SweepDir::Ascending;
    const int di = xa ? 1 : -1;
    const int dj = ya ? 1 : -1;
    const int ahead_x = di * stride;  // toward not-yet-visited x neighbour
    const int ahead_y = dj;
    const int i_first = xa ? 1 : m1 - 1;
    const int j_first = ya ? 1 : m2 - 1;

    double* sv = s.v.data();
    for (int ii = 0; ii < m1 - 1; ++ii) {
        const int i = i_first + di * ii;
        const bool cx = neumann && ii == 0;  // implicit x neighbour is the entering edge
        for (int jj = 0; jj < m2 - 1; ++jj) {
            const int j = j_first + dj * jj;
            const int id = i * stride + j;
            const double old = sv[id];
            double num = at * base[id] + (src ? src[id] : 0.0);
            double den = den0;
            if (cx) {
                // constrained solve: boundary value tracks this unknown
                num += kx * (sv[id + ahead_x] - old);
            } else {
                num += kx * (sv[id - ahead_x] - old + sv[id + ahead_x]);
                den += kx;
            }
            if (neumann && jj == 0) {
                num += ky * (sv[id + ahead_y] - old);
            } else {
                num += ky * (sv[id - ahead_y] - old + sv[id + ahead_y]);
                den += ky;
            }
            sv[id] = num / den;
        }
    }

    if (neumann) {
        // entering edges now hold the updated level
        if (xa)
            for (int j = 1; j < m2; ++j) s.at(0, j) = s.at(1, j);
        else
            for (int j = 1; j < m2; ++j) s.at(m1, j) = s.at(m1 - 1, j);
        if (ya)
            for (int i = 1; i < m1; ++i) s.at(i, 0) = s.at(i, 1);
        else
            for (int i = 1; i < m1; ++i) s.at(i, m2) = s.at(i, m2 - 1);
    }
    return s;
}

Field2D ade_step_2d_core(const Field2D& u_old, const Boundary2D& bc, const SweepEquation2D& eq,
                         const EdgeValues2D* bv_old, const EdgeValues2D* bv_new, Exec exec) {
    validate(u_old, bc, eq, bv_old, bv_new);
    std::array<Field2D, 4> part;
    const bool par = exec == Exec::OpenMP;
#pragma omp parallel for schedule(static) if (par)
    for (int k = 0; k < 4; ++k)
        part[k] = ade_sweep_2d_core(u_old, kAllSweeps2D[k], bc, eq, bv_old, bv_new);

    const Grid2D& g = u_old.grid;
    Field2D out(g);
    for (int i = 1; i < g.m1; ++i)
        for (int j = 1; j < g.m2; ++j) {
            const int id = out.idx(i, j);
            out.v[id] = 0.25 * (part[0].v[id] + part[1].v[id] + part[2].v[id] + part[3].v[id]);
        }

    if (bc.kind == BcKind::TimeDirichlet) {
        for (int j = 0; j <= g.m2; ++j) {
            out.at(0, j) = bv_new->x_lo[j];
            out.at(g.m1, j) = bv_new->x_hi[j];
        }
        for (int i = 0; i <= g.m1; ++i) {
            out.at(i, 0) = bv_new->y_lo[i];
            out.at(i, g.m2) = bv_new->y_hi[i];
        }
    } else {
        mirror_edges(out);
    }
    return out;
}

Field2D ade_sweep_2d(const Field2D& u_old, SweepDirection2D dir, const Boundary2D& bc,
                     const std::vector<double>& b_half, double dt, double coeff, double t_old,
                     double t_new) {
    if (!(dt > 0)) throw std::invalid_argument("ade 2d: dt must be positive");
    SweepEquation2D eq{1.0 / dt, coeff, 0.0, &u_old, &b_half};
    if (bc.kind == BcKind::TimeDirichlet) {
        const EdgeValues2D lo = eval_boundary_2d(u_old.grid, bc.data, t_old);
        const EdgeValues2D hi = eval_boundary_2d(u_old.grid, bc.data, t_new);
        return ade_sweep_2d_core(u_old, dir, bc, eq, &lo, &hi);
    }
    return ade_sweep_2d_core(u_old, dir, bc, eq, nullptr, nullptr);
}

Field2D ade_step_2d(const Field2D& u_old, const Boundary2D& bc, const std::vector<double>& b_half,
                    double dt, double coeff, double t_old, double t_new, Exec exec) {
    if (!(dt > 0)) throw std::invalid_argument("ade 2d: dt must be positive");
    SweepEquation2D eq{1.0 / dt, coeff, 0.0, &u_old, &b_half};
    if (bc.kind == BcKind::TimeDirichlet) {
        const EdgeValues2D lo = eval_boundary_2d(u_old.grid, bc.data, t_old);
        const EdgeValues2D hi = eval_boundary_2d(u_old.grid, bc.data, t_new);
        return ade_step_2d_core(u_old, bc, eq, &lo, &hi, exec);
    }
    return ade_step_2d_core(u_old, bc, eq, nullptr, nullptr, exec);
}

}  // namespace ade
