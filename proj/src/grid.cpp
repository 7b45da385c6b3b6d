#include "ade/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace ade {

Grid1D::Grid1D(double a, double b, int cells) : x_min(a), x_max(b), m(cells) {
    if (cells < 2) throw std::invalid_argument("Grid1D: need at least 2 cells");
    if (!(b > a)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
    dx = (b - a) / m;
}

Grid2D::Grid2D(double ax, double bx, double ay, double by, int cells_x, int cells_y)
    : x_min(ax), x_max(bx), y_min(ay), y_max(by), m1(cells_x), m2(cells_y) {
    if (cells_x < 2 || cells_y < 2) throw std::invalid_argument("Grid2D: need at least 2 cells per axis");
    if (!(bx > ax) || !(by > ay)) throw std::invalid_argument("Grid2D: empty rectangle");
    dx = (bx - ax) / m1;
    dy = (by - ay) / m2;
}

TimeAxis::TimeAxis(double final_time, int n_steps) : T(final_time), steps(n_steps) {
    if (n_steps < 1) throw std::invalid_argument("TimeAxis: need at least one step");
    if (!(final_time > 0)) throw std::invalid_argument("TimeAxis: final time must be positive");
    dt = T / steps;
}

bool Field1D::finite() const {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

bool Field2D::finite() const {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace ade
