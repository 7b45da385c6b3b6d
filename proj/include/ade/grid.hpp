#pragma once
#include <vector>

namespace ade {

// Uniform 1D grid with m cells and m+1 nodes. Endpoints come straight from
// the bounds (not from accumulation), so x(m) == x_max bit-exactly.
struct Grid1D {
    double x_min = 0.0;
    double x_max = 1.0;
    int m = 2;
    double dx = 0.5;

    Grid1D() = default;
    Grid1D(double a, double b, int cells);

    int nodes() const { return m + 1; }
    double x(int i) const {
        if (i <= 0) return x_min;
        if (i >= m) return x_max;
        return x_min + i * dx;
    }
};

// Uniform 2D rectangle, m1 x m2 cells. Interior index set is
// {1..m1-1} x {1..m2-1}; everything else is boundary.
struct Grid2D {
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    int m1 = 2, m2 = 2;
    double dx = 0.5, dy = 0.5;

    Grid2D() = default;
    Grid2D(double ax, double bx, double ay, double by, int cells_x, int cells_y);
    static Grid2D square(double a, double b, int cells) { return {a, b, a, b, cells, cells}; }

    int nx() const { return m1 + 1; }
    int ny() const { return m2 + 1; }
    int nodes() const { return nx() * ny(); }
    double x(int i) const {
        if (i <= 0) return x_min;
        if (i >= m1) return x_max;
        return x_min + i * dx;
    }
    double y(int j) const {
        if (j <= 0) return y_min;
        if (j >= m2) return y_max;
        return y_min + j * dy;
    }
};

// t_n = n*dt with t(N) == T exactly.
struct TimeAxis {
    double T = 1.0;
    int steps = 1;
    double dt = 1.0;

    TimeAxis() = default;
    TimeAxis(double final_time, int n_steps);

    double t(int n) const { return n >= steps ? T : n * dt; }
    double t_half(int n) const { return 0.5 * (t(n) + t(n + 1)); }
};

// Nodal values on a grid, boundary entries included.
struct Field1D {
    Grid1D grid;
    std::vector<double> v;

    Field1D() = default;
    explicit Field1D(const Grid1D& g) : grid(g), v(g.nodes(), 0.0) {}

    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }

    template <class F>
    static Field1D sample(const Grid1D& g, F&& fn) {
        Field1D f(g);
        for (int i = 0; i <= g.m; ++i) f.v[i] = fn(g.x(i));
        return f;
    }

    bool finite() const;
};

struct Field2D {
    Grid2D grid;
    std::vector<double> v;  // index = i*(m2+1) + j, j contiguous

    Field2D() = default;
    explicit Field2D(const Grid2D& g) : grid(g), v(g.nodes(), 0.0) {}

    int idx(int i, int j) const { return i * (grid.m2 + 1) + j; }
    double& at(int i, int j) { return v[idx(i, j)]; }
    double at(int i, int j) const { return v[idx(i, j)]; }

    template <class F>
    static Field2D sample(const Grid2D& g, F&& fn) {
        Field2D f(g);
        for (int i = 0; i <= g.m1; ++i)
            for (int j = 0; j <= g.m2; ++j) f.at(i, j) = fn(g.x(i), g.y(j));
        return f;
    }

    bool finite() const;
};

}  // namespace ade
