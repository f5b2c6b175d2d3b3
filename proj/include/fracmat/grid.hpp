#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace fracmat {

using Eigen::Index;

/// Uniform space-time discretization of [a, b] x [0, T]: nodes x_i = a + i h
/// (i = 0..m) and t_j = j tau (j = 0..n). Stacked-node ordering follows the
/// descending convention: the top time layer comes first and within a layer
/// the spatial index runs from m down to 0.
struct Grid {
    double a = 0.0;
    double b = 1.0;
    double T = 1.0;
    Index m = 1;  // spatial intervals
    Index n = 1;  // time steps

    double h() const { return (b - a) / static_cast<double>(m); }
    double tau() const { return T / static_cast<double>(n); }
    double x(Index i) const { return a + static_cast<double>(i) * h(); }
    double t(Index j) const { return static_cast<double>(j) * tau(); }
    Index num_nodes() const { return (n + 1) * (m + 1); }

    /// Position of node (i, j) in the stacked column vector.
    Index stack_index(Index i, Index j) const { return (n - j) * (m + 1) + (m - i); }

    void validate() const {
        if (m < 1 || n < 1) throw std::invalid_argument("Grid: m and n must be at least 1");
        if (!(b > a)) throw std::invalid_argument("Grid: b must exceed a");
        if (!(T > 0)) throw std::invalid_argument("Grid: T must be positive");
    }
};

/// All grid-node values in one column vector, stacked in the grid's ordering.
struct StackedField {
    Grid grid;
    Eigen::VectorXd values;

    double operator()(Index i, Index j) const { return values[grid.stack_index(i, j)]; }
    double& operator()(Index i, Index j) { return values[grid.stack_index(i, j)]; }
};

/// Sample f(x, t) at every node.
template <typename F>
StackedField stack(const Grid& g, F&& f) {
    StackedField s{g, Eigen::VectorXd(g.num_nodes())};
    for (Index j = 0; j <= g.n; ++j)
        for (Index i = 0; i <= g.m; ++i) s.values[g.stack_index(i, j)] = f(g.x(i), g.t(j));
    return s;
}

/// Node values as an (m+1) x (n+1) matrix, ascending in both indices.
inline Eigen::MatrixXd unstack(const StackedField& s) {
    Eigen::MatrixXd a(s.grid.m + 1, s.grid.n + 1);
    for (Index i = 0; i <= s.grid.m; ++i)
        for (Index j = 0; j <= s.grid.n; ++j) a(i, j) = s(i, j);
    return a;
}

}  // namespace fracmat
