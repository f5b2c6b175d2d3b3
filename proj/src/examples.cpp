#include "fracmat/examples.hpp"

#include <stdexcept>

namespace fracmat {

namespace {

Grid grid_with_tau_rule(Index m, Index n) {
    Grid g;
    g.a = 0.0;
    g.b = 1.0;
    g.m = m;
    g.n = n;
    const double h = g.h();
    g.T = static_cast<double>(n) * h * h / 6.0;
    return g;
}

double parabola(double x) { return 4.0 * x * (1.0 - x); }

double constant_eight(double, double) { return 8.0; }

}  // namespace

ExampleRun example_preset(int id) {
    ExampleRun run;
    switch (id) {
        case 1:
            run.problem.alpha = 1.0;
            run.problem.beta = 2.0;
            run.problem.initial = parabola;
            run.grid = grid_with_tau_rule(10, 37);
            break;
        case 2:
            run.problem.alpha = 0.7;
            run.problem.beta = 2.0;
            run.problem.initial = parabola;
            run.grid = grid_with_tau_rule(20, 48);
            break;
        case 3:
            run.problem.alpha = 1.0;
            run.problem.beta = 1.7;
            run.problem.rhs = constant_eight;
            run.grid = grid_with_tau_rule(20, 48);
            break;
        case 4:
            run.problem.alpha = 0.7;
            run.problem.beta = 1.4;
            run.problem.rhs = constant_eight;
            run.grid = grid_with_tau_rule(20, 48);
            break;
        case 5:
            run.problem.alpha = 0.9;
            run.problem.beta = 1.9;
            run.problem.rhs = constant_eight;
            run.problem.delay = DelayTerm{0.8, 6, {0.5, 0.5}};
            run.grid = grid_with_tau_rule(20, 48);
            break;
        default:
            throw std::invalid_argument("example_preset: id must be 1..5");
    }
    return run;
}

}  // namespace fracmat
