#pragma once

#include "fracmat/assembly.hpp"

namespace fracmat {

/// One of the five built-in diffusion configurations:
///   1 — classical diffusion, u(x,0) = 4x(1-x), h = 0.1, tau = h^2/6, n = 37
///   2 — Caputo time derivative (alpha = 0.7 default), same initial profile
///   3 — first-order time, Riesz space derivative (beta = 1.7 default)
///   4 — both orders fractional (alpha = 0.7, beta = 1.4 default)
///   5 — two time terms, one delayed (alpha = 0.9, gamma = 0.8, beta = 1.9,
///       k = 6 default, equal weights)
/// Presets 2-5 use h = 0.05, tau = h^2/6, n = 48. Presets 3-5 are posed
/// directly for the zero-data unknown with right-hand side 8.
struct ExampleRun {
    ProblemSpec problem;
    Grid grid;
};

ExampleRun example_preset(int id);

}  // namespace fracmat
