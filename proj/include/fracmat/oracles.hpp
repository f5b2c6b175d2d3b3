#pragma once

#include "fracmat/grid.hpp"

namespace fracmat {

/// Closed form of the symmetric Riesz derivative of x(1-x) on (0, 1),
/// order beta strictly inside (1, 2):
///   [x^{1-beta} + (1-x)^{1-beta}] / (2 Gamma(2-beta))
///     - [x^{2-beta} + (1-x)^{2-beta}] / Gamma(3-beta).
/// Singular at the endpoints; symmetric under x <-> 1-x.
double riesz_closed_form(double x, double beta);

/// Separation-of-variables solution of u_t = u_xx on [0,1] with zero boundary
/// values and u(x,0) = 4x(1-x): sum over odd k of (32/(k^3 pi^3)) sin(k pi x)
/// exp(-k^2 pi^2 t), truncated after `terms` odd modes.
double heat_series(double x, double t, int terms = 200);

/// Series evaluation together with the truncation index it used. For
/// t >= 1e-4 the dropped tail is far below 1e-12 with the default 200 modes;
/// at t = 0 the series converges only cubically (~1e-6).
struct OracleEval {
    double x = 0.0;
    double t = 0.0;
    double value = 0.0;
    int series_terms = 0;
};

OracleEval heat_series_eval(double x, double t, int terms = 200);

/// Max over interior nodes of |field(x_i, T) - 4 x_i (1 - x_i)| at the final
/// time layer; the long-time profile of the zero-data diffusion problems with
/// constant right-hand side 8.
double steady_state_check(const StackedField& field);

}  // namespace fracmat
