#pragma once

#include "fracmat/structured.hpp"

namespace fracmat {

enum class RieszVariant { Centered, HalfSum };

/// Discrete fractional time-derivative operator on the descending node
/// ordering (layer n first). For delay_steps = 0 the matrix is the upper
/// triangular strip with diagonal tau^{-order}; for delay_steps = k > 0 every
/// nonzero diagonal has offset >= k and the rows for the first k time nodes
/// are zero (they would reach before t = 0, where the prehistory is zero).
struct TimeOperator {
    double order = 1.0;
    Index steps = 0;        // n; matrix is (n+1) x (n+1)
    double tau = 1.0;
    Index delay_steps = 0;  // k
    SparseOperator matrix;
};

/// Discrete symmetric Riesz space-derivative operator; both variants are
/// symmetric and reduce exactly to the tridiagonal h^{-2} [1, -2, 1] stencil
/// at beta = 2.
struct SpaceOperator {
    double order = 2.0;
    Index intervals = 0;  // m; matrix is (m+1) x (m+1)
    double h = 1.0;
    RieszVariant variant = RieszVariant::Centered;
    SparseOperator matrix;
};

/// Backward-difference approximation of the left-sided fractional derivative:
/// upper strip of gl_coeffs(alpha, n), scale tau^{-alpha}.
TimeOperator ban(double alpha, Index n, double tau);

/// Forward-difference approximation of the right-sided fractional derivative:
/// lower strip, the transpose of ban.
TimeOperator fan(double alpha, Index n, double tau);

/// Time operator evaluated k steps in the past (delay k*tau):
/// omega_j tau^{-gamma} on diagonal offset j + k.
TimeOperator delayed_ban(double gamma, Index n, Index k, double tau);

/// Symmetric Riesz operator as the half-sum of the one-step-shifted left- and
/// right-sided strips: (1 / (2 h^beta)) [shift_sw(upper) + shift_ne(lower)].
SpaceOperator ransym(double beta, Index m, double h);

/// Symmetric Riesz operator from the centered fractional difference:
/// symmetric Toeplitz with first row h^{-beta} riesz_centered_coeffs(beta, m).
SpaceOperator ranort(double beta, Index m, double h);

SpaceOperator riesz_operator(RieszVariant variant, double beta, Index m, double h);

}  // namespace fracmat
