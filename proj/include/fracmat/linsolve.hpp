#pragma once

#include "fracmat/structured.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

namespace fracmat {

/// Thrown when a factorization detects a structurally or numerically singular
/// matrix; the message carries the solver's pivot diagnostics.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

struct SolveReport {
    Eigen::VectorXd solution;
    double residual_inf_norm = 0.0;  // ||A x - b||_inf, computed post-hoc
    Index factor_nnz = 0;
    std::chrono::duration<double> elapsed{0.0};
};

/// Direct sparse solve (LU with row pivoting). Throws SingularMatrixError on
/// a singular matrix.
SolveReport solve(const SparseOperator& a, const Eigen::VectorXd& b);

/// The reduced space-time system in layered form: the coefficient on block
/// offset d is a scalar multiple of the identity (the time coupling), and the
/// diagonal block carries the intra-layer space coupling. Block J of the
/// stacked ordering holds time layer n - J, so marching in physical time
/// traverses blocks from last to first.
struct LayeredSystem {
    Index layers = 0;            // number of unknown time layers (n)
    Index layer_size = 0;        // unknowns per layer (m - 1)
    Eigen::VectorXd time_coeffs; // c_0 .. c_{layers-1}; block (J, J+d) = c_d I for d >= 1
    Eigen::MatrixXd diag_block;  // c_0 I - chi R_interior
    Eigen::VectorXd rhs;         // stacked ordering, length layers * layer_size

    /// Read the layered form back out of an assembled reduced matrix.
    static LayeredSystem from_reduced(const SparseOperator& reduced, const Eigen::VectorXd& rhs,
                                      Index layers, Index layer_size);
};

/// Layer-by-layer block solve: each layer's system is solved after
/// substituting all earlier layers. History is accumulated in ascending block
/// offset order (fixed summation order, so results are reproducible).
/// The residual is evaluated against the layered operator.
SolveReport solve_layered(const LayeredSystem& sys);

}  // namespace fracmat
