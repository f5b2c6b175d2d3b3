#pragma once

#include "fracmat/linsolve.hpp"
#include "fracmat/problem.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fracmat {

/// Full space-time system and its reduction to the unknown nodes. Unknowns
/// are the interior-space nodes (i = 1..m-1) on the time layers j = 1..n;
/// the initial layer and the two boundary columns are struck by eliminators.
struct AssembledSystem {
    Grid grid;
    SparseOperator full_matrix;     // over all (n+1)(m+1) stacked nodes
    SparseOperator reduced_matrix;  // over the (m-1) n unknowns, stacked order
    Eigen::VectorXd reduced_rhs;    // f sampled at the kept nodes
    std::vector<std::pair<Index, Index>> kept_nodes;  // (i, j) per reduced row
    std::vector<Index> kept_positions;                // stacked index per reduced row
};

/// Kronecker assembly of {B ⊗ E - chi E ⊗ R} (plus the weighted delayed time
/// term when present) followed by eliminator reduction. Requires a problem
/// with zero initial and boundary data.
AssembledSystem assemble(const ProblemSpec& p, const Grid& g);

/// The combined (possibly delayed) time-operator matrix used by assemble.
SparseOperator time_matrix(const ProblemSpec& p, const Grid& g);

/// Layered form built directly from the operator coefficients, without
/// materializing the Kronecker system; O(n + m^2) memory, used for large
/// time grids.
LayeredSystem layered_from_problem(const ProblemSpec& p, const Grid& g);

/// Block-propagation solve of an assembled system (identical semantics to
/// the global solve; exploits the time-block-triangular structure).
SolveReport solve_time_marching(const AssembledSystem& sys);

enum class SolverPath { Global, Marching };

struct Solution {
    Grid grid;
    StackedField y;                 // auxiliary zero-data unknown
    std::optional<StackedField> u;  // reconstructed field, when a reconstruction applies
    double residual_inf = 0.0;
    double elapsed_seconds = 0.0;
    Index unknowns = 0;
    SolverPath path = SolverPath::Global;
};

/// homogenize -> assemble -> solve -> scatter -> reconstruct.
Solution solve_problem(const ProblemSpec& p, const Grid& g,
                       SolverPath path = SolverPath::Global);

}  // namespace fracmat
