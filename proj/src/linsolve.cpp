#include "fracmat/linsolve.hpp"

#include <Eigen/SparseLU>

namespace fracmat {

namespace {

double residual_inf(const SparseOperator& a, const Eigen::VectorXd& x, const Eigen::VectorXd& b) {
    return (a * x - b).lpNorm<Eigen::Infinity>();
}

}  // namespace

SolveReport solve(const SparseOperator& a, const Eigen::VectorXd& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve: matrix must be square");
    if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");

    const auto start = std::chrono::steady_clock::now();
    Eigen::SparseLU<SparseOperator, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(a);
    lu.factorize(a);
    if (lu.info() != Eigen::Success)
        throw SingularMatrixError("solve: factorization failed: " + lu.lastErrorMessage());

    SolveReport rep;
    rep.solution = lu.solve(b);
    if (lu.info() != Eigen::Success)
        throw SingularMatrixError("solve: back-substitution failed");
    rep.factor_nnz = lu.nnzL() + lu.nnzU();
    rep.elapsed = std::chrono::steady_clock::now() - start;
    rep.residual_inf_norm = residual_inf(a, rep.solution, b);
    return rep;
}

LayeredSystem LayeredSystem::from_reduced(const SparseOperator& reduced,
                                          const Eigen::VectorXd& rhs, Index layers,
                                          Index layer_size) {
    if (reduced.rows() != layers * layer_size || reduced.cols() != reduced.rows())
        throw std::invalid_argument("LayeredSystem: matrix size does not match layer layout");
    if (rhs.size() != reduced.rows())
        throw std::invalid_argument("LayeredSystem: rhs size mismatch");

    LayeredSystem sys;
    sys.layers = layers;
    sys.layer_size = layer_size;
    sys.rhs = rhs;
    sys.diag_block = Eigen::MatrixXd::Zero(layer_size, layer_size);
    sys.time_coeffs = Eigen::VectorXd::Zero(layers);

    // diagonal block from block (0, 0), off-diagonal scalars from block row 0
    for (Index c = 0; c < layer_size; ++c)
        for (SparseOperator::InnerIterator it(reduced, c); it; ++it) {
            if (it.row() >= layer_size)
                throw std::invalid_argument(
                    "LayeredSystem: entry below the block diagonal; system is not time-causal");
            sys.diag_block(it.row(), it.col()) = it.value();
        }
    sys.time_coeffs[0] = 0.0;  // folded into diag_block
    for (Index d = 1; d < layers; ++d) sys.time_coeffs[d] = reduced.coeff(0, d * layer_size);
    return sys;
}

SolveReport solve_layered(const LayeredSystem& sys) {
    const Index s = sys.layer_size;
    const Index n = sys.layers;
    if (sys.rhs.size() != n * s) throw std::invalid_argument("solve_layered: rhs size mismatch");

    const auto start = std::chrono::steady_clock::now();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sys.diag_block);
    if (!lu.isInvertible())
        throw SingularMatrixError("solve_layered: singular diagonal block, rank " +
                                  std::to_string(lu.rank()) + " of " + std::to_string(s));

    SolveReport rep;
    rep.solution = Eigen::VectorXd::Zero(n * s);
    Eigen::VectorXd acc(s);
    // block J holds layer n - J: physical time marches J = n-1, n-2, ..., 0
    for (Index J = n - 1; J >= 0; --J) {
        acc = sys.rhs.segment(J * s, s);
        for (Index d = 1; J + d < n; ++d) {
            const double c = sys.time_coeffs[d];
            if (c != 0.0) acc.noalias() -= c * rep.solution.segment((J + d) * s, s);
        }
        rep.solution.segment(J * s, s) = lu.solve(acc);
    }
    rep.factor_nnz = s * s;
    rep.elapsed = std::chrono::steady_clock::now() - start;

    double res = 0.0;
    for (Index J = 0; J < n; ++J) {
        acc = sys.diag_block * rep.solution.segment(J * s, s) - sys.rhs.segment(J * s, s);
        for (Index d = 1; J + d < n; ++d) {
            const double c = sys.time_coeffs[d];
            if (c != 0.0) acc.noalias() += c * rep.solution.segment((J + d) * s, s);
        }
        res = std::max(res, acc.lpNorm<Eigen::Infinity>());
    }
    rep.residual_inf_norm = res;
    return rep;
}

}  // namespace fracmat
