#pragma once

#include "fracmat/strip_matrix.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fracmat {

template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar>;

template <typename Scalar>
using Triplet = Eigen::Triplet<Scalar>;

/// Concrete carrier used by the assembly and solver layers.
using SparseOperator = SparseMatrix<double>;

/// Finalize a triplet list: duplicate coordinates are summed, exact zeros are
/// dropped, storage is compressed.
template <typename Scalar>
SparseMatrix<Scalar> make_sparse(Index rows, Index cols, const std::vector<Triplet<Scalar>>& t) {
    SparseMatrix<Scalar> a(rows, cols);
    a.setFromTriplets(t.begin(), t.end());
    a.prune([](Index, Index, const Scalar& v) { return v != Scalar(0); });
    a.makeCompressed();
    return a;
}

template <typename Scalar>
SparseMatrix<Scalar> sparse_identity(Index n) {
    SparseMatrix<Scalar> e(n, n);
    e.setIdentity();
    return e;
}

/// Row-deleted identity: the matrix obtained from the N x N identity by
/// omitting the listed rows (1-based, matching S_{r1,...,rk}). Applied on the
/// left it strikes rows, applied transposed on the right it strikes columns.
class Eliminator {
public:
    Eliminator(Index base_size, std::vector<Index> omitted_rows)
        : base_size_(base_size), omitted_(std::move(omitted_rows)) {
        if (base_size_ < 0) throw std::invalid_argument("Eliminator: negative base size");
        std::sort(omitted_.begin(), omitted_.end());
        if (std::adjacent_find(omitted_.begin(), omitted_.end()) != omitted_.end())
            throw std::invalid_argument("Eliminator: duplicate row index");
        for (Index r : omitted_)
            if (r < 1 || r > base_size_)
                throw std::invalid_argument("Eliminator: row index out of range");
    }

    /// Omit the 1-based contiguous range [first, last].
    static Eliminator range(Index base_size, Index first, Index last) {
        std::vector<Index> rows;
        for (Index r = first; r <= last; ++r) rows.push_back(r);
        return Eliminator(base_size, std::move(rows));
    }

    Index base_size() const { return base_size_; }
    Index reduced_size() const { return base_size_ - static_cast<Index>(omitted_.size()); }
    const std::vector<Index>& omitted_rows() const { return omitted_; }

    /// Surviving 1-based indices, ascending.
    std::vector<Index> kept_rows() const {
        std::vector<Index> kept;
        kept.reserve(reduced_size());
        auto it = omitted_.begin();
        for (Index r = 1; r <= base_size_; ++r) {
            if (it != omitted_.end() && *it == r) {
                ++it;
            } else {
                kept.push_back(r);
            }
        }
        return kept;
    }

    /// The explicit (N - k) x N eliminator matrix.
    template <typename Scalar>
    SparseMatrix<Scalar> matrix() const {
        std::vector<Triplet<Scalar>> t;
        const auto kept = kept_rows();
        t.reserve(kept.size());
        for (Index r = 0; r < static_cast<Index>(kept.size()); ++r)
            t.emplace_back(r, kept[r] - 1, Scalar(1));
        return make_sparse<Scalar>(reduced_size(), base_size_, t);
    }

private:
    Index base_size_;
    std::vector<Index> omitted_;
};

/// S A: keep only the rows of A whose numbers were not omitted, renumbered
/// consecutively in their original order.
template <typename Scalar>
SparseMatrix<Scalar> eliminate_rows(const Eliminator& s, const SparseMatrix<Scalar>& a) {
    if (a.rows() != s.base_size())
        throw std::invalid_argument("eliminate_rows: row count does not match eliminator");
    std::vector<Index> map(a.rows(), -1);
    {
        const auto kept = s.kept_rows();
        for (Index r = 0; r < static_cast<Index>(kept.size()); ++r) map[kept[r] - 1] = r;
    }
    std::vector<Triplet<Scalar>> t;
    t.reserve(a.nonZeros());
    for (Index c = 0; c < a.outerSize(); ++c)
        for (typename SparseMatrix<Scalar>::InnerIterator it(a, c); it; ++it)
            if (map[it.row()] >= 0) t.emplace_back(map[it.row()], it.col(), it.value());
    return make_sparse<Scalar>(s.reduced_size(), a.cols(), t);
}

/// A S^T: keep only the columns of A whose numbers were not omitted.
template <typename Scalar>
SparseMatrix<Scalar> eliminate_cols(const Eliminator& s, const SparseMatrix<Scalar>& a) {
    if (a.cols() != s.base_size())
        throw std::invalid_argument("eliminate_cols: column count does not match eliminator");
    std::vector<Index> map(a.cols(), -1);
    {
        const auto kept = s.kept_rows();
        for (Index r = 0; r < static_cast<Index>(kept.size()); ++r) map[kept[r] - 1] = r;
    }
    std::vector<Triplet<Scalar>> t;
    t.reserve(a.nonZeros());
    for (Index c = 0; c < a.outerSize(); ++c)
        for (typename SparseMatrix<Scalar>::InnerIterator it(a, c); it; ++it)
            if (map[it.col()] >= 0) t.emplace_back(it.row(), map[it.col()], it.value());
    return make_sparse<Scalar>(a.rows(), s.reduced_size(), t);
}

enum class ShiftDirection { Above, Below };

/// Single-off-diagonal 0/1 matrix: ones on the p-th diagonal above or below
/// the main diagonal. Composed with eliminators these displace strip-matrix
/// bands and encode discrete delays.
struct Shifter {
    Index size = 0;     // matrix is size x size
    Index offset = 1;   // p in 1..size-1
    ShiftDirection direction = ShiftDirection::Above;

    template <typename Scalar>
    SparseMatrix<Scalar> matrix() const {
        if (offset < 1 || offset >= size)
            throw std::invalid_argument("Shifter: offset out of range");
        std::vector<Triplet<Scalar>> t;
        for (Index r = 0; r + offset < size; ++r) {
            if (direction == ShiftDirection::Above)
                t.emplace_back(r, r + offset, Scalar(1));
            else
                t.emplace_back(r + offset, r, Scalar(1));
        }
        return make_sparse<Scalar>(size, size, t);
    }
};

/// Kronecker product: entry ((i-1)p + r, (j-1)q + s) = A(i,j) B(r,s).
/// nnz of the result is nnz(A) * nnz(B); triangularity and bandedness of the
/// factors carry over to the product.
template <typename Scalar>
SparseMatrix<Scalar> kron(const SparseMatrix<Scalar>& a, const SparseMatrix<Scalar>& b) {
    std::vector<Triplet<Scalar>> t;
    t.reserve(static_cast<size_t>(a.nonZeros()) * static_cast<size_t>(b.nonZeros()));
    for (Index ca = 0; ca < a.outerSize(); ++ca)
        for (typename SparseMatrix<Scalar>::InnerIterator ia(a, ca); ia; ++ia)
            for (Index cb = 0; cb < b.outerSize(); ++cb)
                for (typename SparseMatrix<Scalar>::InnerIterator ib(b, cb); ib; ++ib)
                    t.emplace_back(ia.row() * b.rows() + ib.row(),
                                   ia.col() * b.cols() + ib.col(), ia.value() * ib.value());
    return make_sparse<Scalar>(a.rows() * b.rows(), a.cols() * b.cols(), t);
}

/// The upper strip matrix of the given coefficients shifted one step in the
/// south-west direction and cropped back to (N+1) x (N+1): omega_j lands on
/// diagonal offset j - 1 (omega_0 on the first subdiagonal, omega_1 on the
/// main diagonal). Equals S_1 E- U_{N+1} E- S^T; needs N + 2 coefficients.
template <typename Scalar>
SparseMatrix<Scalar> shift_sw(const CoeffVector<Scalar>& coeffs, Index n, Scalar scale) {
    if (coeffs.size() < n + 2)
        throw std::invalid_argument("shift_sw: needs at least N + 2 coefficients");
    std::vector<Triplet<Scalar>> t;
    for (Index j = 0; j <= n + 1; ++j) {
        const Index d = j - 1;  // diagonal offset, negative = below
        for (Index r = std::max<Index>(0, -d); r <= std::min<Index>(n, n - d); ++r)
            t.emplace_back(r, r + d, scale * coeffs[j]);
    }
    return make_sparse<Scalar>(n + 1, n + 1, t);
}

/// North-east shift by one step. For an upper strip input omega_j lands on
/// offset j + 1; for a lower strip input (the right-sided pattern) omega_j
/// lands on offset 1 - j (omega_0 on the first superdiagonal, omega_1 on the
/// main diagonal, omega_j on subdiagonal j - 1 for j >= 2).
template <typename Scalar>
SparseMatrix<Scalar> shift_ne(const CoeffVector<Scalar>& coeffs, Index n, Scalar scale,
                              StripKind kind) {
    if (coeffs.size() < n + 2)
        throw std::invalid_argument("shift_ne: needs at least N + 2 coefficients");
    std::vector<Triplet<Scalar>> t;
    for (Index j = 0; j <= n + 1; ++j) {
        const Index d = kind == StripKind::Upper ? j + 1 : 1 - j;
        if (d > n || d < -n) continue;
        for (Index r = std::max<Index>(0, -d); r <= std::min<Index>(n, n - d); ++r)
            t.emplace_back(r, r + d, scale * coeffs[j]);
    }
    return make_sparse<Scalar>(n + 1, n + 1, t);
}

}  // namespace fracmat
