#pragma once

#include "fracmat/coeffs.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>

namespace fracmat {

enum class StripKind { Lower, Upper };

/// Triangular Toeplitz ("strip") matrix, stored as its generating coefficients
/// plus a scalar factor. A lower strip is fully determined by its first
/// column, an upper strip by its first row; entry (r, c) is
/// scale * omega_{r-c} (lower) resp. scale * omega_{c-r} (upper), zero when
/// the subscript would be negative. The matrix is never densified except on
/// request, so storage and the algebra below are O(N).
template <typename Scalar>
class StripMatrix {
public:
    StripMatrix(StripKind kind, Vector<Scalar> coeffs, Scalar scale = Scalar(1))
        : kind_(kind), coeffs_(std::move(coeffs)), scale_(scale) {
        if (coeffs_.size() == 0)
            throw std::invalid_argument("StripMatrix: coefficient vector must be nonempty");
    }

    StripMatrix(StripKind kind, const CoeffVector<Scalar>& coeffs, Scalar scale = Scalar(1))
        : StripMatrix(kind, coeffs.values, scale) {}

    /// Identity strip of the given size (generating series 1).
    static StripMatrix identity(StripKind kind, Index size) {
        Vector<Scalar> c = Vector<Scalar>::Zero(size);
        c[0] = Scalar(1);
        return StripMatrix(kind, std::move(c));
    }

    StripKind kind() const { return kind_; }
    Index size() const { return coeffs_.size(); }
    const Vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar scale() const { return scale_; }

    Scalar operator()(Index r, Index c) const {
        const Index d = kind_ == StripKind::Lower ? r - c : c - r;
        return d < 0 ? Scalar(0) : scale_ * coeffs_[d];
    }

    Matrix<Scalar> dense() const {
        const Index n = size();
        Matrix<Scalar> a = Matrix<Scalar>::Zero(n, n);
        for (Index r = 0; r < n; ++r)
            for (Index c = 0; c < n; ++c) a(r, c) = (*this)(r, c);
        return a;
    }

    StripMatrix transpose() const {
        return StripMatrix(kind_ == StripKind::Lower ? StripKind::Upper : StripKind::Lower,
                           coeffs_, scale_);
    }

    /// Matrix-vector product, O(N^2).
    Vector<Scalar> apply(const Vector<Scalar>& v) const {
        const Index n = size();
        if (v.size() != n)
            throw std::invalid_argument("StripMatrix::apply: length mismatch");
        Vector<Scalar> out = Vector<Scalar>::Zero(n);
        for (Index r = 0; r < n; ++r) {
            Scalar acc = Scalar(0);
            if (kind_ == StripKind::Upper) {
                for (Index c = r; c < n; ++c) acc += coeffs_[c - r] * v[c];
            } else {
                for (Index c = 0; c <= r; ++c) acc += coeffs_[r - c] * v[c];
            }
            out[r] = scale_ * acc;
        }
        return out;
    }

    friend Vector<Scalar> operator*(const StripMatrix& a, const Vector<Scalar>& v) {
        return a.apply(v);
    }

    /// Coefficient-wise sum; scales are folded into the coefficients.
    friend StripMatrix operator+(const StripMatrix& a, const StripMatrix& b) {
        check_compatible(a, b, "operator+");
        return StripMatrix(a.kind_, (a.scale_ * a.coeffs_ + b.scale_ * b.coeffs_).eval());
    }

    friend StripMatrix operator-(const StripMatrix& a, const StripMatrix& b) {
        check_compatible(a, b, "operator-");
        return StripMatrix(a.kind_, (a.scale_ * a.coeffs_ - b.scale_ * b.coeffs_).eval());
    }

    /// Product via the generating series: the Cauchy product of the two
    /// coefficient polynomials truncated at degree N. Strip matrices of equal
    /// orientation commute, which the truncated convolution makes plain.
    friend StripMatrix operator*(const StripMatrix& a, const StripMatrix& b) {
        check_compatible(a, b, "operator*");
        const Index n = a.size();
        Vector<Scalar> c = Vector<Scalar>::Zero(n);
        for (Index i = 0; i < n; ++i) {
            if (a.coeffs_[i] == Scalar(0)) continue;
            for (Index j = 0; i + j < n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return StripMatrix(a.kind_, std::move(c), a.scale_ * b.scale_);
    }

    friend StripMatrix operator*(Scalar s, const StripMatrix& a) {
        return StripMatrix(a.kind_, a.coeffs_, s * a.scale_);
    }

private:
    static void check_compatible(const StripMatrix& a, const StripMatrix& b, const char* op) {
        if (a.kind_ != b.kind_)
            throw std::invalid_argument(std::string("StripMatrix::") + op +
                                        ": orientation mismatch");
        if (a.size() != b.size())
            throw std::invalid_argument(std::string("StripMatrix::") + op + ": size mismatch");
    }

    StripKind kind_;
    Vector<Scalar> coeffs_;
    Scalar scale_;
};

}  // namespace fracmat
