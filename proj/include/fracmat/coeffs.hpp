#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace fracmat {

template <typename Scalar>
using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Eigen::Index;

/// Generating coefficients omega_0 .. omega_N of one fractional-difference
/// operator, together with the real order they belong to.
template <typename Scalar>
struct CoeffVector {
    Scalar order = Scalar(0);
    Vector<Scalar> values;

    Index size() const { return values.size(); }
    Scalar operator[](Index j) const { return values[j]; }
};

/// 1/Gamma(x). Entire in x: evaluates to an exact zero at the poles of Gamma.
/// Left of 0.5 the reflection formula is used so that no pole is ever touched.
template <typename Scalar>
Scalar reciprocal_gamma(Scalar x) {
    if (x >= Scalar(0.5)) return Scalar(1) / std::tgamma(x);
    if (x <= Scalar(0) && x == std::floor(x)) return Scalar(0);
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    return std::sin(std::numbers::pi_v<Scalar> * x) * std::tgamma(Scalar(1) - x) /
           std::numbers::pi_v<Scalar>;
}

/// omega_j = (-1)^j binom(alpha, j) for j = 0..n, computed by the stable
/// multiplicative recurrence omega_0 = 1, omega_j = omega_{j-1} (1 - (alpha+1)/j).
/// These are the weights of the Grunwald-Letnikov fractional difference; for
/// integer alpha = p >= 0 every entry beyond index p is an exact zero.
template <typename Scalar>
CoeffVector<Scalar> gl_coeffs(Scalar alpha, Index n) {
    if (n < 0) throw std::invalid_argument("gl_coeffs: n must be non-negative");
    Vector<Scalar> w(n + 1);
    w[0] = Scalar(1);
    for (Index j = 1; j <= n; ++j)
        w[j] = w[j - 1] * (Scalar(1) - (alpha + Scalar(1)) / Scalar(j));
    return {alpha, std::move(w)};
}

/// Coefficients of the centered-difference approximation of the symmetric
/// Riesz derivative of order beta in (1, 2]:
///
///   omega_k = (-1)^k Gamma(beta+1) cos(beta pi/2) /
///             (Gamma(beta/2 - k + 1) Gamma(beta/2 + k + 1))
///
/// The reciprocal gammas are evaluated pole-safely. For k >= 2 the reflection
/// of 1/Gamma(beta/2 - k + 1) is folded in analytically, which cancels the
/// (-1)^k and leaves only positive-argument lgamma calls; the naive product of
/// two reciprocal gammas would overflow for k beyond ~170. Gamma poles
/// (beta = 2, k >= 2) give exact zero coefficients.
template <typename Scalar>
CoeffVector<Scalar> riesz_centered_coeffs(Scalar beta, Index n) {
    if (!(beta > Scalar(1) && beta <= Scalar(2)))
        throw std::invalid_argument("riesz_centered_coeffs: beta must lie in (1, 2]");
    if (n < 0) throw std::invalid_argument("riesz_centered_coeffs: n must be non-negative");

    const Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar front = std::tgamma(beta + 1) * std::cos(beta * pi / 2);
    Vector<Scalar> w(n + 1);
    w[0] = front * reciprocal_gamma(beta / 2 + 1) * reciprocal_gamma(beta / 2 + 1);
    if (n >= 1)
        w[1] = -front * reciprocal_gamma(beta / 2) * reciprocal_gamma(beta / 2 + 2);
    const Scalar tail = -std::tgamma(beta + 1) * std::sin(beta * pi) / (2 * pi);
    for (Index k = 2; k <= n; ++k) {
        const Scalar x = beta / 2 - Scalar(k) + 1;
        w[k] = (x <= Scalar(0) && x == std::floor(x))
                   ? Scalar(0)
                   : tail * std::exp(std::lgamma(Scalar(k) - beta / 2) -
                                     std::lgamma(Scalar(k) + beta / 2 + 1));
    }
    return {beta, std::move(w)};
}

}  // namespace fracmat
