#pragma once

#include "fracmat/grid.hpp"
#include "fracmat/operators.hpp"

#include <array>
#include <functional>
#include <optional>

namespace fracmat {

using SpaceTimeFn = std::function<double(double, double)>;
using ScalarFn = std::function<double(double)>;

/// Second Caputo time term evaluated at t - k*tau, weighted against the
/// undelayed term (the weights multiply the two time derivatives in order).
struct DelayTerm {
    double gamma = 1.0;
    Index k = 0;
    std::array<double, 2> weights{0.5, 0.5};
};

/// Fractional diffusion problem
///   D_t^alpha u - chi d^beta u / d|x|^beta = f(x, t)
/// with Caputo time derivative, symmetric Riesz space derivative, Dirichlet
/// boundary values and an initial profile. Null functions mean identically
/// zero data.
struct ProblemSpec {
    double alpha = 1.0;
    double beta = 2.0;
    double chi = 1.0;
    RieszVariant variant = RieszVariant::Centered;
    SpaceTimeFn rhs;          // f(x, t)
    ScalarFn initial;         // u(x, 0)
    ScalarFn boundary_left;   // u(a, t)
    ScalarFn boundary_right;  // u(b, t)
    std::optional<DelayTerm> delay;

    void validate() const;
};

/// A problem rewritten for an auxiliary unknown with zero initial and boundary
/// data. The auxiliary unknown is y(x, t) = u(x, 0) - u(x, t): the Caputo
/// derivative kills the t-constant u(x, 0), so y satisfies the same equation
/// with right-hand side -f - chi d^2 u0/dx^2 and zero data, and the original
/// field is recovered as u = u(x, 0) - y.
struct HomogenizedProblem {
    ProblemSpec problem;
    std::function<double(double, double)> reconstruct;  // (x, y) -> u; null = identity

    bool reconstruction_applies() const { return static_cast<bool>(reconstruct); }
};

/// Rewrite p as a zero-data problem on the grid's spatial interval.
/// Nonzero boundary data and nonzero initial data with beta != 2 are rejected:
/// the right-hand side they would induce involves fractional derivatives of
/// the lift that this library does not construct.
HomogenizedProblem homogenize(const ProblemSpec& p, const Grid& g);

}  // namespace fracmat
