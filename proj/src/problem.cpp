#include "fracmat/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace fracmat {

namespace {

constexpr double kZeroTol = 1e-14;

bool samples_to_zero(const ScalarFn& f, double lo, double hi) {
    if (!f) return true;
    constexpr int kSamples = 17;
    for (int s = 0; s <= kSamples; ++s) {
        const double v = lo + (hi - lo) * s / kSamples;
        if (std::abs(f(v)) > kZeroTol) return false;
    }
    return true;
}

}  // namespace

void ProblemSpec::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("ProblemSpec: alpha must lie in (0, 1]");
    if (!(beta > 1.0 && beta <= 2.0))
        throw std::invalid_argument("ProblemSpec: beta must lie in (1, 2]");
    if (!(chi > 0.0)) throw std::invalid_argument("ProblemSpec: chi must be positive");
    if (delay) {
        if (delay->k < 0) throw std::invalid_argument("ProblemSpec: delay steps must be >= 0");
        if (!(delay->gamma > 0.0 && delay->gamma <= 1.0))
            throw std::invalid_argument("ProblemSpec: gamma must lie in (0, 1]");
    }
}

HomogenizedProblem homogenize(const ProblemSpec& p, const Grid& g) {
    p.validate();
    g.validate();

    if (!samples_to_zero(p.boundary_left, 0.0, g.T) ||
        !samples_to_zero(p.boundary_right, 0.0, g.T))
        throw std::invalid_argument(
            "homogenize: nonzero boundary data is not supported; pose the problem for an "
            "auxiliary unknown with zero boundary values");

    if (samples_to_zero(p.initial, g.a, g.b)) {
        ProblemSpec q = p;
        q.initial = nullptr;
        q.boundary_left = nullptr;
        q.boundary_right = nullptr;
        return {std::move(q), nullptr};
    }

    if (std::abs(p.initial(g.a)) > kZeroTol || std::abs(p.initial(g.b)) > kZeroTol)
        throw std::invalid_argument(
            "homogenize: initial data incompatible with the zero boundary values at the corners");
    if (p.beta != 2.0)
        throw std::invalid_argument(
            "homogenize: nonzero initial data requires beta = 2; the Riesz derivative of the "
            "initial profile is not constructed for fractional beta");

    // y = u(x,0) - u(x,t) satisfies the equation with zero data and
    // f_y = -f - chi u0''; u0'' by a central second difference (exact for the
    // quadratic profiles this transformation is used with).
    const ScalarFn u0 = p.initial;
    const SpaceTimeFn f = p.rhs;
    const double chi = p.chi;
    const double d = 1e-3 * (g.b - g.a);
    const double lo = g.a + d, hi = g.b - d;

    ProblemSpec q = p;
    q.initial = nullptr;
    q.boundary_left = nullptr;
    q.boundary_right = nullptr;
    q.rhs = [u0, f, chi, d, lo, hi](double x, double t) {
        const double xc = std::min(std::max(x, lo), hi);
        const double u0xx = (u0(xc + d) - 2.0 * u0(xc) + u0(xc - d)) / (d * d);
        return -(f ? f(x, t) : 0.0) - chi * u0xx;
    };

    return {std::move(q), [u0](double x, double y) { return u0(x) - y; }};
}

}  // namespace fracmat
