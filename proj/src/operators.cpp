#include "fracmat/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace fracmat {

namespace {

void check_time_args(const char* who, Index n, double tau) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be at least 1");
    if (!(tau > 0)) throw std::invalid_argument(std::string(who) + ": tau must be positive");
}

void check_space_args(const char* who, double beta, Index m, double h) {
    if (!(beta > 1.0 && beta <= 2.0))
        throw std::invalid_argument(std::string(who) + ": beta must lie in (1, 2]");
    if (m < 2) throw std::invalid_argument(std::string(who) + ": m must be at least 2");
    if (!(h > 0)) throw std::invalid_argument(std::string(who) + ": h must be positive");
}

// omega_j * scale on diagonal offset j + k of an (n+1) x (n+1) matrix.
SparseOperator banded_from_coeffs(const CoeffVector<double>& w, Index n, Index k, double scale) {
    std::vector<Triplet<double>> t;
    for (Index j = 0; j + k <= n; ++j) {
        if (w[j] == 0.0) continue;
        const Index d = j + k;
        for (Index r = 0; r + d <= n; ++r) t.emplace_back(r, r + d, scale * w[j]);
    }
    return make_sparse<double>(n + 1, n + 1, t);
}

}  // namespace

TimeOperator ban(double alpha, Index n, double tau) {
    check_time_args("ban", n, tau);
    const auto w = gl_coeffs(alpha, n);
    return {alpha, n, tau, 0, banded_from_coeffs(w, n, 0, std::pow(tau, -alpha))};
}

TimeOperator fan(double alpha, Index n, double tau) {
    check_time_args("fan", n, tau);
    SparseOperator m = ban(alpha, n, tau).matrix.transpose();
    m.makeCompressed();
    return {alpha, n, tau, 0, std::move(m)};
}

TimeOperator delayed_ban(double gamma, Index n, Index k, double tau) {
    check_time_args("delayed_ban", n, tau);
    if (k < 0 || k > n)
        throw std::invalid_argument("delayed_ban: delay steps k must lie in [0, n]");
    const auto w = gl_coeffs(gamma, n);
    return {gamma, n, tau, k, banded_from_coeffs(w, n, k, std::pow(tau, -gamma))};
}

SpaceOperator ransym(double beta, Index m, double h) {
    check_space_args("ransym", beta, m, h);
    const auto w = gl_coeffs(beta, m + 1);
    const double scale = std::pow(h, -beta) / 2.0;
    SparseOperator r = shift_sw(w, m, scale) + shift_ne(w, m, scale, StripKind::Lower);
    r.prune([](Index, Index, double v) { return v != 0.0; });
    r.makeCompressed();
    return {beta, m, h, RieszVariant::HalfSum, std::move(r)};
}

SpaceOperator ranort(double beta, Index m, double h) {
    check_space_args("ranort", beta, m, h);
    const auto w = riesz_centered_coeffs(beta, m);
    const double scale = std::pow(h, -beta);
    std::vector<Triplet<double>> t;
    for (Index d = 0; d <= m; ++d) {
        if (w[d] == 0.0) continue;
        for (Index r = 0; r + d <= m; ++r) {
            t.emplace_back(r, r + d, scale * w[d]);
            if (d > 0) t.emplace_back(r + d, r, scale * w[d]);
        }
    }
    return {beta, m, h, RieszVariant::Centered, make_sparse<double>(m + 1, m + 1, t)};
}

SpaceOperator riesz_operator(RieszVariant variant, double beta, Index m, double h) {
    return variant == RieszVariant::Centered ? ranort(beta, m, h) : ransym(beta, m, h);
}

}  // namespace fracmat
