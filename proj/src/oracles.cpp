#include "fracmat/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracmat {

double riesz_closed_form(double x, double beta) {
    if (!(x > 0.0 && x < 1.0))
        throw std::invalid_argument("riesz_closed_form: x must lie strictly inside (0, 1)");
    if (!(beta > 1.0 && beta < 2.0))
        throw std::invalid_argument("riesz_closed_form: beta must lie strictly inside (1, 2)");
    const double y = 1.0 - x;
    return (std::pow(x, 1.0 - beta) + std::pow(y, 1.0 - beta)) / (2.0 * std::tgamma(2.0 - beta)) -
           (std::pow(x, 2.0 - beta) + std::pow(y, 2.0 - beta)) / std::tgamma(3.0 - beta);
}

double heat_series(double x, double t, int terms) {
    const double pi = std::numbers::pi;
    double s = 0.0;
    for (int l = 0; l < terms; ++l) {
        const double k = 2.0 * l + 1.0;
        s += 32.0 / (k * k * k * pi * pi * pi) * std::sin(k * pi * x) *
             std::exp(-k * k * pi * pi * t);
    }
    return s;
}

OracleEval heat_series_eval(double x, double t, int terms) {
    return {x, t, heat_series(x, t, terms), terms};
}

double steady_state_check(const StackedField& field) {
    const Grid& g = field.grid;
    double dev = 0.0;
    for (Index i = 1; i < g.m; ++i) {
        const double x = g.x(i);
        dev = std::max(dev, std::abs(field(i, g.n) - 4.0 * x * (1.0 - x)));
    }
    return dev;
}

}  // namespace fracmat
