#include "fracmat/coeffs.hpp"

#include <doctest.h>

#include <cmath>

using namespace fracmat;

namespace {

// Independent oracle: direct Gamma-based binomial, evaluated through the
// pole-safe reciprocal gamma instead of the production recurrence.
double binomial_direct(double alpha, Eigen::Index j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return sign * std::tgamma(alpha + 1.0) * reciprocal_gamma(static_cast<double>(j) + 1.0) *
           reciprocal_gamma(alpha - static_cast<double>(j) + 1.0);
}

}  // namespace

TEST_CASE("reciprocal gamma: reference values and poles") {
    CHECK(reciprocal_gamma(1.0) == doctest::Approx(1.0));
    CHECK(reciprocal_gamma(2.0) == doctest::Approx(1.0));
    CHECK(reciprocal_gamma(4.0) == doctest::Approx(1.0 / 6.0));
    CHECK(reciprocal_gamma(0.5) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)));
    CHECK(reciprocal_gamma(-0.5) == doctest::Approx(1.0 / (-2.0 * std::sqrt(std::numbers::pi))));
    CHECK(reciprocal_gamma(0.0) == 0.0);
    CHECK(reciprocal_gamma(-1.0) == 0.0);
    CHECK(reciprocal_gamma(-7.0) == 0.0);
}

TEST_CASE("gl coefficients: integer orders truncate exactly") {
    const auto w1 = gl_coeffs(1.0, 3);
    CHECK(w1.values[0] == 1.0);
    CHECK(w1.values[1] == -1.0);
    CHECK(w1.values[2] == 0.0);
    CHECK(w1.values[3] == 0.0);

    const auto w2 = gl_coeffs(2.0, 4);
    CHECK(w2.values[0] == 1.0);
    CHECK(w2.values[1] == -2.0);
    CHECK(w2.values[2] == 1.0);
    CHECK(w2.values[3] == 0.0);
    CHECK(w2.values[4] == 0.0);
}

TEST_CASE("gl coefficients: alpha = 0.5") {
    const auto w = gl_coeffs(0.5, 3);
    CHECK(w.order == 0.5);
    CHECK(w.values[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(w.values[1] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(w.values[2] == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(w.values[3] == doctest::Approx(-0.0625).epsilon(1e-15));
}

TEST_CASE("gl coefficients match the direct Gamma binomial") {
    for (double alpha : {0.1, 0.3, 0.5, 0.9, 1.0, 1.3, 1.7, 2.0}) {
        const auto w = gl_coeffs(alpha, 100);
        for (Eigen::Index j = 0; j <= 100; ++j)
            CHECK(std::abs(w[j] - binomial_direct(alpha, j)) <= 1e-12);
    }
}

TEST_CASE("gl coefficient partial sums telescope to a shifted binomial") {
    for (double alpha : {0.3, 0.7, 1.5}) {
        const auto w = gl_coeffs(alpha, 50);
        double sum = 0.0;
        for (Eigen::Index n = 0; n <= 50; ++n) {
            sum += w[n];
            const double expected = binomial_direct(alpha - 1.0, n);
            CHECK(std::abs(sum - expected) <= 1e-12 * (1.0 + std::abs(expected)));
        }
    }
}

TEST_CASE("centered Riesz coefficients: beta = 2 is the classic second difference") {
    const auto w = riesz_centered_coeffs(2.0, 6);
    CHECK(w.values[0] == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(w.values[1] == doctest::Approx(1.0).epsilon(1e-14));
    for (Eigen::Index k = 2; k <= 6; ++k) CHECK(w.values[k] == 0.0);  // Gamma poles: exact zeros
}

TEST_CASE("centered Riesz coefficients: beta = 1.5 leading value and ratio law") {
    const auto w = riesz_centered_coeffs(1.5, 40);
    CHECK(w.values[0] == doctest::Approx(-1.112835788898764).epsilon(1e-12));
    // Gamma functional equation gives omega_{k+1}/omega_k = (k - b/2)/(k + 1 + b/2)
    for (Eigen::Index k = 0; k < 40; ++k) {
        const double expected = w.values[k] * (static_cast<double>(k) - 0.75) /
                                (static_cast<double>(k) + 1.75);
        CHECK(w.values[k + 1] == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("centered Riesz coefficients match the direct reciprocal-gamma product") {
    for (double beta : {1.2, 1.5, 1.8, 2.0}) {
        const auto w = riesz_centered_coeffs(beta, 100);
        for (Eigen::Index k = 0; k <= 100; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            const double direct = sign * std::tgamma(beta + 1.0) *
                                  std::cos(beta * std::numbers::pi / 2.0) *
                                  reciprocal_gamma(beta / 2.0 - static_cast<double>(k) + 1.0) *
                                  reciprocal_gamma(beta / 2.0 + static_cast<double>(k) + 1.0);
            CHECK(std::abs(w[k] - direct) <= 1e-14);
        }
    }
}

TEST_CASE("centered Riesz coefficients survive large k without overflow") {
    const auto w = riesz_centered_coeffs(1.5, 400);
    for (Eigen::Index k = 0; k <= 400; ++k) CHECK(std::isfinite(w[k]));
    CHECK(w[400] > 0.0);  // tail coefficients are positive for beta < 2
}

TEST_CASE("coefficient argument validation") {
    CHECK_THROWS_AS(riesz_centered_coeffs(1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(riesz_centered_coeffs(2.5, 4), std::invalid_argument);
    CHECK_THROWS_AS(riesz_centered_coeffs(0.5, 4), std::invalid_argument);
    CHECK_THROWS_AS(gl_coeffs(0.5, -1), std::invalid_argument);
}
