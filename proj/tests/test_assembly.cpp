#include "fracmat/assembly.hpp"
#include "fracmat/examples.hpp"
#include "fracmat/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fracmat;

namespace {

ProblemSpec homogeneous_eight(double alpha, double beta) {
    ProblemSpec p;
    p.alpha = alpha;
    p.beta = beta;
    p.rhs = [](double, double) { return 8.0; };
    return p;
}

double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
    SparseOperator d = a - b;
    double m = 0.0;
    for (Index c = 0; c < d.outerSize(); ++c)
        for (SparseOperator::InnerIterator it(d, c); it; ++it)
            m = std::max(m, std::abs(it.value()));
    return m;
}

}  // namespace

TEST_CASE("single-unknown system: m = 2, n = 1") {
    const Grid g{0.0, 1.0, 1.0 / 24.0, 2, 1};
    const auto sys = assemble(homogeneous_eight(1.0, 2.0), g);

    CHECK(sys.reduced_matrix.rows() == 1);
    CHECK(sys.reduced_rhs.size() == 1);
    CHECK(sys.reduced_rhs[0] == 8.0);
    const double tau = g.tau(), h = g.h();
    CHECK(sys.reduced_matrix.coeff(0, 0) ==
          doctest::Approx(1.0 / tau + 2.0 / (h * h)).epsilon(1e-14));

    const auto rep = solve(sys.reduced_matrix, sys.reduced_rhs);
    CHECK(rep.solution[0] == doctest::Approx(8.0 / (1.0 / tau + 2.0 / (h * h))).epsilon(1e-14));
}

TEST_CASE("kept node bookkeeping: count, order, positions") {
    const Grid g{0.0, 1.0, 0.01, 4, 3};
    const auto sys = assemble(homogeneous_eight(0.6, 1.7), g);

    CHECK(static_cast<Index>(sys.kept_nodes.size()) == (g.m - 1) * g.n);
    CHECK(sys.reduced_matrix.rows() == (g.m - 1) * g.n);
    CHECK(sys.reduced_matrix.cols() == (g.m - 1) * g.n);
    for (size_t r = 0; r < sys.kept_nodes.size(); ++r) {
        const auto [i, j] = sys.kept_nodes[r];
        CHECK(i >= 1);
        CHECK(i <= g.m - 1);
        CHECK(j >= 1);
        CHECK(j <= g.n);
        CHECK(sys.kept_positions[r] == g.stack_index(i, j));
    }
    // stacked order: first kept node is (m-1, n)
    CHECK(sys.kept_nodes.front().first == g.m - 1);
    CHECK(sys.kept_nodes.front().second == g.n);
}

TEST_CASE("full matrix matches the Kronecker expression assembled by hand") {
    const Grid g{0.0, 1.0, 0.05, 3, 2};
    const ProblemSpec p = homogeneous_eight(0.5, 1.5);
    const auto sys = assemble(p, g);

    const auto bt = ban(p.alpha, g.n, g.tau());
    const auto r = ranort(p.beta, g.m, g.h());
    SparseOperator expected = kron(bt.matrix, sparse_identity<double>(g.m + 1));
    expected -= kron(sparse_identity<double>(g.n + 1), r.matrix);
    CHECK(max_abs_diff(sys.full_matrix, expected) == 0.0);
}

TEST_CASE("parameter specialization: example 1 system equals alpha=1, beta=2 directly") {
    const ExampleRun ex1 = example_preset(1);
    const auto direct = assemble(homogeneous_eight(1.0, 2.0), ex1.grid);
    const auto via_preset = assemble(homogenize(ex1.problem, ex1.grid).problem, ex1.grid);
    CHECK(max_abs_diff(direct.full_matrix, via_preset.full_matrix) == 0.0);
    CHECK(max_abs_diff(direct.reduced_matrix, via_preset.reduced_matrix) == 0.0);
    CHECK((direct.reduced_rhs - via_preset.reduced_rhs).cwiseAbs().maxCoeff() <= 1e-7);
}

TEST_CASE("zero-delay weighted system equals the plain system exactly") {
    const Grid g{0.0, 1.0, 0.02, 6, 8};
    ProblemSpec plain = homogeneous_eight(0.7, 1.9);
    ProblemSpec delayed = plain;
    delayed.delay = DelayTerm{0.7, 0, {0.5, 0.5}};
    CHECK(max_abs_diff(assemble(plain, g).reduced_matrix,
                       assemble(delayed, g).reduced_matrix) == 0.0);
}

TEST_CASE("time causality: no entry couples a layer to a later physical time") {
    for (double alpha : {0.5, 1.0}) {
        for (bool with_delay : {false, true}) {
            const Grid g{0.0, 1.0, 0.02, 5, 6};
            ProblemSpec p = homogeneous_eight(alpha, 1.6);
            if (with_delay) p.delay = DelayTerm{0.4, 2, {0.5, 0.5}};
            const auto sys = assemble(p, g);
            const Index s = g.m - 1;
            for (Index c = 0; c < sys.reduced_matrix.outerSize(); ++c)
                for (SparseOperator::InnerIterator it(sys.reduced_matrix, c); it; ++it)
                    CHECK(it.col() / s >= it.row() / s);  // stacked: later block = earlier time
        }
    }
}

TEST_CASE("layered form from the problem matches the form read off the matrix") {
    for (bool with_delay : {false, true}) {
        const Grid g{0.0, 1.0, 0.03, 7, 9};
        ProblemSpec p = homogeneous_eight(0.8, 1.4);
        if (with_delay) p.delay = DelayTerm{0.5, 3, {0.5, 0.5}};
        const auto direct = layered_from_problem(p, g);
        const auto sys = assemble(p, g);
        const auto extracted =
            LayeredSystem::from_reduced(sys.reduced_matrix, sys.reduced_rhs, g.n, g.m - 1);

        CHECK(direct.layers == extracted.layers);
        CHECK(direct.layer_size == extracted.layer_size);
        CHECK((direct.diag_block - extracted.diag_block).cwiseAbs().maxCoeff() <= 1e-13);
        CHECK((direct.time_coeffs - extracted.time_coeffs).cwiseAbs().maxCoeff() <= 1e-13);
        CHECK((direct.rhs - extracted.rhs).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("assemble rejects bad inputs") {
    const Grid g{0.0, 1.0, 0.02, 6, 8};

    ProblemSpec not_homog = homogeneous_eight(1.0, 2.0);
    not_homog.initial = [](double x) { return x; };
    CHECK_THROWS_AS(assemble(not_homog, g), std::invalid_argument);

    ProblemSpec bad_delay = homogeneous_eight(0.9, 1.9);
    bad_delay.delay = DelayTerm{0.8, 8, {0.5, 0.5}};  // k == n
    CHECK_THROWS_AS(assemble(bad_delay, g), std::invalid_argument);

    const Grid tiny{0.0, 1.0, 0.02, 1, 8};
    CHECK_THROWS_AS(assemble(homogeneous_eight(1.0, 2.0), tiny), std::invalid_argument);
}

TEST_CASE("solve_problem scatters the solution and reconstructs u") {
    const ExampleRun ex = example_preset(1);
    const Solution sol = solve_problem(ex.problem, ex.grid);

    // boundary and initial nodes carry the known data
    for (Index j = 0; j <= ex.grid.n; ++j) {
        CHECK(sol.y(0, j) == 0.0);
        CHECK(sol.y(ex.grid.m, j) == 0.0);
    }
    for (Index i = 0; i <= ex.grid.m; ++i) CHECK(sol.y(i, 0) == 0.0);

    REQUIRE(sol.u.has_value());
    for (Index i = 0; i <= ex.grid.m; ++i) {
        const double x = ex.grid.x(i);
        CHECK((*sol.u)(i, 0) == doctest::Approx(4.0 * x * (1.0 - x)));
    }
    for (Index j = 0; j <= ex.grid.n; ++j) {
        CHECK((*sol.u)(0, j) == doctest::Approx(0.0));
        CHECK((*sol.u)(ex.grid.m, j) == doctest::Approx(0.0));
    }
    CHECK(sol.residual_inf <= 1e-8 * (1.0 + 8.0));
    CHECK(sol.unknowns == (ex.grid.m - 1) * ex.grid.n);
}

namespace {

// Mittag-Leffler E_alpha(-z) for large z by its asymptotic expansion
double ml_negative_asymptotic(double alpha, double z, int terms = 6) {
    double s = 0.0;
    for (int k = 1; k <= terms; ++k) {
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        s += sign * std::pow(z, -k) / std::tgamma(1.0 - alpha * k);
    }
    return s;
}

}  // namespace

TEST_CASE("small alpha, long time: the field creeps toward 4x(1-x) at the t^-alpha rate") {
    const double alpha = 0.05;
    ProblemSpec p;
    p.alpha = alpha;
    p.beta = 2.0;
    p.initial = [](double x) { return 4.0 * x * (1.0 - x); };

    // deviation shrinks monotonically with the horizon, but slowly
    double prev = std::numeric_limits<double>::infinity();
    for (double horizon : {0.01, 0.1, 1.0}) {
        const Grid g{0.0, 1.0, horizon, 20, 400};
        const double dev = steady_state_check(solve_problem(p, g, SolverPath::Marching).y);
        CHECK(dev < prev);
        prev = dev;
    }

    // at T = 1 the remaining deviation is the slow relaxation tail
    // sum_k c_k E_alpha(-k^2 pi^2) of the sine modes of the profile
    const double pi = std::numbers::pi;
    double predicted = 0.0;
    for (int l = 0; l < 40; ++l) {
        const double k = 2.0 * l + 1.0;
        const double sign = (l % 2 == 0) ? 1.0 : -1.0;
        predicted += 32.0 / (k * k * k * pi * pi * pi) * sign *
                     ml_negative_asymptotic(alpha, k * k * pi * pi);
    }
    Grid g{0.0, 1.0, 1.0, 20, 2400};
    g.T = static_cast<double>(g.n) * g.h() * g.h() / 6.0;
    const double dev = steady_state_check(solve_problem(p, g, SolverPath::Marching).y);
    CHECK(std::abs(dev - predicted) <= 2e-3);
}

TEST_CASE("solve_problem: zero data and zero forcing stay identically zero") {
    ProblemSpec p;
    p.alpha = 1.0;
    p.beta = 2.0;
    const Grid g{0.0, 1.0, 0.01, 6, 5};
    const Solution sol = solve_problem(p, g);
    CHECK(sol.y.values.cwiseAbs().maxCoeff() == 0.0);
    CHECK_FALSE(sol.u.has_value());
}
