#include "fracmat/assembly.hpp"

#include <cmath>
#include <stdexcept>

namespace fracmat {

namespace {

void check_assembly_args(const ProblemSpec& p, const Grid& g) {
    p.validate();
    g.validate();
    if (p.initial || p.boundary_left || p.boundary_right)
        throw std::invalid_argument("assemble: problem must have zero initial/boundary data "
                                    "(run homogenize first)");
    if (g.m < 2 || g.n < 1)
        throw std::invalid_argument("assemble: grid too small (need m >= 2, n >= 1)");
    if (p.delay && p.delay->k >= g.n)
        throw std::invalid_argument("assemble: delay step count k must be smaller than n");
}

double rhs_at(const ProblemSpec& p, double x, double t) { return p.rhs ? p.rhs(x, t) : 0.0; }

}  // namespace

SparseOperator time_matrix(const ProblemSpec& p, const Grid& g) {
    const TimeOperator b = ban(p.alpha, g.n, g.tau());
    if (!p.delay) return b.matrix;
    const TimeOperator d = delayed_ban(p.delay->gamma, g.n, p.delay->k, g.tau());
    SparseOperator t = p.delay->weights[0] * b.matrix + p.delay->weights[1] * d.matrix;
    t.prune([](Index, Index, double v) { return v != 0.0; });
    t.makeCompressed();
    return t;
}

AssembledSystem assemble(const ProblemSpec& p, const Grid& g) {
    check_assembly_args(p, g);
    const Index m = g.m, n = g.n;

    const SparseOperator bt = time_matrix(p, g);
    const SpaceOperator r = riesz_operator(p.variant, p.beta, m, g.h());
    SparseOperator full = kron(bt, sparse_identity<double>(m + 1));
    full -= p.chi * kron(sparse_identity<double>(n + 1), r.matrix);
    full.prune([](Index, Index, double v) { return v != 0.0; });
    full.makeCompressed();

    AssembledSystem sys;
    sys.grid = g;

    // kept nodes in stacked order: layers n..1, spatial index m-1..1 within each
    std::vector<Index> map(g.num_nodes(), -1);
    for (Index J = 0; J < n; ++J) {
        const Index j = n - J;
        for (Index q = 1; q < m; ++q) {
            const Index i = m - q;
            const Index pos = J * (m + 1) + q;
            map[pos] = static_cast<Index>(sys.kept_nodes.size());
            sys.kept_nodes.emplace_back(i, j);
            sys.kept_positions.push_back(pos);
        }
    }

    const Index unknowns = static_cast<Index>(sys.kept_nodes.size());
    std::vector<Triplet<double>> t;
    t.reserve(full.nonZeros());
    for (Index c = 0; c < full.outerSize(); ++c)
        for (SparseOperator::InnerIterator it(full, c); it; ++it)
            if (map[it.row()] >= 0 && map[it.col()] >= 0)
                t.emplace_back(map[it.row()], map[it.col()], it.value());
    sys.reduced_matrix = make_sparse<double>(unknowns, unknowns, t);

    sys.reduced_rhs.resize(unknowns);
    for (Index r2 = 0; r2 < unknowns; ++r2) {
        const auto [i, j] = sys.kept_nodes[r2];
        sys.reduced_rhs[r2] = rhs_at(p, g.x(i), g.t(j));
    }
    sys.full_matrix = std::move(full);
    return sys;
}

LayeredSystem layered_from_problem(const ProblemSpec& p, const Grid& g) {
    check_assembly_args(p, g);
    const Index m = g.m, n = g.n;
    const double tau = g.tau();

    LayeredSystem sys;
    sys.layers = n;
    sys.layer_size = m - 1;

    // scalar coupling per block offset: all time terms land on multiples of I
    sys.time_coeffs = Eigen::VectorXd::Zero(n);
    {
        const double w0 = p.delay ? p.delay->weights[0] : 1.0;
        const auto wa = gl_coeffs(p.alpha, n);
        const double sa = std::pow(tau, -p.alpha);
        for (Index d = 0; d < n; ++d) sys.time_coeffs[d] += w0 * sa * wa[d];
        if (p.delay) {
            const auto wg = gl_coeffs(p.delay->gamma, n);
            const double sg = std::pow(tau, -p.delay->gamma);
            for (Index d = p.delay->k; d < n; ++d)
                sys.time_coeffs[d] += p.delay->weights[1] * sg * wg[d - p.delay->k];
        }
    }

    const SpaceOperator r = riesz_operator(p.variant, p.beta, m, g.h());
    Eigen::MatrixXd rdense(r.matrix);
    sys.diag_block = sys.time_coeffs[0] * Eigen::MatrixXd::Identity(m - 1, m - 1) -
                     p.chi * rdense.block(1, 1, m - 1, m - 1);
    sys.time_coeffs[0] = 0.0;

    sys.rhs.resize(n * (m - 1));
    for (Index J = 0; J < n; ++J) {
        const Index j = n - J;
        for (Index q = 1; q < m; ++q)
            sys.rhs[J * (m - 1) + (q - 1)] = rhs_at(p, g.x(m - q), g.t(j));
    }
    return sys;
}

SolveReport solve_time_marching(const AssembledSystem& sys) {
    return solve_layered(LayeredSystem::from_reduced(sys.reduced_matrix, sys.reduced_rhs,
                                                     sys.grid.n, sys.grid.m - 1));
}

Solution solve_problem(const ProblemSpec& p, const Grid& g, SolverPath path) {
    const auto start = std::chrono::steady_clock::now();
    const HomogenizedProblem hp = homogenize(p, g);

    SolveReport rep;
    std::vector<std::pair<Index, Index>> kept;
    if (path == SolverPath::Global) {
        AssembledSystem sys = assemble(hp.problem, g);
        rep = solve(sys.reduced_matrix, sys.reduced_rhs);
        kept = std::move(sys.kept_nodes);
    } else {
        rep = solve_layered(layered_from_problem(hp.problem, g));
        for (Index J = 0; J < g.n; ++J)
            for (Index q = 1; q < g.m; ++q) kept.emplace_back(g.m - q, g.n - J);
    }

    Solution sol;
    sol.grid = g;
    sol.path = path;
    sol.unknowns = static_cast<Index>(kept.size());
    sol.residual_inf = rep.residual_inf_norm;
    sol.y = StackedField{g, Eigen::VectorXd::Zero(g.num_nodes())};
    for (Index r = 0; r < sol.unknowns; ++r) sol.y(kept[r].first, kept[r].second) = rep.solution[r];

    if (hp.reconstruction_applies()) {
        StackedField u{g, Eigen::VectorXd(g.num_nodes())};
        for (Index j = 0; j <= g.n; ++j)
            for (Index i = 0; i <= g.m; ++i) u(i, j) = hp.reconstruct(g.x(i), sol.y(i, j));
        sol.u = std::move(u);
    }
    sol.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return sol;
}

}  // namespace fracmat
