// Command-line front end: run the built-in example configurations or a custom
// problem, emit the solved fields as CSV/JSON, and run the verification
// suites. Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include "fracmat/examples.hpp"
#include "fracmat/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace fracmat;

struct CommonOpts {
    std::optional<double> alpha, beta, gamma, h, tau;
    std::optional<long long> k, m, n;
    std::string tau_rule;  // "h2over6"
    std::string riesz;     // "centered" | "halfsum"
    std::string solver = "global";
    std::string output;  // empty = stdout
    std::string format = "csv";
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    cmd->add_option("--alpha", o.alpha, "time derivative order in (0, 1]");
    cmd->add_option("--beta", o.beta, "space derivative order in (1, 2]");
    cmd->add_option("--gamma", o.gamma, "delayed time derivative order");
    cmd->add_option("--k", o.k, "delay in time steps");
    auto* h = cmd->add_option("--h", o.h, "spatial step (b - a must be a multiple)");
    auto* m = cmd->add_option("--m", o.m, "number of spatial intervals");
    h->excludes(m);
    m->excludes(h);
    auto* tau = cmd->add_option("--tau", o.tau, "time step");
    auto* rule = cmd->add_option("--tau-rule", o.tau_rule, "named time step rule")
                     ->check(CLI::IsMember({"h2over6"}));
    tau->excludes(rule);
    rule->excludes(tau);
    cmd->add_option("--n", o.n, "number of time steps");
    cmd->add_option("--riesz", o.riesz, "Riesz discretization variant")
        ->check(CLI::IsMember({"centered", "halfsum"}));
    cmd->add_option("--solver", o.solver, "solution path")
        ->check(CLI::IsMember({"global", "marching"}));
    cmd->add_option("--output", o.output, "output file (default: stdout)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

void apply_overrides(const CommonOpts& o, ProblemSpec& p, Grid& g) {
    if (o.alpha) p.alpha = *o.alpha;
    if (o.beta) p.beta = *o.beta;
    if (o.gamma || o.k) {
        DelayTerm d = p.delay.value_or(DelayTerm{p.alpha, 0, {0.5, 0.5}});
        if (o.gamma) d.gamma = *o.gamma;
        if (o.k) d.k = static_cast<Index>(*o.k);
        p.delay = d;
    }
    if (!o.riesz.empty())
        p.variant = o.riesz == "centered" ? RieszVariant::Centered : RieszVariant::HalfSum;

    const double preset_tau = g.tau();
    const bool spatial_changed = o.m.has_value() || o.h.has_value();
    if (o.m) g.m = static_cast<Index>(*o.m);
    if (o.h) {
        const double steps = (g.b - g.a) / *o.h;
        g.m = static_cast<Index>(std::llround(steps));
        if (g.m < 1 || std::abs(steps - static_cast<double>(g.m)) > 1e-9)
            throw std::invalid_argument("--h must divide the spatial interval evenly");
    }
    if (o.n) g.n = static_cast<Index>(*o.n);

    double tau = preset_tau;
    if (!o.tau_rule.empty() || spatial_changed) tau = g.h() * g.h() / 6.0;
    if (o.tau) tau = *o.tau;
    g.T = tau * static_cast<double>(g.n);
    g.validate();
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const Solution& sol) {
    const Grid& g = sol.grid;
    os << (sol.u ? "x,t,y,u\n" : "x,t,y\n");
    for (Index i = 0; i <= g.m; ++i)
        for (Index j = 0; j <= g.n; ++j) {
            os << format_double(g.x(i)) << ',' << format_double(g.t(j)) << ','
               << format_double(sol.y(i, j));
            if (sol.u) os << ',' << format_double((*sol.u)(i, j));
            os << '\n';
        }
}

nlohmann::json field_json(const StackedField& f) {
    const Grid& g = f.grid;
    nlohmann::json rows = nlohmann::json::array();
    for (Index i = 0; i <= g.m; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Index j = 0; j <= g.n; ++j) row.push_back(f(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_json(std::ostream& os, const Solution& sol, const nlohmann::json& config) {
    const Grid& g = sol.grid;
    nlohmann::json out{
        {"config", config},
        {"grid",
         {{"a", g.a},
          {"b", g.b},
          {"T", g.T},
          {"m", g.m},
          {"n", g.n},
          {"h", g.h()},
          {"tau", g.tau()}}},
        {"residual_inf", sol.residual_inf},
        {"elapsed_ms", sol.elapsed_seconds * 1e3},
        {"field_y", field_json(sol.y)},
        {"field_u", sol.u ? field_json(*sol.u) : nlohmann::json(nullptr)},
    };
    os << out.dump(2) << '\n';
}

int emit(const Solution& sol, const CommonOpts& o, const nlohmann::json& config) {
    std::ostringstream body;
    if (o.format == "csv")
        write_csv(body, sol);
    else
        write_json(body, sol, config);

    if (o.output.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write output file '" << o.output << "'\n";
            return 1;
        }
        f << body.str();
    }
    std::cerr << "grid: m=" << sol.grid.m << " n=" << sol.grid.n << " h=" << sol.grid.h()
              << " tau=" << sol.grid.tau() << " | unknowns=" << sol.unknowns
              << " | residual_inf=" << sol.residual_inf << " | " << sol.elapsed_seconds * 1e3
              << " ms\n";
    return 0;
}

nlohmann::json config_json(const nlohmann::json& kind, const ProblemSpec& p, const Grid& g,
                           const CommonOpts& o) {
    nlohmann::json c{
        {"example", kind},
        {"alpha", p.alpha},
        {"beta", p.beta},
        {"chi", p.chi},
        {"riesz", p.variant == RieszVariant::Centered ? "centered" : "halfsum"},
        {"solver", o.solver},
        {"m", g.m},
        {"n", g.n},
        {"h", g.h()},
        {"tau", g.tau()},
    };
    if (p.delay) {
        c["gamma"] = p.delay->gamma;
        c["k"] = p.delay->k;
        c["weights"] = p.delay->weights;
    }
    return c;
}

int run_configuration(const nlohmann::json& kind, const ProblemSpec& p, const Grid& g,
                      const CommonOpts& o) {
    const SolverPath path = o.solver == "marching" ? SolverPath::Marching : SolverPath::Global;
    const Solution sol = solve_problem(p, g, path);
    return emit(sol, o, config_json(kind, p, g, o));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangular-strip-matrix discretization of fractional diffusion problems"};
    app.require_subcommand(1);

    CommonOpts ex_opts;
    int example_id = 1;
    auto* ex_cmd = app.add_subcommand("example", "run one of the built-in configurations 1..5");
    ex_cmd->add_option("id", example_id, "example number")->required()->check(CLI::Range(1, 5));
    add_common_flags(ex_cmd, ex_opts);

    CommonOpts sv_opts;
    std::string u0_choice = "zero";
    std::optional<double> rhs_const;
    double chi = 1.0;
    auto* sv_cmd = app.add_subcommand("solve", "solve a custom configuration");
    add_common_flags(sv_cmd, sv_opts);
    sv_cmd->add_option("--u0", u0_choice, "initial profile")
        ->check(CLI::IsMember({"zero", "4x1mx", "x1mx"}));
    sv_cmd->add_option("--rhs-const", rhs_const,
                       "constant right-hand side (default: 8 for --u0 zero, else 0)");
    sv_cmd->add_option("--chi", chi, "diffusion coefficient");

    std::string suite = "all";
    auto* vf_cmd = app.add_subcommand("verify", "run a verification suite");
    vf_cmd->add_option("suite", suite, "coeffs | operators | oracle | examples | all")
        ->check(CLI::IsMember({"coeffs", "operators", "oracle", "examples", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints message / help text
        return code == 0 ? 0 : 1;
    }

    try {
        if (ex_cmd->parsed()) {
            ExampleRun run = example_preset(example_id);
            apply_overrides(ex_opts, run.problem, run.grid);
            return run_configuration(example_id, run.problem, run.grid, ex_opts);
        }
        if (sv_cmd->parsed()) {
            ProblemSpec p;
            p.chi = chi;
            if (u0_choice == "4x1mx")
                p.initial = [](double x) { return 4.0 * x * (1.0 - x); };
            else if (u0_choice == "x1mx")
                p.initial = [](double x) { return x * (1.0 - x); };
            const double f = rhs_const.value_or(u0_choice == "zero" ? 8.0 : 0.0);
            if (f != 0.0) p.rhs = [f](double, double) { return f; };

            Grid g;  // defaults overridden below; --m/--h and --n expected
            g.m = 20;
            g.n = 48;
            g.T = static_cast<double>(g.n) * g.h() * g.h() / 6.0;
            apply_overrides(sv_opts, p, g);
            return run_configuration("custom", p, g, sv_opts);
        }
        // verify
        const auto results = fracmat::verify::run_suite(suite);
        const int failures = fracmat::verify::print_report(results, std::cout);
        std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << " ("
                  << results.size() - failures << "/" << results.size() << ")\n";
        return failures == 0 ? 0 : 1;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
