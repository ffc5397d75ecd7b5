// Command-line driver: assembles and solves the coupled lattice models,
// evaluates the analytic square-model series, cross-checks the two, sweeps
// interface-layer widths, verifies the inequality suite, and exports CSV/PGM.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qc/analytic_square.hpp"
#include "qc/bounds.hpp"
#include "qc/csv_io.hpp"
#include "qc/layer.hpp"
#include "qc/model_square.hpp"
#include "qc/model_triangular.hpp"
#include "qc/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSolver = 3;
constexpr int kExitVerification = 4;

struct Options {
    std::string model = "square";
    std::string bc = "dirichlet";
    int M = 10;
    int N = -1;  // -1: same as M
    double c0 = 0.04;
    double tol = 1e-12;
    std::string out = ".";
    std::string chi1;
    std::string chi2;
    std::string m_list = "10,20,40,80,160";
    std::string n_range = "2..256";
};

qc::Model parse_model(const std::string& s) {
    if (s == "square") return qc::Model::Square;
    if (s == "triangular") return qc::Model::Triangular;
    throw CLI::ValidationError("--model", "unknown model '" + s + "'");
}

qc::BC parse_bc(const std::string& s) {
    if (s == "dirichlet") return qc::BC::Dirichlet;
    if (s == "periodic") return qc::BC::PeriodicX2;
    if (s == "padded") return qc::BC::DirichletPadded;
    throw CLI::ValidationError("--bc", "unknown boundary condition '" + s + "'");
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("--M", "empty list");
    return out;
}

// "a..b" doubles from a to b; a plain comma list is also accepted.
std::vector<int> parse_doubling_range(const std::string& s) {
    size_t dots = s.find("..");
    if (dots == std::string::npos) return parse_int_list(s);
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    if (lo < 1 || hi < lo) throw CLI::ValidationError("--N", "bad range '" + s + "'");
    std::vector<int> out;
    for (int v = lo; v <= hi; v *= 2) out.push_back(v);
    return out;
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    std::filesystem::path p = std::filesystem::path(dir) / name;
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + p.string() + " for writing");
    return os;
}

qc::CsvMeta grid_meta(const qc::GridSpec& g, const Options& opt) {
    qc::CsvMeta meta;
    meta.emplace_back("model", opt.model);
    meta.emplace_back("bc", opt.bc);
    meta.emplace_back("M", std::to_string(g.M));
    meta.emplace_back("N", std::to_string(g.N));
    meta.emplace_back("eps", qc::format_double(g.eps));
    return meta;
}

int cmd_solve(const Options& opt) {
    qc::Model model = parse_model(opt.model);
    qc::BC bc = parse_bc(opt.bc);
    // padding default: transverse range three times the normal one
    int N = opt.N >= 0 ? opt.N : (bc == qc::BC::DirichletPadded ? 3 * opt.M : opt.M);
    qc::GridSpec grid = qc::build_grid(opt.M, N, model, bc);
    qc::StencilSystem sys = (model == qc::Model::Square)
                                ? qc::assemble_square(grid)
                                : qc::assemble_triangular(grid);
    auto [x, rep] = qc::solve_auto(sys, opt.tol);
    if (!rep.converged) {
        std::fprintf(stderr, "solver stalled: %d iterations, residual %.3e (rhs %.3e)\n",
                     rep.iterations, rep.residual_norm, rep.rhs_norm);
        return kExitSolver;
    }
    qc::ScalarField y = qc::field_from_unknowns(grid, x);
    qc::ScalarField d1 = qc::forward_difference(y, 1, 0);
    qc::ScalarField d2 = qc::forward_difference(y, 0, 1);

    qc::CsvMeta meta = grid_meta(grid, opt);
    meta.emplace_back("tol", qc::format_double(opt.tol));
    meta.emplace_back("iterations", std::to_string(rep.iterations));
    {
        auto os = open_out(opt.out, "solution.csv");
        qc::write_solution_csv(os, y, meta);
    }
    {
        auto os = open_out(opt.out, "gradient.csv");
        qc::write_gradient_csv(os, d1, d2, meta);
    }
    if (!opt.chi1.empty()) {
        std::ofstream os(opt.chi1, std::ios::binary);
        qc::write_pgm(os, qc::characteristic_set(d1, opt.c0, grid.eps));
    }
    if (!opt.chi2.empty()) {
        std::ofstream os(opt.chi2, std::ios::binary);
        qc::write_pgm(os, qc::characteristic_set(d2, opt.c0, grid.eps));
    }
    std::printf("solved %d unknowns in %d iterations, residual %.3e\n",
                sys.n, rep.iterations, rep.residual_norm);
    return kExitOk;
}

int cmd_analytic(const Options& opt) {
    int N = opt.N < 0 ? opt.M : opt.N;
    qc::GridSpec grid = qc::build_grid(opt.M, N, qc::Model::Square, qc::BC::Dirichlet);
    qc::SeriesSolution sol = qc::eval_solution(grid);
    qc::CsvMeta meta = grid_meta(grid, opt);
    meta.emplace_back("modes", std::to_string(sol.modes_used));
    {
        auto os = open_out(opt.out, "solution.csv");
        qc::write_solution_csv(os, sol.y, meta);
    }
    {
        auto os = open_out(opt.out, "gradient.csv");
        qc::write_gradient_csv(os, qc::forward_difference(sol.y, 1, 0),
                               qc::forward_difference(sol.y, 0, 1), meta);
    }
    std::printf("evaluated %d modes on the %dx%d grid\n", sol.modes_used,
                2 * grid.M + 1, 2 * grid.N + 1);
    return kExitOk;
}

int cmd_compare(const Options& opt) {
    if (parse_model(opt.model) != qc::Model::Square || parse_bc(opt.bc) != qc::BC::Dirichlet) {
        std::fprintf(stderr, "compare: the analytic path covers the square model "
                             "with Dirichlet conditions only\n");
        return kExitValidation;
    }
    if (opt.M % 2 != 0) {
        std::fprintf(stderr, "compare: M must be even\n");
        return kExitValidation;
    }
    int N = opt.N < 0 ? opt.M : opt.N;
    qc::GridSpec grid = qc::build_grid(opt.M, N, qc::Model::Square, qc::BC::Dirichlet);
    qc::StencilSystem sys = qc::assemble_square(grid);
    auto [x, rep] = qc::solve_cg(sys, opt.tol);
    if (!rep.converged) {
        std::fprintf(stderr, "solver stalled: residual %.3e\n", rep.residual_norm);
        return kExitSolver;
    }
    qc::ScalarField numeric = qc::field_from_unknowns(grid, x);
    qc::SeriesSolution analytic = qc::eval_solution(grid);

    double sup_diff = 0.0, sup_val = 0.0;
    for (size_t i = 0; i < numeric.v.size(); ++i) {
        sup_diff = std::max(sup_diff, std::abs(numeric.v[i] - analytic.y.v[i]));
        sup_val = std::max(sup_val, std::abs(analytic.y.v[i]));
    }
    double rel = sup_val > 0 ? sup_diff / sup_val : 0.0;
    std::printf("sup|numeric - analytic| = %.3e   sup|analytic| = %.3e   relative = %.3e\n",
                sup_diff, sup_val, rel);
    return rel <= 1e-6 ? kExitOk : kExitVerification;
}

int cmd_sweep(const Options& opt) {
    qc::Model model = parse_model(opt.model);
    qc::BC bc = parse_bc(opt.bc);
    std::vector<int> Ms = parse_int_list(opt.m_list);
    qc::RateTable table = qc::run_sweep(model, bc, Ms, opt.c0, opt.tol);

    qc::CsvMeta meta;
    meta.emplace_back("model", opt.model);
    meta.emplace_back("bc", opt.bc);
    meta.emplace_back("c0", qc::format_double(opt.c0));
    meta.emplace_back("tol", qc::format_double(opt.tol));
    {
        auto os = open_out(opt.out, "rate.csv");
        qc::write_rate_csv(os, table, meta);
    }
    for (size_t i = 0; i < table.rows.size(); ++i)
        std::printf("eps=%-12.6g width=%-12.6g s2_width=%-12.6g\n", table.rows[i].eps,
                    table.rows[i].width, table.s2_widths[i]);
    std::printf("fitted rate %.4f\n", table.fitted_rate);
    return kExitOk;
}

int cmd_verify_bounds(const Options& opt) {
    std::vector<int> Ns = parse_doubling_range(opt.n_range);
    std::vector<qc::BoundReport> all;
    for (int N : Ns) {
        for (int k = 1; k <= 2 * N - 1; ++k) {
            auto elem = qc::check_elementary(k, N);
            all.insert(all.end(), elem.begin(), elem.end());
            for (int M : {N, 2 * N}) {
                auto rho = qc::check_rho(k, M, N);
                all.insert(all.end(), rho.begin(), rho.end());
                qc::GridSpec grid = qc::build_grid(M, N, qc::Model::Square, qc::BC::Dirichlet);
                qc::SpectralMode mode = qc::mode_params(k, grid);
                qc::DetExpansion ex = qc::det_expansion(mode, M);
                all.insert(all.end(), ex.reports.begin(), ex.reports.end());
                qc::LeadingTerms lt = qc::leading_terms(mode, M);
                all.insert(all.end(), lt.reports.begin(), lt.reports.end());
            }
        }
    }
    size_t bad = 0;
    for (const auto& r : all)
        if (!r.satisfied) ++bad;
    qc::CsvMeta meta;
    meta.emplace_back("N_values", opt.n_range);
    {
        auto os = open_out(opt.out, "bounds.csv");
        qc::write_bounds_csv(os, all, meta);
    }
    std::printf("%zu checks, %zu unsatisfied\n", all.size(), bad);
    if (bad) {
        for (const auto& r : all)
            if (!r.satisfied)
                std::printf("  %s k=%d M=%d N=%d lhs=%.6g rhs=%.6g\n", r.name.c_str(),
                            r.k, r.M, r.N, r.lhs, r.rhs);
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_ghost_force(const Options& opt) {
    int N = opt.N < 0 ? opt.M : opt.N;
    qc::GridSpec grid = qc::build_grid(opt.M, N, qc::Model::Triangular, qc::BC::Dirichlet);
    auto [F1, F2] = qc::ghost_force_at_identity(grid);
    qc::CsvMeta meta = grid_meta(grid, opt);
    {
        auto os = open_out(opt.out, "ghost.csv");
        qc::write_ghost_csv(os, F1, F2, meta);
    }
    for (int m : {-1, 0, 1})
        std::printf("layer m=%+d  F1=%+.17g  F2=%+.17g\n", m, F1(m, 0), F2(m, 0));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coupled lattice models: solves, analytic series, width sweeps, bound checks"};
    app.require_subcommand(1);
    Options opt;

    auto add_grid_flags = [&](CLI::App* sub, bool with_model) {
        if (with_model) {
            sub->add_option("--model", opt.model, "square or triangular");
            sub->add_option("--bc", opt.bc, "dirichlet, periodic, or padded");
        }
        sub->add_option("--M", opt.M, "half-width of the interface-normal index range");
        sub->add_option("--N", opt.N, "half-width of the transverse index range (default M)");
        sub->add_option("--tol", opt.tol, "solver relative residual tolerance");
        sub->add_option("--out", opt.out, "output directory");
    };

    CLI::App* solve = app.add_subcommand("solve", "assemble and solve one grid");
    add_grid_flags(solve, true);
    solve->add_option("--c0", opt.c0, "threshold coefficient for the marked-set images");
    solve->add_option("--chi-out", opt.chi1, "PGM path for the s1 marked set");
    solve->add_option("--chi2-out", opt.chi2, "PGM path for the s2 marked set");

    CLI::App* analytic = app.add_subcommand("analytic", "evaluate the square-model series");
    add_grid_flags(analytic, false);

    CLI::App* compare = app.add_subcommand("compare", "series vs conjugate-gradient solve");
    add_grid_flags(compare, true);

    CLI::App* sweep = app.add_subcommand("sweep", "layer-width sweep and rate fit");
    sweep->add_option("--model", opt.model, "square or triangular");
    sweep->add_option("--bc", opt.bc, "dirichlet or padded");
    sweep->add_option("--M", opt.m_list, "comma-separated M values");
    sweep->add_option("--c0", opt.c0, "threshold coefficient");
    sweep->add_option("--tol", opt.tol, "solver tolerance");
    sweep->add_option("--out", opt.out, "output directory");

    CLI::App* verify = app.add_subcommand("verify-bounds", "inequality suite over mode grids");
    verify->add_option("--N", opt.n_range, "a..b doubling range or comma list");
    verify->add_option("--out", opt.out, "output directory");

    CLI::App* ghost = app.add_subcommand("ghost-force", "residual of the identity map");
    add_grid_flags(ghost, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // help/version exit 0; every parse failure is a validation error
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (solve->parsed()) return cmd_solve(opt);
        if (analytic->parsed()) return cmd_analytic(opt);
        if (compare->parsed()) return cmd_compare(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (verify->parsed()) return cmd_verify_bounds(opt);
        if (ghost->parsed()) return cmd_ghost_force(opt);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitSolver;
    }
    return kExitValidation;
}
