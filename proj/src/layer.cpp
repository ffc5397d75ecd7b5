#include "qc/layer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qc/model_square.hpp"
#include "qc/model_triangular.hpp"
#include "qc/solver.hpp"

namespace qc {

BoolField characteristic_set(const ScalarField& g, double c0, double eps) {
    if (c0 <= 0.0) throw std::invalid_argument("characteristic_set: c0 must be positive");
    BoolField chi(g.grid);
    for (int m = -g.grid.M; m <= g.grid.M; ++m)
        for (int n = -g.grid.N; n <= g.grid.N; ++n)
            chi.set(m, n, std::abs(g(m, n)) >= c0 * eps);
    return chi;
}

WidthResult layer_width(const BoolField& chi, const GridSpec& grid) {
    int best = -1;
    for (int n = -grid.N; n <= grid.N; ++n) {
        int lo = grid.M + 1, hi = -grid.M - 1;
        for (int m = -grid.M; m <= grid.M; ++m) {
            if (chi(m, n)) {
                lo = std::min(lo, m);
                hi = std::max(hi, m);
            }
        }
        if (hi >= lo) best = std::max(best, hi - lo);
    }
    WidthResult w;
    w.eps = grid.eps;
    w.width = best < 0 ? 0.0 : grid.eps * best;
    return w;
}

double rate_fit(const std::vector<std::pair<double, double>>& rows) {
    if (rows.size() < 2)
        throw std::invalid_argument("rate_fit: need at least two rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [eps, width] : rows) {
        if (width <= 0.0)
            throw std::invalid_argument("rate_fit: non-positive width (threshold too large for this grid)");
        double x = std::log(eps), y = std::log(width);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    double n = double(rows.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

RateTable run_sweep(Model model, BC bc, const std::vector<int>& M_list,
                    double c0, double tol) {
    RateTable table;
    for (int M : M_list) {
        if (M % 2 != 0)
            throw std::invalid_argument("run_sweep: M must be even");
        int N = (bc == BC::DirichletPadded) ? 3 * M : M;
        GridSpec grid = build_grid(M, N, model, bc);
        StencilSystem sys = (model == Model::Square) ? assemble_square(grid)
                                                     : assemble_triangular(grid);
        auto [x, rep] = solve_auto(sys, tol);
        if (!rep.converged)
            throw std::runtime_error("run_sweep: solver stalled at M = " + std::to_string(M)
                                     + " (residual " + std::to_string(rep.residual_norm) + ")");
        ScalarField y = field_from_unknowns(grid, x);
        ScalarField d1 = forward_difference(y, 1, 0);
        ScalarField d2 = forward_difference(y, 0, 1);
        table.rows.push_back(layer_width(characteristic_set(d1, c0, grid.eps), grid));
        table.s2_widths.push_back(layer_width(characteristic_set(d2, c0, grid.eps), grid).width);
    }
    std::vector<std::pair<double, double>> rows;
    for (const auto& w : table.rows) rows.emplace_back(w.eps, w.width);
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].second <= 0.0 || rows[i + 1].second <= 0.0) {
            table.interval_slopes.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        table.interval_slopes.push_back(std::log(rows[i + 1].second / rows[i].second)
                                        / std::log(rows[i + 1].first / rows[i].first));
    }
    table.fitted_rate = rate_fit(rows);
    return table;
}

}  // namespace qc
