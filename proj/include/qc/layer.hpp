#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qc/grid.hpp"

namespace qc {

struct BoolField {
    GridSpec grid;
    std::vector<std::uint8_t> v;

    BoolField() = default;
    explicit BoolField(const GridSpec& g)
        : grid(g), v(static_cast<size_t>(g.row_count()) * g.col_count(), 0) {}

    size_t flat(int m, int n) const {
        return static_cast<size_t>(m + grid.M) * grid.col_count() + (n + grid.N);
    }
    bool operator()(int m, int n) const { return v[flat(m, n)] != 0; }
    void set(int m, int n, bool b) { v[flat(m, n)] = b ? 1 : 0; }
};

// Nodes where the gradient magnitude reaches the threshold c0 * eps.
BoolField characteristic_set(const ScalarField& g, double c0, double eps);

struct WidthResult {
    double eps = 0.0;
    double width = 0.0;  // physical length: eps * largest row extent
};

// Largest per-row index extent of the marked set, converted to length.
// Rows with no marked entry are skipped; an empty set has width 0.
WidthResult layer_width(const BoolField& chi, const GridSpec& grid);

// Least-squares slope of ln(width) against ln(eps).
// Throws std::invalid_argument on fewer than two rows or a non-positive
// width (width 0 means the threshold exceeded every gradient on that grid).
double rate_fit(const std::vector<std::pair<double, double>>& rows);

struct RateTable {
    std::vector<WidthResult> rows;        // s1-direction widths, fitted
    std::vector<double> s2_widths;        // reported only, never fitted
    std::vector<double> interval_slopes;  // slope between consecutive rows
    double fitted_rate = 0.0;
};

// For each M: build the grid (N = M, or N = 3M when padded), assemble the
// requested model, solve, threshold both forward gradients, and measure
// widths.  The s1 direction feeds the global fit; s2 is only reported.
RateTable run_sweep(Model model, BC bc, const std::vector<int>& M_list,
                    double c0, double tol = 1e-12);

}  // namespace qc
