#include "qc/grid.hpp"

#include <cmath>

namespace qc {

GridSpec build_grid(int M, int N, Model model, BC bc) {
    if (M < 2) throw std::invalid_argument("build_grid: M must be >= 2");
    if (N < 1) throw std::invalid_argument("build_grid: N must be >= 1");
    if (bc == BC::DirichletPadded && model != Model::Triangular)
        throw std::invalid_argument("build_grid: padded runs are triangular only");
    GridSpec g;
    g.M = M;
    g.N = N;
    g.eps = 1.0 / (2.0 * M);
    g.model = model;
    g.bc = bc;
    return g;
}

ScalarField field_from_unknowns(const GridSpec& g, const std::vector<double>& u) {
    if (static_cast<int>(u.size()) != g.n_unknowns())
        throw std::invalid_argument("field_from_unknowns: size mismatch");
    ScalarField f(g);
    for (int m = -g.M; m <= g.M; ++m)
        for (int n = -g.N; n <= g.N; ++n) {
            int id = g.unknown_index(m, n);
            if (id >= 0) f.at(m, n) = u[id];
        }
    return f;
}

std::vector<double> unknowns_from_field(const ScalarField& f) {
    const GridSpec& g = f.grid;
    std::vector<double> u(g.n_unknowns(), 0.0);
    for (int m = -g.M; m <= g.M; ++m)
        for (int n = -g.N; n <= g.N; ++n) {
            int id = g.unknown_index(m, n);
            if (id >= 0) u[id] = f(m, n);
        }
    return u;
}

ScalarField forward_difference(const ScalarField& y, int dm, int dn) {
    const GridSpec& g = y.grid;
    ScalarField out(g);
    for (int m = -g.M; m <= g.M; ++m) {
        int mt = m + dm;
        if (mt < -g.M || mt > g.M) continue;
        for (int n = -g.N; n <= g.N; ++n) {
            int nt = n + dn;
            if (nt < -g.N || nt > g.N) continue;
            out.at(m, n) = (y(mt, nt) - y(m, n)) / g.eps;
        }
    }
    return out;
}

std::pair<double, double> physical_position(int m, int n, const GridSpec& g) {
    if (g.model == Model::Triangular)
        return {g.eps * (m + 0.5 * n), g.eps * n * std::sqrt(3.0) / 2.0};
    return {g.eps * m, g.eps * n};
}

} // namespace qc
