#include "qc/model_triangular.hpp"

#include <cmath>

namespace qc {

TriRow tri_row(int m, double eps) {
    TriRow r{};
    int c = 0;
    auto s1 = [&](double w) {
        for (auto [dm, dn] : kTriS1) { r.dm[c] = dm; r.dn[c] = dn; r.coef[c] = -w; ++c; }
    };
    auto s2 = [&](double w) {
        for (auto [dm, dn] : kTriS2) { r.dm[c] = dm; r.dn[c] = dn; r.coef[c] = -w; ++c; }
    };
    auto one = [&](int dm, int dn, double w) { r.dm[c] = dm; r.dn[c] = dn; r.coef[c] = -w; ++c; };
    if (m <= -2) {
        r.diag = 24.0; r.rhs = 0.0;
        s1(4.0);
    } else if (m == -1) {
        r.diag = 24.5; r.rhs = -0.75 * eps;
        s1(4.0);
        one(2, -1, 0.5);                       // half bond across to layer 1
    } else if (m == 0) {
        r.diag = 18.0; r.rhs = 1.5 * eps;
        one(1, 0, 1.0); one(1, -1, 1.0);       // atomistic-weight S1 pair
        one(0, 1, 2.5); one(0, -1, 2.5);       // mixed transverse pair
        one(-1, 1, 4.0); one(-1, 0, 4.0);      // continuum-weight S1 pair
        one(1, 1, 1.0); one(1, -2, 1.0); one(2, -1, 1.0);
    } else if (m == 1) {
        r.diag = 11.5; r.rhs = -0.75 * eps;
        s1(1.0);
        s2(1.0);
        for (int q = 0; q < c; ++q)
            if (r.dm[q] == -2 && r.dn[q] == 1) r.coef[q] = -0.5;   // half bond back to layer -1
    } else {
        r.diag = 12.0; r.rhs = 0.0;
        s1(1.0);
        s2(1.0);
    }
    r.count = c;
    return r;
}

StencilSystem assemble_triangular(const GridSpec& grid) {
    if (grid.model != Model::Triangular)
        throw std::invalid_argument("assemble_triangular: grid is not triangular");
    SystemBuilder b(grid.n_unknowns());
    bool padded = grid.bc == BC::DirichletPadded;
    for_each_free_node(grid, [&](int m, int n) {
        TriRow row = (padded && std::abs(n) > grid.M) ? tri_row(-2, grid.eps)
                                                      : tri_row(m, grid.eps);
        b.begin_row();
        b.add(grid.unknown_index(m, n), row.diag);
        for (int q = 0; q < row.count; ++q) {
            int id = grid.unknown_index(m + row.dm[q], n + row.dn[q]);
            if (id >= 0) b.add(id, row.coef[q]);
        }
        b.end_row(row.rhs);
    });
    StencilSystem s = b.take();
    s.grid = grid;
    return s;
}

std::pair<ScalarField, ScalarField> ghost_force_at_identity(const GridSpec& grid) {
    if (grid.model != Model::Triangular)
        throw std::invalid_argument("ghost_force_at_identity: triangular grids only");
    ScalarField f1(grid), f2(grid);
    // Force rows are the negated positive-diagonal rows; apply them to the
    // undeformed positions z(x) = x.  Every neighbor contributes (z is defined
    // off the rectangle too), so the layer pattern is exact up to the rim.
    for (int m = -grid.M + 1; m <= grid.M - 1; ++m) {
        TriRow row = tri_row(m, grid.eps);
        for (int n = -grid.N + 1; n <= grid.N - 1; ++n) {
            auto [x1, x2] = physical_position(m, n, grid);
            double F1 = row.diag * x1, F2 = row.diag * x2;
            for (int q = 0; q < row.count; ++q) {
                auto [p1, p2] = physical_position(m + row.dm[q], n + row.dn[q], grid);
                F1 += row.coef[q] * p1;
                F2 += row.coef[q] * p2;
            }
            f1.at(m, n) = -F1;
            f2.at(m, n) = -F2;
        }
    }
    return {f1, f2};
}

StencilSystem reduce_tri_1d(int M) {
    double eps = 1.0 / (2.0 * M);
    int n = 2 * M - 1;
    SystemBuilder b(n);
    auto id = [M](int m) { return (m > -M && m < M) ? m + M - 1 : -1; };
    for (int m = -M + 1; m <= M - 1; ++m) {
        b.begin_row();
        double rhs = 0.0;
        auto put = [&](int dm, double c) {
            int j = id(m + dm);
            if (j >= 0) b.add(j, c);
        };
        if (m <= -2) {
            put(0, 16.0); put(1, -8.0); put(-1, -8.0);
        } else if (m == -1) {
            put(0, 16.5); put(1, -8.0); put(-1, -8.0); put(2, -0.5);
            rhs = -0.75 * eps;
        } else if (m == 0) {
            put(0, 13.0); put(1, -4.0); put(-1, -8.0); put(2, -1.0);
            rhs = 1.5 * eps;
        } else if (m == 1) {
            put(0, 9.5); put(1, -4.0); put(-1, -4.0); put(2, -1.0); put(-2, -0.5);
            rhs = -0.75 * eps;
        } else {
            put(0, 10.0); put(1, -4.0); put(-1, -4.0); put(2, -1.0); put(-2, -1.0);
        }
        b.end_row(rhs);
    }
    StencilSystem s = b.take();
    s.one_dimensional = true;
    s.grid.M = M;
    s.grid.N = 0;
    s.grid.eps = eps;
    s.grid.model = Model::Triangular;
    return s;
}

StencilSystem chain_operator(double k1, double k2, int M) {
    int n = 2 * M - 1;
    SystemBuilder b(n);
    auto id = [M](int m) { return (m > -M && m < M) ? m + M - 1 : -1; };
    for (int m = -M + 1; m <= M - 1; ++m) {
        b.begin_row();
        b.add(id(m), 2.0 * k1 + 2.0 * k2);
        for (int dm : {-2, -1, 1, 2}) {
            int j = id(m + dm);
            if (j >= 0) b.add(j, std::abs(dm) == 1 ? -k1 : -k2);
        }
        b.end_row(0.0);
    }
    StencilSystem s = b.take();
    s.one_dimensional = true;
    s.grid.M = M;
    s.grid.N = 0;
    s.grid.eps = 1.0 / (2.0 * M);
    return s;
}

} // namespace qc
