#include "qc/model_square.hpp"

namespace qc {

SquareRow square_row(int m, double eps) {
    SquareRow r{};
    auto set = [&r](int i, int dm, int dn, double c) { r.dm[i] = dm; r.dn[i] = dn; r.coef[i] = c; };
    set(0, 0, 1, -1.0);
    set(1, 0, -1, -1.0);
    if (m <= -2) {                       // continuum
        r.diag = 12.0; r.count = 4; r.rhs = 0.0;
        set(2, 1, 0, -5.0); set(3, -1, 0, -5.0);
    } else if (m == -1) {
        r.diag = 12.5; r.count = 5; r.rhs = -eps;
        set(2, -1, 0, -5.0); set(3, 1, 0, -5.0); set(4, 2, 0, -0.5);
    } else if (m == 0) {
        r.diag = 9.0; r.count = 5; r.rhs = 2.0 * eps;
        set(2, -1, 0, -5.0); set(3, 1, 0, -1.0); set(4, 2, 0, -1.0);
    } else if (m == 1) {
        r.diag = 5.5; r.count = 6; r.rhs = -eps;
        set(2, -1, 0, -1.0); set(3, 1, 0, -1.0); set(4, -2, 0, -0.5); set(5, 2, 0, -1.0);
    } else {                             // atomistic
        r.diag = 6.0; r.count = 6; r.rhs = 0.0;
        set(2, 1, 0, -1.0); set(3, -1, 0, -1.0); set(4, 2, 0, -1.0); set(5, -2, 0, -1.0);
    }
    return r;
}

StencilSystem assemble_square(const GridSpec& grid) {
    if (grid.model != Model::Square)
        throw std::invalid_argument("assemble_square: grid is not square");
    SystemBuilder b(grid.n_unknowns());
    for_each_free_node(grid, [&](int m, int n) {
        SquareRow row = square_row(m, grid.eps);
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

StencilSystem reduce_square_1d(int M) {
    double eps = 1.0 / (2.0 * M);
    int n = 2 * M - 1;
    SystemBuilder b(n);
    auto id = [M, n](int m) { return (m > -M && m < M) ? m + M - 1 : -1; };
    for (int m = -M + 1; m <= M - 1; ++m) {
        b.begin_row();
        double rhs = 0.0;
        auto put = [&](int dm, double c) {
            int j = id(m + dm);
            if (j >= 0) b.add(j, c);
        };
        if (m <= -2) {
            put(0, 10.0); put(1, -5.0); put(-1, -5.0);
        } else if (m == -1) {
            put(0, 10.5); put(1, -5.0); put(-1, -5.0); put(2, -0.5);
            rhs = -eps;
        } else if (m == 0) {
            put(0, 7.0); put(1, -1.0); put(-1, -5.0); put(2, -1.0);
            rhs = 2.0 * eps;
        } else if (m == 1) {
            put(0, 3.5); put(1, -1.0); put(-1, -1.0); put(2, -1.0); put(-2, -0.5);
            rhs = -eps;
        } else {
            put(0, 4.0); put(1, -1.0); put(-1, -1.0); put(2, -1.0); put(-2, -1.0);
        }
        b.end_row(rhs);
    }
    StencilSystem s = b.take();
    s.one_dimensional = true;
    s.grid.M = M;
    s.grid.N = 0;
    s.grid.eps = eps;
    s.grid.model = Model::Square;
    return s;
}

double square_energy(const ScalarField& y, const StencilSystem& sys) {
    return quadratic_energy(sys, unknowns_from_field(y));
}

} // namespace qc
