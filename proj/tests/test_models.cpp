#include <cmath>

#include "doctest.h"
#include "qc/model_square.hpp"
#include "qc/model_triangular.hpp"

using namespace qc;

namespace {

bool is_symmetric(const StencilSystem& s, double tol = 0.0) {
    for (int i = 0; i < s.n; ++i)
        for (int p = s.row_ptr[i]; p < s.row_ptr[i + 1]; ++p)
            if (std::abs(s.val[p] - s.entry(s.col[p], i)) > tol) return false;
    return true;
}

double row_sum(const SquareRow& r) {
    double s = r.diag;
    for (int q = 0; q < r.count; ++q) s += r.coef[q];
    return s;
}

double row_sum(const TriRow& r) {
    double s = r.diag;
    for (int q = 0; q < r.count; ++q) s += r.coef[q];
    return s;
}

}  // namespace

TEST_CASE("square stencil table") {
    double eps = 0.05;
    CHECK(square_row(-5, eps).diag == 12.0);
    CHECK(square_row(-2, eps).diag == 12.0);
    CHECK(square_row(-1, eps).diag == 12.5);
    CHECK(square_row(0, eps).diag == 9.0);
    CHECK(square_row(1, eps).diag == 5.5);
    CHECK(square_row(2, eps).diag == 6.0);
    CHECK(square_row(7, eps).diag == 6.0);

    CHECK(square_row(-1, eps).rhs == doctest::Approx(-eps));
    CHECK(square_row(0, eps).rhs == doctest::Approx(2 * eps));
    CHECK(square_row(1, eps).rhs == doctest::Approx(-eps));
    CHECK(square_row(3, eps).rhs == 0.0);

    // every row is a divided-difference stencil: coefficients sum to zero
    for (int m = -6; m <= 6; ++m)
        CHECK(row_sum(square_row(m, eps)) == doctest::Approx(0.0).epsilon(1e-15));

    // the half-weight long bond on the continuum side of the interface
    const SquareRow r = square_row(-1, eps);
    bool found = false;
    for (int q = 0; q < r.count; ++q)
        if (r.dm[q] == 2 && r.dn[q] == 0) {
            found = true;
            CHECK(r.coef[q] == doctest::Approx(-0.5));
        }
    CHECK(found);
}

TEST_CASE("triangular stencil table") {
    double eps = 0.05;
    CHECK(tri_row(-4, eps).diag == 24.0);
    CHECK(tri_row(-1, eps).diag == 24.5);
    CHECK(tri_row(0, eps).diag == 18.0);
    CHECK(tri_row(1, eps).diag == 11.5);
    CHECK(tri_row(2, eps).diag == 12.0);

    CHECK(tri_row(-1, eps).rhs == doctest::Approx(-0.75 * eps));
    CHECK(tri_row(0, eps).rhs == doctest::Approx(1.5 * eps));
    CHECK(tri_row(1, eps).rhs == doctest::Approx(-0.75 * eps));

    for (int m = -5; m <= 5; ++m)
        CHECK(row_sum(tri_row(m, eps)) == doctest::Approx(0.0).epsilon(1e-15));

    // pure-continuum rows touch first shell only, atomistic rows both shells
    CHECK(tri_row(-3, eps).count == 6);
    CHECK(tri_row(2, eps).count == 12);
}

TEST_CASE("assembled matrices: symmetry and interior row sums") {
    for (Model model : {Model::Square, Model::Triangular}) {
        for (BC bc : {BC::Dirichlet, BC::PeriodicX2}) {
            GridSpec g = build_grid(6, 5, model, bc);
            StencilSystem s = (model == Model::Square) ? assemble_square(g)
                                                       : assemble_triangular(g);
            CHECK(s.n == g.n_unknowns());
            CHECK(is_symmetric(s));
            // rows of nodes whose full stencil stays inside the free set sum to 0
            int id = g.unknown_index(0, 0);
            double sum = 0.0;
            for (int p = s.row_ptr[id]; p < s.row_ptr[id + 1]; ++p) sum += s.val[p];
            CHECK(sum == doctest::Approx(0.0).epsilon(1e-15));
        }
    }
}

TEST_CASE("padded assembly breaks symmetry only across the band seam") {
    GridSpec g = build_grid(4, 12, Model::Triangular, BC::DirichletPadded);
    StencilSystem s = assemble_triangular(g);
    CHECK_FALSE(is_symmetric(s));
    // QC band rows reach padding rows through second-shell bonds, but the
    // first-shell-only padding rows never couple back
    int inner = g.unknown_index(1, 4);   // atomistic band row at the seam
    int outer = g.unknown_index(0, 6);   // its (-1,+2) neighbor in the padding
    CHECK(s.entry(inner, outer) == -1.0);
    CHECK(s.entry(outer, inner) == 0.0);
}

TEST_CASE("ghost force at the identity map") {
    GridSpec g = build_grid(6, 6, Model::Triangular, BC::Dirichlet);
    auto [F1, F2] = ghost_force_at_identity(g);
    double eps = g.eps;
    for (int m = -5; m <= 5; ++m) {
        for (int n = -5; n <= 5; ++n) {
            if (m < -1 || m > 1) {
                CHECK(std::abs(F1(m, n)) <= 1e-14);
                CHECK(std::abs(F2(m, n)) <= 1e-14);
            } else {
                double want = (m == 0) ? 1.5 * eps : 0.75 * eps;
                CHECK(std::abs(F1(m, n)) == doctest::Approx(want).epsilon(1e-12));
                CHECK(F2(m, n) == doctest::Approx(-F1(m, n) / std::sqrt(3.0)).epsilon(1e-12));
            }
        }
    }
    GridSpec sq = build_grid(6, 6, Model::Square, BC::Dirichlet);
    CHECK_THROWS(ghost_force_at_identity(sq));
}

TEST_CASE("1d chains match their hand-worked tables") {
    StencilSystem sq = reduce_square_1d(6);
    CHECK(sq.n == 11);
    auto id = [&](int m) { return m + 5; };
    CHECK(sq.entry(id(-3), id(-3)) == 10.0);
    CHECK(sq.entry(id(-3), id(-4)) == -5.0);
    CHECK(sq.entry(id(-1), id(-1)) == 10.5);
    CHECK(sq.entry(id(-1), id(1)) == -0.5);
    CHECK(sq.entry(id(0), id(0)) == 7.0);
    CHECK(sq.entry(id(0), id(-1)) == -5.0);
    CHECK(sq.entry(id(0), id(2)) == -1.0);
    CHECK(sq.entry(id(1), id(1)) == 3.5);
    CHECK(sq.entry(id(1), id(-1)) == -0.5);
    CHECK(sq.entry(id(3), id(3)) == 4.0);
    CHECK(sq.entry(id(3), id(5)) == -1.0);
    CHECK(sq.rhs[id(-1)] == doctest::Approx(-sq.grid.eps));
    CHECK(sq.rhs[id(0)] == doctest::Approx(2 * sq.grid.eps));

    StencilSystem tr = reduce_tri_1d(6);
    CHECK(tr.entry(id(-3), id(-3)) == 16.0);
    CHECK(tr.entry(id(3), id(3)) == 10.0);
    CHECK(tr.entry(id(3), id(4)) == -4.0);
    CHECK(tr.entry(id(3), id(5)) == -1.0);
    CHECK(tr.rhs[id(0)] == doctest::Approx(1.5 * tr.grid.eps));

    // interior atomistic rows are the two-constant chain operator
    StencilSystem ch = chain_operator(4.0, 1.0, 6);
    CHECK(ch.entry(id(0), id(0)) == 10.0);
    CHECK(ch.entry(id(0), id(1)) == -4.0);
    CHECK(ch.entry(id(0), id(2)) == -1.0);
    for (int m = 2; m <= 4; ++m)
        for (int dm = -2; dm <= 2; ++dm)
            CHECK(tr.entry(id(m), id(m + dm)) == ch.entry(id(m), id(m + dm)));
}

TEST_CASE("solution has lower energy than the zero state") {
    GridSpec g = build_grid(6, 6, Model::Square, BC::Dirichlet);
    StencilSystem s = assemble_square(g);
    std::vector<double> zero(s.n, 0.0);
    CHECK(quadratic_energy(s, zero) == 0.0);
}
