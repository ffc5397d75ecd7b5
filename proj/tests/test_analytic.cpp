#include <cmath>

#include "doctest.h"
#include "qc/analytic_square.hpp"
#include "qc/model_square.hpp"
#include "qc/solver.hpp"

using namespace qc;

TEST_CASE("scaled arithmetic basics") {
    ScaledReal a = ScaledReal::from(-3.5);
    CHECK(a.value() == doctest::Approx(-3.5).epsilon(1e-15));
    CHECK((a * a).value() == doctest::Approx(12.25).epsilon(1e-14));
    CHECK((a / a).value() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK((a - a).is_zero());
    CHECK((a + ScaledReal::from(3.5)).is_zero());
    CHECK((a + ScaledReal::from(1.0)).value() == doctest::Approx(-2.5).epsilon(1e-14));
    CHECK(ScaledReal::exp_of(1000.0).lg == 1000.0);
    CHECK((ScaledReal::exp_of(1000.0) / ScaledReal::exp_of(999.0)).value()
          == doctest::Approx(std::exp(1.0)).epsilon(1e-12));

    for (double t : {1e-8, 0.3, 2.0, 40.0}) {
        CHECK(scaled_sinh(t).value() == doctest::Approx(std::sinh(t)).epsilon(1e-13));
        CHECK(scaled_cosh(t).value() == doctest::Approx(std::cosh(t)).epsilon(1e-13));
        CHECK(scaled_sinh(-t).value() == doctest::Approx(-std::sinh(t)).epsilon(1e-13));
    }
    // far beyond double range: ln sinh(t) ~ t - ln 2
    CHECK(scaled_sinh(5000.0).lg == doctest::Approx(5000.0 - std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("mode parameters at the quarter-period mode") {
    GridSpec g = build_grid(8, 8, Model::Square, BC::Dirichlet);
    SpectralMode md = mode_params(8, g);  // k = N: lambda = 2 sin^2(pi/4) = 1
    CHECK(md.lambda == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::cosh(md.alpha) == doctest::Approx(1.2).epsilon(1e-14));
    CHECK(std::cosh(md.gamma) == doctest::Approx((1.0 + std::sqrt(33.0)) / 4.0).epsilon(1e-14));
    CHECK(std::cosh(md.delta) == doctest::Approx((-1.0 + std::sqrt(33.0)) / 4.0).epsilon(1e-14));
    CHECK(md.ell == 0.0);  // even k carries no forcing

    double sM1 = std::sinh(7 * md.alpha), sM = std::sinh(8 * md.alpha);
    CHECK(md.rho == doctest::Approx(sM1 / (5 * sM + sM1)).epsilon(1e-13));

    SpectralMode odd = mode_params(1, g);
    double t = M_PI / 32.0;
    CHECK(odd.ell == doctest::Approx(-(2.0 * g.eps / g.N) / std::tan(t)).epsilon(1e-13));

    CHECK_THROWS(mode_params(0, g));
    CHECK_THROWS(mode_params(16, g));
}

TEST_CASE("boundary profile F vanishes at the far wall for even M") {
    GridSpec g = build_grid(8, 8, Model::Square, BC::Dirichlet);
    SpectralMode md = mode_params(3, g);
    ScaledReal FM = F_of_m(8, md.gamma, md.delta, 8);
    // sinh g + sinh 0 cosh d - cosh 0 sinh g = 0 identically
    CHECK((FM.is_zero() || FM.lg < F_of_m(0, md.gamma, md.delta, 8).lg - 30));

    // the direct branch is dominated by sinh((M+1)g) and stays positive; the
    // swapped branch flips sign because cosh(M g) sinh(d) dominates there
    CHECK(F_of_m(0, md.gamma, md.delta, 8).sign == 1);
    CHECK(F_of_m(0, md.delta, md.gamma, 8).sign == -1);
}

TEST_CASE("pair determinant is antisymmetric and matches direct evaluation") {
    GridSpec g = build_grid(4, 4, Model::Square, BC::Dirichlet);
    for (int k : {1, 3, 7}) {
        SpectralMode md = mode_params(k, g);
        for (auto [a, b] : {std::pair{0, -1}, {0, 1}, {1, -2}, {-1, -2}, {1, -1}, {0, -2}}) {
            ScaledReal ab = pair_det(a, b, md, 4);
            ScaledReal ba = pair_det(b, a, md, 4);
            CHECK(ab.sign == -ba.sign);
            CHECK(ab.lg == doctest::Approx(ba.lg).epsilon(1e-12));

            // textbook form in plain doubles; safe at M = 4 where the
            // cancellation only eats a couple of digits
            auto F = [&](int m, double x, double y) {
                return (std::sinh((4 + 1 - m) * x) + std::sinh((4 - m) * x) * std::cosh(y)
                        - ((m % 2 == 0) ? 1.0 : -1.0) * std::cosh((4 - m) * y) * std::sinh(x))
                       / (std::cosh(md.gamma) + std::cosh(md.delta));
            };
            double Fa = F(a, md.gamma, md.delta), fa = F(a, md.delta, md.gamma);
            double Fb = F(b, md.gamma, md.delta), fb = F(b, md.delta, md.gamma);
            double sa = (a % 2 == 0) ? 1.0 : -1.0, sb = (b % 2 == 0) ? 1.0 : -1.0;
            double direct = sa * Fa * fb - sb * Fb * fa;
            CHECK(ab.value() == doctest::Approx(direct).epsilon(1e-9));
        }
    }
}

TEST_CASE("series evaluation matches the dense solve") {
    for (int M : {4, 8}) {
        GridSpec g = build_grid(M, M, Model::Square, BC::Dirichlet);
        SeriesSolution sol = eval_solution(g);
        CHECK(sol.modes_used == M);  // odd k in [1, 2N-1]

        StencilSystem s = assemble_square(g);
        std::vector<double> dense = solve_dense(s);
        ScalarField yd = field_from_unknowns(g, dense);
        double sup = 0.0, diff = 0.0;
        for (size_t i = 0; i < yd.v.size(); ++i) {
            sup = std::max(sup, std::abs(yd.v[i]));
            diff = std::max(diff, std::abs(yd.v[i] - sol.y.v[i]));
        }
        CHECK(diff <= 1e-10 * sup);
    }
}

TEST_CASE("series evaluation satisfies the stencil equations row by row") {
    GridSpec g = build_grid(8, 8, Model::Square, BC::Dirichlet);
    SeriesSolution sol = eval_solution(g);
    StencilSystem s = assemble_square(g);
    std::vector<double> r = residual(s, unknowns_from_field(sol.y));
    double rhs_sup = 0.0, res_sup = 0.0;
    for (double v : s.rhs) rhs_sup = std::max(rhs_sup, std::abs(v));
    for (double v : r) res_sup = std::max(res_sup, std::abs(v));
    CHECK(res_sup <= 1e-9 * rhs_sup);
}

TEST_CASE("five-term route agrees with the 256-bit coefficient route") {
    for (int M : {8, 16}) {
        GridSpec g = build_grid(M, M, Model::Square, BC::Dirichlet);
        SeriesSolution a = eval_solution(g);
        SeriesSolution b = eval_solution_via_coefficients(g);
        double sup = 0.0, diff = 0.0;
        for (size_t i = 0; i < a.y.v.size(); ++i) {
            sup = std::max(sup, std::abs(a.y.v[i]));
            diff = std::max(diff, std::abs(a.y.v[i] - b.y.v[i]));
        }
        CHECK(diff <= 1e-10 * sup);
    }
}

TEST_CASE("coefficient solve marks the mode and zeroes even forcing") {
    GridSpec g = build_grid(8, 8, Model::Square, BC::Dirichlet);
    SpectralMode odd = solve_coefficients(mode_params(3, g), g);
    CHECK(odd.coefficients_set);
    CHECK_FALSE(odd.a.is_zero());
    SpectralMode even = solve_coefficients(mode_params(4, g), g);
    CHECK(even.coefficients_set);
    CHECK(even.a.is_zero());
    CHECK(even.b.is_zero());
}

TEST_CASE("analytic path rejects unsupported grids") {
    CHECK_THROWS(eval_solution(build_grid(7, 7, Model::Square, BC::Dirichlet)));
    CHECK_THROWS(eval_solution(build_grid(8, 8, Model::Triangular, BC::Dirichlet)));
    CHECK_THROWS(eval_solution(build_grid(8, 8, Model::Square, BC::PeriodicX2)));
}

TEST_CASE("large-grid probe stays finite") {
    GridSpec g = build_grid(512, 512, Model::Square, BC::Dirichlet);
    ModeProbe p = probe_mode(1, g, {0, 1, 256, 511});
    CHECK(p.all_finite);
    CHECK(p.log10_det > 100.0);  // far beyond double range, still represented
}
