#include "qc/analytic_square.hpp"

#include <cmath>

namespace qc {

namespace {

void require_analytic_grid(const GridSpec& g) {
    if (g.model != Model::Square || g.bc != BC::Dirichlet)
        throw std::invalid_argument("analytic path: square Dirichlet grids only");
    if (g.M % 2 != 0)
        throw std::invalid_argument("analytic path: M must be even");
}

// single-exponential building blocks of the five-term split
struct PairSplit {
    double ga, de, cg, cd, sg, sd;
    explicit PairSplit(const SpectralMode& m)
        : ga(m.gamma), de(m.delta),
          cg(std::cosh(m.gamma)), cd(std::cosh(m.delta)),
          sg(std::sinh(m.gamma)), sd(std::sinh(m.delta)) {}

    ScaledReal gp(int j) const { return ScaledReal::exp_of((1.0 - j) * ga) + cd * ScaledReal::exp_of(-double(j) * ga); }
    ScaledReal gm(int j) const { return ScaledReal::exp_of((j - 1.0) * ga) + cd * ScaledReal::exp_of(double(j) * ga); }
    ScaledReal pp(int j) const { return ScaledReal::exp_of((1.0 - j) * de) + cg * ScaledReal::exp_of(-double(j) * de); }
    ScaledReal pm(int j) const { return ScaledReal::exp_of((j - 1.0) * de) + cg * ScaledReal::exp_of(double(j) * de); }
    ScaledReal hp(int j) const { return sg * ScaledReal::exp_of(-double(j) * de); }
    ScaledReal hm(int j) const { return sg * ScaledReal::exp_of(double(j) * de); }
    ScaledReal qp(int j) const { return sd * ScaledReal::exp_of(-double(j) * ga); }
    ScaledReal qm(int j) const { return sd * ScaledReal::exp_of(double(j) * ga); }
};

ScaledReal pair_det_impl(int a, int b, const PairSplit& s, int M) {
    double sa = (a % 2 == 0) ? 1.0 : -1.0;
    double sb = (b % 2 == 0) ? 1.0 : -1.0;
    ScaledReal cpp = sa * (s.gp(a) * s.pp(b)) - sb * (s.gp(b) * s.pp(a))
                   + sb * (s.hp(a) * s.qp(b)) - sa * (s.hp(b) * s.qp(a));
    ScaledReal cpm = -sa * (s.gp(a) * s.pm(b)) + sb * (s.gp(b) * s.pm(a))
                   + sb * (s.hm(a) * s.qp(b)) - sa * (s.hm(b) * s.qp(a));
    ScaledReal cmp = -sa * (s.gm(a) * s.pp(b)) + sb * (s.gm(b) * s.pp(a))
                   + sb * (s.hp(a) * s.qm(b)) - sa * (s.hp(b) * s.qm(a));
    ScaledReal cmm = sa * (s.gm(a) * s.pm(b)) - sb * (s.gm(b) * s.pm(a))
                   + sb * (s.hm(a) * s.qm(b)) - sa * (s.hm(b) * s.qm(a));
    ScaledReal c0 = (-sa * sb) * (s.gp(a) * s.qm(b) - s.gm(a) * s.qp(b)
                                  - s.gp(b) * s.qm(a) + s.gm(b) * s.qp(a))
                  + s.hp(a) * s.pm(b) - s.hm(a) * s.pp(b)
                  - s.hp(b) * s.pm(a) + s.hm(b) * s.pp(a);
    double Mg = double(M) * s.ga, Md = double(M) * s.de;
    ScaledReal total = cpp * ScaledReal::exp_of(Mg + Md)
                     + cpm * ScaledReal::exp_of(Mg - Md)
                     + cmp * ScaledReal::exp_of(-(Mg - Md))
                     + cmm * ScaledReal::exp_of(-(Mg + Md))
                     + c0;
    return total / ScaledReal::from(4.0 * (s.cg + s.cd) * (s.cg + s.cd));
}

ScaledReal determinant_impl(const PairSplit& s, double rho, int M) {
    return (6.0 * (8.0 * rho - 1.0)) * pair_det_impl(0, -1, s, M)
         - (25.0 * rho - 3.0) * pair_det_impl(0, 1, s, M)
         - pair_det_impl(1, -2, s, M)
         + (2.0 - rho) * pair_det_impl(-1, -2, s, M)
         + (5.0 * rho - 1.0) * pair_det_impl(1, -1, s, M)
         - (5.0 * rho) * pair_det_impl(0, -2, s, M);
}

ScaledReal cb_numerator_impl(const PairSplit& s, int M) {
    return 12.0 * pair_det_impl(0, -1, s, M)
         + 5.0 * (pair_det_impl(0, -2, s, M) - pair_det_impl(0, 1, s, M))
         + (pair_det_impl(-1, -2, s, M) - pair_det_impl(-1, 1, s, M));
}

ScaledReal at_numerator_impl(int m, const PairSplit& s, double rho, int M) {
    return (3.0 * (1.0 - 10.0 * rho)) * pair_det_impl(m, 0, s, M)
         + (3.0 * (1.0 - 2.0 * rho)) * pair_det_impl(m, -1, s, M)
         + pair_det_impl(m, -2, s, M)
         - pair_det_impl(m, 1, s, M);
}

} // namespace

SpectralMode mode_params(int k, const GridSpec& grid) {
    if (k < 1 || k > 2 * grid.N - 1)
        throw std::invalid_argument("mode_params: k out of range");
    SpectralMode md;
    md.k = k;
    md.N = grid.N;
    double t = k * M_PI / (4.0 * grid.N);
    double sn = std::sin(t);
    md.lambda = 2.0 * sn * sn;
    md.alpha = std::acosh(1.0 + md.lambda / 5.0);
    double rt = std::sqrt(25.0 + 8.0 * md.lambda);
    md.gamma = std::acosh((1.0 + rt) / 4.0);
    md.delta = std::acosh((-1.0 + rt) / 4.0);
    ScaledReal s_m1 = scaled_sinh((grid.M - 1) * md.alpha);
    ScaledReal den = 5.0 * scaled_sinh(grid.M * md.alpha) + s_m1;
    md.rho = (s_m1 / den).value();
    md.ell = (k % 2 == 1) ? -(2.0 * grid.eps / grid.N) * (std::cos(t) / sn) : 0.0;
    return md;
}

ScaledReal F_of_m(int m, double gamma, double delta, int M) {
    ScaledReal num = scaled_sinh((M + 1 - m) * gamma)
                   + scaled_sinh((M - m) * gamma) * scaled_cosh(delta)
                   - ((m % 2 == 0) ? 1.0 : -1.0) * (scaled_cosh((M - m) * delta) * scaled_sinh(gamma));
    return num / ScaledReal::from(std::cosh(gamma) + std::cosh(delta));
}

ScaledReal pair_det(int a, int b, const SpectralMode& mode, int M) {
    return pair_det_impl(a, b, PairSplit(mode), M);
}

ScaledReal determinant(const SpectralMode& mode, int M) {
    return determinant_impl(PairSplit(mode), mode.rho, M);
}

ScaledReal cb_numerator(const SpectralMode& mode, int M) {
    return cb_numerator_impl(PairSplit(mode), M);
}

ScaledReal at_numerator(int m, const SpectralMode& mode, int M) {
    return at_numerator_impl(m, PairSplit(mode), mode.rho, M);
}

SeriesSolution eval_solution(const GridSpec& grid) {
    require_analytic_grid(grid);
    const int M = grid.M, N = grid.N;
    SeriesSolution sol;
    sol.y = ScalarField(grid);
    std::vector<double> profile(2 * M + 1, 0.0);
    for (int k = 1; k <= 2 * N - 1; k += 2) {
        SpectralMode md = mode_params(k, grid);
        PairSplit split(md);
        ScaledReal det = determinant_impl(split, md.rho, M);
        double qcb = (cb_numerator_impl(split, M) / det).value();
        ScaledReal s_ref = scaled_sinh((M - 1) * md.alpha);
        for (int m = -M + 1; m <= -1; ++m) {
            double ratio = std::exp(scaled_sinh((M + m) * md.alpha).lg - s_ref.lg);
            profile[m + M] = md.ell * qcb * md.rho * ratio;
        }
        for (int m = 0; m <= M - 1; ++m) {
            double q = (at_numerator_impl(m, split, md.rho, M) / det).value();
            profile[m + M] = md.ell * q;
        }
        profile[0] = profile[2 * M] = 0.0;
        for (int m = -M + 1; m <= M - 1; ++m) {
            double pv = profile[m + M];
            if (pv == 0.0) continue;
            for (int n = -N; n <= N; ++n)
                sol.y.at(m, n) += pv * std::sin(k * M_PI * (n + N) / (2.0 * N));
        }
        ++sol.modes_used;
    }
    return sol;
}

ModeProbe probe_mode(int k, const GridSpec& grid, const std::vector<int>& sample_m) {
    require_analytic_grid(grid);
    ModeProbe pr;
    pr.k = k;
    SpectralMode md = mode_params(k, grid);
    pr.rho = md.rho;
    pr.ell = md.ell;
    PairSplit split(md);
    ScaledReal det = determinant_impl(split, md.rho, grid.M);
    pr.log10_det = det.log10_mag();
    pr.cb_ratio = (cb_numerator_impl(split, grid.M) / det).value();
    bool ok = std::isfinite(pr.rho) && std::isfinite(pr.ell)
           && std::isfinite(pr.log10_det) && std::isfinite(pr.cb_ratio);
    for (int m : sample_m) {
        double q = (at_numerator_impl(m, split, md.rho, grid.M) / det).value();
        pr.at_ratio.push_back(q);
        ok = ok && std::isfinite(q);
    }
    pr.all_finite = ok;
    return pr;
}

} // namespace qc
