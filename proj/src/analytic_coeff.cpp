// Textbook coefficient route for the analytic solution, in 256-bit MPFR.
// The 2x2 determinant P r - p R cancels roughly 0.42*M decimal digits, so
// double (and even quad) precision dies well before M = 64; 256 bits keep
// ~35 digits of headroom at the largest size this path serves.
#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qc/analytic_square.hpp"

namespace qc {

namespace {

constexpr mpfr_prec_t kPrec = 256;

class Mp {
public:
    Mp() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    Mp(double d) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, d, MPFR_RNDN); }
    Mp(const Mp& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Mp(Mp&& o) noexcept { mpfr_init2(v_, kPrec); mpfr_swap(v_, o.v_); }
    Mp& operator=(const Mp& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
    Mp& operator=(Mp&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Mp() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sgn() const { return mpfr_sgn(v_); }

private:
    mpfr_t v_;
};

#define MP_BINOP(op, fn)                                            \
    inline Mp operator op(const Mp& a, const Mp& b) {               \
        Mp r;                                                       \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                   \
        return r;                                                   \
    }
MP_BINOP(+, mpfr_add)
MP_BINOP(-, mpfr_sub)
MP_BINOP(*, mpfr_mul)
MP_BINOP(/, mpfr_div)
#undef MP_BINOP

inline Mp operator-(const Mp& a) { Mp r; mpfr_neg(r.raw(), a.raw(), MPFR_RNDN); return r; }

#define MP_FUN(name, fn) \
    inline Mp name(const Mp& a) { Mp r; fn(r.raw(), a.raw(), MPFR_RNDN); return r; }
MP_FUN(mp_sinh, mpfr_sinh)
MP_FUN(mp_cosh, mpfr_cosh)
MP_FUN(mp_sqrt, mpfr_sqrt)
MP_FUN(mp_acosh, mpfr_acosh)
MP_FUN(mp_sin, mpfr_sin)
MP_FUN(mp_cos, mpfr_cos)
MP_FUN(mp_log, mpfr_log)
MP_FUN(mp_abs, mpfr_abs)
#undef MP_FUN

inline Mp mp_pi() { Mp r; mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }

struct ModeCoeffs {
    Mp alpha, rho, b, c, a;
    Mp gamma, delta;
};

Mp F_mp(int m, const Mp& g, const Mp& d, int M) {
    Mp sign((m % 2 == 0) ? 1.0 : -1.0);
    Mp num = mp_sinh(Mp(double(M + 1 - m)) * g)
           + mp_sinh(Mp(double(M - m)) * g) * mp_cosh(d)
           - sign * mp_cosh(Mp(double(M - m)) * d) * mp_sinh(g);
    return num / (mp_cosh(g) + mp_cosh(d));
}

ModeCoeffs coeffs_mp(int k, int M, int N, double eps) {
    Mp t = Mp(double(k)) * mp_pi() / Mp(4.0 * N);
    Mp sn = mp_sin(t);
    Mp lam = Mp(2.0) * sn * sn;
    Mp alpha = mp_acosh(Mp(1.0) + lam / Mp(5.0));
    Mp rt = mp_sqrt(Mp(25.0) + Mp(8.0) * lam);
    Mp gamma = mp_acosh((Mp(1.0) + rt) / Mp(4.0));
    Mp delta = mp_acosh((Mp(-1.0) + rt) / Mp(4.0));
    Mp shM = mp_sinh(Mp(double(M)) * alpha);
    Mp shM1 = mp_sinh(Mp(double(M - 1)) * alpha);
    Mp rho = shM1 / (Mp(5.0) * shM + shM1);
    auto F = [&](int m) { return F_mp(m, gamma, delta, M); };
    auto f = [&](int m) { return F_mp(m, delta, gamma, M); };
    Mp P = Mp(-2.0) * F(-1) + F(1) - rho * (-F(-1) + Mp(5.0) * F(0));
    Mp p = Mp(2.0) * f(-1) - f(1) - rho * (f(-1) + Mp(5.0) * f(0));
    Mp R = Mp(3.0) * F(0) + Mp(9.0) * F(-1) + F(-2) - Mp(5.0) * F(1);
    Mp r = Mp(3.0) * f(0) - Mp(9.0) * f(-1) + f(-2) + Mp(5.0) * f(1);
    Mp det = P * r - p * R;
    if (det.sgn() == 0)
        throw std::runtime_error("solve_coefficients: vanishing determinant");
    Mp ell = -(Mp(2.0 * eps) / Mp(double(N))) * (mp_cos(t) / sn);
    Mp b = (r + Mp(6.0) * p) * ell / det;
    Mp c = -(R + Mp(6.0) * P) * ell / det;
    Mp a = (b * (Mp(5.0) * F(0) - F(-1)) + c * (Mp(5.0) * f(0) + f(-1)))
         / (Mp(5.0) * shM + shM1);
    ModeCoeffs out{alpha, rho, b, c, a, gamma, delta};
    return out;
}

ScaledReal to_scaled(const Mp& x) {
    int s = x.sgn();
    if (s == 0) return ScaledReal::zero();
    ScaledReal r;
    r.sign = s > 0 ? 1 : -1;
    r.lg = mp_log(mp_abs(x)).to_double();
    return r;
}

} // namespace

SpectralMode solve_coefficients(const SpectralMode& mode, const GridSpec& grid) {
    SpectralMode out = mode;
    if (mode.k % 2 == 0) {
        out.a = out.b = out.c = ScaledReal::zero();
        out.coefficients_set = true;
        return out;
    }
    ModeCoeffs mc = coeffs_mp(mode.k, grid.M, grid.N, grid.eps);
    out.a = to_scaled(mc.a);
    out.b = to_scaled(mc.b);
    out.c = to_scaled(mc.c);
    out.coefficients_set = true;
    return out;
}

SeriesSolution eval_solution_via_coefficients(const GridSpec& grid) {
    if (grid.model != Model::Square || grid.bc != BC::Dirichlet)
        throw std::invalid_argument("analytic path: square Dirichlet grids only");
    if (grid.M % 2 != 0)
        throw std::invalid_argument("analytic path: M must be even");
    const int M = grid.M, N = grid.N;
    SeriesSolution sol;
    sol.y = ScalarField(grid);
    std::vector<double> profile(2 * M + 1, 0.0);
    for (int k = 1; k <= 2 * N - 1; k += 2) {
        ModeCoeffs mc = coeffs_mp(k, M, N, grid.eps);
        for (int m = -M + 1; m <= -1; ++m)
            profile[m + M] = (mc.a * mp_sinh(Mp(double(M + m)) * mc.alpha)).to_double();
        for (int m = 0; m <= M - 1; ++m) {
            Mp sign((m % 2 == 0) ? 1.0 : -1.0);
            Mp val = mc.b * sign * F_mp(m, mc.gamma, mc.delta, M)
                   + mc.c * F_mp(m, mc.delta, mc.gamma, M);
            profile[m + M] = val.to_double();
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

} // namespace qc
