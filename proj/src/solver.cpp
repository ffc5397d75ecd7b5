#include "qc/solver.hpp"

#include <cmath>
#include <lapacke.h>

namespace qc {

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<double> inverse_diag(const StencilSystem& sys) {
    std::vector<double> d(sys.n);
    for (int i = 0; i < sys.n; ++i) {
        double v = sys.diag(i);
        if (v <= 0.0) throw std::runtime_error("solver: nonpositive diagonal");
        d[i] = 1.0 / v;
    }
    return d;
}

int default_iters(int n, int max_iter) {
    return max_iter > 0 ? max_iter : static_cast<int>(50.0 * std::sqrt(double(n))) + 1000;
}

} // namespace

std::pair<std::vector<double>, SolveReport>
solve_cg(const StencilSystem& sys, double tol, int max_iter) {
    const int n = sys.n;
    const int iters = default_iters(n, max_iter);
    std::vector<double> x(n, 0.0), r = sys.rhs, z(n), p(n), ap(n);
    std::vector<double> dinv = inverse_diag(sys);
    SolveReport rep;
    rep.rhs_norm = norm2(sys.rhs);
    double target = tol * rep.rhs_norm;
    if (rep.rhs_norm == 0.0) { rep.converged = true; return {x, rep}; }
    for (int i = 0; i < n; ++i) z[i] = dinv[i] * r[i];
    p = z;
    double rz = dot(r, z);
    int it = 0;
    double rnorm = norm2(r);
    while (rnorm > target && it < iters) {
        apply(sys, p.data(), ap.data());
        double alpha = rz / dot(p, ap);
        for (int i = 0; i < n; ++i) x[i] += alpha * p[i];
        for (int i = 0; i < n; ++i) r[i] -= alpha * ap[i];
        for (int i = 0; i < n; ++i) z[i] = dinv[i] * r[i];
        double rz_next = dot(r, z);
        double beta = rz_next / rz;
        rz = rz_next;
        for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
        rnorm = norm2(r);
        ++it;
    }
    // report the true residual, not the recurrence one
    std::vector<double> rt = residual(sys, x);
    rep.residual_norm = norm2(rt);
    rep.iterations = it;
    rep.converged = rep.residual_norm <= target * (1.0 + 1e-6);
    return {x, rep};
}

std::pair<std::vector<double>, SolveReport>
solve_bicgstab(const StencilSystem& sys, double tol, int max_iter) {
    const int n = sys.n;
    const int iters = default_iters(n, max_iter);
    std::vector<double> x(n, 0.0), r = sys.rhs;
    std::vector<double> r0 = r, p(n, 0.0), v(n, 0.0), ph(n), sh(n), s(n), t(n);
    std::vector<double> dinv = inverse_diag(sys);
    SolveReport rep;
    rep.rhs_norm = norm2(sys.rhs);
    double target = tol * rep.rhs_norm;
    if (rep.rhs_norm == 0.0) { rep.converged = true; return {x, rep}; }
    double rho_prev = 1.0, alpha = 1.0, omega = 1.0;
    int it = 0;
    double rnorm = norm2(r);
    while (rnorm > target && it < iters) {
        double rho = dot(r0, r);
        if (rho == 0.0) break;
        if (it == 0) {
            p = r;
        } else {
            double beta = (rho / rho_prev) * (alpha / omega);
            for (int i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
        }
        for (int i = 0; i < n; ++i) ph[i] = dinv[i] * p[i];
        apply(sys, ph.data(), v.data());
        alpha = rho / dot(r0, v);
        for (int i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];
        if (norm2(s) <= target) {
            for (int i = 0; i < n; ++i) x[i] += alpha * ph[i];
            r = s;
            rnorm = norm2(r);
            ++it;
            break;
        }
        for (int i = 0; i < n; ++i) sh[i] = dinv[i] * s[i];
        apply(sys, sh.data(), t.data());
        omega = dot(t, s) / dot(t, t);
        for (int i = 0; i < n; ++i) x[i] += alpha * ph[i] + omega * sh[i];
        for (int i = 0; i < n; ++i) r[i] = s[i] - omega * t[i];
        rho_prev = rho;
        rnorm = norm2(r);
        ++it;
        if (omega == 0.0) break;
    }
    std::vector<double> rt = residual(sys, x);
    rep.residual_norm = norm2(rt);
    rep.iterations = it;
    rep.converged = rep.residual_norm <= target * (1.0 + 1e-6);
    return {x, rep};
}

std::pair<std::vector<double>, SolveReport>
solve_auto(const StencilSystem& sys, double tol, int max_iter) {
    if (!sys.one_dimensional && sys.grid.bc == BC::DirichletPadded)
        return solve_bicgstab(sys, tol, max_iter);
    return solve_cg(sys, tol, max_iter);
}

std::vector<double> solve_dense(const StencilSystem& sys) {
    const int n = sys.n;
    if (n > 20000) throw std::invalid_argument("solve_dense: system too large");
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int p = sys.row_ptr[i]; p < sys.row_ptr[i + 1]; ++p)
            a[static_cast<size_t>(i) * n + sys.col[p]] = sys.val[p];
    std::vector<double> b = sys.rhs;
    std::vector<lapack_int> piv(n);
    lapack_int info = LAPACKE_dgesv(LAPACK_ROW_MAJOR, n, 1, a.data(), n, piv.data(), b.data(), 1);
    if (info != 0) throw std::runtime_error("solve_dense: singular system");
    return b;
}

} // namespace qc
