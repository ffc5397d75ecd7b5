#include "qc/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace qc {

namespace {

constexpr double kGoldenRatioConj = 0.38196601125010515;  // (3 - sqrt(5)) / 2

struct ModeScales {
    double lambda, alpha, gamma, delta;
};

ModeScales scales_for(int k, int N) {
    if (N < 1 || k < 1 || k > 2 * N - 1)
        throw std::invalid_argument("bounds: k out of range for N");
    double t = k * M_PI / (4.0 * N);
    double sn = std::sin(t);
    ModeScales s;
    s.lambda = 2.0 * sn * sn;
    s.alpha = std::acosh(1.0 + s.lambda / 5.0);
    double rt = std::sqrt(25.0 + 8.0 * s.lambda);
    s.gamma = std::acosh((1.0 + rt) / 4.0);
    s.delta = std::acosh((-1.0 + rt) / 4.0);
    return s;
}

double rho_for(int M, double alpha) {
    ScaledReal s_m1 = scaled_sinh((M - 1) * alpha);
    ScaledReal den = 5.0 * scaled_sinh(M * alpha) + s_m1;
    return (s_m1 / den).value();
}

}  // namespace

BoundReport make_report(std::string name, int k, int M, int N, double lhs,
                        double rhs, bool strict) {
    BoundReport r;
    r.name = std::move(name);
    r.k = k;
    r.M = M;
    r.N = N;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.satisfied = strict ? (lhs < rhs) : (lhs <= rhs);
    return r;
}

std::vector<BoundReport> check_elementary(int k, int N) {
    ModeScales s = scales_for(k, N);
    double lam = s.lambda;
    std::vector<BoundReport> out;
    out.push_back(make_report("cosh_gamma_lower", k, 0, N, lam / 6.0,
                              std::cosh(s.gamma) - 1.5));
    out.push_back(make_report("cosh_gamma_upper", k, 0, N,
                              std::cosh(s.gamma) - 1.5, lam / 5.0));
    out.push_back(make_report("sinh_delta_floor", k, 0, N, std::sqrt(lam / 3.0),
                              std::sinh(s.delta)));
    out.push_back(make_report("sinh_alpha_floor", k, 0, N,
                              std::sqrt(2.0 * lam / 5.0), std::sinh(s.alpha)));
    out.push_back(make_report("half_alpha_identity", k, 0, N,
                              std::abs(std::sinh(s.alpha / 2.0) - std::sqrt(lam / 10.0)),
                              1e-13));
    out.push_back(make_report("alpha_exp_decay", k, 0, N, std::exp(-s.alpha),
                              std::exp(-k / (2.0 * std::sqrt(5.0) * N))));
    out.push_back(make_report("gamma_exp_ceiling", k, 0, N, std::exp(-s.gamma),
                              kGoldenRatioConj));
    out.push_back(make_report("delta_exp_decay", k, 0, N, std::exp(-s.delta),
                              std::exp(-k / (5.0 * double(N)))));
    return out;
}

std::vector<BoundReport> check_rho(int k, int M, int N) {
    if (M < 2) throw std::invalid_argument("check_rho: M must be at least 2");
    ModeScales s = scales_for(k, N);
    double rho = rho_for(M, s.alpha);
    std::vector<BoundReport> out;
    out.push_back(make_report("rho_positive", k, M, N, 0.0, rho, true));
    out.push_back(make_report("rho_sixth_ceiling", k, M, N, rho, 1.0 / 6.0));
    out.push_back(make_report("rho_gap_positive", k, M, N, 0.0, 1.0 - 6.0 * rho, true));
    out.push_back(make_report("rho_gap_ceiling", k, M, N, 1.0 - 6.0 * rho,
                              (5.0 / 6.0) * (s.lambda / 5.0 + 1.0 / (M - 1.0)
                                             + std::sinh(s.alpha))));
    return out;
}

DetExpansion det_expansion(const SpectralMode& mode, int M) {
    const double lam = mode.lambda;
    const double rho = mode.rho;
    const double rt = std::sqrt(25.0 + 8.0 * lam);
    const double sg = std::sinh(mode.gamma);
    const double sd = std::sinh(mode.delta);
    const int k = mode.k, N = mode.N;

    DetExpansion ex;
    ex.A = (4.0 * lam * lam + 156.5 * lam + 315.0) * rho
         - 6.0 * lam * lam - 39.0 * lam - 52.5;
    ex.B = ((18.0 * lam + 56.25 + (54.75 + 2.0 * lam) * rt) * rho
            + (12.5 + 4.0 * lam - (13.5 + 4.0 * lam) * rt)) * sg;
    ex.C = ((-18.0 * lam - 56.25 + (54.75 + 2.0 * lam) * rt) * rho
            + (-12.5 - 4.0 * lam - (13.5 + 4.0 * lam) * rt)) * sd;
    ex.D = ((169.0 + 8.0 * lam) * rho - (74.0 + 20.0 * lam)) * sg * sd;
    ex.extra = 2.0 * (12.0 + 2.0 * lam - 72.0 * rho) * sg * sd;

    double Mg = double(M) * mode.gamma, Md = double(M) * mode.delta;
    ScaledReal expansion = ex.A * (scaled_sinh(Mg) * scaled_sinh(Md))
                         + ex.B * (scaled_cosh(Mg) * scaled_sinh(Md))
                         + ex.C * (scaled_sinh(Mg) * scaled_cosh(Md))
                         + ex.D * (scaled_cosh(Mg) * scaled_cosh(Md))
                         + ScaledReal::from(ex.extra);

    auto& rep = ex.reports;
    rep.push_back(make_report("A_negative", k, M, N, ex.A, 0.0, true));
    rep.push_back(make_report("B_negative", k, M, N, ex.B, 0.0, true));
    rep.push_back(make_report("C_negative", k, M, N, ex.C, 0.0, true));
    rep.push_back(make_report("D_negative", k, M, N, ex.D, 0.0, true));
    rep.push_back(make_report("B_magnitude_floor", k, M, N, 5.0 / 6.0,
                              std::abs(ex.B)));

    // |expansion| >= (5/24) (1 - e^{-2M/5N}) e^{M(g+d)}, compared in logs so
    // the exponential never overflows.
    double floor_log = std::log(5.0 / 24.0)
                     + std::log1p(-std::exp(-2.0 * M / (5.0 * N)))
                     + Mg + Md;
    rep.push_back(make_report("det_floor_log", k, M, N, floor_log, expansion.lg));

    ScaledReal direct = determinant(mode, M)
                      * ScaledReal::from(std::cosh(mode.gamma) + std::cosh(mode.delta));
    double rel = std::abs((expansion / direct).value() - 1.0);
    rep.push_back(make_report("expansion_matches_direct", k, M, N, rel, 1e-9));
    return ex;
}

LeadingTerms leading_terms(const SpectralMode& mode, int M) {
    const double eg = std::exp(mode.gamma);
    const double ed = std::exp(mode.delta);
    const double rho = mode.rho;

    LeadingTerms lt;
    lt.Q0 = (eg + ed) / 4.0
          * (12.0 * (eg + ed) + 5.0 * (ed * ed - eg * eg) - 5.0 * (1.0 / eg + 1.0 / ed)
             - eg * ed * (eg + ed) + eg / ed - ed / eg);
    lt.Q1 = (eg + 1.0 / ed) / 4.0
          * (-12.0 * (eg + 1.0 / ed) + 5.0 * (eg * eg - 1.0 / (ed * ed))
             + 5.0 * (1.0 / eg + ed) + eg / ed * (eg + 1.0 / ed)
             + 1.0 / (eg * ed) - eg * ed);
    lt.Qa1 = 3.0 * (1.0 + ed) + ed * ed - 1.0 / ed - 6.0 * rho * (5.0 + ed);
    lt.Qa2 = eg * eg + 1.0 / eg - 3.0 * (eg - 1.0) + 6.0 * rho * (eg - 5.0);
    lt.Qa3 = 3.0 * (1.0 - 2.0 * rho) * (1.0 / ed - 1.0) + 1.0 / (ed * ed) - ed
           + 6.0 * (1.0 - 6.0 * rho);
    lt.Qa4 = -lt.Qa2;

    double root = std::sqrt(mode.lambda);
    lt.ratio_cb = (std::abs(lt.Q0) + std::abs(lt.Q1)) / root;
    lt.ratio_at = (std::abs(lt.Qa1) + std::abs(lt.Qa2) + std::abs(lt.Qa3)
                   + std::abs(lt.Qa4)) / (root + 1.0 / (M - 1.0));
    lt.reports.push_back(make_report("cb_lead_ratio", mode.k, M, mode.N,
                                     lt.ratio_cb, 26.5));
    lt.reports.push_back(make_report("at_lead_ratio", mode.k, M, mode.N,
                                     lt.ratio_at, 14.0));
    return lt;
}

std::pair<double, double> trig_identity(double r, double x, int N) {
    double lhs = 0.0;
    for (int k = 1; k <= N; ++k)
        lhs += std::pow(r, 2 * k - 1) * std::sin((2 * k - 1) * x);
    double r2 = r * r;
    double num = (r + r * r2) * std::sin(x)
               - std::pow(r, 2 * N + 1) * std::sin((2 * N + 1) * x)
               + std::pow(r, 2 * N + 3) * std::sin((2 * N - 1) * x);
    double den = 1.0 - 2.0 * r2 * std::cos(2.0 * x) + r2 * r2;
    return {lhs, num / den};
}

DecayConstants check_pointwise_decay(const ScalarField& y) {
    const GridSpec& g = y.grid;
    const double N = g.N;
    ScalarField d1 = forward_difference(y, 1, 0);
    ScalarField d2 = forward_difference(y, 0, 1);
    DecayConstants c;
    // whole rectangle: the wall rows carry the divided differences into the
    // boundary, and those are part of the profile the envelopes must cover
    for (int m = -g.M; m <= g.M; ++m) {
        for (int n = -g.N; n <= g.N; ++n) {
            double dmax = std::max(std::abs(d1(m, n)), std::abs(d2(m, n)));
            double v = std::abs(y(m, n));
            if (m <= -1) {
                double env_g = std::exp(-std::abs(m) / (6.0 * std::sqrt(5.0) * N))
                             / (double(m) * double(m));
                c.grad_continuum = std::max(c.grad_continuum, dmax / env_g);
                c.value_continuum = std::max(c.value_continuum,
                                             v * std::abs(m) / g.eps);
            } else {
                double phi_m = std::pow(kGoldenRatioConj, m);
                double env_g = phi_m + std::exp(-2.0 * m / (15.0 * N)) / (double(m) * m + 1.0);
                c.grad_atomistic = std::max(c.grad_atomistic, dmax / env_g);
                double env_v = g.eps * (phi_m + 1.0 / (m + 1.0));
                c.value_atomistic = std::max(c.value_atomistic, v / env_v);
            }
        }
    }
    return c;
}

}  // namespace qc
