#pragma once
#include <vector>

#include "qc/grid.hpp"
#include "qc/scaled_real.hpp"

namespace qc {

// One transverse Fourier mode of the square-model Dirichlet problem.
// lambda = 2 sin^2(k pi / 4N); alpha, gamma, delta are the decay rates of the
// continuum and atomistic characteristic roots; rho the boundary weight;
// ell the sine transform of the interface forcing (zero for even k).
struct SpectralMode {
    int k = 0;
    int N = 0;
    double lambda = 0.0;
    double alpha = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double rho = 0.0;
    double ell = 0.0;
    ScaledReal a, b, c;          // log-scale; set by solve_coefficients
    bool coefficients_set = false;
};

struct SeriesSolution {
    ScalarField y;
    int modes_used = 0;
};

SpectralMode mode_params(int k, const GridSpec& grid);

// Boundary-adapted mode profile
//   F_m = [sinh((M+1-m)g) + sinh((M-m)g) cosh d - (-1)^m cosh((M-m)d) sinh g]
//         / (cosh g + cosh d),
// and its swap f_m = F_m(d, g).  Scaled form, stable for every m in [-M, M].
ScaledReal F_of_m(int m, double gamma, double delta, int M);

// 2x2 boundary determinant D(a,b) = (-1)^a F_a f_b - (-1)^b F_b f_a evaluated
// through a five-term split in e^{+-M(g+-d)} whose coefficients are assembled
// from single-exponential products; this avoids the catastrophic cancellation
// of the textbook form, which grows like 0.42*M digits.
ScaledReal pair_det(int a, int b, const SpectralMode& mode, int M);

// P r - p R through the same split (six pair_det combinations).
ScaledReal determinant(const SpectralMode& mode, int M);

// Numerators of the solution representation: transverse profile coefficients
// for the continuum side (one per mode) and the atomistic side (one per m).
ScaledReal cb_numerator(const SpectralMode& mode, int M);
ScaledReal at_numerator(int m, const SpectralMode& mode, int M);

// Production evaluation: scaled five-term arithmetic, double accumulation.
SeriesSolution eval_solution(const GridSpec& grid);

// Independent oracle: textbook coefficient route (a, b, c and direct F sums)
// carried out in 256-bit MPFR arithmetic.  Agrees with eval_solution to
// 1e-10 relative; kept as the internal consistency check.
SeriesSolution eval_solution_via_coefficients(const GridSpec& grid);

// Coefficient route for a single mode (256-bit internally, log-scale out).
SpectralMode solve_coefficients(const SpectralMode& mode, const GridSpec& grid);

// Finite-ness probe for very large grids: decay rates, log10 |det|, and
// sampled numerator/determinant ratios for one mode.
struct ModeProbe {
    int k = 0;
    double rho = 0.0;
    double ell = 0.0;
    double log10_det = 0.0;
    double cb_ratio = 0.0;                  // Q_k / det
    std::vector<double> at_ratio;           // Q_{m,k} / det at sampled m
    bool all_finite = false;
};
ModeProbe probe_mode(int k, const GridSpec& grid, const std::vector<int>& sample_m);

} // namespace qc
