#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qc/analytic_square.hpp"
#include "qc/grid.hpp"

namespace qc {

// One inequality evaluation.  `satisfied` means lhs <= rhs (or lhs < rhs for
// the strict positivity/negativity checks); slack = rhs - lhs.  Names ending
// in "_log" compare logarithms so that exponentially large quantities never
// leave the representable range.
struct BoundReport {
    std::string name;
    int k = 0;
    int M = 0;
    int N = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool satisfied = false;
};

BoundReport make_report(std::string name, int k, int M, int N, double lhs,
                        double rhs, bool strict = false);

// Mode-parameter inequalities that depend only on k and N.
std::vector<BoundReport> check_elementary(int k, int N);

// Inequalities for the boundary ratio rho (needs M as well).
std::vector<BoundReport> check_rho(int k, int M, int N);

// Closed-form expansion of the mode determinant:
//   (cosh g + cosh d) * det = A*XU + B*YU + C*XV + D*YV + extra
// with X = sinh(M g), Y = cosh(M g), U = sinh(M d), V = cosh(M d).
// Reports cover the sign of each coefficient, the floor |B| >= 5/6, a
// logarithmic lower bound on |det|, and agreement with the directly
// evaluated determinant.
struct DetExpansion {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
    double extra = 0.0;
    std::vector<BoundReport> reports;
};

DetExpansion det_expansion(const SpectralMode& mode, int M);

// Ratios of the leading determinant-expansion payloads to the scale they are
// supposed to be bounded by.  ratio_cb covers the continuum-side numerator,
// ratio_at the atomistic-side one.
struct LeadingTerms {
    double Q0 = 0.0;
    double Q1 = 0.0;
    double Qa1 = 0.0;
    double Qa2 = 0.0;
    double Qa3 = 0.0;
    double Qa4 = 0.0;
    double ratio_cb = 0.0;
    double ratio_at = 0.0;
    std::vector<BoundReport> reports;
};

LeadingTerms leading_terms(const SpectralMode& mode, int M);

// Both sides of the damped-sine summation identity
//   sum_{k=1}^{N} r^{2k-1} sin((2k-1)x)
//     = [(r + r^3) sin x - r^{2N+1} sin((2N+1)x) + r^{2N+3} sin((2N-1)x)]
//       / (1 - 2 r^2 cos 2x + r^4).
// Returns {summed lhs, closed-form rhs}.
std::pair<double, double> trig_identity(double r, double x, int N);

// Smallest constants C making the interface-decay envelopes hold for the
// given field: divided gradients and values, each measured separately on the
// continuum side (m <= -1) and the atomistic side (m >= 0).
struct DecayConstants {
    double grad_continuum = 0.0;
    double grad_atomistic = 0.0;
    double value_continuum = 0.0;
    double value_atomistic = 0.0;
};

DecayConstants check_pointwise_decay(const ScalarField& y);

}  // namespace qc
