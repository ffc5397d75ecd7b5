#pragma once
#include <array>
#include <utility>

#include "qc/system.hpp"

namespace qc {

// Triangular lattice, nearest neighbors S1 and next-nearest neighbors S2 in
// lattice coordinates (a1, a2).  The atomistic half uses both shells, the
// continuum half the lumped nearest-neighbor limit; layers m = -1, 0, 1 carry
// the interface rows and the ghost forcing.
inline constexpr std::array<std::pair<int, int>, 6> kTriS1{{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
inline constexpr std::array<std::pair<int, int>, 6> kTriS2{{
    {1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {1, -2}, {2, -1}}};

struct TriRow {
    double diag;
    int count;
    std::array<int, 12> dm, dn;
    std::array<double, 12> coef;
    double rhs;
};

// QC row for layer m; the pure continuum row (used for every padding node) is
// tri_row(-2, ...) with rhs 0.
TriRow tri_row(int m, double eps);

StencilSystem assemble_triangular(const GridSpec& grid);

// Residual of the signed force stencils at the identity deformation z(x) = x,
// both displacement components.  Nonzero only on layers m in {-1, 0, 1}.
std::pair<ScalarField, ScalarField> ghost_force_at_identity(const GridSpec& grid);

// Collapse along x2: the 1D chain with neighbor constants (4,1) plus
// its interface rows.
StencilSystem reduce_tri_1d(int M);

// Uniform two-shell 1D chain on m in (-M, M): diag 2k1+2k2, -k1 at distance 1,
// -k2 at distance 2, zero rhs.
StencilSystem chain_operator(double k1, double k2, int M);

} // namespace qc
