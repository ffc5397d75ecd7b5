#pragma once
#include <array>

#include "qc/system.hpp"

namespace qc {

// Square lattice with first and second neighbor springs along x1 and nearest
// neighbor springs along x2, coupled to its long-wave continuum limit across
// the planar interface m = 0..1.  All rows are in the positive-diagonal
// convention, so the assembled Dirichlet/periodic matrix is SPD.
struct SquareRow {
    double diag;
    int count;
    std::array<int, 8> dm, dn;
    std::array<double, 8> coef;   // off-diagonal values (negative)
    double rhs;                   // ghost forcing, already scaled by eps
};

SquareRow square_row(int m, double eps);

// Interface forcing values by layer, positive-diagonal convention.
inline std::array<std::pair<int, double>, 3> square_ghost_rhs(double eps) {
    return {{{-1, -eps}, {0, 2 * eps}, {1, -eps}}};
}

StencilSystem assemble_square(const GridSpec& grid);

// Collapse along x2 (periodic transverse direction): the 1D chain with
// first/second neighbor constants (1,1) plus its interface rows.
StencilSystem reduce_square_1d(int M);

double square_energy(const ScalarField& y, const StencilSystem& sys);

} // namespace qc
