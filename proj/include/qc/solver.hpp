#pragma once
#include "qc/system.hpp"

namespace qc {

struct SolveReport {
    bool converged = false;
    int iterations = 0;
    double residual_norm = 0.0;
    double rhs_norm = 0.0;
};

// Jacobi-preconditioned conjugate gradients for the SPD systems
// (Dirichlet and periodic assemblies).  Deterministic: fixed sequential
// reduction order.  max_iter < 0 picks 50*sqrt(n)+1000.
std::pair<std::vector<double>, SolveReport>
solve_cg(const StencilSystem& sys, double tol = 1e-12, int max_iter = -1);

// Jacobi-preconditioned BiCGStab for the padded assembly, whose seam rows
// between QC band and padding break symmetry.
std::pair<std::vector<double>, SolveReport>
solve_bicgstab(const StencilSystem& sys, double tol = 1e-12, int max_iter = -1);

// Dispatch on boundary condition.
std::pair<std::vector<double>, SolveReport>
solve_auto(const StencilSystem& sys, double tol = 1e-12, int max_iter = -1);

// Dense LU oracle (LAPACK dgesv); refuses systems above 20000 unknowns.
std::vector<double> solve_dense(const StencilSystem& sys);

} // namespace qc
