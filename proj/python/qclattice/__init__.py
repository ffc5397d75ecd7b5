"""Coupled lattice/continuum solvers on a rectangle with a planar seam.

Thin re-export of the compiled module.  Fields are numpy arrays of shape
(2M+1, 2N+1) indexed [m + M, n + N] over the closed index rectangle.
"""

try:
    # wheel layout: compiled module installed inside the package
    from ._qclattice import (
        analytic,
        ghost_force,
        gradient,
        mode_params,
        solve,
        width_sweep,
    )
except ImportError:
    # build-tree layout: module found next to the package on sys.path
    from _qclattice import (
        analytic,
        ghost_force,
        gradient,
        mode_params,
        solve,
        width_sweep,
    )

__all__ = [
    "analytic",
    "ghost_force",
    "gradient",
    "mode_params",
    "solve",
    "width_sweep",
]
