"""Exact certification toolkit for nodal cubic threefolds.

Computes, over the rationals and small cyclotomic fields with no floating
point anywhere, certified singular loci, singularity types, automorphism
groups, and group-action obstructions (fixed points, short orbits, invariant
lines and planes) for a built-in catalog of nodal cubics, together with the
symbolic coincidence conditions used to pin down the catalog.
"""

from .field import Cyclotomic, zeta, rational

__version__ = "0.1.0"

__all__ = ["Cyclotomic", "zeta", "rational", "__version__"]
