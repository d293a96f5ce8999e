"""Exact computations for Kazhdan-Lusztig cells of extended affine type A.

The package is organised bottom-up:

* :mod:`affine_cells.weyl` -- the extended affine Weyl group, alcoves, partitions.
* :mod:`affine_cells.lambda_geometry` -- lambda-weights, the fundamental
  lambda-alcove, ``G_lam`` and the maximal double coset elements ``m_gamma``.
* :mod:`affine_cells.rings` -- ``Z[q, q^-1]``, group rings over ``P/Q_lam``,
  truncated series and matrices.
* :mod:`affine_cells.hecke` -- the affine Hecke algebra and its KL basis.
* :mod:`affine_cells.cells` -- folded alcove paths, the induced
  representations and leading matrices.
* :mod:`affine_cells.symfunc` -- ``G_lam``-symmetric and Schur functions.
* :mod:`affine_cells.satake` -- the lambda-relative Satake functional.
* :mod:`affine_cells.plancherel` -- Plancherel and asymptotic pairings.
* :mod:`affine_cells.cli` -- the ``affine-cells`` command line tool.
"""

__version__ = "0.1.0"
