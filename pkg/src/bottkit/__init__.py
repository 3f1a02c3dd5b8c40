"""Cohomology vanishing for homogeneous vector bundles on flag manifolds G/P.

Exact-arithmetic root systems, Bott's theorem for irreducible highest weights,
and vanishing ranges derived from significant (A, B)-roots.

>>> from bottkit import build_diagram, Weight, bott_cohomology
>>> P1 = build_diagram("A1")
>>> str(bott_cohomology(P1, set(), Weight.of(-3)))
'H^1 = V(1) (dim 2)'
"""

from .bott import CohomologyResult, bott_cohomology, line_bundle_table, weyl_dimension
from .errors import BottKitError
from .parabolic import (
    ParabolicData,
    SimpleTypeId,
    analyze_parabolic,
    d_alpha,
    d_P,
    ell_alpha,
    ell_P,
    min_nontrivial_dim,
    triviality_guarantee,
)
from .rootsys import (
    DynkinDiagram,
    Root,
    Weight,
    I_of,
    build_diagram,
    dominantize,
    find_root_chain,
    index,
    inner,
    is_singular,
    positive_roots,
)
from .vanishing import (
    ABConfig,
    SignificanceWitness,
    ab_roots,
    ell_AB,
    ell_simply_laced,
    rigidity_check,
    semisimple_vanishing,
    significance,
    significant_roots,
    theorem_H1_range,
    theorem_main_range,
)

__version__ = "0.1.0"
