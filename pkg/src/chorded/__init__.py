"""Chordality analysis for simplicial complexes and square-free monomial ideals.

The library decides higher-dimensional chordality properties (d-chorded,
d-cycle-complete, d-trees and their non-pure aggregate) of complexes given
by facet lists, computes simplicial homology over GF(2), GF(p) and the
rationals with exact arithmetic, and uses the homological vanishing
criterion to decide linear resolutions and componentwise linearity of
square-free monomial ideals.
"""

from .complex_core import (
    Complex,
    Face,
    MonomialIdeal,
    build_complex,
    complex_of_ideal,
    d_closure,
    d_complement,
    faces_of_dim,
    facet_ideal_generators,
    induced_subcomplex,
    is_d_complete,
    pure_skeleton,
    stanley_reisner_generators,
)
from .chordality import (
    ChordSetRecord,
    ChordalityReport,
    DChordedResult,
    boundary_chord_test,
    chordality_report,
    exhaustive_chord_set_search,
    is_chorded,
    is_d_chorded,
    is_d_cycle_complete,
    is_d_tree,
    verify_chord_set,
)
from .cycles import (
    CycleRecord,
    Partition,
    classify_minimality,
    cycle_from_complex,
    cycle_from_faces,
    d_path_components,
    decompose_cycle,
    enumerate_cycles_within,
    is_d_dimensional_cycle,
    is_orientable,
)
from .errors import CapExceeded, InputError, ParseError, PurityError, ShapeError
from .field_linalg import (
    DEFAULT_KERNEL_CAP,
    GF2,
    RATIONAL,
    ChainVector,
    FieldSpec,
    SparseMatrix,
    enumerate_kernel_vectors,
    gfp,
    in_image,
    kernel_basis,
    parse_field,
    rank,
)
from .homology import (
    BettiProfile,
    OrientedFace,
    betti_profile,
    boundary_matrix,
    induced_orientation,
    reduced_betti,
)
from .resolutions import (
    ComponentVerdict,
    PROBE_FIELDS,
    ResolutionVerdict,
    degree_component,
    has_t_linear_resolution,
    is_componentwise_linear,
    min_generation_degree,
)

__version__ = "0.1.0"
