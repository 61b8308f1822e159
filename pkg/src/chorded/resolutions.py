"""Linear-resolution and componentwise-linearity decisions for square-free ideals.

The t-linear-resolution test is the homological vanishing criterion: an
ideal minimally generated in degree t has a t-linear resolution over a field
exactly when every induced subcomplex of its associated complex has zero
reduced homology away from degree t-2.  The sweep walks every nonempty
vertex subset in (size, lex) order and reports the first failure as a
witness, so negative verdicts are small and reproducible.  The empty subset
and homological degree -1 are excluded.

"Over every field" is operationalized as the probe set {GF(2), GF(3), QQ};
reports carry that list rather than claiming the full quantifier.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complex_core import (
    Complex,
    Face,
    MonomialIdeal,
    complex_of_ideal,
    d_closure,
    induced_subcomplex,
    pure_skeleton,
)
from .errors import CapExceeded, InputError
from .field_linalg import FieldSpec, GF2, RATIONAL, gfp
from .homology import reduced_betti

__all__ = [
    "ResolutionVerdict",
    "ComponentVerdict",
    "min_generation_degree",
    "has_t_linear_resolution",
    "degree_component",
    "is_componentwise_linear",
    "PROBE_FIELDS",
    "MAX_LINRES_VARIABLES",
]

PROBE_FIELDS: tuple[FieldSpec, ...] = (GF2, gfp(3), RATIONAL)
MAX_LINRES_VARIABLES = 20


@dataclass(frozen=True)
class ResolutionVerdict:
    """Outcome of the t-linear test, with the failing subset when negative.

    ``witness`` is ``(vertex_ids, homological_degree, betti_value)`` for the
    first subset in sweep order whose reduced homology is nonzero away from
    t-2.
    """

    t: int
    field: FieldSpec
    linear: bool
    witness: tuple[tuple[int, ...], int, int] | None = None


@dataclass(frozen=True)
class ComponentVerdict:
    """Per-degree linear-resolution verdicts for one ideal over one field."""

    field: FieldSpec
    per_degree: tuple[tuple[int, ResolutionVerdict], ...]

    @property
    def componentwise_linear(self) -> bool:
        return all(v.linear for _, v in self.per_degree)


def min_generation_degree(i: MonomialIdeal) -> int | None:
    """The common degree of the minimal generators, or None when mixed.

    When the ideal is uniform of degree d+1 its complex must equal the
    d-closure of that complex's pure d-skeleton; this identity is asserted.
    The zero ideal is rejected.
    """
    if i.is_zero:
        raise InputError("the zero ideal has no generation degree")
    degrees = i.degrees()
    if len(degrees) != 1:
        return None
    t = next(iter(degrees))
    d = t - 1
    c = complex_of_ideal(i)
    if c != d_closure(pure_skeleton(c, d), d):
        raise AssertionError("uniform-degree ideal whose complex is not the closure of its skeleton")
    return t


def has_t_linear_resolution(i: MonomialIdeal, t: int, f: FieldSpec) -> ResolutionVerdict:
    """Homological vanishing sweep over all nonempty variable subsets.

    Linear iff every induced subcomplex of the ideal's complex has zero
    reduced homology in all degrees other than t-2.  Subsets are visited by
    increasing size then lexicographically; the first failure becomes the
    witness.
    """
    if i.variable_count > MAX_LINRES_VARIABLES:
        raise CapExceeded(
            f"linear-resolution sweep limited to {MAX_LINRES_VARIABLES} variables",
            needed=i.variable_count,
            cap=MAX_LINRES_VARIABLES,
        )
    got = min_generation_degree(i)
    if got != t:
        raise InputError(f"ideal is minimally generated in degree {got}, not {t}")
    n = complex_of_ideal(i)
    for size in range(1, i.variable_count + 1):
        for w in itertools.combinations(range(i.variable_count), size):
            ind = induced_subcomplex(n, w)
            for h in range(ind.dim + 1):
                if h == t - 2:
                    continue
                b = reduced_betti(ind, h, f)
                if b:
                    return ResolutionVerdict(t, f, False, (w, h, b))
    return ResolutionVerdict(t, f, True)


def degree_component(i: MonomialIdeal, d: int) -> MonomialIdeal:
    """The ideal generated by the square-free degree-d monomials inside ``i``.

    These are the d-subsets of variables containing some generator; they
    already form the minimal generating set.
    """
    if d < 0:
        raise InputError("degree must be non-negative")
    gens = []
    for combo in itertools.combinations(range(i.variable_count), d):
        m = 0
        for v in combo:
            m |= 1 << v
        if any(g.mask & ~m == 0 for g in i.generators):
            gens.append(Face(m))
    return MonomialIdeal(i.variable_count, gens, i.labels)


def is_componentwise_linear(i: MonomialIdeal, f: FieldSpec) -> ComponentVerdict:
    """Test every nonzero square-free degree component for a linear resolution."""
    if i.is_zero:
        raise InputError("the zero ideal has no components to test")
    if i.variable_count > MAX_LINRES_VARIABLES:
        raise CapExceeded(
            f"componentwise sweep limited to {MAX_LINRES_VARIABLES} variables",
            needed=i.variable_count,
            cap=MAX_LINRES_VARIABLES,
        )
    start = min(i.degrees())
    per_degree = []
    for d in range(start, i.variable_count + 1):
        component = degree_component(i, d)
        if component.is_zero:
            continue
        per_degree.append((d, has_t_linear_resolution(component, d, f)))
    return ComponentVerdict(f, tuple(per_degree))
