"""Boundary matrices, the induced-orientation rule, and reduced Betti numbers.

Face bases are ordered lexicographically by sorted vertex ids and every sign
derives from the sorted order: the boundary of an i-face puts sign (-1)^j on
the subface obtained by deleting the j-th (0-indexed) vertex.  Reduced
homology in degree 0 uses the augmentation row (all ones), so a single point
has vanishing reduced homology everywhere.  The empty complex is assigned 0
in every degree i >= 0; degree -1 is never reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complex_core import Complex, EMPTY_FACE, Face
from .errors import InputError
from .field_linalg import FieldSpec, GF2, SparseMatrix, rank

__all__ = [
    "OrientedFace",
    "BettiProfile",
    "boundary_matrix",
    "reduced_betti",
    "betti_profile",
    "induced_orientation",
    "sorted_faces",
]


def sorted_faces(c: Complex, i: int) -> tuple[Face, ...]:
    """The i-faces of ``c`` in the canonical basis order."""
    return tuple(sorted(c.faces(i), key=lambda f: f.vertices))


def _permutation_parity(seq: tuple[int, ...]) -> int:
    """0 for even, 1 for odd, by inversion count (sequences here are tiny)."""
    inv = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inv += 1
    return inv & 1


@dataclass(frozen=True)
class OrientedFace:
    """A face with one of its two orientation classes.

    ``flipped=False`` means the class of the increasing vertex order; two
    explicit orderings related by an even permutation construct equal
    values.
    """

    face: Face
    flipped: bool = False

    @classmethod
    def from_order(cls, ordering: tuple[int, ...] | list[int]) -> "OrientedFace":
        ordering = tuple(ordering)
        face = Face.of(ordering)
        rank_of = {v: i for i, v in enumerate(face.vertices)}
        return cls(face, bool(_permutation_parity(tuple(rank_of[v] for v in ordering))))

    def opposite(self) -> "OrientedFace":
        return OrientedFace(self.face, not self.flipped)

    def representative(self) -> tuple[int, ...]:
        """An explicit vertex ordering in this orientation class."""
        vs = list(self.face.vertices)
        if self.flipped:
            if len(vs) < 2:
                raise InputError("a 0-face has a single orientation")
            vs[0], vs[1] = vs[1], vs[0]
        return tuple(vs)


def induced_orientation(of: OrientedFace, removed_vertex: int) -> OrientedFace:
    """Orient the subface obtained by deleting one vertex.

    With the leading position counted as even: deleting at an odd position
    keeps the remaining order; deleting at an even position flips it.
    """
    if removed_vertex not in of.face:
        raise InputError(f"vertex {removed_vertex} not in face {of.face.vertices}")
    if len(of.face) < 2:
        raise InputError("cannot orient the boundary of a 0-face")
    order = of.representative()
    j = order.index(removed_vertex)
    remaining = order[:j] + order[j + 1 :]
    sub = Face.of(remaining)
    rank_of = {v: i for i, v in enumerate(sub.vertices)}
    parity = _permutation_parity(tuple(rank_of[v] for v in remaining))
    if j % 2 == 0:
        parity ^= 1
    return OrientedFace(sub, bool(parity))


def boundary_matrix(c: Complex, i: int, f: FieldSpec, augmented: bool = False) -> SparseMatrix:
    """The matrix of the i-th boundary map in the sorted-face bases.

    Columns are the i-faces, rows the (i-1)-faces; the entry for deleting
    the j-th vertex of a sorted column face is (-1)^j.  For ``i == 0`` the
    unaugmented matrix has no rows; with ``augmented=True`` it has the
    single augmentation row (all entries 1) labelled by the empty face.
    """
    if i < 0:
        raise InputError("boundary dimension must be non-negative")
    cols = sorted_faces(c, i)
    if i == 0:
        rows: tuple[Face, ...] = (EMPTY_FACE,) if augmented else ()
    else:
        rows = sorted_faces(c, i - 1)
    row_pos = {face: r for r, face in enumerate(rows)}
    entries: list[tuple[int, int, object]] = []
    for jcol, face in enumerate(cols):
        if i == 0:
            if augmented:
                entries.append((0, jcol, 1))
            continue
        for j, v in enumerate(face.vertices):
            sign = -1 if j & 1 else 1
            entries.append((row_pos[face.without(v)], jcol, f.normalize(sign)))
    return SparseMatrix(len(rows), len(cols), entries, rows, cols)


@lru_cache(maxsize=65536)
def _betti(c: Complex, i: int, f: FieldSpec) -> int:
    fi = len(c.faces(i))
    if fi == 0:
        return 0
    rank_i = rank(boundary_matrix(c, i, f, augmented=(i == 0)), f)
    rank_up = rank(boundary_matrix(c, i + 1, f), f)
    return fi - rank_i - rank_up


def reduced_betti(c: Complex, i: int, f: FieldSpec) -> int:
    """dim of the i-th reduced homology of ``c`` over ``f`` (i >= 0)."""
    if i < 0:
        raise InputError("reduced_betti is defined here for i >= 0 only")
    if i > c.dim:
        return 0
    return _betti(c, i, f)


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers in degrees 0..dim over one field."""

    field: FieldSpec
    dims: tuple[int, ...]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.dims))


def betti_profile(c: Complex, f: FieldSpec) -> BettiProfile:
    return BettiProfile(f, tuple(reduced_betti(c, i, f) for i in range(c.dim + 1)))


def gf2_cycle_matrix(c: Complex, d: int) -> SparseMatrix:
    """The GF(2) boundary matrix whose kernel is the d-cycle space of ``c``."""
    return boundary_matrix(c, d, GF2)
