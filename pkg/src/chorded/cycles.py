"""Detection, enumeration and classification of d-dimensional cycles.

A d-dimensional cycle is a pure d-dimensional, d-path-connected complex in
which every (d-1)-face lies in an even number of d-faces.  Over GF(2) these
are exactly the d-path-connected components of supports of kernel vectors of
the d-th boundary map, which makes exhaustive enumeration possible: the
kernel has 2^nullity vectors and we walk all of them (Gray-code order) under
a configurable cap rather than using support-closure heuristics.

Face-minimality is intrinsic (no cycle on a strict subset of the d-faces)
and equals "the restricted cycle space is one-dimensional".  Vertex
minimality is relative to an ambient complex and is decided by sweeping the
maximal strict vertex subsets, which suffices because a cycle on any strict
subset lies within one of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

from .complex_core import Complex, Face
from .errors import CapExceeded, InputError
from .field_linalg import DEFAULT_KERNEL_CAP, gf2_kernel_masks, gf2_rref

__all__ = [
    "CycleRecord",
    "Partition",
    "d_path_components",
    "is_d_dimensional_cycle",
    "cycle_from_faces",
    "enumerate_cycles_within",
    "classify_minimality",
    "is_orientable",
    "decompose_cycle",
]


@dataclass(frozen=True)
class CycleRecord:
    """A d-dimensional cycle plus lazily computed classification flags.

    ``orientation`` holds a witness sign per face when the cycle is
    orientable.  Flags are ``None`` until ``classify_minimality`` or
    ``is_orientable`` fills them in.
    """

    dim: int
    faces: frozenset[Face]
    face_minimal: bool | None = None
    vertex_minimal: bool | None = None
    orientable: bool | None = None
    orientation: tuple[tuple[Face, int], ...] | None = None
    orientably_face_minimal: bool | None = None
    orientably_vertex_minimal: bool | None = None

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.faces:
            m |= f.mask
        return m

    @property
    def vertices(self) -> tuple[int, ...]:
        return Face(self.vertex_mask).vertices

    def is_complete(self) -> bool:
        """d-complete on its own vertex set."""
        return len(self.faces) == math.comb(len(self.vertices), self.dim + 1)

    def sort_key(self) -> tuple:
        return (len(self.faces), tuple(sorted(f.vertices for f in self.faces)))

    def orientation_map(self) -> dict[Face, int] | None:
        return None if self.orientation is None else dict(self.orientation)


@dataclass(frozen=True)
class Partition:
    """Disjoint face blocks covering an input face set."""

    blocks: tuple[frozenset[Face], ...]

    def __post_init__(self):
        seen: set[Face] = set()
        for block in self.blocks:
            if seen & block:
                raise InputError("partition blocks must be disjoint")
            seen |= block

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def covered(self) -> frozenset[Face]:
        out: set[Face] = set()
        for block in self.blocks:
            out |= block
        return frozenset(out)


# ---------------------------------------------------------------------------
# Internal mask-level helpers.  Columns index a sorted face list.

def _sorted_face_list(faces) -> list[Face]:
    return sorted(faces, key=lambda f: f.vertices)


def _incidence_rows(face_masks: list[int]) -> list[int]:
    """GF(2) boundary rows: one row per (d-1)-subface, bits over columns."""
    rows: dict[int, int] = {}
    for j, m in enumerate(face_masks):
        bit = 1 << j
        mm = m
        while mm:
            low = mm & -mm
            rows[m ^ low] = rows.get(m ^ low, 0) | bit
            mm ^= low
    return [rows[k] for k in sorted(rows)]


def _column_adjacency(face_masks: list[int], d: int) -> list[int]:
    """adj[j] = bitmask of columns sharing a (d-1)-subface with column j."""
    groups: dict[int, int] = {}
    for j, m in enumerate(face_masks):
        mm = m
        while mm:
            low = mm & -mm
            groups[m ^ low] = groups.get(m ^ low, 0) | (1 << j)
            mm ^= low
    adj = [0] * len(face_masks)
    for members in groups.values():
        if members.bit_count() >= 2:
            mm = members
            while mm:
                low = mm & -mm
                adj[low.bit_length() - 1] |= members
                mm ^= low
    for j in range(len(face_masks)):
        adj[j] &= ~(1 << j)
    return adj


def _support_components(support: int, adj: list[int]) -> list[int]:
    """Connected components of a column subset under the adjacency masks."""
    comps = []
    todo = support
    while todo:
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            mm = frontier
            while mm:
                low = mm & -mm
                grow |= adj[low.bit_length() - 1]
                mm ^= low
            grow &= support & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        todo &= ~comp
    return comps


def _nullity(face_masks: list[int]) -> int:
    if not face_masks:
        return 0
    _, pivots = gf2_rref(_incidence_rows(face_masks))
    return len(face_masks) - len(pivots)


def _kernel_supports(face_masks: list[int], cap: int) -> list[int]:
    """All nonzero kernel vectors of the cycle space, as column bitmasks."""
    if not face_masks:
        return []
    basis = gf2_kernel_masks(_incidence_rows(face_masks), len(face_masks))
    if (1 << len(basis)) > cap:
        raise CapExceeded(
            f"cycle space has 2^{len(basis)} vectors, above cap {cap}",
            needed=1 << len(basis),
            cap=cap,
        )
    out = []
    cur = 0
    for k in range(1, 1 << len(basis)):
        cur ^= basis[(k & -k).bit_length() - 1]
        out.append(cur)
    return out


def minimal_kernel_supports(
    face_masks: list[int], cap: int, packed_threshold: int = 12
) -> list[int]:
    """Inclusion-minimal nonzero kernel supports (the face-minimal cycles).

    Sorted by support size then column order; each is automatically
    d-path-connected.  Kernels with at least ``packed_threshold`` basis
    vectors go through a vectorized sieve when the supports fit in one
    machine word, since the kernel can hold 2^20 vectors.
    """
    if not face_masks:
        return []
    basis = gf2_kernel_masks(_incidence_rows(face_masks), len(face_masks))
    if (1 << len(basis)) > cap:
        raise CapExceeded(
            f"cycle space has 2^{len(basis)} vectors, above cap {cap}",
            needed=1 << len(basis),
            cap=cap,
        )
    if len(face_masks) <= 62 and len(basis) >= packed_threshold:
        return _minimal_supports_packed(basis)
    vecs = []
    cur = 0
    for k in range(1, 1 << len(basis)):
        cur ^= basis[(k & -k).bit_length() - 1]
        vecs.append(cur)
    vecs.sort(key=lambda v: (v.bit_count(), v))
    minimal: list[int] = []
    buckets: dict[int, list[int]] = {}
    for v in vecs:
        contained = False
        mm = v
        while mm and not contained:
            low = mm & -mm
            for c in buckets.get(low, ()):
                if c & ~v == 0:
                    contained = True
                    break
            mm ^= low
        if not contained:
            minimal.append(v)
            buckets.setdefault(v & -v, []).append(v)
    return minimal


def _minimal_supports_packed(basis: list[int]) -> list[int]:
    """Vectorized minimal-support sieve over word-sized kernel vectors."""
    import numpy as np

    arr = np.zeros(1, dtype=np.uint64)
    for b in basis:
        arr = np.concatenate([arr, arr ^ np.uint64(b)])
    arr = arr[1:]
    x = arr.copy()
    m1 = np.uint64(0x5555555555555555)
    m2 = np.uint64(0x3333333333333333)
    m4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    h01 = np.uint64(0x0101010101010101)
    x = x - ((x >> np.uint64(1)) & m1)
    x = (x & m2) + ((x >> np.uint64(2)) & m2)
    x = (x + (x >> np.uint64(4))) & m4
    pc = (x * h01) >> np.uint64(56)
    order = np.lexsort((arr, pc))
    arr = arr[order]
    minimal: list[int] = []
    while arr.size:
        c = arr[0]
        minimal.append(int(c))
        arr = arr[1:]
        arr = arr[(arr & c) != c]
    return minimal


def _faces_within(c: Complex, d: int, wmask: int) -> list[Face]:
    return _sorted_face_list(f for f in c.faces(d) if f.mask & ~wmask == 0)


# ---------------------------------------------------------------------------
# Public operations.

def d_path_components(c: Complex, d: int) -> Partition:
    """Partition the d-faces into d-path-connected components.

    Two d-faces are adjacent when they share exactly d vertices, i.e. a
    common (d-1)-subface.
    """
    faces = _sorted_face_list(c.faces(d))
    masks = [f.mask for f in faces]
    adj = _column_adjacency(masks, d)
    full = (1 << len(faces)) - 1
    comps = _support_components(full, adj) if faces else []
    blocks = []
    for comp in sorted(comps):
        blocks.append(frozenset(faces[j] for j in range(len(faces)) if comp >> j & 1))
    blocks.sort(key=lambda b: tuple(sorted(f.vertices for f in b)))
    return Partition(tuple(blocks))


def is_d_dimensional_cycle(c: Complex, d: int) -> bool:
    """Pure of dimension d, d-path-connected, with even subface incidences."""
    if not c.facets or not c.is_pure(d):
        return False
    faces = _sorted_face_list(c.faces(d))
    masks = [f.mask for f in faces]
    counts: dict[int, int] = {}
    for m in masks:
        mm = m
        while mm:
            low = mm & -mm
            counts[m ^ low] = counts.get(m ^ low, 0) + 1
            mm ^= low
    if any(v & 1 for v in counts.values()):
        return False
    adj = _column_adjacency(masks, d)
    return len(_support_components((1 << len(masks)) - 1, adj)) == 1


def cycle_from_faces(faces, d: int) -> CycleRecord:
    """Wrap a face set as a CycleRecord after validating the cycle axioms."""
    faces = frozenset(faces)
    if not faces:
        raise InputError("a cycle has at least one face")
    n = max(f.vertices[-1] for f in faces) + 1
    probe = Complex(n, faces)
    if not is_d_dimensional_cycle(probe, d):
        raise InputError("face set is not a d-dimensional cycle")
    return CycleRecord(d, faces)


def cycle_from_complex(c: Complex, d: int) -> CycleRecord:
    if not is_d_dimensional_cycle(c, d):
        raise InputError("complex is not a d-dimensional cycle")
    return CycleRecord(d, frozenset(c.faces(d)))


def enumerate_cycles_within(
    c: Complex, d: int, w, cap: int = DEFAULT_KERNEL_CAP
) -> list[CycleRecord]:
    """Every d-dimensional cycle whose faces lie in the subcomplex induced on ``w``.

    Computed as the d-path-connected components of the supports of all
    nonzero GF(2) kernel vectors of the induced pure skeleton's boundary
    map, deduplicated; this enumeration is exhaustive for the cycles on
    those faces.  ``w`` is an iterable of ambient vertex ids; records are in
    ambient coordinates.
    """
    wmask = 0
    for v in w:
        if not (0 <= v < c.vertex_count):
            raise InputError(f"unknown vertex id {v}")
        wmask |= 1 << v
    faces = _faces_within(c, d, wmask)
    masks = [f.mask for f in faces]
    supports = _kernel_supports(masks, cap)
    adj = _column_adjacency(masks, d)
    seen: set[int] = set()
    for s in supports:
        for comp in _support_components(s, adj):
            seen.add(comp)
    records = [
        CycleRecord(d, frozenset(faces[j] for j in range(len(faces)) if comp >> j & 1))
        for comp in seen
    ]
    records.sort(key=CycleRecord.sort_key)
    return records


@lru_cache(maxsize=65536)
def _nullity_within(c: Complex, d: int, wmask: int) -> int:
    return _nullity([f.mask for f in c.faces(d) if f.mask & ~wmask == 0])


@lru_cache(maxsize=16384)
def _orientable_cycle_within(c: Complex, d: int, wmask: int, cap: int) -> bool:
    """Whether some cycle with faces inside ``wmask`` is orientable."""
    faces = _faces_within(c, d, wmask)
    masks = [f.mask for f in faces]
    supports = _kernel_supports(masks, cap)
    adj = _column_adjacency(masks, d)
    seen: set[int] = set()
    for s in supports:
        for comp in _support_components(s, adj):
            seen.add(comp)
    for comp in sorted(seen, key=lambda m: (m.bit_count(), m)):
        record = CycleRecord(d, frozenset(faces[j] for j in range(len(faces)) if comp >> j & 1))
        if is_orientable(record) is not None:
            return True
    return False


def is_orientable(cycle: CycleRecord, cap: int = DEFAULT_KERNEL_CAP) -> dict[Face, int] | None:
    """A face -> +-1 assignment whose signed sum has zero boundary, or None.

    Equivalent to the balance condition on induced orientations: around
    every (d-1)-subface the induced orientations split evenly between the
    two classes.  Signs are propagated along subfaces of incidence exactly
    2; subfaces of higher incidence contribute balance constraints checked
    by a backtracking search over the remaining sign freedom.
    """
    faces = _sorted_face_list(cycle.faces)
    k = len(faces)
    inc: dict[int, list[tuple[int, int]]] = {}
    for idx, f in enumerate(faces):
        for j, v in enumerate(f.vertices):
            sigma = -1 if j & 1 else 1
            sub = f.mask ^ (1 << v)
            inc.setdefault(sub, []).append((idx, sigma))

    adj: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    constraints: list[list[tuple[int, int]]] = []
    for lst in inc.values():
        if len(lst) % 2:
            return None
        if len(lst) == 2:
            (a, sa), (b, sb) = lst
            w = -sa * sb
            adj[a].append((b, w))
            adj[b].append((a, w))
        elif len(lst) >= 4:
            constraints.append(lst)

    rel = [0] * k
    comp = [-1] * k
    ncomp = 0
    for start in range(k):
        if comp[start] >= 0:
            continue
        comp[start] = ncomp
        rel[start] = 1
        stack = [start]
        while stack:
            a = stack.pop()
            for b, w in adj[a]:
                want = rel[a] * w
                if comp[b] == -1:
                    comp[b] = ncomp
                    rel[b] = want
                    stack.append(b)
                elif rel[b] != want:
                    return None
        ncomp += 1

    if 1 << ncomp > cap:
        raise CapExceeded(f"orientability search over 2^{ncomp} sign choices", 1 << ncomp, cap)

    # collapse each balance constraint to coefficients per sign component
    collapsed: list[dict[int, int]] = []
    for lst in constraints:
        coeff: dict[int, int] = {}
        for idx, sigma in lst:
            coeff[comp[idx]] = coeff.get(comp[idx], 0) + sigma * rel[idx]
        collapsed.append(coeff)

    by_last_comp: list[list[dict[int, int]]] = [[] for _ in range(ncomp)]
    free_constraints: list[dict[int, int]] = []
    for coeff in collapsed:
        if coeff:
            by_last_comp[max(coeff)].append(coeff)
        else:
            free_constraints.append(coeff)
    # a constraint with no surviving component coefficients must already balance
    del free_constraints  # sums of empty coefficient sets are zero by construction

    signs = [0] * ncomp

    def search(cid: int) -> bool:
        if cid == ncomp:
            return True
        for choice in (1, -1):
            signs[cid] = choice
            if all(
                sum(cf * signs[cc] for cc, cf in coeff.items()) == 0
                for coeff in by_last_comp[cid]
            ) and search(cid + 1):
                return True
        signs[cid] = 0
        return False

    if not search(0):
        return None
    return {faces[i]: rel[i] * signs[comp[i]] for i in range(k)}


def classify_minimality(
    cycle: CycleRecord, ambient: Complex, cap: int = DEFAULT_KERNEL_CAP
) -> CycleRecord:
    """Fill in minimality and orientability flags relative to ``ambient``.

    Face-minimality restricts the cycle space to the cycle's own faces and
    asks for nullity one.  Vertex-minimality sweeps the maximal strict
    vertex subsets of the cycle inside the ambient complex.  The orientable
    variants enumerate the cycles actually present rather than shortcutting
    through the plain flags.
    """
    face_masks = [f.mask for f in _sorted_face_list(cycle.faces)]
    face_min = _nullity(face_masks) == 1

    vmask = cycle.vertex_mask
    vertex_min = all(
        _nullity_within(ambient, cycle.dim, vmask ^ (1 << v)) == 0
        for v in Face(vmask).vertices
    )

    orientation = is_orientable(cycle, cap)
    orientable = orientation is not None

    o_face_min: bool | None = None
    o_vertex_min: bool | None = None
    if orientable:
        faces = _sorted_face_list(cycle.faces)
        adj = _column_adjacency([f.mask for f in faces], cycle.dim)
        full = (1 << len(faces)) - 1
        o_face_min = True
        for support in _kernel_supports([f.mask for f in faces], cap):
            if support == full:
                continue
            for comp in _support_components(support, adj):
                sub = CycleRecord(
                    cycle.dim,
                    frozenset(faces[j] for j in range(len(faces)) if comp >> j & 1),
                )
                if is_orientable(sub, cap) is not None:
                    o_face_min = False
                    break
            if not o_face_min:
                break
        o_vertex_min = not any(
            _orientable_cycle_within(ambient, cycle.dim, vmask ^ (1 << v), cap)
            for v in Face(vmask).vertices
        )

    return replace(
        cycle,
        face_minimal=face_min,
        vertex_minimal=vertex_min,
        orientable=orientable,
        orientation=tuple(sorted(orientation.items())) if orientation else None,
        orientably_face_minimal=o_face_min,
        orientably_vertex_minimal=o_vertex_min,
    )


def decompose_cycle(cycle: CycleRecord, cap: int = DEFAULT_KERNEL_CAP) -> Partition:
    """Partition the faces into face-minimal d-dimensional cycles.

    Greedy: repeatedly extract the smallest-support kernel vector among the
    remaining faces; the remainder stays a disjoint union of cycles, so the
    loop terminates with a full partition.
    """
    remaining = _sorted_face_list(cycle.faces)
    blocks: list[frozenset[Face]] = []
    while remaining:
        masks = [f.mask for f in remaining]
        supports = minimal_kernel_supports(masks, cap)
        if not supports:
            raise InputError("input faces are not a disjoint union of cycles")
        best = supports[0]
        block = frozenset(remaining[j] for j in range(len(remaining)) if best >> j & 1)
        blocks.append(block)
        remaining = [f for f in remaining if f not in block]
    blocks.sort(key=lambda b: tuple(sorted(f.vertices for f in b)))
    return Partition(tuple(blocks))
