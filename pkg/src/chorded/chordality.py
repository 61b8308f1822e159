"""Chord sets, the d-chorded decision, cycle-completeness and d-trees.

A chord set of a d-dimensional cycle breaks it into at least two strictly
smaller cycles with even covering parity on the chords and odd parity on the
cycle's own faces.  The primary d-chorded decision avoids the doubly
exponential direct search by testing, per face-minimal non-complete cycle,
whether the GF(2) sum of its faces is a (d+1)-boundary inside the d-closure
of the ambient complex restricted to the cycle's vertex set.  A successful
membership test converts its preimage into an explicit chord set
(complete-cycle witnesses, one per preimage face), re-verified against the
definition, so a fully passing complex really is d-chorded; conversely, in a
d-chorded complex every cycle's face sum bounds in the closure, so the
complex-level verdict is exact even though a single cycle can own a chord
set whose witnesses are not complete cycles.  The tiny exhaustive searcher
exists to cross-validate the two routes and is gated to small instances.

Cap overruns always surface as ``CapExceeded`` (inconclusive), never as a
negative verdict.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .complex_core import Complex, Face
from .cycles import (
    CycleRecord,
    _column_adjacency,
    _faces_within,
    _kernel_supports,
    _nullity,
    _sorted_face_list,
    _support_components,
    _orientable_cycle_within,
    _nullity_within,
    is_d_dimensional_cycle,
    is_orientable,
    minimal_kernel_supports,
)
from .errors import CapExceeded, InputError, PurityError
from .field_linalg import DEFAULT_KERNEL_CAP

__all__ = [
    "ChordSetRecord",
    "ChordalityReport",
    "DChordedResult",
    "verify_chord_set",
    "boundary_chord_test",
    "exhaustive_chord_set_search",
    "is_d_chorded",
    "is_d_cycle_complete",
    "is_d_tree",
    "is_chorded",
    "chordality_report",
    "MAX_CHORD_CANDIDATES",
    "MAX_SWEEP_VERTICES",
]

MAX_CHORD_CANDIDATES = 12
MAX_SWEEP_VERTICES = 16


@dataclass(frozen=True)
class ChordSetRecord:
    """A verified chord set: the chords, the witness cycles, and how it was found."""

    chords: frozenset[Face]
    witnesses: tuple[CycleRecord, ...]
    source: str  # "exhaustive" or "boundary_certificate"

    def sort_key(self) -> tuple:
        return tuple(sorted(f.vertices for f in self.chords))


@dataclass(frozen=True)
class DChordedResult:
    """Outcome of the d-chorded decision with per-cycle certificates.

    ``certificates`` pairs face-minimal non-complete cycles with their chord
    sets (or ``None`` for the cycles without one, which make the verdict
    false); when a certificate limit was in force it holds a prefix of the
    passing cycles in canonical order plus all failing ones.
    ``complete_cycles`` counts the face-minimal cycles that needed no chord
    set; ``non_complete_cycles`` counts all cycles the verdict covers.
    """

    d: int
    chorded: bool
    certificates: tuple[tuple[CycleRecord, ChordSetRecord | None], ...]
    complete_cycles: int
    non_complete_cycles: int = 0


@dataclass(frozen=True)
class ChordalityReport:
    """The four verdicts for one pure d-dimensional complex.

    The nesting chain (tree => chorded => cycle-complete =>
    orientably-cycle-complete) is asserted on construction.
    """

    d: int
    d_tree: bool
    d_chorded: bool
    d_cycle_complete: bool
    orientably_d_cycle_complete: bool
    chorded_detail: DChordedResult

    def __post_init__(self):
        chain = (self.d_tree, self.d_chorded, self.d_cycle_complete, self.orientably_d_cycle_complete)
        for earlier, later in zip(chain, chain[1:]):
            if earlier and not later:
                raise AssertionError(f"nesting chain violated: {chain}")


def _require_pure(c: Complex, d: int, op: str) -> None:
    if d < 0:
        raise PurityError(f"{op}: dimension must be non-negative")
    if not c.is_pure(d):
        raise PurityError(f"{op}: complex is not pure {d}-dimensional")


def verify_chord_set(
    chords,
    cycle: CycleRecord,
    ambient: Complex,
    witnesses,
) -> bool:
    """Check the chord-set conditions directly against the definition.

    True iff: the chords are d-faces of the ambient complex, not faces of
    the cycle, with vertices inside the cycle's vertex set; there are at
    least two witnesses, each a d-dimensional cycle on strictly fewer
    vertices than the input cycle; the witness faces cover exactly the
    cycle's faces plus the chords; every chord lies in an even number of
    witnesses and every cycle face in an odd number.
    """
    chords = frozenset(chords)
    witnesses = tuple(witnesses)
    d = cycle.dim
    vmask = cycle.vertex_mask
    ambient_d = ambient.faces(d)
    if len(witnesses) < 2:
        return False
    for chord in chords:
        if chord in cycle.faces or chord not in ambient_d or chord.mask & ~vmask:
            return False
    union: set[Face] = set()
    target = cycle.faces | chords
    nverts = len(cycle.vertices)
    for w in witnesses:
        if w.dim != d or not w.faces <= target:
            return False
        if len(w.vertices) >= nverts:
            return False
        probe = Complex(ambient.vertex_count, w.faces)
        if not is_d_dimensional_cycle(probe, d):
            return False
        union |= w.faces
    if union != target:
        return False
    for chord in chords:
        if sum(chord in w.faces for w in witnesses) % 2 != 0:
            return False
    for face in cycle.faces:
        if sum(face in w.faces for w in witnesses) % 2 != 1:
            return False
    return True


def _closure_top_faces(ambient: Complex, d: int, wmask: int) -> list[Face]:
    """(d+2)-subsets of the vertex window whose (d+1)-subsets are all d-faces.

    These are exactly the (d+1)-dimensional faces of the d-closure of the
    ambient complex induced on the window.
    """
    dmasks = {f.mask for f in ambient.faces(d) if f.mask & ~wmask == 0}
    window = Face(wmask).vertices
    out: set[int] = set()
    for m in dmasks:
        for v in window:
            bit = 1 << v
            if m & bit:
                continue
            cand = m | bit
            if cand in out:
                continue
            ok = True
            mm = cand
            while mm:
                low = mm & -mm
                if (cand ^ low) not in dmasks:
                    ok = False
                    break
                mm ^= low
            if ok:
                out.add(cand)
    return _sorted_face_list(Face(m) for m in out)


@lru_cache(maxsize=32768)
def _window_solver(
    ambient: Complex, d: int, wmask: int
) -> tuple[tuple[Face, ...], tuple[Face, ...], dict[int, tuple[int, int]]]:
    """Reusable GF(2) boundary-membership solver for one vertex window.

    Returns the window's d-faces, the closure's (d+1)-faces, and a reduced
    row basis of the boundary image: a map from pivot bit to
    ``(row_mask, tracking_mask)`` where ``row_mask`` is a combination of
    boundary columns over the d-face index space and ``tracking_mask``
    records which (d+1)-faces were combined into it.
    """
    faces = tuple(_faces_within(ambient, d, wmask))
    face_pos = {f: i for i, f in enumerate(faces)}
    tops = tuple(_closure_top_faces(ambient, d, wmask))
    rows: list[tuple[int, int]] = []
    for j, g in enumerate(tops):
        m = 0
        for v in g.vertices:
            m |= 1 << face_pos[g.without(v)]
        rows.append((m, 1 << j))
    pivot_map: dict[int, tuple[int, int]] = {}
    for m, track in rows:
        while m:
            low = m & -m
            hit = pivot_map.get(low)
            if hit is None:
                pivot_map[low] = (m, track)
                break
            m ^= hit[0]
            track ^= hit[1]
    return faces, tops, pivot_map


def _window_boundary_preimage(
    ambient: Complex, d: int, wmask: int, cycle_faces
) -> tuple[int, tuple[Face, ...]] | None:
    """Preimage of a face sum under the window solver, or None.

    Returns ``(top_mask, tops)`` identifying which closure (d+1)-faces sum
    to the given d-faces.
    """
    faces, tops, pivot_map = _window_solver(ambient, d, wmask)
    face_pos = {f: i for i, f in enumerate(faces)}
    rhs = 0
    for f in cycle_faces:
        rhs |= 1 << face_pos[f]
    acc = 0
    while rhs:
        low = rhs & -rhs
        hit = pivot_map.get(low)
        if hit is None:
            return None
        rhs ^= hit[0]
        acc ^= hit[1]
    return acc, tops


def _complete_cycle_on(vertex_mask: int, d: int) -> CycleRecord:
    """The d-dimensional complete cycle on a (d+2)-vertex set."""
    verts = Face(vertex_mask).vertices
    faces = frozenset(Face.of(combo) for combo in itertools.combinations(verts, d + 1))
    return CycleRecord(d, faces)


def boundary_chord_test(
    cycle: CycleRecord, ambient: Complex, cap: int = DEFAULT_KERNEL_CAP
) -> ChordSetRecord | None:
    """Decide chord-set existence through GF(2) boundary membership.

    Requires a face-minimal, non-d-complete cycle inside a pure
    d-dimensional ambient complex.  Tests whether the sum of the cycle's
    faces is a (d+1)-boundary of the induced d-closure; on success the
    preimage faces yield the chord set and its complete-cycle witnesses,
    which are verified before being returned.  Returns ``None`` when the
    sum is not a boundary.
    """
    d = cycle.dim
    _require_pure(ambient, d, "boundary_chord_test")
    if cycle.is_complete():
        raise InputError("boundary_chord_test expects a non-d-complete cycle")
    if _nullity([f.mask for f in _sorted_face_list(cycle.faces)]) != 1:
        raise InputError("boundary_chord_test expects a face-minimal cycle")

    solved = _window_boundary_preimage(ambient, d, cycle.vertex_mask, cycle.faces)
    if solved is None:
        return None
    top_mask, tops = solved
    chosen = sorted(
        (tops[j] for j in range(len(tops)) if top_mask >> j & 1),
        key=lambda f: f.vertices,
    )
    chord_faces: set[Face] = set()
    witnesses = []
    for g in chosen:
        witnesses.append(_complete_cycle_on(g.mask, d))
        for v in g.vertices:
            sub = g.without(v)
            if sub not in cycle.faces:
                chord_faces.add(sub)
    record = ChordSetRecord(frozenset(chord_faces), tuple(witnesses), "boundary_certificate")
    if not verify_chord_set(record.chords, cycle, ambient, record.witnesses):
        raise AssertionError("boundary certificate failed chord-set verification")
    return record


def exhaustive_chord_set_search(
    cycle: CycleRecord,
    ambient: Complex,
    cap: int = DEFAULT_KERNEL_CAP,
    max_candidates: int = MAX_CHORD_CANDIDATES,
) -> ChordSetRecord | None:
    """Directly search chord subsets and witness covers; tiny instances only.

    This is the oracle that validates ``boundary_chord_test``.  It scans
    candidate chord sets in ascending (size, lex) order; for each it
    enumerates every cycle supported on the cycle's faces plus the chords,
    keeps those on strictly fewer vertices, and looks for a sub-collection
    whose GF(2) face sum matches the cycle with all chords covered.
    """
    d = cycle.dim
    _require_pure(ambient, d, "exhaustive_chord_set_search")
    if cycle.is_complete():
        raise InputError("exhaustive_chord_set_search expects a non-d-complete cycle")
    wmask = cycle.vertex_mask
    candidates = [f for f in _faces_within(ambient, d, wmask) if f not in cycle.faces]
    if len(candidates) > max_candidates:
        raise CapExceeded(
            f"{len(candidates)} candidate chords exceed the exhaustive-search bound {max_candidates}",
            needed=len(candidates),
            cap=max_candidates,
        )

    omega_faces = _sorted_face_list(cycle.faces)
    nverts = len(cycle.vertices)

    for size in range(1, len(candidates) + 1):
        for chord_combo in itertools.combinations(candidates, size):
            universe = _sorted_face_list(set(omega_faces) | set(chord_combo))
            index = {f: i for i, f in enumerate(universe)}
            masks = [f.mask for f in universe]
            adj = _column_adjacency(masks, d)
            pool: set[int] = set()
            for support in _kernel_supports(masks, cap):
                for comp in _support_components(support, adj):
                    pool.add(comp)
            target = 0
            for f in omega_faces:
                target |= 1 << index[f]
            chord_cover = 0
            for f in chord_combo:
                chord_cover |= 1 << index[f]
            usable = []
            for comp in sorted(pool, key=lambda m: (m.bit_count(), m)):
                vm = 0
                for j in range(len(universe)):
                    if comp >> j & 1:
                        vm |= universe[j].mask
                if vm.bit_count() < nverts:
                    usable.append(comp)
            found = _cover_search(usable, target, chord_cover, cap)
            if found is not None and len(found) >= 2:
                witnesses = tuple(
                    CycleRecord(d, frozenset(universe[j] for j in range(len(universe)) if comp >> j & 1))
                    for comp in found
                )
                record = ChordSetRecord(frozenset(chord_combo), witnesses, "exhaustive")
                if verify_chord_set(record.chords, cycle, ambient, record.witnesses):
                    return record
    return None


def _cover_search(pool: list[int], target: int, must_cover: int, cap: int) -> list[int] | None:
    """Find a pool subset whose XOR equals target and whose union covers must_cover."""
    n = len(pool)
    if n == 0:
        return None
    if 1 << n > cap:
        raise CapExceeded(f"witness cover search over 2^{n} subsets", 1 << n, cap)
    suffix_or = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_or[i] = suffix_or[i + 1] | pool[i]

    best: list[int] | None = None

    def dfs(i: int, chosen: list[int], acc_xor: int, acc_or: int) -> bool:
        nonlocal best
        if acc_xor == target and acc_or & must_cover == must_cover and len(chosen) >= 2:
            best = chosen[:]
            return True
        if i == n:
            return False
        # any bit with wrong parity or missing coverage must occur in the tail
        needed = (target ^ acc_xor) | (must_cover & ~acc_or)
        if needed & ~suffix_or[i]:
            return False
        if dfs(i + 1, chosen + [pool[i]], acc_xor ^ pool[i], acc_or | pool[i]):
            return True
        return dfs(i + 1, chosen, acc_xor, acc_or)

    return best if dfs(0, [], 0, 0) else None


def is_d_chorded(
    c: Complex,
    d: int,
    cap: int = DEFAULT_KERNEL_CAP,
    certificate_limit: int | None = 128,
) -> DChordedResult:
    """Whether every face-minimal non-d-complete cycle has a chord set.

    Face-minimal cycles are the inclusion-minimal nonzero GF(2) kernel
    supports of the d-th boundary map.  Every non-complete one is decided
    through the boundary-membership test; explicit verified chord-set
    records are materialized for the first ``certificate_limit`` cycles in
    canonical order (pass None for all of them) and always for every
    failing cycle.  The verdict itself covers every cycle regardless of the
    limit.
    """
    _require_pure(c, d, "is_d_chorded")
    faces = _sorted_face_list(c.faces(d))
    masks = [f.mask for f in faces]
    complete_count = 0
    checked: list[CycleRecord] = []
    failing: list[CycleRecord] = []
    for support in minimal_kernel_supports(masks, cap):
        record = CycleRecord(
            d,
            frozenset(faces[j] for j in range(len(faces)) if support >> j & 1),
            face_minimal=True,
        )
        if record.is_complete():
            complete_count += 1
            continue
        if _window_boundary_preimage(c, d, record.vertex_mask, record.faces) is None:
            failing.append(record)
        else:
            checked.append(record)
    checked.sort(key=CycleRecord.sort_key)
    failing.sort(key=CycleRecord.sort_key)
    certificates: list[tuple[CycleRecord, ChordSetRecord | None]] = []
    budget = len(checked) if certificate_limit is None else certificate_limit
    for record in checked[:budget]:
        certificates.append((record, boundary_chord_test(record, c, cap)))
    for record in failing:
        certificates.append((record, None))
    certificates.sort(key=lambda pair: pair[0].sort_key())
    return DChordedResult(
        d,
        not failing,
        tuple(certificates),
        complete_count,
        non_complete_cycles=len(checked) + len(failing),
    )


def is_d_cycle_complete(
    c: Complex, d: int, orientable_mode: bool = False, cap: int = DEFAULT_KERNEL_CAP
) -> bool:
    """Whether all (orientably-)vertex-minimal cycles are d-complete."""
    _require_pure(c, d, "is_d_cycle_complete")
    if c.vertex_count > MAX_SWEEP_VERTICES:
        raise CapExceeded(
            f"vertex-subset sweeps limited to {MAX_SWEEP_VERTICES} vertices",
            needed=c.vertex_count,
            cap=MAX_SWEEP_VERTICES,
        )
    faces = _sorted_face_list(c.faces(d))
    masks = [f.mask for f in faces]
    adj = _column_adjacency(masks, d)
    seen: set[int] = set()
    for support in _kernel_supports(masks, cap):
        for comp in _support_components(support, adj):
            seen.add(comp)
    for comp in sorted(seen, key=lambda m: (m.bit_count(), m)):
        record = CycleRecord(d, frozenset(faces[j] for j in range(len(faces)) if comp >> j & 1))
        vmask = record.vertex_mask
        if orientable_mode:
            if is_orientable(record, cap) is None:
                continue
            minimal = not any(
                _orientable_cycle_within(c, d, vmask ^ (1 << v), cap)
                for v in record.vertices
            )
        else:
            minimal = all(
                _nullity_within(c, d, vmask ^ (1 << v)) == 0 for v in record.vertices
            )
        if minimal and not record.is_complete():
            return False
    return True


def is_d_tree(c: Complex, d: int) -> bool:
    """Pure d-dimensional with no d-dimensional cycles (zero GF(2) cycle space)."""
    _require_pure(c, d, "is_d_tree")
    return _nullity([f.mask for f in c.faces(d)]) == 0


def is_chorded(c: Complex, cap: int = DEFAULT_KERNEL_CAP) -> bool:
    """Whether every pure skeleton in dimensions 1..dim is d-chorded.

    Dimension 0 is chorded by convention, making the predicate total.
    """
    from .complex_core import pure_skeleton

    for d in range(1, c.dim + 1):
        if not is_d_chorded(pure_skeleton(c, d), d, cap).chorded:
            return False
    return True


def chordality_report(c: Complex, d: int, cap: int = DEFAULT_KERNEL_CAP) -> ChordalityReport:
    """Run all four predicates and package them with certificates."""
    detail = is_d_chorded(c, d, cap)
    return ChordalityReport(
        d=d,
        d_tree=is_d_tree(c, d),
        d_chorded=detail.chorded,
        d_cycle_complete=is_d_cycle_complete(c, d, False, cap),
        orientably_d_cycle_complete=is_d_cycle_complete(c, d, True, cap),
        chorded_detail=detail,
    )
