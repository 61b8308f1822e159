from fractions import Fraction

import pytest

from chorded import (
    CapExceeded,
    ChainVector,
    Complex,
    Face,
    GF2,
    InputError,
    RATIONAL,
    boundary_matrix,
    build_complex,
    classify_minimality,
    cycle_from_complex,
    cycle_from_faces,
    d_path_components,
    decompose_cycle,
    enumerate_cycles_within,
    is_d_dimensional_cycle,
    is_orientable,
)
from chorded.corpus import (
    bipyramid,
    cycle_graph,
    glued_tetrahedra,
    hollow_tetrahedron,
    octahedron_boundary,
    projective_plane,
)
from chorded.field_linalg import apply_matrix

from conftest import RP2_FACETS


def face_names(c, faces):
    return sorted(tuple(c.labels[v] for v in f.vertices) for f in faces)


def test_d_path_components_chain():
    c = build_complex(["abc", "acd", "ade"])
    part = d_path_components(c, 2)
    assert part.block_count == 1


def test_d_path_components_split():
    c = build_complex(["abc", "cde"])
    part = d_path_components(c, 2)
    assert part.block_count == 2


def test_d_path_components_double_tetra(double_tetra):
    # oracle: check adjacency by hand over all facet pairs
    faces = sorted(double_tetra.faces(2), key=lambda f: f.vertices)
    adjacency = {
        (f.vertices, g.vertices)
        for f in faces
        for g in faces
        if f != g and len(set(f.vertices) & set(g.vertices)) == 2
    }
    assert adjacency  # the two tetrahedra meet through faces sharing edge cd
    assert d_path_components(double_tetra, 2).block_count == 1


def test_is_cycle_tetra(tetra):
    assert is_d_dimensional_cycle(tetra, 2)


def test_is_cycle_rejects_odd_incidence():
    assert not is_d_dimensional_cycle(build_complex(["abc", "abd"]), 2)


def test_is_cycle_rp2(rp2):
    # oracle: every edge of the triangulation lies in exactly two facets
    from collections import Counter

    counts = Counter()
    for facet in RP2_FACETS:
        for e in ((facet[0], facet[1]), (facet[0], facet[2]), (facet[1], facet[2])):
            counts[e] += 1
    assert set(counts.values()) == {2}
    assert is_d_dimensional_cycle(rp2, 2)


def test_is_cycle_requires_purity_and_connectivity():
    assert not is_d_dimensional_cycle(build_complex(["abc", "de"]), 2)
    two_tetra_disjoint = build_complex(
        ["abc", "abd", "acd", "bcd", "efg", "efh", "egh", "fgh"]
    )
    assert not is_d_dimensional_cycle(two_tetra_disjoint, 2)


def test_cycle_from_faces_validates():
    with pytest.raises(InputError):
        cycle_from_faces([Face.of([0, 1, 2])], 2)


def test_enumerate_cycles_tetra(tetra):
    records = enumerate_cycles_within(tetra, 2, range(4))
    assert len(records) == 1
    assert records[0].faces == tetra.faces(2)
    assert records[0].is_complete()


def test_enumerate_cycles_none():
    c = build_complex(["abc", "abd"])
    assert enumerate_cycles_within(c, 2, range(4)) == []


def test_enumerate_cycles_double_tetra(double_tetra):
    records = enumerate_cycles_within(double_tetra, 2, range(6))
    assert [len(r.faces) for r in records] == [4, 4, 8]


def test_enumerate_cycles_within_window(double_tetra):
    # restricting to one tetrahedron's vertex set finds only that cycle
    records = enumerate_cycles_within(double_tetra, 2, [0, 1, 2, 3])
    assert len(records) == 1
    assert len(records[0].faces) == 4


def test_enumerate_cycles_cap(double_tetra):
    with pytest.raises(CapExceeded):
        enumerate_cycles_within(double_tetra, 2, range(6), cap=2)


def test_classify_union_cycle(double_tetra):
    records = enumerate_cycles_within(double_tetra, 2, range(6))
    union = records[-1]
    flagged = classify_minimality(union, double_tetra)
    assert flagged.face_minimal is False
    assert flagged.vertex_minimal is False
    assert flagged.orientable is True


def test_classify_tetra_standalone(tetra):
    record = cycle_from_complex(tetra, 2)
    flagged = classify_minimality(record, tetra)
    assert flagged.face_minimal and flagged.vertex_minimal
    assert flagged.orientable and flagged.orientably_face_minimal
    assert flagged.orientably_vertex_minimal


def test_classify_hexagon_cycle():
    hexagon = cycle_graph(6)
    record = cycle_from_complex(hexagon, 1)
    flagged = classify_minimality(record, hexagon)
    assert flagged.face_minimal is True


def test_outer_sphere_vertex_minimality_depends_on_ambient():
    from chorded.corpus import sphere_with_inner_tetrahedron

    ambient = sphere_with_inner_tetrahedron()
    records = enumerate_cycles_within(ambient, 2, range(8))
    sphere = next(r for r in records if len(r.faces) == 12)
    in_ambient = classify_minimality(sphere, ambient)
    assert in_ambient.vertex_minimal is False
    standalone = Complex(8, sphere.faces)
    alone = classify_minimality(sphere, standalone)
    assert alone.vertex_minimal is True


def test_orientable_tetra_signs_kill_boundary(tetra):
    record = cycle_from_complex(tetra, 2)
    signs = is_orientable(record)
    assert signs is not None
    m = boundary_matrix(tetra, 2, RATIONAL)
    vec = ChainVector({f: Fraction(s) for f, s in signs.items()})
    assert apply_matrix(m, vec, RATIONAL).is_zero


def test_rp2_not_orientable(rp2):
    record = cycle_from_complex(rp2, 2)
    assert is_orientable(record) is None


def test_hexagon_orientable_alternating():
    hexagon = cycle_graph(6)
    record = cycle_from_complex(hexagon, 1)
    signs = is_orientable(record)
    assert signs is not None
    assert set(signs.values()) <= {1, -1}
    m = boundary_matrix(hexagon, 1, RATIONAL)
    vec = ChainVector({f: Fraction(s) for f, s in signs.items()})
    assert apply_matrix(m, vec, RATIONAL).is_zero
    # walking the six-cycle, the wrap-around edge carries the opposite sign
    assert signs[Face.of([0, 1])] == -signs[Face.of([0, 5])]


def test_decompose_double_tetra(double_tetra):
    records = enumerate_cycles_within(double_tetra, 2, range(6))
    union = records[-1]
    part = decompose_cycle(union)
    assert [len(b) for b in part.blocks] == [4, 4]
    assert part.covered() == union.faces


def test_decompose_face_minimal_is_singleton(tetra):
    record = cycle_from_complex(tetra, 2)
    part = decompose_cycle(record)
    assert part.block_count == 1


def test_decompose_octahedron_singleton():
    oct_boundary = octahedron_boundary()
    record = cycle_from_complex(oct_boundary, 2)
    flagged = classify_minimality(record, oct_boundary)
    assert flagged.face_minimal is True
    assert decompose_cycle(record).block_count == 1


def test_bipyramid_cycle_flags():
    bp = bipyramid()
    record = cycle_from_complex(bp, 2)
    flagged = classify_minimality(record, bp)
    assert flagged.face_minimal is True
    assert flagged.vertex_minimal is True
    assert not record.is_complete()


def test_minimal_support_sieves_agree():
    # force the vectorized sieve onto small instances and compare with the
    # bucketed pure-python filter
    import itertools
    import random

    from chorded.cycles import minimal_kernel_supports

    rng = random.Random(99)
    for _ in range(40):
        n = rng.randint(4, 6)
        pool = list(itertools.combinations(range(n), 3))
        faces = sorted(
            (Face.of(t) for t in rng.sample(pool, rng.randint(3, len(pool)))),
            key=lambda f: f.vertices,
        )
        masks = [f.mask for f in faces]
        assert minimal_kernel_supports(masks, 1 << 20, packed_threshold=1) == \
            minimal_kernel_supports(masks, 1 << 20, packed_threshold=10**9)


def test_window_solver_preimages_sum_to_target():
    from chorded.chordality import _window_boundary_preimage
    from chorded.corpus import bipyramid_with_chord, octahedron_with_axis_chords

    for ambient in (bipyramid_with_chord(), octahedron_with_axis_chords()):
        for record in enumerate_cycles_within(ambient, 2, range(ambient.vertex_count)):
            solved = _window_boundary_preimage(ambient, 2, record.vertex_mask, record.faces)
            if solved is None:
                continue
            top_mask, tops = solved
            acc = {}
            for j, g in enumerate(tops):
                if not top_mask >> j & 1:
                    continue
                for v in g.vertices:
                    sub = g.without(v)
                    acc[sub] = acc.get(sub, 0) ^ 1
            summed = {f for f, parity in acc.items() if parity}
            assert summed == set(record.faces)


def brute_force_orientable(record):
    """Independent oracle: try every sign assignment over the rationals."""
    import itertools

    faces = sorted(record.faces, key=lambda f: f.vertices)
    n = max(v for f in faces for v in f.vertices) + 1
    m = boundary_matrix(Complex(n, faces), record.dim, RATIONAL)
    for signs in itertools.product((1, -1), repeat=len(faces)):
        vec = ChainVector({f: Fraction(s) for f, s in zip(faces, signs)})
        if apply_matrix(m, vec, RATIONAL).is_zero:
            return True
    return False


def test_orientability_matches_brute_force():
    import itertools
    import random

    rng = random.Random(2024)
    checked = 0
    while checked < 60:
        n = rng.randint(4, 6)
        pool = list(itertools.combinations(range(n), 3))
        faces = [Face.of(t) for t in rng.sample(pool, rng.randint(4, min(10, len(pool))))]
        c = Complex(n, faces)
        for record in enumerate_cycles_within(c, 2, range(n), 1 << 12):
            if len(record.faces) > 12:
                continue
            assert (is_orientable(record) is not None) == brute_force_orientable(record)
            checked += 1
    assert checked >= 60


def test_union_cycle_not_orientably_face_minimal(double_tetra):
    records = enumerate_cycles_within(double_tetra, 2, range(6))
    union = classify_minimality(records[-1], double_tetra)
    assert union.orientable is True
    assert union.orientably_face_minimal is False
    assert union.orientably_vertex_minimal is False


def test_betti_matches_independent_gf2_oracle():
    # recompute reduced GF(2) Betti numbers from scratch with a separate
    # elimination over explicitly built incidence rows
    import itertools
    import random

    from chorded import reduced_betti

    def oracle_rank(rows, ncols):
        work = [r for r in rows]
        r = 0
        for col in range(ncols):
            piv = next((i for i in range(r, len(work)) if work[i] >> col & 1), None)
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            for i in range(len(work)):
                if i != r and work[i] >> col & 1:
                    work[i] ^= work[r]
            r += 1
        return r

    def oracle_betti(c, i):
        def faces(k):
            out = set()
            for facet in c.facets:
                out.update(itertools.combinations(facet.vertices, k + 1))
            return sorted(out)

        def rows_of(k):
            cols = faces(k)
            if k == 0:
                return [(1 << len(cols)) - 1] if cols else [], cols
            lower = {f: i2 for i2, f in enumerate(faces(k - 1))}
            rows = [0] * len(lower)
            for j, f in enumerate(cols):
                for drop in range(len(f)):
                    rows[lower[f[:drop] + f[drop + 1:]]] |= 1 << j
            return rows, cols

        rows_i, cols_i = rows_of(i)
        rows_up, cols_up = rows_of(i + 1)
        if not cols_i:
            return 0
        return len(cols_i) - oracle_rank(rows_i, len(cols_i)) - oracle_rank(rows_up, len(cols_up))

    rng = random.Random(515)
    for _ in range(40):
        n = rng.randint(3, 6)
        pool = [c for k in (2, 3, 4) for c in itertools.combinations(range(n), k) if k <= n]
        chosen = rng.sample(pool, rng.randint(1, min(8, len(pool))))
        c = Complex(n, [Face.of(t) for t in chosen])
        for i in range(c.dim + 1):
            assert reduced_betti(c, i, GF2) == oracle_betti(c, i), (chosen, i)


def test_smallest_cycle_has_d_plus_two_vertices():
    # exhaustive search over pure 2-complexes on 4 labelled vertices
    import itertools

    triples = list(itertools.combinations(range(4), 3))
    found = []
    for bits in range(1, 1 << 4):
        faces = [Face.of(t) for i, t in enumerate(triples) if bits >> i & 1]
        c = Complex(4, faces)
        if is_d_dimensional_cycle(c, 2):
            found.append(frozenset(faces))
    assert found == [frozenset(Face.of(t) for t in triples)]
