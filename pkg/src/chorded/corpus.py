"""Named desk-scale complexes and seeded random generators used by the
verification runner and the test suite.

The chordality figures ship in two flavours where it matters: the bare
boundary cycle, and the cycle together with the chord faces that make the
ambient complex d-chorded (a bare boundary has no candidate chords at all).
"""

from __future__ import annotations

import itertools
import random

from .complex_core import Complex, Face, build_complex

__all__ = [
    "hollow_tetrahedron",
    "complete_skeleton",
    "projective_plane",
    "glued_tetrahedra",
    "bipyramid",
    "bipyramid_with_chord",
    "octahedron_boundary",
    "octahedron_with_axis_chords",
    "sphere_with_inner_tetrahedron",
    "seven_vertex_counterexample",
    "tetra_with_fin",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "hexagon_with_long_chords",
    "random_pure_two_complex",
    "random_two_tree",
    "named_corpus",
]


def hollow_tetrahedron() -> Complex:
    """Boundary of the 3-simplex: the smallest 2-dimensional cycle."""
    return build_complex(["abc", "abd", "acd", "bcd"])


def complete_skeleton(n: int, d: int) -> Complex:
    """The d-dimensional d-complete complex on n vertices (all (d+1)-subsets)."""
    labels = [f"v{i}" for i in range(n)]
    return build_complex(
        [[labels[v] for v in combo] for combo in itertools.combinations(range(n), d + 1)],
        extra_vertices=labels,
    )


def projective_plane() -> Complex:
    """The 6-vertex triangulation of the real projective plane.

    Ten triangles on a complete 1-skeleton; every edge lies in exactly two
    of them.  Non-orientable, with mod-2 homology in degrees 1 and 2 and
    vanishing rational homology.
    """
    return build_complex(
        ["123", "134", "145", "156", "126", "235", "245", "246", "346", "356"]
    )


def glued_tetrahedra() -> Complex:
    """Two hollow tetrahedra sharing one edge: a cycle that is neither
    face-minimal nor vertex-minimal."""
    return build_complex(["abc", "abd", "acd", "bcd", "cde", "cdf", "cef", "def"])


def bipyramid() -> Complex:
    """Triangular bipyramid boundary: face-minimal, not 2-complete."""
    return build_complex(["abd", "acd", "bcd", "abe", "ace", "bce"])


def bipyramid_with_chord() -> Complex:
    """The bipyramid plus its single chord face abc, which splits it into
    two hollow tetrahedra."""
    return build_complex(["abd", "acd", "bcd", "abe", "ace", "bce", "abc"])


def octahedron_boundary() -> Complex:
    """The eight boundary faces of the octahedron (poles n, s; square equator)."""
    return build_complex(["nab", "nbc", "ncd", "nad", "sab", "sbc", "scd", "sad"])


def octahedron_with_axis_chords() -> Complex:
    """Octahedron boundary plus the four pole-axis triangles, its chord set.

    The chords cut the boundary into four complete cycles on the vertex
    quadruples {n,s,x,y} around the axis, so the complex is 2-chorded.
    """
    return build_complex(
        ["nab", "nbc", "ncd", "nad", "sab", "sbc", "scd", "sad", "nsa", "nsb", "nsc", "nsd"]
    )


def sphere_with_inner_tetrahedron() -> Complex:
    """A triangulated sphere with a hollow tetrahedron suspended inside it.

    The cube boundary is triangulated using diagonals within one parity
    class, leaving the other four vertices pairwise non-adjacent; the inner
    tetrahedron sits on those four.  Orientably-2-cycle-complete but not
    2-chorded: the sphere is a face-minimal non-complete cycle without a
    chord set.
    """
    # cube vertices: bit pattern xyz -> label; even-parity tetrad kept independent
    labels = ["p000", "p011", "p101", "p110", "p001", "p010", "p100", "p111"]
    even = labels[:4]
    squares = [
        ("p000", "p001", "p011", "p010"),  # x = 0
        ("p100", "p101", "p111", "p110"),  # x = 1
        ("p000", "p001", "p101", "p100"),  # y = 0
        ("p010", "p011", "p111", "p110"),  # y = 1
        ("p000", "p010", "p110", "p100"),  # z = 0
        ("p001", "p011", "p111", "p101"),  # z = 1
    ]
    facets: list[list[str]] = []
    for a, b, c, d in squares:
        # split along a diagonal between odd-parity corners
        corners = [a, b, c, d]
        odd = [x for x in corners if x not in even]
        i, j = corners.index(odd[0]), corners.index(odd[1])
        k, l = [idx for idx in range(4) if idx not in (i, j)]
        facets.append([corners[i], corners[j], corners[k]])
        facets.append([corners[i], corners[j], corners[l]])
    for trio in itertools.combinations(even, 3):
        facets.append(list(trio))
    return build_complex(facets)


def seven_vertex_counterexample() -> Complex:
    """The 30-facet pure 3-complex on x0..x6: 3-chorded, yet the ideal of its
    3-closure has no 4-linear resolution in characteristic 2.

    All 4-subsets of the seven vertices except x0x1x5x6, x0x2x5x6, x0x3x5x6,
    x0x4x5x6 and x1x2x3x4.
    """
    labels = [f"x{i}" for i in range(7)]
    removed = {
        frozenset({0, 1, 5, 6}),
        frozenset({0, 2, 5, 6}),
        frozenset({0, 3, 5, 6}),
        frozenset({0, 4, 5, 6}),
        frozenset({1, 2, 3, 4}),
    }
    facets = [
        [labels[v] for v in combo]
        for combo in itertools.combinations(range(7), 4)
        if frozenset(combo) not in removed
    ]
    return build_complex(facets, extra_vertices=labels)


def tetra_with_fin() -> Complex:
    """Hollow tetrahedron with one extra triangle hanging off an edge.

    Its 2-closure is <abcd, cde, ae, be>.
    """
    return build_complex(["abc", "abd", "acd", "bcd", "cde"])


def cycle_graph(n: int) -> Complex:
    labels = [f"v{i}" for i in range(n)]
    return build_complex([[labels[i], labels[(i + 1) % n]] for i in range(n)])


def path_graph(n: int) -> Complex:
    labels = [f"v{i}" for i in range(n)]
    return build_complex([[labels[i], labels[i + 1]] for i in range(n - 1)])


def complete_graph(n: int) -> Complex:
    labels = [f"v{i}" for i in range(n)]
    return build_complex([[labels[i], labels[j]] for i, j in itertools.combinations(range(n), 2)])


def hexagon_with_long_chords() -> Complex:
    """Six-cycle v0..v5 plus the chords v0v2, v2v4, v4v0."""
    edges = [[f"v{i}", f"v{(i + 1) % 6}"] for i in range(6)]
    return build_complex(edges + [["v0", "v2"], ["v2", "v4"], ["v4", "v0"]])


def random_pure_two_complex(rng: random.Random, max_vertices: int = 7) -> Complex:
    """A seeded pure 2-complex: each triangle kept independently.

    Density is bounded away from the complete complex so the cycle space
    stays enumerable under the default cap.
    """
    n = rng.randint(4, max_vertices)
    p = rng.uniform(0.12, 0.6)
    faces = [Face.of(c) for c in itertools.combinations(range(n), 3) if rng.random() < p]
    if not faces:
        faces = [Face.of(rng.sample(range(n), 3))]
    return Complex(n, faces)


def random_two_tree(rng: random.Random, max_vertices: int = 8) -> Complex:
    """A 2-dimensional tree grown by leaf attachment.

    Start from one triangle; each step glues a new facet along an existing
    edge and one fresh vertex, which can never close a cycle.
    """
    n = rng.randint(4, max_vertices)
    facets = [(0, 1, 2)]
    edges = [(0, 1), (0, 2), (1, 2)]
    for v in range(3, n):
        a, b = rng.choice(edges)
        facets.append((a, b, v))
        edges.extend([(a, v), (b, v)])
    return Complex(n, [Face.of(f) for f in facets])


def named_corpus() -> dict[str, Complex]:
    """The shipped corpus keyed by stable names."""
    return {
        "hollow_tetrahedron": hollow_tetrahedron(),
        "projective_plane": projective_plane(),
        "glued_tetrahedra": glued_tetrahedra(),
        "bipyramid": bipyramid(),
        "bipyramid_with_chord": bipyramid_with_chord(),
        "octahedron_boundary": octahedron_boundary(),
        "octahedron_with_axis_chords": octahedron_with_axis_chords(),
        "sphere_with_inner_tetrahedron": sphere_with_inner_tetrahedron(),
        "seven_vertex_counterexample": seven_vertex_counterexample(),
        "tetra_with_fin": tetra_with_fin(),
        "cycle_graph_4": cycle_graph(4),
        "cycle_graph_5": cycle_graph(5),
        "path_graph_4": path_graph(4),
        "hexagon_with_long_chords": hexagon_with_long_chords(),
    }
