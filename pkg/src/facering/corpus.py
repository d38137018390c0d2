"""Named fixture complexes used throughout the tests and the verify command."""

from __future__ import annotations

from .complexes import SimplicialComplex


def cycle3() -> SimplicialComplex:
    """Boundary of a triangle (a circle)."""
    return SimplicialComplex(3, [{1, 2}, {1, 3}, {2, 3}])


def bowtie() -> SimplicialComplex:
    """Two triangles glued at the vertex 3."""
    return SimplicialComplex(5, [{1, 2, 3}, {3, 4, 5}])


def pair_edges() -> SimplicialComplex:
    """Two disjoint edges."""
    return SimplicialComplex(4, [{1, 2}, {3, 4}])


def octahedron() -> SimplicialComplex:
    """Boundary of the cross-polytope: all triangles {a,b,c}, a in {1,4}, b in {2,5}, c in {3,6}."""
    facets = [{a, b, c} for a in (1, 4) for b in (2, 5) for c in (3, 6)]
    return SimplicialComplex(6, facets)


def rp2_6() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    facets = [
        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
        {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6},
    ]
    return SimplicialComplex(6, facets)


CORPUS_BUILDERS = {
    "cycle3": cycle3,
    "bowtie": bowtie,
    "pair_edges": pair_edges,
    "octahedron": octahedron,
    "rp2_6": rp2_6,
}


def corpus() -> dict[str, SimplicialComplex]:
    """All fixture complexes, keyed by name, in a fixed order."""
    return {name: build() for name, build in CORPUS_BUILDERS.items()}
