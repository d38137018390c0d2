"""Relative simplicial cohomology of pairs (complex, contrastar of a face).

The relative i-cochains of (X, cost tau) are spanned by the duals of the
i-faces containing tau, in lexicographic order.  The coboundary of the
cochain dual to a face G sends it to the sum of its cofaces G + {v} with
sign (-1)^(position of v in the sorted coface).  Taking tau = emptyset gives
the reduced (augmented) complex, including the (-1)-cochain dual to the
empty face, so H^{-1} of the one-face complex {emptyset} is the field.

Cohomology spaces carry explicit cocycle bases so that the contravariant
maps induced by contrastar inclusions (extend a relative cocycle by zero,
then reduce modulo coboundaries) can be written down as matrices.

All constructions are cached per (complex, face, degree, field); outputs are
immutable, so a cache entry recomputed under a race is indistinguishable
from the first result.
"""

from __future__ import annotations

from functools import lru_cache

from .complexes import SimplicialComplex
from .linalg import (
    FieldSpec,
    Matrix,
    Solver,
    hstack,
    image_basis,
    independent_column_indices,
    kernel_basis,
)


@lru_cache(maxsize=None)
def relative_cochain_basis(cx: SimplicialComplex, tau: frozenset, k: int) -> tuple:
    """k-dimensional faces containing tau, lexicographically ordered."""
    if k < -1:
        return ()
    return tuple(F for F in cx.faces_of_dim(k) if tau <= F)


@lru_cache(maxsize=None)
def coboundary_matrix(cx: SimplicialComplex, tau: frozenset, k: int, field: FieldSpec) -> Matrix:
    """Matrix of delta: C^k(X, cost tau) -> C^{k+1}(X, cost tau)."""
    source = relative_cochain_basis(cx, tau, k)
    target = relative_cochain_basis(cx, tau, k + 1)
    index = {F: i for i, F in enumerate(target)}
    faces = cx.faces()
    cols = []
    for G in source:
        col = [0] * len(target)
        for v in range(1, cx.n + 1):
            if v in G:
                continue
            H = G | {v}
            if H not in faces:
                continue
            sign = (-1) ** sorted(H).index(v)
            col[index[H]] = sign
        cols.append(col)
    return Matrix.from_columns(field, cols, len(target))


class CohomologyClassSpace:
    """Basis of cocycle representatives for H^i(X, cost tau).

    cocycle_basis columns are cocycles in the relative cochain basis and are
    independent modulo coboundaries; coboundary_image columns span the image
    of the previous coboundary.
    """

    __slots__ = (
        "complex",
        "face",
        "degree",
        "field",
        "cochain_faces",
        "cocycle_basis",
        "coboundary_image",
        "_solver",
    )

    def __init__(self, cx, tau, i, field, cochain_faces, cocycle_basis, coboundary_image):
        self.complex = cx
        self.face = tau
        self.degree = i
        self.field = field
        self.cochain_faces = cochain_faces
        self.cocycle_basis = cocycle_basis
        self.coboundary_image = coboundary_image
        self._solver = None

    @property
    def dim(self) -> int:
        return self.cocycle_basis.ncols

    def express(self, cochain) -> list:
        """Coordinates of a cocycle's class in the chosen basis.

        The input must be a cocycle; failure to lie in span(basis) +
        span(coboundaries) indicates corrupted bases and raises.
        """
        if self._solver is None:
            self._solver = Solver(hstack(self.cocycle_basis, self.coboundary_image))
        x = self._solver.solve(cochain)
        if x is None:
            raise AssertionError("cocycle does not reduce against the stored bases")
        return x[: self.cocycle_basis.ncols]

    def __repr__(self):
        return (
            f"CohomologyClassSpace(face={sorted(self.face)}, degree={self.degree}, "
            f"field={self.field}, dim={self.dim})"
        )


def relative_cohomology(cx: SimplicialComplex, tau, i: int, field: FieldSpec) -> CohomologyClassSpace:
    """H^i(X, cost tau) with an explicit cocycle basis; tau = emptyset is reduced cohomology."""
    return _relative_cohomology(cx, frozenset(tau), i, field)


@lru_cache(maxsize=None)
def _relative_cohomology(cx: SimplicialComplex, tau: frozenset, i: int, field: FieldSpec) -> CohomologyClassSpace:
    if tau not in cx:
        raise ValueError(f"{sorted(tau)} is not a face")
    basis = relative_cochain_basis(cx, tau, i)
    delta_out = coboundary_matrix(cx, tau, i, field)
    cocycles = kernel_basis(delta_out)
    if i - 1 >= -1 and relative_cochain_basis(cx, tau, i - 1):
        delta_in = coboundary_matrix(cx, tau, i - 1, field)
        bound = image_basis(delta_in)
    else:
        bound = Matrix(field, [[] for _ in range(len(basis))], 0)
    chosen = independent_column_indices(bound, cocycles)
    reps = Matrix.from_columns(field, [cocycles.column(j) for j in chosen], len(basis))
    return CohomologyClassSpace(cx, tau, i, field, basis, reps, bound)


def reduced_cohomology_dim(cx: SimplicialComplex, i: int, field: FieldSpec) -> int:
    """dim of reduced simplicial cohomology of the complex itself."""
    if cx.is_void:
        raise ValueError("reduced cohomology of the void complex")
    return relative_cohomology(cx, frozenset(), i, field).dim


def induced_map(cx: SimplicialComplex, f_big, f_small, i: int, field: FieldSpec) -> Matrix:
    """Matrix of the contravariant map H^i(X|f_big) -> H^i(X|f_small), f_small inside f_big.

    A representative supported on faces containing f_big is extended by zero
    to the cochain space over f_small, then rewritten in the target basis
    modulo coboundaries.
    """
    return _induced_map(cx, frozenset(f_big), frozenset(f_small), i, field)


@lru_cache(maxsize=None)
def _induced_map(cx: SimplicialComplex, f_big: frozenset, f_small: frozenset, i: int, field: FieldSpec) -> Matrix:
    if not f_small <= f_big:
        raise ValueError("the target face must be contained in the source face")
    source = relative_cohomology(cx, f_big, i, field)
    target = relative_cohomology(cx, f_small, i, field)
    if f_big == f_small:
        return Matrix.identity(field, source.dim)
    index = {F: r for r, F in enumerate(target.cochain_faces)}
    cols = []
    for j in range(source.dim):
        rep = source.cocycle_basis.column(j)
        extended = [0] * len(target.cochain_faces)
        for value, F in zip(rep, source.cochain_faces):
            if value:
                extended[index[F]] = value
        cols.append(target.express(extended))
    return Matrix.from_columns(field, cols, target.dim)


def clear_caches():
    """Drop all memoized cohomology data (mostly for tests)."""
    relative_cochain_basis.cache_clear()
    coboundary_matrix.cache_clear()
    _relative_cohomology.cache_clear()
    _induced_map.cache_clear()
