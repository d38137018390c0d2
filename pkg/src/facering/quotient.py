"""Predicted local cohomology of a face ring modulo generic linear forms.

The Z-degree -i piece of the l-th local cohomology of the quotient by m
generic forms has dimension  sum_F C(i-1, |F|-m-1) * dim H^{l+m-1}(X|F),
which identifies it with the m-fold multiplication kernel one cohomological
degree up.  The quotient has finite local cohomology below its Krull
dimension exactly when every coefficient with |F| > m vanishes, i.e. when
no face of dimension >= m is singular.

For complexes whose singular set is at most zero-dimensional the first
quotient is described fully by the weighted restriction maps from the
vertex-level cohomology spaces into the global one: degree 0 carries the
kernel and cokernel of consecutive such maps, degree 1 the global space,
and everything else vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import induced_map, relative_cohomology
from .complexes import SimplicialComplex
from .linalg import FieldSpec, Matrix, hstack, image_basis, rank
from .local_cohomology import binom0
from .singularity import singularity_dimension


def quotient_lc_dim(cx: SimplicialComplex, m: int, ell: int, i: int, field: FieldSpec) -> int:
    """Predicted dim of the Z-degree -i piece of H^ell of the m-form quotient."""
    d = cx.d
    if not 0 <= m <= d:
        raise ValueError("m out of range")
    if not 1 <= ell <= d - m:
        raise ValueError("cohomological degree out of range for the quotient")
    if i < 1:
        raise ValueError("i must be positive")
    total = 0
    for F in cx.faces():
        c = binom0(i - 1, len(F) - m - 1)
        if c:
            total += c * relative_cohomology(cx, F, ell + m - 1, field).dim
    return total


def predicts_finite_lc(cx: SimplicialComplex, m: int, field: FieldSpec) -> bool:
    """Whether the m-form quotient is predicted to have finite local cohomology.

    Evaluated coefficient-wise: the prediction vanishes for every i iff each
    contributing relative-cohomology dimension with |F| > m is zero.
    """
    d = cx.d
    if not 0 <= m <= d:
        raise ValueError("m out of range")
    for ell in range(1, d - m):
        for F in cx.faces():
            if len(F) >= m + 1 and relative_cohomology(cx, F, ell + m - 1, field).dim:
                return False
    return True


@dataclass(frozen=True)
class QuotientLcTable:
    """Tabulated predictions (ell, i) -> dim for a fixed number of forms."""

    m: int
    d: int
    entries: tuple  # of ((ell, i), dim)

    @staticmethod
    def build(cx: SimplicialComplex, m: int, field: FieldSpec, i_max: int = 6) -> "QuotientLcTable":
        entries = []
        for ell in range(1, cx.d - m + 1):
            for i in range(1, i_max + 1):
                entries.append(((ell, i), quotient_lc_dim(cx, m, ell, i, field)))
        return QuotientLcTable(m, cx.d, tuple(entries))

    def dim(self, ell: int, i: int) -> int:
        for (l, j), value in self.entries:
            if (l, j) == (ell, i):
                return value
        raise KeyError((ell, i))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "entries": [
                {"l": l, "i": i, "dim": value} for (l, i), value in sorted(self.entries)
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "QuotientLcTable":
        entries = tuple(
            ((e["l"], e["i"]), e["dim"]) for e in data["entries"]
        )
        d = max((l for (l, _), _ in entries), default=0) + data["m"]
        return QuotientLcTable(data["m"], d, entries)

    def to_tsv(self) -> str:
        lines = ["l\ti\tdim"]
        for (l, i), value in sorted(self.entries):
            lines.append(f"{l}\t{i}\t{value}")
        return "\n".join(lines) + "\n"


def vertex_cohomology_map(cx: SimplicialComplex, i: int, theta, field: FieldSpec) -> Matrix:
    """Weighted sum of the restriction maps from vertex-level into global cohomology.

    Columns are blocks, one per vertex t with {t} a face, equal to theta[t]
    times the map H^i(X|{t}) -> H^i(X|empty); requires a singular set of
    dimension at most zero and nonzero weights on every vertex.  theta=None
    means the all-ones weight vector.
    """
    theta = [1] * cx.n if theta is None else list(theta)
    if len(theta) != cx.n:
        raise ValueError("coefficient column must have one entry per vertex")
    if any(not a for a in theta):
        raise ValueError("all vertex coefficients must be nonzero")
    if singularity_dimension(cx, field) > 0:
        raise ValueError("complex must have a singular set of dimension at most 0")
    if not 0 <= i <= cx.dim:
        raise ValueError("degree out of range")
    target = relative_cohomology(cx, frozenset(), i, field)
    blocks = []
    for t in range(1, cx.n + 1):
        if frozenset({t}) not in cx:
            continue
        block = induced_map(cx, frozenset({t}), frozenset(), i, field)
        if block.ncols:
            blocks.append(block.scaled(theta[t - 1]))
    if not blocks:
        return Matrix(field, [[] for _ in range(target.dim)], 0)
    return hstack(*blocks)


def isolated_quotient_dims(cx: SimplicialComplex, theta, i: int, field: FieldSpec):
    """Dimensions of the one-form quotient's local cohomology in degrees (<0, 0, 1).

    Valid for i < dim(cx): negative degrees vanish, degree 0 carries
    coker(vertex map at i-1) + ker(vertex map at i), degree 1 the reduced
    cohomology of the complex itself.  theta=None means all-ones weights.
    """
    if singularity_dimension(cx, field) > 0:
        raise ValueError("complex must have a singular set of dimension at most 0")
    if not 0 <= i < cx.d - 1:
        raise ValueError("degree out of range (need i < dim)")
    if i - 1 >= 0:
        fprev = vertex_cohomology_map(cx, i - 1, theta, field)
        coker = fprev.nrows - rank(fprev)
    else:
        coker = 0
    fi = vertex_cohomology_map(cx, i, theta, field)
    ker = fi.ncols - rank(fi)
    h_global = relative_cohomology(cx, frozenset(), i, field).dim
    return (0, coker + ker, h_global)


def is_homologically_isolated(cx: SimplicialComplex, field: FieldSpec) -> bool:
    """Whether the vertex-level images inside global cohomology form a direct sum.

    Checked in every degree 0 <= i <= dim - 1: the sum of the image
    dimensions must equal the dimension of their joint span.
    """
    if singularity_dimension(cx, field) > 0:
        raise ValueError("complex must have a singular set of dimension at most 0")
    for i in range(0, cx.d - 1):
        images = []
        for t in range(1, cx.n + 1):
            if frozenset({t}) not in cx:
                continue
            block = induced_map(cx, frozenset({t}), frozenset(), i, field)
            img = image_basis(block)
            if img.ncols:
                images.append(img)
        if not images:
            continue
        total = sum(img.ncols for img in images)
        joint = rank(hstack(*images))
        if joint != total:
            return False
    return True
