"""Singular faces, singularity dimension, and Cohen-Macaulay style criteria.

A face F is nonsingular when every reduced cohomology group of its link
vanishes below dimension dim(complex) - |F|; the singularity dimension is
the largest dimension of a singular face, with a sentinel of -infinity for
complexes without singular faces (exactly the Cohen-Macaulay ones, by
Reisner's criterion).  Buchsbaumness (Schenzel) and the codimension-c
Cohen-Macaulay conditions are expressed through links as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cohomology import reduced_cohomology_dim
from .complexes import SimplicialComplex, mixed_face_key
from .linalg import FieldSpec

NEG_INFINITY = -math.inf


@dataclass(frozen=True)
class SingularityReport:
    field: FieldSpec
    singular_faces: tuple
    singularity_dimension: object  # int or NEG_INFINITY
    d: int

    def to_json(self) -> dict:
        sd = self.singularity_dimension
        return {
            "field": str(self.field),
            "d": self.d,
            "singularity_dimension": "-inf" if sd == NEG_INFINITY else int(sd),
            "singular_faces": [sorted(F) for F in self.singular_faces],
        }


def is_singular_face(cx: SimplicialComplex, F, field: FieldSpec) -> bool:
    """True when some reduced cohomology of lk F survives below dim(cx) - |F|."""
    F = frozenset(F)
    if F not in cx:
        raise ValueError(f"{sorted(F)} is not a face")
    top = cx.dim - len(F)  # = d - 1 - |F|
    link = cx.link(F)
    return any(reduced_cohomology_dim(link, i, field) for i in range(-1, top))


def singular_faces(cx: SimplicialComplex, field: FieldSpec) -> list:
    return sorted(
        (F for F in cx.faces() if is_singular_face(cx, F, field)), key=mixed_face_key
    )


def singularity_dimension(cx: SimplicialComplex, field: FieldSpec):
    """Max dimension of a singular face; NEG_INFINITY when there is none."""
    if cx.is_void:
        raise ValueError("the void complex has no singularity dimension")
    for k in range(cx.dim, -2, -1):
        if any(is_singular_face(cx, F, field) for F in cx.faces_of_dim(k)):
            return k
    return NEG_INFINITY


def report(cx: SimplicialComplex, field: FieldSpec) -> SingularityReport:
    faces = singular_faces(cx, field)
    sd = max((len(F) - 1 for F in faces), default=NEG_INFINITY)
    return SingularityReport(field, tuple(faces), sd, cx.d)


def is_cm(cx: SimplicialComplex, field: FieldSpec) -> bool:
    """Reisner: Cohen-Macaulay over the field iff no face is singular."""
    return singularity_dimension(cx, field) == NEG_INFINITY


def is_buchsbaum(cx: SimplicialComplex, field: FieldSpec) -> bool:
    """Schenzel: pure, and the empty face is the only one allowed to be singular."""
    if not cx.is_pure():
        return False
    return all(
        not is_singular_face(cx, F, field) for F in cx.faces() if F
    )


def is_cm_along(cx: SimplicialComplex, F, i: int, field: FieldSpec) -> bool:
    """lk F is Cohen-Macaulay of dimension exactly i."""
    F = frozenset(F)
    if F not in cx:
        raise ValueError(f"{sorted(F)} is not a face")
    link = cx.link(F)
    return link.dim == i and is_cm(link, field)


def cm_in_codim(cx: SimplicialComplex, c: int, field: FieldSpec) -> bool:
    """CM of dimension c-1 along every face of dimension r-c (r = dim).

    For c > r+1 the condition is full Cohen-Macaulayness; for c < 0 there are
    no faces of dimension r-c and the condition holds vacuously.
    """
    if cx.is_void:
        raise ValueError("void complex")
    r = cx.dim
    if c > r + 1:
        return is_cm(cx, field)
    return all(is_cm_along(cx, F, c - 1, field) for F in cx.faces_of_dim(r - c))
