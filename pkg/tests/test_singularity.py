"""Singular face classification and the codimension Cohen-Macaulay criteria."""

import pytest

from facering.linalg import GF, QQ
from facering.singularity import (
    NEG_INFINITY,
    cm_in_codim,
    is_buchsbaum,
    is_cm,
    is_cm_along,
    is_singular_face,
    report,
    singular_faces,
    singularity_dimension,
)

FIELDS = [QQ, GF(2), GF(3)]


def test_singular_face_examples(bowtie, pair_edges):
    assert is_singular_face(bowtie, {3}, QQ)
    assert not is_singular_face(bowtie, {1}, QQ)
    assert is_singular_face(pair_edges, frozenset(), QQ)
    with pytest.raises(ValueError):
        is_singular_face(bowtie, {1, 4}, QQ)


def test_singularity_dimension_examples(bowtie, cycle3, rp2_6):
    assert singularity_dimension(bowtie, QQ) == 0
    assert singularity_dimension(cycle3, QQ) == NEG_INFINITY
    assert singularity_dimension(rp2_6, GF(2)) == -1
    assert singularity_dimension(rp2_6, QQ) == NEG_INFINITY


def test_neg_infinity_orders_below_all_integers():
    assert NEG_INFINITY < 0
    assert NEG_INFINITY < -10**9
    assert not (NEG_INFINITY >= 0)


def test_singular_faces_listing(bowtie, pair_edges):
    assert [sorted(F) for F in singular_faces(bowtie, QQ)] == [[3]]
    assert [sorted(F) for F in singular_faces(pair_edges, QQ)] == [[]]
    rep = report(bowtie, QQ)
    assert rep.singularity_dimension == 0
    assert rep.d == 3
    assert rep.to_json()["singular_faces"] == [[3]]


def test_is_cm_examples(octahedron, bowtie, rp2_6):
    assert is_cm(octahedron, QQ)
    assert not is_cm(bowtie, QQ)
    assert not is_cm(rp2_6, GF(2))
    assert is_cm(rp2_6, QQ)


def test_is_buchsbaum_examples(pair_edges, bowtie, octahedron, rp2_6):
    assert is_buchsbaum(pair_edges, QQ)
    assert not is_buchsbaum(bowtie, QQ)
    assert is_buchsbaum(octahedron, QQ)
    assert is_buchsbaum(rp2_6, GF(2))


def test_is_cm_along_examples(bowtie):
    assert is_cm_along(bowtie, {1, 2}, 0, QQ)
    assert not is_cm_along(bowtie, {3}, 1, QQ)
    assert not is_cm_along(bowtie, {1}, 0, QQ)


def test_cm_in_codim_examples(bowtie, octahedron):
    assert cm_in_codim(bowtie, 1, QQ)
    assert not cm_in_codim(bowtie, 2, QQ)
    assert cm_in_codim(octahedron, 4, QQ)  # above r+1, falls back to full CM


@pytest.mark.parametrize("field", FIELDS)
def test_codimension_criterion_equivalence(complexes, field):
    # singularity dimension < m iff CM in codimension r - m, for every m
    for cx in complexes.values():
        r = cx.dim
        sd = singularity_dimension(cx, field)
        for m in range(0, r + 2):
            assert (sd < m) == cm_in_codim(cx, r - m, field), (cx, field, m)


@pytest.mark.parametrize("field", FIELDS)
def test_cm_implies_buchsbaum_implies_low_singularity(complexes, field):
    for cx in complexes.values():
        if is_cm(cx, field):
            assert is_buchsbaum(cx, field)
        if is_buchsbaum(cx, field):
            assert singularity_dimension(cx, field) <= -1
            assert cx.is_pure()


@pytest.mark.parametrize("field", [QQ, GF(2)])
def test_pure_complex_link_shortcut(complexes, field):
    # for pure complexes the codimension condition reduces to plain CM links
    for cx in complexes.values():
        if not cx.is_pure():
            continue
        r = cx.dim
        for c in range(0, r + 2):
            via_links = all(
                is_cm(cx.link(F), field) for F in cx.faces_of_dim(r - c)
            )
            assert cm_in_codim(cx, c, field) == via_links
