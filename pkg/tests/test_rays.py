"""Rays: canonical forms, inner products, basis completion and validation."""

import pytest
from hypothesis import given, strategies as st

from ksverify.cyclotomic import Cyc, omega
from ksverify.rays import (
    Basis,
    Ray,
    canonicalize,
    complete_basis_third,
    inner,
    is_orthogonal,
    parse_ray,
    validate_basis,
)

W = omega()


def ray(*components):
    return Ray(components)


def test_inner_product_examples():
    assert inner(ray(0, 0, 1), ray(0, 1, 0)).is_zero()
    assert inner(ray(1, W, W**2), ray(1, 1, 1)).is_zero()
    # direct expansion: w - w^2 * w^2 = w - w = 0
    assert inner(ray(0, 1, -W), ray(1, W, W**2)).is_zero()


def test_inner_is_sesquilinear():
    u, v = ray(1, W, -1), ray(1, 1, W)
    assert inner(u, v) == inner(v, u).conj()


def test_orthogonality_examples():
    assert is_orthogonal(ray(0, 0, 1), ray(1, 0, 0))
    assert not is_orthogonal(ray(1, 1, 1), ray(1, 1, -1))
    # the misprint detector: inner product is -2w, not zero
    assert inner(ray(1, -1, 1), ray(W**2, W, 1)) == -2 * W
    assert not is_orthogonal(ray(1, -1, 1), ray(W**2, W, 1))


def test_canonicalization_collapses_scalar_multiples():
    assert ray(W, W, 0) == ray(1, 1, 0) == ray(-2, -2, 0)
    r = ray(W**2, W, 1)
    assert r.scaled(W) == r
    assert r.scaled(-3) == r
    assert ray(1, W**2, W) == r  # unit multiple collapses


def test_canonicalize_is_idempotent():
    r = canonicalize((2 * W, -4 * W, 0))
    again = canonicalize(r.canonical)
    assert r == again
    assert r.canonical == again.canonical


def test_all_zero_rejected():
    with pytest.raises(ValueError):
        Ray((Cyc.zero(), Cyc.zero(), Cyc.zero()))


def test_completion_examples():
    assert complete_basis_third(ray(0, 0, 1), ray(0, 1, 0)) == ray(1, 0, 0)
    third = complete_basis_third(ray(1, W, W**2), ray(1, 1, 1))
    assert third == ray(W**2, W, 1)
    corrected = complete_basis_third(ray(1, -W, W**2), ray(1, -1, 1))
    assert corrected == ray(W**2, -W, 1)
    assert corrected != ray(W**2, W, 1)


def test_completion_is_symmetric():
    u, v = ray(1, W, W**2), ray(1, 1, 1)
    assert complete_basis_third(u, v) == complete_basis_third(v, u)


def test_completion_requires_orthogonality():
    with pytest.raises(ValueError):
        complete_basis_third(ray(1, 1, 1), ray(1, 1, -1))


def test_validate_basis_reports_pairs():
    ok = validate_basis([ray(0, 0, 1), ray(0, 1, 0), ray(1, 0, 0)])
    assert ok == []
    bad = validate_basis([ray(1, 1, 0), ray(1, -1, 0), ray(1, 0, 0)])
    assert {(v.index_a, v.index_b) for v in bad} == {(0, 2), (1, 2)}
    assert all(v.product == Cyc.one() for v in bad)


def test_validate_printed_x3_basis():
    # as commonly printed, the third member fails against both others
    printed = [ray(1, -W, W**2), ray(1, -1, 1), ray(W**2, W, 1)]
    violations = validate_basis(printed)
    products = {str(v.product) for v in violations}
    assert products == {"-2", "-2*w"}
    assert {(v.index_a, v.index_b) for v in violations} == {(0, 2), (1, 2)}


def test_basis_constructor_enforces_orthogonality():
    Basis([ray(1, W, W**2), ray(1, 1, 1), ray(W**2, W, 1)])
    with pytest.raises(ValueError):
        Basis([ray(1, -W, W**2), ray(1, -1, 1), ray(W**2, W, 1)])


scalars = st.sampled_from(
    [Cyc.from_rational(2), -Cyc.one(), omega(), omega() ** 2,
     Cyc.from_rational(-3), omega() * Cyc.from_rational(5)]
)
components = st.sampled_from(
    [0, 1, -1, 2, omega(), -omega(), omega() ** 2, 1 + omega()]
)


@given(st.tuples(components, components, components), scalars, scalars)
def test_orthogonality_invariant_under_rescaling(comps, s1, s2):
    if all(Cyc._as_cyc(c).is_zero() for c in comps):
        return
    u = Ray(comps)
    v = ray(1, W, W**2)
    scaled_u = Ray(tuple(s1 * Cyc._as_cyc(c) for c in comps))
    assert is_orthogonal(u, v) == is_orthogonal(scaled_u, v.scaled(s2))
    assert u == scaled_u


def test_parse_ray_literals():
    assert parse_ray("(1,-w,w^2)") == ray(1, -W, W**2)
    assert parse_ray("(0, 1, -w)") == ray(0, 1, -W)
    assert parse_ray("(1,1,0)") == ray(1, 1, 0)
    assert parse_ray("(1+w,1,0)") == ray(1 + W, 1, 0)
    with pytest.raises(ValueError):
        parse_ray("(1,2)")


def test_str_shows_canonical_form():
    assert str(ray(W, W, 0)) == "(1,1,0)"
    assert str(ray(2, 2, 0)) == "(1,1,0)"
