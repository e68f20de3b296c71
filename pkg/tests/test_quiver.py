"""Quivers, monomial presentations, path coalgebras, Frobenius classification."""

import pytest

from monohopf.algebra import frobenius_oracle, verify_algebra
from monohopf.quiver import (MonomialPresentation, Quiver, cofrobenius_classify,
                             cycle_quiver, enumerate_small_presentations,
                             frobenius_classify, is_frobenius, monomial_algebra,
                             monomial_basis, path_compose, path_comultiply,
                             path_counit, socle_dimensions)


def j_power(n, d):
    zn = cycle_quiver(n)
    forbidden = tuple(zn.paths_from(v, d)[0] for v in range(n))
    return MonomialPresentation(zn, forbidden, d)


def test_cycle_quiver_shape():
    z4 = cycle_quiver(4)
    assert z4.arrows == ((0, 1), (1, 2), (2, 3), (3, 0))
    assert cycle_quiver(1).arrows == ((0, 0),)
    with pytest.raises(ValueError):
        Quiver(0)
    with pytest.raises(ValueError):
        Quiver(2, ((0, 2),))


def test_path_composition_convention():
    z4 = cycle_quiver(4)
    a0 = z4.path(0, (0,))
    a1 = z4.path(1, (1,))
    p02 = z4.path(0, (0, 1))
    assert p02.target == 2 and p02.length == 2
    assert path_compose(a1, a0) == p02       # beta * alpha = alpha then beta
    assert path_compose(a0, a0) is None
    with pytest.raises(ValueError):
        z4.path(0, (1,))                      # arrows must compose


def test_path_comultiply_counit():
    z4 = cycle_quiver(4)
    p02 = z4.path(0, (0, 1))
    splits = path_comultiply(p02)
    assert splits == [(p02, z4.trivial_path(0)),
                      (z4.path(1, (1,)), z4.path(0, (0,))),
                      (z4.trivial_path(2), p02)]
    assert path_counit(z4.trivial_path(1)) == 1
    assert path_counit(p02) == 0


def test_split_coassociativity_on_cycles():
    for n in range(1, 7):
        zn = cycle_quiver(n)
        for i in range(n):
            for length in range(6):
                p = zn.path(i, tuple((i + t) % n for t in range(length)))
                lhs = {(c.key(), b2.key(), a.key())
                       for b, a in path_comultiply(p)
                       for c, b2 in path_comultiply(b)}
                rhs = {(b.key(), c.key(), a2.key())
                       for b, a in path_comultiply(p)
                       for c, a2 in path_comultiply(a)}
                assert lhs == rhs
                assert [b for b, a in path_comultiply(p) if path_counit(a)] == [p]
                assert [a for b, a in path_comultiply(p) if path_counit(b)] == [p]


def test_monomial_basis():
    basis = monomial_basis(j_power(2, 2))
    assert [p.label() for p in basis] == ["e0", "e1", "a0", "a1"]
    assert len(monomial_basis(j_power(3, 2))) == 6
    assert len(monomial_basis(MonomialPresentation(Quiver(1), (), 2))) == 1
    with pytest.raises(ValueError):
        monomial_basis(MonomialPresentation(cycle_quiver(2), (), 2))


def test_socle_dimensions():
    assert socle_dimensions(j_power(2, 2)) == ((1, 1), (1, 1))
    lin = MonomialPresentation(Quiver(2, ((0, 1),)), (), 2)
    assert socle_dimensions(lin) == ((1, 1), (1, 1))
    assert socle_dimensions(MonomialPresentation(Quiver(1), (), 2)) == ((1,), (1,))


def test_frobenius_classify():
    v = frobenius_classify(j_power(3, 2))
    assert len(v) == 1 and v[0].kind == "TruncatedCycle"
    assert (v[0].n, v[0].d) == (3, 2)
    assert is_frobenius(frobenius_classify(j_power(2, 2)))

    lin = MonomialPresentation(Quiver(2, ((0, 1),)), (), 2)
    v = frobenius_classify(lin)
    assert v[0].kind == "NotFrobenius" and "source" in v[0].reason

    v = frobenius_classify(MonomialPresentation(Quiver(1), (), 2))
    assert v[0].kind == "PointAlgebra"


def test_frobenius_rejects_uneven_truncation():
    z2 = cycle_quiver(2)
    forb = (z2.path(0, (0, 1)), z2.path(0, (0, 1, 0)), z2.path(1, (1, 0, 1)))
    v = frobenius_classify(MonomialPresentation(z2, forb, 3))
    assert v[0].kind == "NotFrobenius" and "not a power" in v[0].reason


def test_cofrobenius_classify():
    ok, c22 = cofrobenius_classify(2, 2)
    assert ok and c22.dim == 4
    ok, c33 = cofrobenius_classify(3, 3)
    assert ok and c33.dim == 9
    ok, c21 = cofrobenius_classify(2, 1)
    assert ok and c21.dim == 2 and c21.labels == ("p_0^0", "p_0^1")


def test_monomial_algebra_and_oracle():
    alg = monomial_algebra(j_power(2, 2))
    assert verify_algebra(alg).ok
    assert frobenius_oracle(alg).verdict == "frobenius"
    lin = monomial_algebra(MonomialPresentation(Quiver(2, ((0, 1),)), (), 2))
    assert verify_algebra(lin).ok
    assert frobenius_oracle(lin).verdict == "inconclusive"


def test_monomial_algebra_product_convention():
    alg = monomial_algebra(j_power(2, 2))
    labels = [p.label() for p in monomial_basis(j_power(2, 2))]
    i_a0, i_e0, i_e1 = labels.index("a0"), labels.index("e0"), labels.index("e1")
    assert alg.mult[i_a0][i_e0]        # a0 * e0 = a0 (a0 starts at 0)
    assert not alg.mult[i_e0][i_a0]    # e0 * a0 = 0 (a0 ends at 1)
    assert alg.mult[i_e1][i_a0]


def test_enumeration_is_exhaustive_and_duplicate_free():
    seen = set()
    count = 0
    for pres in enumerate_small_presentations(2, 2, 8):
        basis = monomial_basis(pres)      # raises if not admissible
        assert len(basis) <= 8
        count += 1
        seen.add((pres.quiver.vertices, pres.quiver.arrows,
                  tuple(sorted(f.key() for f in pres.forbidden)), pres.bound))
    assert count == len(seen)
    assert count >= 50
