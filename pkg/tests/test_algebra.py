"""Structure-constant kernel: verifier suites, group-likes, witnesses."""

import pytest

from monohopf import fastcheck
from monohopf.algebra import (FDBialgebra, center, check_map, dual,
                              extend_from_generators, frobenius_oracle,
                              group_likes, grouplike_candidates, hopf_tensor,
                              link_quiver, skew_primitives, verify_algebra,
                              verify_all, verify_bialgebra, verify_coalgebra)
from monohopf.cyclo import CycloNum


def group_algebra(n):
    mult = [[[((i + j) % n, 1)] for j in range(n)] for i in range(n)]
    comult = [[((i, i), 1)] for i in range(n)]
    antipode = [[((-i) % n, 1)] for i in range(n)]
    return FDBialgebra(n, 1, [f"g{i}" for i in range(n)], mult,
                       [1] + [0] * (n - 1), comult, [1] * n, antipode)


def sweedler():
    idx = lambda a, b: 2 * a + b
    mult = [[[] for _ in range(4)] for _ in range(4)]
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for e in range(2):
                    if b + e < 2:
                        mult[idx(a, b)][idx(c, e)] = [
                            (idx((a + c) % 2, b + e), (-1) ** (b * c))]
    comult = [[] for _ in range(4)]
    counit = [0] * 4
    antipode = [[] for _ in range(4)]
    for a in range(2):
        comult[idx(a, 0)] = [((idx(a, 0), idx(a, 0)), 1)]
        counit[idx(a, 0)] = 1
        comult[idx(a, 1)] = [((idx(a, 1), idx(a, 0)), 1),
                             ((idx((a + 1) % 2, 0), idx(a, 1)), 1)]
        antipode[idx(a, 0)] = [(idx(a, 0), 1)]
        antipode[idx(a, 1)] = [(idx((a + 1) % 2, 1), -((-1) ** a))]
    return FDBialgebra(4, 2, ["1", "x", "g", "gx"], mult, [1, 0, 0, 0],
                       comult, counit, antipode)


def test_group_algebra_passes_all_suites():
    reports = verify_all(group_algebra(6), force_pure=True)
    assert all(r.ok for r in reports.values())


def test_fast_kernel_agrees_with_pure_scan():
    kz40 = group_algebra(40)
    assert fastcheck.assoc_fast(kz40) is True
    assert fastcheck.comult_mult_fast(kz40) is True
    reports = verify_all(kz40)       # dim > threshold: fast dispatch
    assert all(r.ok for r in reports.values())


def test_sweedler_all_suites():
    reports = verify_all(sweedler())
    assert [reports[k].ok for k in
            ("algebra", "coalgebra", "bialgebra", "antipode")] == [True] * 4


def test_corrupted_product_caught_with_triple():
    bad = sweedler()
    mult = [list(map(list, row)) for row in bad.mult]
    mult[3][3] = [(0, 1)]
    bad = FDBialgebra(4, 2, bad.labels, mult, [1, 0, 0, 0],
                      [list(r) for r in bad.comult], list(bad.counit),
                      [list(r) for r in bad.antipode])
    rep = verify_algebra(bad)
    assert not rep.ok
    assert rep.first_failure()["law"] == "associativity"
    assert len(rep.first_failure()["triple"]) == 3
    assert fastcheck.assoc_fast(bad) is False


def test_corrupted_comult_caught_by_bialgebra_suite():
    bad = sweedler()
    comult = [list(r) for r in bad.comult]
    comult[1] = [((1, 0), 1), ((0, 1), 1)]
    bad = FDBialgebra(4, 2, bad.labels,
                      [list(map(list, r)) for r in bad.mult], [1, 0, 0, 0],
                      comult, list(bad.counit),
                      [list(r) for r in bad.antipode])
    assert verify_algebra(bad).ok and verify_coalgebra(bad).ok
    rep = verify_bialgebra(bad)
    assert not rep.ok
    assert rep.first_failure()["law"] == "comult-multiplicative"
    assert fastcheck.comult_mult_fast(bad) is False


def test_corrupted_antipode_caught():
    bad = sweedler()
    antipode = [list(r) for r in bad.antipode]
    antipode[1] = [(3, 1)]
    bad = FDBialgebra(4, 2, bad.labels,
                      [list(map(list, r)) for r in bad.mult], [1, 0, 0, 0],
                      [list(r) for r in bad.comult], list(bad.counit),
                      antipode)
    reports = verify_all(bad)
    assert not reports["antipode"].ok


def test_group_likes_and_skew_primitives():
    H4 = sweedler()
    assert grouplike_candidates(H4) == [0, 2]
    gl = group_likes(H4)
    assert gl.elements == [0, 2] and gl.identity == 0
    assert gl.table == [[0, 1], [1, 0]]
    assert gl.inverse(1) == 1
    assert len(skew_primitives(H4, 0, 2)) == 2
    assert len(skew_primitives(H4, 0, 0)) == 0


def test_link_quiver():
    H4 = sweedler()
    lq = link_quiver(H4)
    assert lq.multiplicity == {(0, 0): 0, (0, 2): 1, (2, 0): 1, (2, 2): 0}
    assert lq.components() == [[0, 2]]
    assert link_quiver(H4, direct=True).multiplicity == lq.multiplicity
    lq6 = link_quiver(group_algebra(6))
    assert all(m == 0 for m in lq6.multiplicity.values())
    assert lq6.components() == [[i] for i in range(6)]


def test_center():
    assert len(center(sweedler())) == 1
    assert len(center(group_algebra(6))) == 6


def test_dual_and_tensor_are_hopf():
    assert all(r.ok for r in verify_all(dual(sweedler())).values())
    T = hopf_tensor(group_algebra(2), group_algebra(2))
    assert all(r.ok for r in verify_all(T).values())
    assert len(grouplike_candidates(T)) == 4


def test_extend_from_generators_and_check_map():
    H4 = sweedler()
    one = CycloNum.one(2)
    w = extend_from_generators(H4, H4, {2: {2: one}, 1: {1: one}})
    rep = check_map(w)
    assert rep.ok and rep.bijective
    assert [dict(r) for r in w.rows] == [H4.basis_vec(i) for i in range(4)]

    minus = CycloNum.from_rational(-1, 2)
    w2 = extend_from_generators(H4, H4, {2: {2: one}, 1: {1: minus}})
    assert check_map(w2).ok

    with pytest.raises(ValueError, match="well-defined"):
        extend_from_generators(H4, H4, {2: {0: one}, 1: {1: one}})
    with pytest.raises(ValueError, match="span"):
        extend_from_generators(H4, H4, {2: {2: one}})


def test_frobenius_oracle():
    assert frobenius_oracle(sweedler()).verdict == "frobenius"
    # upper-triangular 2x2 matrices are not Frobenius
    mult = [[[] for _ in range(3)] for _ in range(3)]
    mult[0][0] = [(0, 1)]
    mult[0][1] = [(1, 1)]
    mult[1][2] = [(1, 1)]
    mult[2][2] = [(2, 1)]
    T2 = FDBialgebra(3, 1, ["e11", "e12", "e22"], mult, [1, 0, 1])
    assert verify_algebra(T2).ok
    assert frobenius_oracle(T2).verdict == "inconclusive"
