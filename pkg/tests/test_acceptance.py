"""Acceptance gate: twelve exact criteria, one test (= one report line) each.

Every assertion is exact (0 tolerance): all arithmetic is over cyclotomic
fields with rational coordinates, so equality means equality.
"""

import time
from math import gcd

from monohopf.algebra import frobenius_oracle, verify_all
from monohopf.blocks import (gabriel_quiver, radical_power_presentation,
                             wedderburn_report)
from monohopf.cyclo import CycloNum, RootOfUnity, primitive_roots
from monohopf.families import (a_n_d_mu_q, admits_hopf, c_d_n_mu_q,
                               classify_pair, family_iso, params)
from monohopf.groupdata import (FiniteGroup, GroupDatum, build_A, catalogue,
                                coalgebra_shape, datum_iso, induced_datum,
                                is_trivial_datum, tensor_split_check,
                                validate_datum)
from monohopf.qcalc import binomial_vanishes, q_binomial, q_vandermonde_check
from monohopf.quiver import (enumerate_small_presentations,
                             frobenius_classify, monomial_algebra,
                             socle_dimensions)


def grid(max_n=12):
    """(n <= max_n, d | n, d >= 2, q of order d, mu in {0, 1})."""
    for n in range(2, max_n + 1):
        for d in range(2, n + 1):
            if n % d:
                continue
            for q in primitive_roots(d):
                for mu in (0, 1):
                    yield params(n, d, mu, q)


_WEDDERBURN: dict = {}


def _block_report(p):
    if p not in _WEDDERBURN:
        _WEDDERBURN[p] = wedderburn_report(p)
    return _WEDDERBURN[p]


def test_criterion_01_axiom_matrix():
    """Both families pass all four verifier suites on the whole grid."""
    start = time.monotonic()
    count = 0
    for p in grid():
        for build in (c_d_n_mu_q, a_n_d_mu_q):
            alg = build(p)
            reports = verify_all(alg)
            assert len(reports) == 4, (build.__name__, p.n, p.d)
            for suite, rep in reports.items():
                assert rep.ok, (build.__name__, p.n, p.d, suite,
                                rep.first_failure())
            count += 1
    elapsed = time.monotonic() - start
    assert count == 264
    assert elapsed < 300, f"axiom matrix took {elapsed:.1f}s"


def test_criterion_02_family_isomorphism():
    """g^i x^j -> j!_q p_i^j is a verified Hopf isomorphism on the grid."""
    for p in grid():
        w = family_iso(p)
        assert {"algebra", "coalgebra", "bijective"} <= w.checked, (p.n, p.d)


def test_criterion_03_hopf_existence_matches_divisibility():
    """admits_hopf(n, d) iff d | n, with the exact vanishing pattern."""
    for n in range(2, 25):
        for d in range(2, 25):
            rep = admits_hopf(n, d)
            assert rep.admits == (n % d == 0), (n, d)
            assert rep.consistent, (n, d)
            for d0, q, holds in rep.witness:
                assert holds == (d0 == d), (n, d, d0)


def test_criterion_04_binomial_floor_criterion():
    """(l+m choose l)_q = 0 iff the floor criterion, d <= 12, l, m <= 24."""
    for d in range(2, 13):
        for q in primitive_roots(d):
            qc = q.to_cyclo()
            for l in range(25):
                for m in range(25):
                    vanishes = q_binomial(l + m, l, qc).is_zero()
                    assert vanishes == binomial_vanishes(l, m, d), (l, m, d)


def test_criterion_05_q_vandermonde():
    """The q-Vandermonde identity for N0 <= 12, all q of conductor <= 12."""
    roots = [RootOfUnity(1, 0)]
    for c in range(2, 13):
        roots.extend(primitive_roots(c))
    for n0 in range(2, 13):
        for k in range(1, n0):
            for l in range(n0 + 1):
                for q in roots:
                    assert q_vandermonde_check(n0, l, k, q.to_cyclo()), \
                        (n0, l, k, q)


def test_criterion_06_block_decomposition():
    """Idempotents exact; block count = n/d = center dim; types as stated;
    every theta and phi witness verified."""
    for p in grid():
        rep = _block_report(p)
        t = p.n // p.d
        assert len(rep.blocks) == t, (p.n, p.d)
        assert rep.center_dim == t, (p.n, p.d)
        if p.mu.is_zero():
            assert rep.kinds == ("TruncatedCycle",) * t, (p.n, p.d)
        else:
            assert rep.kinds == ("TruncatedCycle",) + \
                ("MatrixAlgebra",) * (t - 1), (p.n, p.d)
        for b in rep.blocks:
            assert b.block.dim == p.d * p.d
            assert {"algebra", "bijective"} <= b.theta.checked
            if b.kind == "MatrixAlgebra":
                assert not b.lam.is_zero()
                assert {"algebra", "bijective"} <= b.matrix_rep.witness.checked
            else:
                assert b.lam.is_zero()
                assert {"algebra", "bijective"} <= b.cycle_witness.checked


def test_criterion_07_gabriel_quivers():
    """Quiver shapes match the block types; mu = 0 quivers re-classify as
    Frobenius truncated cycles."""
    for p in grid():
        rep = _block_report(p)
        quiver = gabriel_quiver(rep)
        truncated = sum(1 for b in rep.blocks if b.kind == "TruncatedCycle")
        matrices = len(rep.blocks) - truncated
        assert quiver.vertices == truncated * p.d + matrices, (p.n, p.d)
        assert len(quiver.arrows) == truncated * p.d, (p.n, p.d)
        if p.mu.is_zero():
            assert matrices == 0
            verdicts = frobenius_classify(
                radical_power_presentation(quiver, p.d))
            assert len(verdicts) == truncated
            for v in verdicts:
                assert v.kind == "TruncatedCycle", (p.n, p.d, v)
                assert (v.n, v.d) == (p.d, p.d), (p.n, p.d, v)


def test_criterion_08_datum_round_trip_and_coalgebra_shape():
    """induced_datum(build_A(alpha)) is isomorphic to alpha over the whole
    catalogue; the coalgebra splits into [G:<g>] components with o(g)
    group-likes each and identity component C_d(o(g))."""
    cat = catalogue(12)
    assert len(cat) >= 50
    for alpha in cat:
        beta = induced_datum(build_A(alpha))
        assert validate_datum(beta) == []
        v = datum_iso(beta, alpha)
        assert v.kind == "isomorphic", (alpha.group.order, alpha.g, v.kind)

        shape = coalgebra_shape(alpha)
        o_g = alpha.group.element_order(alpha.g)
        index = alpha.group.order // o_g
        assert shape.components == index
        assert shape.grouplikes_per_component == (o_g,) * index
        assert shape.identity_component_ok


def test_criterion_09_classification():
    """classify_pair on the stated representative pairs, every positive
    verdict carrying a verified witness."""
    v = classify_pair(params(4, 2, 1, -1), params(4, 2, 4, -1))
    assert v.kind == "isomorphic"
    assert v.delta.as_rational() == 2

    v = classify_pair(params(4, 2, 0, -1), params(4, 2, 1, -1))
    assert v.kind == "not-isomorphic"
    v = classify_pair(params(4, 2, 1, -1), params(4, 2, 0, -1))
    assert v.kind == "not-isomorphic"

    for d in (2, 3, 4, 6):
        for q in primitive_roots(d):
            for mu1 in (0, 1, 5):
                for mu2 in (0, 1, 5):
                    v = classify_pair(params(d, d, mu1, q),
                                      params(d, d, mu2, q))
                    assert v.kind == "isomorphic", (d, mu1, mu2)
                    assert v.witness is not None

    for d in (3, 4, 5, 6, 8, 12):
        qs = primitive_roots(d)
        for i, q1 in enumerate(qs):
            for q2 in qs[i + 1:]:
                v = classify_pair(params(d, d, 0, q1), params(d, d, 0, q2))
                assert v.kind == "not-isomorphic", (d, q1, q2)

    positives = [(params(4, 2, 1, -1), params(4, 2, 4, -1)),
                 (params(4, 2, 1, -1), params(4, 2, -1, -1)),
                 (params(6, 2, 1, -1), params(6, 2, 64, -1)),
                 (params(6, 3, 1, RootOfUnity(3, 1)),
                  params(6, 3, 8, RootOfUnity(3, 1))),
                 (params(4, 2, 0, -1), params(4, 2, 0, -1))]
    for p1, p2 in positives:
        v = classify_pair(p1, p2)
        assert v.kind == "isomorphic", (p1.label("A"), p2.label("A"))
        assert v.witness is not None
        assert {"algebra", "coalgebra", "bijective"} <= v.witness.checked
        assert v.witness.meta["delta"] == v.delta


def test_criterion_10_triviality_and_tensor_splitting():
    """Trivial data split as A(n,d,mu,q) tensor K[N] with verified witnesses;
    the faithful-chi datum on Z4 with g of order 2 is nontrivial."""
    z2 = FiniteGroup.cyclic(2)
    v4 = z2.direct_product(z2)
    z4 = FiniteGroup.cyclic(4)
    z4xz2 = FiniteGroup.cyclic(4).direct_product(z2)

    trivial_data = [
        GroupDatum(z2, 1, (RootOfUnity(1, 0), RootOfUnity(2, 1)),
                   CycloNum.zero(1)),
        GroupDatum(v4, 2, (RootOfUnity(1, 0), RootOfUnity(1, 0),
                           RootOfUnity(2, 1), RootOfUnity(2, 1)),
                   CycloNum.zero(1)),
        GroupDatum(z4, 1, tuple(RootOfUnity(2, k % 2) for k in range(4)),
                   CycloNum.from_rational(1)),
        GroupDatum(z4xz2, 2,
                   tuple(RootOfUnity(4, a) for a in range(4)
                         for _ in range(2)),
                   CycloNum.zero(1)),
    ]
    for alpha in trivial_data:
        assert validate_datum(alpha) == []
        rep = is_trivial_datum(alpha)
        assert rep.kind == "trivial", alpha.group.order
        w = tensor_split_check(alpha)
        assert {"algebra", "coalgebra", "bijective"} <= w.checked
        assert w.source.dim == alpha.group.order * alpha.d

    nt = GroupDatum(z4, 2, tuple(RootOfUnity(4, k) for k in range(4)),
                    CycloNum.zero(4))
    assert validate_datum(nt) == []
    assert is_trivial_datum(nt).kind == "nontrivial"
    assert all(r.ok for r in verify_all(build_A(nt)).values())
    try:
        tensor_split_check(nt)
    except ValueError:
        pass
    else:
        raise AssertionError("nontrivial datum must not report a splitting")


def test_criterion_11_antipode_sign():
    """S(x) = +g^{-1}x fails the antipode suite on x for the Sweedler datum;
    S(x) = -g^{-1}x passes all four suites."""
    sw = GroupDatum(FiniteGroup.cyclic(2), 1,
                    (RootOfUnity(1, 0), RootOfUnity(2, 1)), CycloNum.zero(1))
    literal = verify_all(build_A(sw, literal_antipode=True))
    assert literal["algebra"].ok and literal["coalgebra"].ok
    assert literal["bialgebra"].ok
    assert not literal["antipode"].ok
    failure = literal["antipode"].first_failure()
    assert failure["index"] == 1          # the skew-primitive x itself

    fixed = verify_all(build_A(sw))
    assert all(r.ok for r in fixed.values())


def test_criterion_12_frobenius_oracle_agreement():
    """Socle dimensions and the Frobenius classifier agree with the
    randomized bilinear-form oracle on every monomial presentation with
    <= 3 vertices, <= 4 arrows, bound <= 4."""
    count = certified_count = 0
    for pres in enumerate_small_presentations(3, 4, 8):
        if pres.bound > 4:
            continue
        count += 1
        verdicts = frobenius_classify(pres)
        certified = all(v.kind != "NotFrobenius" for v in verdicts)
        oracle = frobenius_oracle(monomial_algebra(pres), trials=8, seed=0)
        if certified:
            certified_count += 1
            left, right = socle_dimensions(pres)
            assert all(x == 1 for x in left), pres
            assert all(x == 1 for x in right), pres
            assert oracle.verdict == "frobenius", pres
        else:
            assert oracle.verdict == "inconclusive", pres
    assert count > 1000
    assert certified_count > 10
