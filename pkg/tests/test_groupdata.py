"""Group data (G, g, chi, mu) and the correspondence with monomial Hopf algebras."""

import pytest

from monohopf.algebra import verify_all
from monohopf.cyclo import CycloNum, RootOfUnity
from monohopf.families import a_n_d_mu_q, c_d_n_mu_q, params
from monohopf.groupdata import (FiniteGroup, GroupDatum, build_A, catalogue,
                                coalgebra_shape, datum_iso,
                                group_hopf_algebra, induced_datum,
                                is_trivial_datum, tensor_split_check,
                                validate_datum)

Z2 = FiniteGroup.cyclic(2)
Z4 = FiniteGroup.cyclic(4)
V4 = Z2.direct_product(Z2)

SW = GroupDatum(Z2, 1, (RootOfUnity(1, 0), RootOfUnity(2, 1)),
                CycloNum.zero(1))
CHI4 = tuple(RootOfUnity(4, k) for k in range(4))
CHI_M1 = tuple(RootOfUnity(2, k % 2) for k in range(4))
ALPHA8 = GroupDatum(Z4, 2, CHI4, CycloNum.zero(4))
GOOD = GroupDatum(Z4, 1, CHI_M1, CycloNum.from_rational(1))


def test_finite_group_basics():
    assert Z4.element_order(1) == 4 and Z4.element_order(2) == 2
    assert Z4.inverse(3) == 1 and Z4.power(1, -1) == 3
    assert sorted(len(s) for s in Z4.subgroups()) == [1, 2, 4]
    assert sorted(len(s) for s in V4.subgroups()) == [1, 2, 2, 2, 4]
    assert V4.is_abelian()
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [1, 1]])


def test_validate_datum():
    assert validate_datum(SW) == []
    assert SW.d == 2 and SW.n == 2

    bad = GroupDatum(Z4, 2, CHI4, CycloNum.from_rational(1))
    msgs = validate_datum(bad)
    assert any("o(g) = o(chi(g))" in m for m in msgs)
    assert any("chi^d" in m for m in msgs)

    assert validate_datum(GOOD) == []


def test_build_A_matches_family():
    assert build_A(SW).same_tables(a_n_d_mu_q(params(2, 2, 0, -1)))


def test_build_A_commutation_rule():
    A8 = build_A(ALPHA8)
    assert A8.dim == 8
    x = A8.basis_vec(1)
    h = A8.basis_vec(1 * 2)              # h = 1bar, d = 2
    xh = A8.product_vec(x, h)
    hx = A8.product_vec(h, x)
    z4 = RootOfUnity(4, 1).to_cyclo()
    assert xh == {k: z4 * c for k, c in hx.items()}  # x h = chi(h) h x


def test_build_A_all_suites():
    for alpha in (SW, ALPHA8, GOOD):
        reports = verify_all(build_A(alpha))
        assert all(r.ok for r in reports.values()), alpha


def test_literal_antipode_fails_only_antipode_suite():
    reports = verify_all(build_A(SW, literal_antipode=True))
    assert reports["algebra"].ok and reports["coalgebra"].ok
    assert reports["bialgebra"].ok
    assert not reports["antipode"].ok


def test_datum_iso():
    v = datum_iso(SW, SW)
    assert v.kind == "isomorphic" and v.delta.is_one()

    a1 = GroupDatum(Z4, 1, CHI4, CycloNum.zero(4))
    chi4c = tuple(RootOfUnity(4, (3 * k) % 4) for k in range(4))
    a2 = GroupDatum(Z4, 3, chi4c, CycloNum.zero(4))
    v = datum_iso(a1, a2)
    assert v.kind == "isomorphic" and v.f[1] == 3

    a3 = GroupDatum(Z4, 2, CHI4, CycloNum.zero(4))
    v = datum_iso(a1, a3)
    assert v.kind == "not-isomorphic" and "o(g)" in v.reason


def test_datum_iso_mu_scaling():
    m1 = GroupDatum(Z4, 1, CHI_M1, CycloNum.from_rational(1))
    m4 = GroupDatum(Z4, 1, CHI_M1, CycloNum.from_rational(4))
    v = datum_iso(m4, m1)                # mu1 = delta^d mu2: 4 = delta^2
    assert v.kind == "isomorphic" and v.delta.as_rational() == 2


def test_induced_datum_round_trips():
    m1 = GroupDatum(Z4, 1, CHI_M1, CycloNum.from_rational(1))
    for alpha in (SW, ALPHA8, GOOD, m1):
        back = induced_datum(build_A(alpha))
        assert validate_datum(back) == []
        assert datum_iso(back, alpha).kind == "isomorphic"


def test_induced_datum_from_coalgebra_presentation():
    ind = induced_datum(c_d_n_mu_q(params(4, 2, 1, -1)))
    assert ind.group.order == 4
    assert ind.group.element_order(ind.g) == 4
    assert ind.chi[ind.g] == RootOfUnity(2, 1)
    assert ind.mu.as_rational() == 1
    assert ind.d == 2


def test_induced_datum_rejects_group_algebra():
    with pytest.raises(ValueError):
        induced_datum(group_hopf_algebra(Z4, 4))


def test_triviality():
    chi_v = (RootOfUnity(1, 0), RootOfUnity(1, 0), RootOfUnity(2, 1),
             RootOfUnity(2, 1))          # chi(1,0) = -1, chi(0,1) = 1
    tv = GroupDatum(V4, 2, chi_v, CycloNum.zero(1))
    assert validate_datum(tv) == []
    r = is_trivial_datum(tv)
    assert r.kind == "trivial" and r.complement == (0, 1)

    assert is_trivial_datum(ALPHA8).kind == "nontrivial"
    r = is_trivial_datum(SW)
    assert r.kind == "trivial" and r.complement == (0,)

    w = tensor_split_check(tv)
    assert w.source.dim == 8
    assert {"algebra", "coalgebra", "bijective"} <= w.checked
    with pytest.raises(ValueError):
        tensor_split_check(ALPHA8)


def test_coalgebra_shape():
    s = coalgebra_shape(ALPHA8)
    assert s.components == 2 and s.grouplikes_per_component == (2, 2)
    assert s.identity_component_ok
    s = coalgebra_shape(SW)
    assert s.components == 1 and s.index == 1
    s = coalgebra_shape(GOOD)
    assert s.components == 1 and s.grouplikes_per_component == (4,)


def test_catalogue():
    cat = catalogue(4)
    assert len(cat) == 21
    assert all(validate_datum(a) == [] for a in cat)
    assert any(a.group.order == 2 and a.d == 2 for a in cat)
    assert {a.group.order for a in cat} == {2, 3, 4}
    assert {str(a.mu.as_rational()) for a in cat} == {"0", "1"}
