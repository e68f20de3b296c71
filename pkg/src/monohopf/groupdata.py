"""Group data (G, g, chi, mu) and the Hopf algebras A(alpha).

A group datum consists of a finite group G, a central element g, a
character chi of G, and a scalar mu subject to: mu = 0 when o(g) equals
d := o(chi(g)), and chi^d = 1 whenever mu != 0.  build_A realizes the
datum as the |G|d-dimensional Hopf algebra generated by G and a
(1,g)-skew-primitive x with x^d = mu(1 - g^d) and xh = chi(h)hx;
induced_datum recovers a datum from any such Hopf algebra, and the two
constructions are mutually inverse up to datum isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .cyclo import CycloNum, RootOfUnity, as_root_of_unity, lcm
from .linalg import nullspace, vec_add_scaled, vec_equal, vec_scale
from .qcalc import q_binomial, q_factorial, q_power
from .algebra import (FDBialgebra, IsoWitness, check_map,
                      coalgebra_components, extend_from_generators,
                      group_likes, hopf_tensor, skew_primitives)
from .families import FamilyParams, _dth_root_in_cyclotomics, a_n_d_mu_q
from .quiver import cofrobenius_classify


class FiniteGroup:
    """A finite group given by its Cayley table; axioms verified on build."""

    def __init__(self, cayley, labels=None):
        table = tuple(tuple(row) for row in cayley)
        n = len(table)
        if any(len(row) != n for row in table):
            raise ValueError("Cayley table must be square")
        if any(not (0 <= v < n) for row in table for v in row):
            raise ValueError("Cayley table entries must be element indices")
        identity = None
        for e in range(n):
            if all(table[e][a] == a and table[a][e] == a for a in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("table has no identity element")
        for a in range(n):
            if all(table[a][b] != identity for b in range(n)):
                raise ValueError(f"element {a} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise ValueError(
                            f"table is not associative at ({a},{b},{c})")
        self.cayley = table
        self.order = n
        self.identity = identity
        self.labels = tuple(labels) if labels else tuple(
            str(i) for i in range(n))
        self._subgroups = None

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls([[(i + j) % n for j in range(n)] for i in range(n)])

    def direct_product(self, other: "FiniteGroup") -> "FiniteGroup":
        n, m = self.order, other.order
        table = [[0] * (n * m) for _ in range(n * m)]
        for a1 in range(n):
            for a2 in range(m):
                for b1 in range(n):
                    for b2 in range(m):
                        table[a1 * m + a2][b1 * m + b2] = (
                            self.cayley[a1][b1] * m + other.cayley[a2][b2])
        labels = [f"({la},{lb})" for la in self.labels for lb in other.labels]
        return FiniteGroup(table, labels)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inverse(self, a: int) -> int:
        for b in range(self.order):
            if self.cayley[a][b] == self.identity:
                return b
        raise AssertionError("unreachable: inverses verified on build")

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse(a), -k)
        out = self.identity
        for _ in range(k):
            out = self.cayley[out][a]
        return out

    def element_order(self, a: int) -> int:
        out, k = a, 1
        while out != self.identity:
            out = self.cayley[out][a]
            k += 1
        return k

    def is_central(self, a: int) -> bool:
        return all(self.cayley[a][b] == self.cayley[b][a]
                   for b in range(self.order))

    def is_abelian(self) -> bool:
        return all(self.is_central(a) for a in range(self.order))

    def generated_subgroup(self, gens) -> frozenset:
        closure = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            a = frontier.pop()
            for b in gens:
                c = self.cayley[a][b]
                if c not in closure:
                    closure.add(c)
                    frontier.append(c)
        return frozenset(closure)

    def subgroups(self) -> tuple:
        """All subgroups, as sorted tuples, smallest first (memoized)."""
        if self._subgroups is None:
            found = {frozenset({self.identity})}
            frontier = [frozenset({self.identity})]
            while frontier:
                h = frontier.pop()
                for a in range(self.order):
                    if a in h:
                        continue
                    bigger = self.generated_subgroup(set(h) | {a})
                    if bigger not in found:
                        found.add(bigger)
                        frontier.append(bigger)
            self._subgroups = tuple(
                tuple(sorted(s)) for s in sorted(
                    found, key=lambda s: (len(s), sorted(s))))
        return self._subgroups

    def subgroup_table(self, elements) -> "FiniteGroup":
        """The Cayley table of a subgroup, reindexed 0..|H|-1."""
        elems = sorted(elements)
        pos = {e: i for i, e in enumerate(elems)}
        table = [[pos[self.cayley[a][b]] for b in elems] for a in elems]
        return FiniteGroup(table, [self.labels[e] for e in elems])

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.cayley == other.cayley

    def __hash__(self):
        return hash(self.cayley)


@dataclass(frozen=True)
class GroupDatum:
    group: FiniteGroup
    g: int
    chi: tuple          # RootOfUnity per element index
    mu: CycloNum

    def __post_init__(self):
        mu = self.mu
        if not isinstance(mu, CycloNum):
            object.__setattr__(self, "mu", CycloNum.from_rational(mu))
        object.__setattr__(self, "chi", tuple(self.chi))

    @property
    def d(self) -> int:
        return self.chi[self.g].order

    @property
    def n(self) -> int:
        return self.group.element_order(self.g)

    def q(self) -> RootOfUnity:
        return self.chi[self.g]

    def conductor(self) -> int:
        c = self.mu.conductor
        for z in self.chi:
            c = lcm(c, z.conductor)
        return c

    def __hash__(self):
        return hash((self.group, self.g, self.chi, self.mu.key()))


def validate_datum(alpha: GroupDatum) -> list:
    """Every violated datum invariant, as a list of messages (empty = valid)."""
    G = alpha.group
    out = []
    if not (0 <= alpha.g < G.order):
        return [f"g = {alpha.g} is not an element index"]
    if len(alpha.chi) != G.order:
        return [f"chi has {len(alpha.chi)} values for {G.order} elements"]
    if not G.is_central(alpha.g):
        out.append("g is not central")
    if alpha.chi[G.identity].order != 1:
        out.append("chi(identity) != 1")
    hom_ok = True
    for a in range(G.order):
        for b in range(G.order):
            if alpha.chi[a] * alpha.chi[b] != alpha.chi[G.cayley[a][b]]:
                hom_ok = False
                break
        if not hom_ok:
            break
    if not hom_ok:
        out.append(f"chi is not a homomorphism (fails at ({a},{b}))")
    if out:
        return out
    d = alpha.d
    if G.element_order(alpha.g) == d and not alpha.mu.is_zero():
        out.append(f"mu must vanish when o(g) = o(chi(g)) = {d}")
    if not alpha.mu.is_zero():
        if any((z ** d).order != 1 for z in alpha.chi):
            out.append("mu != 0 requires chi^d = 1")
    return out


def _require_valid(alpha: GroupDatum):
    bad = validate_datum(alpha)
    if bad:
        raise ValueError("invalid group datum: " + "; ".join(bad))


def build_A(alpha: GroupDatum, literal_antipode: bool = False) -> FDBialgebra:
    """The Hopf algebra A(alpha) on the basis h x^j (index h*d + j).

    literal_antipode=True uses S(x) = +g^{-1}x instead of the sign that
    satisfies the convolution law; it exists so the failure is observable.
    """
    _require_valid(alpha)
    G = alpha.group
    d = alpha.d
    q = alpha.q()
    N = alpha.conductor()
    qc = q.to_cyclo().embed(N)
    mu = alpha.mu.embed(N)
    chi = [z.to_cyclo().embed(N) for z in alpha.chi]
    m = G.order
    dim = m * d
    idx = lambda h, j: h * d + j
    gd = G.power(alpha.g, d)
    mult = [[[] for _ in range(dim)] for _ in range(dim)]
    for h1 in range(m):
        for b in range(d):
            for h2 in range(m):
                coef = chi[h2] ** b
                h12 = G.cayley[h1][h2]
                for e in range(d):
                    terms: dict = {}
                    if b + e < d:
                        _acc(terms, idx(h12, b + e), coef)
                    else:
                        base = mu * coef
                        _acc(terms, idx(h12, b + e - d), base)
                        _acc(terms, idx(G.cayley[h12][gd], b + e - d), -base)
                    mult[idx(h1, b)][idx(h2, e)] = sorted(terms.items())
    one = CycloNum.one(N)
    zero = CycloNum.zero(N)
    comult = []
    counit = []
    antipode = []
    sign_base = one if literal_antipode else -one
    for h in range(m):
        hin = G.inverse(h)
        chih_inv = chi[h].inverse()
        for b in range(d):
            row = []
            for k in range(b + 1):
                gk_h = G.cayley[G.power(alpha.g, k)][h]
                row.append(((idx(gk_h, b - k), idx(h, k)),
                            q_binomial(b, k, qc)))
            comult.append(row)
            counit.append(one if b == 0 else zero)
            target = G.cayley[G.power(alpha.g, -b)][hin]
            c = (sign_base ** b) * q_power(-(b * (b - 1)) // 2, qc) \
                * chih_inv ** b
            antipode.append([(idx(target, b), c)])
    unit = [one if k == idx(G.identity, 0) else zero for k in range(dim)]
    labels = [f"{G.labels[h]}x^{b}" if b else G.labels[h]
              for h in range(m) for b in range(d)]
    return FDBialgebra(dim, N, labels, mult, unit, comult, counit, antipode,
                       meta={"datum": alpha})


def _acc(terms: dict, key, c: CycloNum):
    cur = terms.get(key)
    nv = c if cur is None else cur + c
    if nv.is_zero():
        terms.pop(key, None)
    else:
        terms[key] = nv


def group_hopf_algebra(G: FiniteGroup, conductor: int = 1) -> FDBialgebra:
    """The group algebra KG with its standard Hopf structure."""
    one = CycloNum.one(conductor)
    zero = CycloNum.zero(conductor)
    m = G.order
    mult = [[[(G.cayley[a][b], one)] for b in range(m)] for a in range(m)]
    comult = [[((a, a), one)] for a in range(m)]
    counit = [one] * m
    antipode = [[(G.inverse(a), one)] for a in range(m)]
    unit = [one if k == G.identity else zero for k in range(m)]
    return FDBialgebra(m, conductor, list(G.labels), mult, unit,
                       comult, counit, antipode, meta={"group": G})


# --- datum isomorphism ------------------------------------------------------


@dataclass
class DatumVerdict:
    kind: str                    # isomorphic | not-isomorphic |
    f: tuple | None = None       #   isomorphic-over-extension
    delta: CycloNum | None = None
    reason: str | None = None


def _generating_sequence(G: FiniteGroup) -> list:
    gens = []
    closure = {G.identity}
    for a in range(G.order):
        if a not in closure:
            gens.append(a)
            closure = set(G.generated_subgroup(set(closure) | {a}))
    return gens


def _close_hom(G: FiniteGroup, H: FiniteGroup, m: dict,
               chi, chi2) -> dict | None:
    """Close a partial map under products; None on any inconsistency."""
    m = dict(m)
    changed = True
    while changed:
        changed = False
        items = list(m.items())
        for a, fa in items:
            if chi[a] != chi2[fa]:
                return None
            for b, fb in items:
                c = G.cayley[a][b]
                fc = H.cayley[fa][fb]
                if c in m:
                    if m[c] != fc:
                        return None
                else:
                    m[c] = fc
                    changed = True
    return m


def datum_iso(a1: GroupDatum, a2: GroupDatum,
              conductor_bound: int = 64) -> DatumVerdict:
    """Search for (f, delta) with f(g1) = g2, chi1 = chi2 . f, mu1 = delta^d mu2."""
    _require_valid(a1)
    _require_valid(a2)
    G, H = a1.group, a2.group
    if G.order > 24 or H.order > 24:
        raise ValueError("datum isomorphism search is limited to |G| <= 24")
    if G.order != H.order:
        return DatumVerdict("not-isomorphic",
                            reason=f"|G|: {G.order} != {H.order}")
    if G.element_order(a1.g) != H.element_order(a2.g):
        return DatumVerdict(
            "not-isomorphic",
            reason=f"o(g): {G.element_order(a1.g)} != "
                   f"{H.element_order(a2.g)}")
    if a1.chi[a1.g] != a2.chi[a2.g]:
        return DatumVerdict(
            "not-isomorphic",
            reason=f"chi(g): {a1.chi[a1.g]} != {a2.chi[a2.g]}")

    gens = _generating_sequence(G)
    orders = [G.element_order(a) for a in range(G.order)]
    orders2 = [H.element_order(a) for a in range(H.order)]
    seed = {G.identity: H.identity, a1.g: a2.g}
    base = _close_hom(G, H, seed, a1.chi, a2.chi)
    f_found = None

    def search(m, k):
        nonlocal f_found
        if f_found is not None:
            return
        if len(m) == G.order:
            if len(set(m.values())) == G.order:
                f_found = m
            return
        if k >= len(gens):
            return
        a = gens[k]
        if a in m:
            search(m, k + 1)
            return
        for y in range(H.order):
            if orders2[y] != orders[a] or a2.chi[y] != a1.chi[a]:
                continue
            ext = _close_hom(G, H, {**m, a: y}, a1.chi, a2.chi)
            if ext is not None and len(set(ext.values())) == len(ext):
                search(ext, k + 1)
                if f_found is not None:
                    return

    if base is not None:
        search(base, 0)
    if f_found is None:
        return DatumVerdict("not-isomorphic",
                            reason="no group isomorphism matches (g, chi)")
    f = tuple(f_found[a] for a in range(G.order))
    mu1, mu2 = a1.mu, a2.mu
    if mu1.is_zero() and mu2.is_zero():
        return DatumVerdict("isomorphic", f, CycloNum.one(1))
    if mu1.is_zero() != mu2.is_zero():
        return DatumVerdict("not-isomorphic",
                            reason="mu: zero vs nonzero (no nonzero delta)")
    delta = _dth_root_in_cyclotomics(mu1 / mu2, a1.d, conductor_bound)
    if delta is None:
        return DatumVerdict("isomorphic-over-extension", f)
    return DatumVerdict("isomorphic", f, delta)


# --- induced datum ----------------------------------------------------------


def _unit_index(C: FDBialgebra) -> int:
    u = C.unit_vec()
    if len(u) == 1:
        (k, c), = u.items()
        if c.is_one():
            return k
    raise ValueError("the identity is not a basis element")


def induced_datum(C: FDBialgebra, candidates=None) -> GroupDatum:
    """Recover (G, g, chi, mu) from a monomial Hopf algebra's tables.

    G is the group of group-likes; g is the unique group-like with a
    two-dimensional (1,g)-skew-primitive space; x is the canonical
    skew-primitive vanishing at the 1- and g-coordinates with leading
    coefficient 1; chi(h) is the exact scalar in x.h = chi(h) h.x, and
    mu the exact scalar in x^d = mu(1 - g^d).
    """
    gl = group_likes(C, candidates)
    unit_idx = _unit_index(C)
    if unit_idx not in gl.elements:
        raise ValueError("the identity is not among the group-likes")
    e_pos = gl.elements.index(unit_idx)

    distinguished = []
    spaces = {}
    for pos, h in enumerate(gl.elements):
        if h == unit_idx:
            continue
        basis = skew_primitives(C, unit_idx, h)
        if len(basis) == 2:
            distinguished.append(pos)
            spaces[pos] = basis
        elif len(basis) > 2:
            raise ValueError(
                f"skew-primitive space P(1,{C.labels[h]}) has dimension "
                f"{len(basis)} > 2")
    if len(distinguished) != 1:
        raise ValueError(
            "expected exactly one group-like h with dim P(1,h) = 2, found "
            f"{len(distinguished)}; the coalgebra is not of monomial type")
    g_pos = distinguished[0]
    g_idx = gl.elements[g_pos]

    # canonical x: vanishes at the unit and g coordinates, leading coeff 1
    b1, b2 = spaces[g_pos]
    rows = []
    for at in (unit_idx, g_idx):
        row = {}
        for col, vec in enumerate((b1, b2)):
            c = vec.get(at)
            if c is not None and not c.is_zero():
                row[col] = c
        rows.append(row)
    kern = nullspace(rows, 2)
    if not kern:
        raise ValueError(
            "no (1,g)-skew-primitive vanishes at both group-like "
            "coordinates; x cannot be normalized")
    coefs = kern[0]
    x: dict = {}
    vec_add_scaled(x, dict(b1), coefs.get(0, CycloNum.zero(C.conductor)))
    vec_add_scaled(x, dict(b2), coefs.get(1, CycloNum.zero(C.conductor)))
    if not x:
        raise ValueError("canonical skew-primitive is zero")
    lead = min(x)
    x = vec_scale(x, x[lead].inverse())

    # chi(h): the exact scalar with x.h = chi(h) h.x
    chi = []
    for h in gl.elements:
        hv = C.basis_vec(h)
        xh = C.product_vec(x, hv)
        hx = C.product_vec(hv, x)
        if not hx or not xh:
            raise ValueError("x annihilates a group-like; "
                             "xh = chi(h)hx cannot hold")
        k = min(hx)
        if k not in xh:
            raise ValueError(
                f"x.{C.labels[h]} is not proportional to {C.labels[h]}.x")
        scalar = xh[k] / hx[k]
        if not vec_equal(xh, vec_scale(hx, scalar)):
            raise ValueError(
                f"x.{C.labels[h]} is not proportional to {C.labels[h]}.x")
        chi.append(as_root_of_unity(scalar))

    group = FiniteGroup(gl.table, [C.labels[h] for h in gl.elements])
    q = chi[g_pos]
    d = q.order
    if d < 2:
        raise ValueError("chi(g) = 1: the x-relation xg = chi(g)gx "
                         "degenerates (semisimple input?)")

    # mu: x^d = mu (1 - g^d)
    xd = C.power_vec(x, d)
    gd_pos = group.power(g_pos, d)
    gd_idx = gl.elements[gd_pos]
    if gd_pos == e_pos:
        if xd:
            raise ValueError("x^d != 0 although g^d = 1")
        mu = CycloNum.zero(C.conductor)
    elif not xd:
        mu = CycloNum.zero(C.conductor)
    else:
        if set(xd) - {unit_idx, gd_idx}:
            raise ValueError("x^d does not lie in the span of 1 - g^d")
        mu = xd.get(unit_idx, CycloNum.zero(C.conductor))
        target = {unit_idx: mu, gd_idx: -mu}
        if not vec_equal(xd, {k: v for k, v in target.items()
                              if not v.is_zero()}):
            raise ValueError("x^d does not lie in the span of 1 - g^d")

    return GroupDatum(group, g_pos, tuple(chi), mu)


# --- triviality and tensor splitting ----------------------------------------


@dataclass
class TrivialityReport:
    kind: str                 # "trivial" | "nontrivial"
    complement: tuple | None  # subgroup elements when trivial


def is_trivial_datum(alpha: GroupDatum) -> TrivialityReport:
    """Trivial iff G = <g> x N with chi trivial on N."""
    _require_valid(alpha)
    G = alpha.group
    if G.order > 24:
        raise ValueError("subgroup enumeration is limited to |G| <= 24")
    gsub = G.generated_subgroup({alpha.g})
    for sub in G.subgroups():
        if len(sub) * len(gsub) != G.order:
            continue
        if set(sub) & gsub != {G.identity}:
            continue
        if any(alpha.chi[a].order != 1 for a in sub):
            continue
        covered = {G.cayley[a][b] for a in gsub for b in sub}
        if len(covered) == G.order:
            return TrivialityReport("trivial", tuple(sub))
    return TrivialityReport("nontrivial", None)


def tensor_split_check(alpha: GroupDatum,
                       complement=None) -> IsoWitness:
    """Verified iso A(alpha) -> A(o(g), d, mu, chi(g)) tensor K[N]."""
    if complement is None:
        rep = is_trivial_datum(alpha)
        if rep.kind != "trivial":
            raise ValueError(
                "datum is not trivial: <g> has no complement on which "
                "chi restricts to 1")
        complement = rep.complement
    G = alpha.group
    src = build_A(alpha)
    n0 = G.element_order(alpha.g)
    fam = a_n_d_mu_q(FamilyParams(n0, alpha.d, alpha.q(), alpha.mu))
    KN = group_hopf_algebra(G.subgroup_table(complement))
    dst = hopf_tensor(fam, KN)
    N = lcm(src.conductor, dst.conductor)
    src_e, dst_e = src.embed(N), dst.embed(N)
    d = alpha.d
    nN = KN.dim
    one = CycloNum.one(N)
    comp = sorted(complement)
    images = {G.identity * d + 1: {1 * nN: one},     # x -> x' (x) 1
              alpha.g * d: {d * nN: one}}            # g -> g' (x) 1
    for j, elt in enumerate(comp):
        images[elt * d] = {j: one}                   # n -> 1 (x) n
    w = extend_from_generators(src_e, dst_e, images)
    report = check_map(w)
    if not report.ok:
        raise ArithmeticError(
            f"tensor splitting failed verification: {report.failures[:1]}")
    w.meta["complement"] = tuple(comp)
    return w


# --- coalgebra shape ---------------------------------------------------------


@dataclass
class ShapeReport:
    components: int
    grouplikes_per_component: tuple
    index: int                  # [G : <g>]
    identity_component_ok: bool


def coalgebra_shape(alpha: GroupDatum) -> ShapeReport:
    """Check A(alpha) decomposes as [G:<g>] copies of the coalgebra C_d(o(g))."""
    _require_valid(alpha)
    if alpha.d < 2:
        raise ValueError("chi(g) = 1 gives a semisimple group algebra; "
                         "no monomial coalgebra shape to check")
    G = alpha.group
    A = build_A(alpha)
    d = alpha.d
    n0 = G.element_order(alpha.g)
    index = G.order // n0
    comps = coalgebra_components(A)
    if len(comps) != index:
        raise ArithmeticError(
            f"{len(comps)} coalgebra components, expected [G:<g>] = {index}")
    sizes = tuple(len(c) for c in comps)
    if any(s != n0 for s in sizes):
        raise ArithmeticError(
            f"component group-like counts {sizes}, expected all {n0}")

    # identity component versus C_d(n0): h^a x^j -> j!_q p_a^j
    ok, pc = cofrobenius_classify(d, n0)
    if not ok:
        raise AssertionError("unreachable: d >= 2")
    qc = alpha.q().to_cyclo().embed(A.conductor)
    fact = [q_factorial(j, qc) for j in range(d)]
    pos_of = {G.power(alpha.g, a): a for a in range(n0)}

    def to_c(idx_a: int):
        h, j = divmod(idx_a, d)
        if h not in pos_of:
            return None
        return pos_of[h] * d + j, fact[j]

    for h in pos_of:
        for j in range(d):
            src_idx = h * d + j
            img = to_c(src_idx)
            lhs: dict = {}
            pidx, coef = img
            for (u, v), c in pc.comult[pidx]:
                _acc(lhs, (u, v), coef * c.embed(A.conductor))
            rhs: dict = {}
            for (u, v), c in A.comult[src_idx]:
                iu, iv = to_c(u), to_c(v)
                if iu is None or iv is None:
                    raise ArithmeticError(
                        "comultiplication leaves the identity component")
                _acc(rhs, (iu[0], iv[0]), c * iu[1] * iv[1])
            if lhs != rhs:
                raise ArithmeticError(
                    f"identity component is not C_{d}({n0}) at basis "
                    f"{A.labels[src_idx]}")
            eps_c = pc.counit[pidx].embed(A.conductor) * coef
            if eps_c != A.counit[src_idx]:
                raise ArithmeticError(
                    f"counit mismatch at basis {A.labels[src_idx]}")
    return ShapeReport(len(comps), sizes, index, True)


# --- catalogue ----------------------------------------------------------------


def _abelian_group(factors) -> tuple:
    G = FiniteGroup.cyclic(factors[0])
    for nf in factors[1:]:
        G = G.direct_product(FiniteGroup.cyclic(nf))
    return G, list(iproduct(*(range(nf) for nf in factors)))


def _characters(factors, tuples):
    for exps in iproduct(*(range(nf) for nf in factors)):
        yield tuple(
            _root_product(factors, t, exps) for t in tuples)


def _root_product(factors, t, exps) -> RootOfUnity:
    out = RootOfUnity(1, 0)
    for nf, a, b in zip(factors, t, exps):
        out = out * RootOfUnity(nf, a * b)
    return out


def catalogue(max_group: int = 12, mus=(0, 1)) -> list:
    """All valid data with d >= 2 over Z_1..Z_max and the small 2-groups."""
    shapes = [(n,) for n in range(1, max_group + 1)]
    for extra in ((2, 2), (2, 4), (2, 2, 2)):
        total = 1
        for nf in extra:
            total *= nf
        if total <= max_group:
            shapes.append(extra)
    out = []
    for factors in shapes:
        G, tuples = _abelian_group(factors)
        for g in range(G.order):
            n0 = G.element_order(g)
            for chi in _characters(factors, tuples):
                d = chi[g].order
                if d < 2:
                    continue
                for mu in mus:
                    if mu != 0:
                        if n0 == d:
                            continue
                        if any((z ** d).order != 1 for z in chi):
                            continue
                    out.append(GroupDatum(G, g, chi,
                                          CycloNum.from_rational(mu)))
    return out
