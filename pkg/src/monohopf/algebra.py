"""Finite-dimensional (bi/Hopf) algebras as explicit structure constants.

An FDBialgebra stores sparse multiplication / comultiplication tables over a
fixed cyclotomic conductor and knows nothing about where it came from.  All
axioms are checked mechanically and exhaustively: associativity on every
basis triple, compatibility on every basis pair, the antipode convolution
law on every basis element.  Nothing is trusted from a presentation.

Elements are sparse dicts {basis index: CycloNum}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cyclo import CycloNum, lcm
from .linalg import Eliminator, nullspace, vec_add_scaled, vec_equal, vec_scale

_FAST_DIM = 26  # above this, use the integer-vectorized verification kernels


def _norm_terms(terms, conductor):
    out = []
    for idx, c in terms:
        if not isinstance(c, CycloNum):
            c = CycloNum.from_rational(c, conductor)
        elif c.conductor != conductor:
            c = c.embed(conductor)
        if not c.is_zero():
            out.append((idx, c))
    out.sort(key=lambda t: t[0] if isinstance(t[0], tuple) else (t[0],))
    return tuple(out)


class FDBialgebra:
    """Structure constants of a finite-dimensional algebra/bialgebra.

    mult[i][j] = tuple of (k, coeff) with b_i b_j = sum coeff * b_k
    comult[i]  = tuple of ((j, k), coeff) with D(b_i) = sum coeff * b_j (x) b_k
    unit/counit are dense coefficient tuples; antipode[i] is the sparse row
    for S(b_i).  comult/counit/antipode may be None for plain algebras.
    """

    __slots__ = ("dim", "conductor", "labels", "mult", "unit", "comult",
                 "counit", "antipode", "flags", "meta")

    def __init__(self, dim, conductor, labels, mult, unit,
                 comult=None, counit=None, antipode=None, meta=None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        if len(labels) != dim:
            raise ValueError("need one label per basis element")
        self.dim = dim
        self.conductor = conductor
        self.labels = tuple(labels)
        rows = []
        for i in range(dim):
            row = []
            for j in range(dim):
                terms = _norm_terms(mult[i][j], conductor)
                for k, _ in terms:
                    if not 0 <= k < dim:
                        raise ValueError("product index out of range")
                row.append(terms)
            rows.append(tuple(row))
        self.mult = tuple(rows)
        self.unit = tuple(self._coerce_scalar(c) for c in unit)
        if len(self.unit) != dim:
            raise ValueError("unit vector has wrong length")
        if comult is not None:
            cm = []
            for i in range(dim):
                terms = _norm_terms(comult[i], conductor)
                for (j, k), _ in terms:
                    if not (0 <= j < dim and 0 <= k < dim):
                        raise ValueError("comultiplication index out of range")
                cm.append(terms)
            self.comult = tuple(cm)
            self.counit = tuple(self._coerce_scalar(c) for c in counit)
            if len(self.counit) != dim:
                raise ValueError("counit vector has wrong length")
        else:
            self.comult = None
            self.counit = None
        if antipode is not None:
            self.antipode = tuple(_norm_terms(antipode[i], conductor)
                                  for i in range(dim))
        else:
            self.antipode = None
        self.flags = set()
        self.meta = dict(meta) if meta else {}

    def _coerce_scalar(self, c):
        if not isinstance(c, CycloNum):
            return CycloNum.from_rational(c, self.conductor)
        if c.conductor != self.conductor:
            return c.embed(self.conductor)
        return c

    # --- element helpers -------------------------------------------------

    def basis_vec(self, i: int) -> dict:
        return {i: CycloNum.one(self.conductor)}

    def unit_vec(self) -> dict:
        return {i: c for i, c in enumerate(self.unit) if not c.is_zero()}

    def product_vec(self, u: dict, v: dict) -> dict:
        out: dict = {}
        mult = self.mult
        for i, cu in u.items():
            row = mult[i]
            for j, cv in v.items():
                c = cu * cv
                if c.is_zero():
                    continue
                for k, w in row[j]:
                    cur = out.get(k)
                    nv = w * c if cur is None else cur + w * c
                    if nv.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = nv
        return out

    def comult_vec(self, u: dict) -> dict:
        out: dict = {}
        for i, cu in u.items():
            for jk, w in self.comult[i]:
                cur = out.get(jk)
                nv = w * cu if cur is None else cur + w * cu
                if nv.is_zero():
                    out.pop(jk, None)
                else:
                    out[jk] = nv
        return out

    def counit_vec(self, u: dict) -> CycloNum:
        total = CycloNum.zero(self.conductor)
        for i, cu in u.items():
            total = total + self.counit[i] * cu
        return total

    def antipode_vec(self, u: dict) -> dict:
        out: dict = {}
        for i, cu in u.items():
            vec_add_scaled(out, dict(self.antipode[i]), cu)
        return out

    def power_vec(self, u: dict, e: int) -> dict:
        out = self.unit_vec()
        for _ in range(e):
            out = self.product_vec(out, u)
        return out

    def embed(self, conductor: int) -> "FDBialgebra":
        if conductor == self.conductor:
            return self
        emb = lambda c: c.embed(conductor)
        mult = [[[(k, emb(c)) for k, c in self.mult[i][j]]
                 for j in range(self.dim)] for i in range(self.dim)]
        comult = counit = antipode = None
        if self.comult is not None:
            comult = [[(jk, emb(c)) for jk, c in row] for row in self.comult]
            counit = [emb(c) for c in self.counit]
        if self.antipode is not None:
            antipode = [[(j, emb(c)) for j, c in row] for row in self.antipode]
        return FDBialgebra(self.dim, conductor, self.labels, mult,
                           [emb(c) for c in self.unit], comult, counit,
                           antipode, meta=self.meta)

    def same_tables(self, other: "FDBialgebra") -> bool:
        return (self.dim == other.dim
                and self.conductor == other.conductor
                and self.mult == other.mult
                and self.unit == other.unit
                and self.comult == other.comult
                and self.counit == other.counit
                and self.antipode == other.antipode)

    def __repr__(self):
        parts = ["algebra"]
        if self.comult is not None:
            parts.append("coalgebra")
        if self.antipode is not None:
            parts.append("antipode")
        return f"FDBialgebra(dim={self.dim}, N={self.conductor}, {'+'.join(parts)})"


@dataclass
class VerifyReport:
    suite: str
    ok: bool
    checked: int
    failures: list = field(default_factory=list)

    def first_failure(self):
        return self.failures[0] if self.failures else None


def _tensor_terms(a: dict, b: dict) -> dict:
    out = {}
    for j, cj in a.items():
        for k, ck in b.items():
            c = cj * ck
            if not c.is_zero():
                out[(j, k)] = c
    return out


# --- verifier suites -----------------------------------------------------


def verify_algebra(alg: FDBialgebra, force_pure: bool = False) -> VerifyReport:
    """Unit laws plus associativity on every basis triple."""
    failures = []
    one = alg.unit_vec()
    for j in range(alg.dim):
        bj = alg.basis_vec(j)
        left = alg.product_vec(one, bj)
        right = alg.product_vec(bj, one)
        if not vec_equal(left, bj):
            failures.append({"law": "unit-left", "index": j, "got": left})
        if not vec_equal(right, bj):
            failures.append({"law": "unit-right", "index": j, "got": right})
    checked = 2 * alg.dim

    fast_passed = False
    if not failures and not force_pure and alg.dim > _FAST_DIM:
        from . import fastcheck
        fast_passed = fastcheck.assoc_fast(alg) is True
        # False (failed) or None (kernel unavailable): pure scan decides
    if not failures and not fast_passed:
        failures.extend(_assoc_failures_pure(alg, limit=1))
    checked += alg.dim ** 3
    report = VerifyReport("algebra", not failures, checked, failures)
    if report.ok:
        alg.flags.add("algebra")
    return report


def _assoc_failures_pure(alg: FDBialgebra, limit: int = 1) -> list:
    failures = []
    mult = alg.mult
    dim = alg.dim
    for i in range(dim):
        mi = mult[i]
        for j in range(dim):
            tij = mi[j]
            mj = mult[j]
            for k in range(dim):
                lhs: dict = {}
                for r, c in tij:
                    for s, c2 in mult[r][k]:
                        cur = lhs.get(s)
                        nv = c * c2 if cur is None else cur + c * c2
                        if nv.is_zero():
                            lhs.pop(s, None)
                        else:
                            lhs[s] = nv
                rhs: dict = {}
                for r, c in mj[k]:
                    for s, c2 in mi[r]:
                        cur = rhs.get(s)
                        nv = c * c2 if cur is None else cur + c * c2
                        if nv.is_zero():
                            rhs.pop(s, None)
                        else:
                            rhs[s] = nv
                if not vec_equal(lhs, rhs):
                    failures.append({"law": "associativity",
                                     "triple": (i, j, k),
                                     "lhs": lhs, "rhs": rhs})
                    if len(failures) >= limit:
                        return failures
    return failures


def verify_coalgebra(alg: FDBialgebra) -> VerifyReport:
    """Counit laws plus coassociativity on every basis element."""
    if alg.comult is None:
        raise ValueError("no comultiplication present")
    failures = []
    for i in range(alg.dim):
        terms = alg.comult[i]
        left: dict = {}
        right: dict = {}
        eps_l: dict = {}
        eps_r: dict = {}
        for (j, k), c in terms:
            for (a, b), c2 in alg.comult[j]:
                key = (a, b, k)
                cur = left.get(key)
                nv = c * c2 if cur is None else cur + c * c2
                if nv.is_zero():
                    left.pop(key, None)
                else:
                    left[key] = nv
            for (a, b), c2 in alg.comult[k]:
                key = (j, a, b)
                cur = right.get(key)
                nv = c * c2 if cur is None else cur + c * c2
                if nv.is_zero():
                    right.pop(key, None)
                else:
                    right[key] = nv
            vec_add_scaled(eps_l, {k: c}, alg.counit[j])
            vec_add_scaled(eps_r, {j: c}, alg.counit[k])
        if not vec_equal(left, right):
            failures.append({"law": "coassociativity", "index": i,
                             "lhs": left, "rhs": right})
        if not vec_equal(eps_l, alg.basis_vec(i)):
            failures.append({"law": "counit-left", "index": i, "got": eps_l})
        if not vec_equal(eps_r, alg.basis_vec(i)):
            failures.append({"law": "counit-right", "index": i, "got": eps_r})
        if failures:
            break
    report = VerifyReport("coalgebra", not failures, 3 * alg.dim, failures)
    if report.ok:
        alg.flags.add("coalgebra")
    return report


def verify_bialgebra(alg: FDBialgebra, force_pure: bool = False) -> VerifyReport:
    """Comultiplication and counit are algebra maps; checked on all pairs."""
    if "algebra" not in alg.flags or "coalgebra" not in alg.flags:
        raise ValueError("verify_algebra and verify_coalgebra must pass first")
    failures = []
    one = alg.unit_vec()
    if not vec_equal(alg.comult_vec(one), _tensor_terms(one, one)):
        failures.append({"law": "comult-unit", "got": alg.comult_vec(one)})
    if not alg.counit_vec(one).is_one():
        failures.append({"law": "counit-unit", "got": alg.counit_vec(one)})

    if not failures:
        for i in range(alg.dim):
            ei = alg.counit[i]
            for j in range(alg.dim):
                lhs = CycloNum.zero(alg.conductor)
                for k, c in alg.mult[i][j]:
                    lhs = lhs + c * alg.counit[k]
                if lhs != ei * alg.counit[j]:
                    failures.append({"law": "counit-multiplicative",
                                     "pair": (i, j)})
                    break
            if failures:
                break

    fast_passed = False
    if not failures and not force_pure and alg.dim > _FAST_DIM:
        from . import fastcheck
        fast_passed = fastcheck.comult_mult_fast(alg) is True
    if not failures and not fast_passed:
        failures.extend(_comult_mult_failures_pure(alg, limit=1))

    checked = alg.dim ** 2 * 2 + 2
    report = VerifyReport("bialgebra", not failures, checked, failures)
    if report.ok:
        alg.flags.add("bialgebra")
    return report


def _comult_mult_failures_pure(alg: FDBialgebra, limit: int = 1) -> list:
    failures = []
    for i in range(alg.dim):
        di = alg.comult[i]
        for j in range(alg.dim):
            lhs: dict = {}
            for k, c in alg.mult[i][j]:
                for jk, c2 in alg.comult[k]:
                    cur = lhs.get(jk)
                    nv = c * c2 if cur is None else cur + c * c2
                    if nv.is_zero():
                        lhs.pop(jk, None)
                    else:
                        lhs[jk] = nv
            rhs: dict = {}
            for (a1, b1), c1 in di:
                for (a2, b2), c2 in alg.comult[j]:
                    c12 = c1 * c2
                    if c12.is_zero():
                        continue
                    for k1, w1 in alg.mult[a1][a2]:
                        for k2, w2 in alg.mult[b1][b2]:
                            w = c12 * w1 * w2
                            if w.is_zero():
                                continue
                            key = (k1, k2)
                            cur = rhs.get(key)
                            nv = w if cur is None else cur + w
                            if nv.is_zero():
                                rhs.pop(key, None)
                            else:
                                rhs[key] = nv
            if not vec_equal(lhs, rhs):
                failures.append({"law": "comult-multiplicative",
                                 "pair": (i, j), "lhs": lhs, "rhs": rhs})
                if len(failures) >= limit:
                    return failures
    return failures


def verify_antipode(alg: FDBialgebra) -> VerifyReport:
    """Both convolution identities, m(S (x) id)D = eta eps = m(id (x) S)D."""
    if alg.antipode is None:
        raise ValueError("no antipode present")
    if "bialgebra" not in alg.flags:
        raise ValueError("verify_bialgebra must pass first")
    failures = []
    one = alg.unit_vec()
    for i in range(alg.dim):
        expect = vec_scale(one, alg.counit[i])
        left: dict = {}
        right: dict = {}
        for (j, k), c in alg.comult[i]:
            sj = alg.antipode_vec({j: c})
            vec_add_scaled(left, alg.product_vec(sj, alg.basis_vec(k)),
                           CycloNum.one(alg.conductor))
            sk = alg.antipode_vec({k: c})
            vec_add_scaled(right, alg.product_vec(alg.basis_vec(j), sk),
                           CycloNum.one(alg.conductor))
        if not vec_equal(left, expect):
            failures.append({"law": "antipode-left", "index": i,
                             "lhs": left, "expected": expect})
        if not vec_equal(right, expect):
            failures.append({"law": "antipode-right", "index": i,
                             "lhs": right, "expected": expect})
        if failures:
            break
    report = VerifyReport("antipode", not failures, 2 * alg.dim, failures)
    if report.ok:
        alg.flags.add("antipode")
    return report


def verify_all(alg: FDBialgebra, force_pure: bool = False) -> dict:
    """Run every applicable suite in dependency order."""
    reports = {"algebra": verify_algebra(alg, force_pure=force_pure)}
    if alg.comult is not None and reports["algebra"].ok:
        reports["coalgebra"] = verify_coalgebra(alg)
        if reports["coalgebra"].ok:
            reports["bialgebra"] = verify_bialgebra(alg, force_pure=force_pure)
            if alg.antipode is not None and reports["bialgebra"].ok:
                reports["antipode"] = verify_antipode(alg)
    return reports


def is_hopf_verified(alg: FDBialgebra) -> bool:
    return {"algebra", "coalgebra", "bialgebra", "antipode"} <= alg.flags


# --- group-likes and skew-primitives -------------------------------------


def grouplike_candidates(alg: FDBialgebra) -> list[int]:
    """Basis elements b with D(b) = b (x) b and eps(b) = 1."""
    out = []
    for i in range(alg.dim):
        if alg.comult[i] == (((i, i), CycloNum.one(alg.conductor)),) \
                and alg.counit[i].is_one():
            out.append(i)
    return out


@dataclass
class GroupLikeReport:
    elements: list[int]
    table: list[list[int]]  # table[a][b] = position of product in elements
    identity: int

    def inverse(self, a: int) -> int:
        row = self.table[a]
        return row.index(self.identity)


def group_likes(alg: FDBialgebra, candidates=None) -> GroupLikeReport:
    """Verify candidates are group-like and close under multiplication."""
    if candidates is None:
        candidates = grouplike_candidates(alg)
    elements = list(candidates)
    pos = {g: a for a, g in enumerate(elements)}
    one = CycloNum.one(alg.conductor)
    for g in elements:
        if alg.comult[g] != (((g, g), one),) or not alg.counit[g].is_one():
            raise ValueError(f"basis element {g} is not group-like")
    table = []
    for g in elements:
        row = []
        for h in elements:
            prod = alg.product_vec(alg.basis_vec(g), alg.basis_vec(h))
            if len(prod) != 1:
                raise ValueError(f"group-likes {g},{h} do not close")
            k, c = next(iter(prod.items()))
            if not c.is_one() or k not in pos:
                raise ValueError(f"group-likes {g},{h} do not close")
            row.append(pos[k])
        table.append(row)
    unit = alg.unit_vec()
    if len(unit) != 1 or next(iter(unit)) not in pos:
        raise ValueError("unit is not among the group-likes")
    identity = pos[next(iter(unit))]
    for a in range(len(elements)):
        if identity not in table[a]:
            raise ValueError("group-likes are not closed under inverses")
    return GroupLikeReport(elements, table, identity)


def skew_primitives(alg: FDBialgebra, x: int, y: int) -> list[dict]:
    """Basis of P_{x,y} = {c : D(c) = c (x) b_x + b_y (x) c}."""
    rows: dict = {}
    one = CycloNum.one(alg.conductor)
    for r in range(alg.dim):
        for (a, b), c in alg.comult[r]:
            rows.setdefault((a, b), {})[r] = \
                rows.get((a, b), {}).get(r, CycloNum.zero(alg.conductor)) + c
        key = (r, x)
        rows.setdefault(key, {})
        rows[key][r] = rows[key].get(r, CycloNum.zero(alg.conductor)) - one
        key = (y, r)
        rows.setdefault(key, {})
        rows[key][r] = rows[key].get(r, CycloNum.zero(alg.conductor)) - one
    cleaned = []
    for row in rows.values():
        row = {k: v for k, v in row.items() if not v.is_zero()}
        if row:
            cleaned.append(row)
    return nullspace(cleaned, alg.dim)


def is_skew_primitive(alg: FDBialgebra, vec: dict, x: int, y: int) -> bool:
    expect = {}
    for r, c in vec.items():
        vec_add_scaled(expect, {(r, x): c}, CycloNum.one(alg.conductor))
        vec_add_scaled(expect, {(y, r): c}, CycloNum.one(alg.conductor))
    return vec_equal(alg.comult_vec(vec), expect)


@dataclass
class LinkQuiver:
    grouplikes: GroupLikeReport
    multiplicity: dict  # (gi, gj) basis indices -> arrow count gi -> gj
    primitive_dims: dict  # (gi, gj) -> dim P_{gi,gj}

    def components(self) -> list[list[int]]:
        gl = self.grouplikes.elements
        parent = {g: g for g in gl}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for (a, b), m in self.multiplicity.items():
            if m > 0:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        groups: dict = {}
        for g in gl:
            groups.setdefault(find(g), []).append(g)
        return sorted(groups.values())


def link_quiver(alg: FDBialgebra, candidates=None, direct: bool = False) -> LinkQuiver:
    """Arrow multiplicities dim P_{x,y} - [x != y] between group-likes.

    Unless direct=True, P_{x,y} is obtained by translating P_{1,x^-1 y} by x
    (a linear bijection whenever x is invertible, which the group table
    guarantees); each translated vector is re-verified against the
    skew-primitive condition, so the shortcut cannot silently lie.
    """
    gl = group_likes(alg, candidates)
    dims: dict = {}
    mult: dict = {}
    n = len(gl.elements)
    unit_idx = gl.elements[gl.identity]
    if direct:
        for a in range(n):
            for b in range(n):
                x, y = gl.elements[a], gl.elements[b]
                dims[(x, y)] = len(skew_primitives(alg, x, y))
    else:
        base = {h: skew_primitives(alg, unit_idx, gl.elements[h])
                for h in range(n)}
        for a in range(n):
            inv = gl.inverse(a)
            x = gl.elements[a]
            bx = alg.basis_vec(x)
            for b in range(n):
                y = gl.elements[b]
                h = gl.table[inv][b]  # x^-1 y
                translated = [alg.product_vec(bx, v) for v in base[h]]
                for v in translated:
                    if not is_skew_primitive(alg, v, x, y):
                        raise ArithmeticError(
                            "translation produced a non-skew-primitive; "
                            "input is not the Hopf algebra it claims to be")
                dims[(x, y)] = len(translated)
    for (x, y), d in dims.items():
        mult[(x, y)] = d - (1 if x != y else 0)
    return LinkQuiver(gl, mult, dims)


def coalgebra_components(alg: FDBialgebra, candidates=None) -> list[list[int]]:
    """Partition of the group-likes by link-quiver connectivity."""
    return link_quiver(alg, candidates).components()


# --- center, dual, tensor -------------------------------------------------


def center(alg: FDBialgebra) -> list[dict]:
    """Basis of {z : z b = b z for every basis element b}."""
    basis = [alg.basis_vec(i) for i in range(alg.dim)]
    for i in range(alg.dim):
        bi = alg.basis_vec(i)
        commutators = []
        for v in basis:
            lhs = alg.product_vec(bi, v)
            vec_add_scaled(lhs, alg.product_vec(v, bi),
                           CycloNum.from_rational(-1, alg.conductor))
            commutators.append(lhs)
        rows: dict = {}
        for t, com in enumerate(commutators):
            for r, c in com.items():
                rows.setdefault(r, {})[t] = c
        combos = nullspace(list(rows.values()), len(basis))
        new_basis = []
        for combo in combos:
            vec: dict = {}
            for t, c in combo.items():
                vec_add_scaled(vec, basis[t], c)
            new_basis.append(vec)
        basis = new_basis
        if not basis:
            break
    return basis


def dual(alg: FDBialgebra) -> FDBialgebra:
    """Transpose: multiplication and comultiplication swap; unit <-> counit."""
    if alg.comult is None:
        raise ValueError("dual needs a full bialgebra")
    dmult = [[[] for _ in range(alg.dim)] for _ in range(alg.dim)]
    for k in range(alg.dim):
        for (i, j), c in alg.comult[k]:
            dmult[i][j].append((k, c))
    dcomult = [[] for _ in range(alg.dim)]
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k, c in alg.mult[i][j]:
                dcomult[k].append(((i, j), c))
    antipode = None
    if alg.antipode is not None:
        arows = [[] for _ in range(alg.dim)]
        for i in range(alg.dim):
            for j, c in alg.antipode[i]:
                arows[j].append((i, c))
        antipode = arows
    return FDBialgebra(alg.dim, alg.conductor,
                       tuple(l + "*" for l in alg.labels),
                       dmult, alg.counit, dcomult, alg.unit, antipode,
                       meta={"dual_of": alg.meta.get("name", "?")})


def hopf_tensor(a: FDBialgebra, b: FDBialgebra) -> FDBialgebra:
    """Componentwise tensor product Hopf structure on A (x) B."""
    if a.conductor != b.conductor:
        m = lcm(a.conductor, b.conductor)
        a, b = a.embed(m), b.embed(m)
    dim = a.dim * b.dim
    idx = lambda i, j: i * b.dim + j
    labels = [f"{la}(x){lb}" for la in a.labels for lb in b.labels]
    mult = [[[] for _ in range(dim)] for _ in range(dim)]
    for i1 in range(a.dim):
        for j1 in range(b.dim):
            for i2 in range(a.dim):
                for j2 in range(b.dim):
                    terms = []
                    for k1, c1 in a.mult[i1][i2]:
                        for k2, c2 in b.mult[j1][j2]:
                            terms.append((idx(k1, k2), c1 * c2))
                    mult[idx(i1, j1)][idx(i2, j2)] = terms
    unit = [CycloNum.zero(a.conductor)] * dim
    for i, ci in enumerate(a.unit):
        for j, cj in enumerate(b.unit):
            unit[idx(i, j)] = ci * cj
    comult = counit = antipode = None
    if a.comult is not None and b.comult is not None:
        comult = [[] for _ in range(dim)]
        for i in range(a.dim):
            for j in range(b.dim):
                terms = []
                for (p1, p2), c1 in a.comult[i]:
                    for (r1, r2), c2 in b.comult[j]:
                        terms.append(((idx(p1, r1), idx(p2, r2)), c1 * c2))
                comult[idx(i, j)] = terms
        counit = [a.counit[i] * b.counit[j]
                  for i in range(a.dim) for j in range(b.dim)]
    if a.antipode is not None and b.antipode is not None:
        antipode = [[] for _ in range(dim)]
        for i in range(a.dim):
            for j in range(b.dim):
                antipode[idx(i, j)] = [
                    (idx(k1, k2), c1 * c2)
                    for k1, c1 in a.antipode[i] for k2, c2 in b.antipode[j]]
    return FDBialgebra(dim, a.conductor, labels, mult, unit,
                       comult, counit, antipode)


# --- maps between algebras ------------------------------------------------


@dataclass
class IsoWitness:
    source: FDBialgebra
    target: FDBialgebra
    rows: tuple  # rows[i] = sparse image of source basis element i
    meta: dict = field(default_factory=dict)
    checked: set = field(default_factory=set)

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for i, c in vec.items():
            vec_add_scaled(out, dict(self.rows[i]), c)
        return out


@dataclass
class MapReport:
    ok: bool
    algebra_ok: bool | None
    coalgebra_ok: bool | None
    bijective: bool | None
    failures: list


def check_map(w: IsoWitness, algebra: bool = True, coalgebra: bool = True,
              bijective: bool = True) -> MapReport:
    """Exhaustive structure-map check on every basis pair/element."""
    failures = []
    algebra_ok = coalgebra_ok = bij = None
    src, dst = w.source, w.target
    if algebra:
        algebra_ok = True
        if not vec_equal(w.apply(src.unit_vec()), dst.unit_vec()):
            algebra_ok = False
            failures.append({"law": "unit", "got": w.apply(src.unit_vec())})
        for i in range(src.dim):
            fi = dict(w.rows[i])
            for j in range(src.dim):
                lhs: dict = {}
                for k, c in src.mult[i][j]:
                    vec_add_scaled(lhs, dict(w.rows[k]), c)
                rhs = dst.product_vec(fi, dict(w.rows[j]))
                if not vec_equal(lhs, rhs):
                    algebra_ok = False
                    failures.append({"law": "multiplicative", "pair": (i, j),
                                     "lhs": lhs, "rhs": rhs})
                    break
            if not algebra_ok:
                break
    if coalgebra:
        coalgebra_ok = True
        for i in range(src.dim):
            lhs = dst.comult_vec(dict(w.rows[i]))
            rhs: dict = {}
            for (j, k), c in src.comult[i]:
                for (r, s), c2 in _tensor_terms(dict(w.rows[j]),
                                                dict(w.rows[k])).items():
                    cur = rhs.get((r, s))
                    nv = c * c2 if cur is None else cur + c * c2
                    if nv.is_zero():
                        rhs.pop((r, s), None)
                    else:
                        rhs[(r, s)] = nv
            if not vec_equal(lhs, rhs):
                coalgebra_ok = False
                failures.append({"law": "comultiplicative", "index": i,
                                 "lhs": lhs, "rhs": rhs})
                break
            if dst.counit_vec(dict(w.rows[i])) != src.counit[i]:
                coalgebra_ok = False
                failures.append({"law": "counit", "index": i})
                break
    if bijective:
        bij = src.dim == dst.dim
        if bij:
            elim = Eliminator()
            for row in w.rows:
                elim.add(dict(row))
            bij = elim.rank == dst.dim
        if not bij:
            failures.append({"law": "bijective", "rank": None})
    report = MapReport(not failures, algebra_ok, coalgebra_ok, bij, failures)
    if report.ok:
        if algebra:
            w.checked.add("algebra")
        if coalgebra:
            w.checked.add("coalgebra")
        if bijective:
            w.checked.add("bijective")
    return report


def extend_from_generators(src: FDBialgebra, dst: FDBialgebra,
                           images: dict) -> IsoWitness:
    """Extend generator images to a linear map on all of src.

    images: {source basis index: sparse element of dst}.  The unit maps to
    the unit; words in the generators are closed under right multiplication
    until they span src.  Inconsistent assignments (images that would not be
    well defined on some basis element) and non-generating sets both raise
    ValueError.
    """
    elim = Eliminator()
    gens = [(g, dict(img)) for g, img in images.items()]
    queue = [(src.unit_vec(), dst.unit_vec())]
    try:
        elim.add(queue[0][0], queue[0][1])
    except ArithmeticError as e:
        raise ValueError(f"unit image inconsistent: {e}")
    while queue:
        vec, img = queue.pop()
        for g, gimg in gens:
            nvec = src.product_vec(vec, src.basis_vec(g))
            nimg = dst.product_vec(img, gimg)
            try:
                if elim.add(nvec, nimg) is not None:
                    queue.append((nvec, nimg))
            except ArithmeticError:
                raise ValueError(
                    "generator images are not a well-defined map "
                    f"(conflict at a word ending in generator {g})")
    if elim.rank < src.dim:
        raise ValueError(
            f"generators span only {elim.rank} of {src.dim} dimensions")
    rows = tuple(elim.solve(src.basis_vec(i)) for i in range(src.dim))
    return IsoWitness(src, dst, rows)


# --- Frobenius oracle ------------------------------------------------------


@dataclass
class OracleReport:
    verdict: str  # "frobenius" | "inconclusive"
    functional: tuple | None
    trials: int


def frobenius_oracle(alg: FDBialgebra, trials: int = 20, seed: int = 0,
                     bound: int = 9) -> OracleReport:
    """Randomized search for a functional f with f(ab) nondegenerate.

    Being Frobenius is witnessed by any single nondegenerate Gram matrix;
    the nondegenerate functionals form a Zariski-open set, so a few random
    small-integer functionals find one whenever it exists.  Failure to find
    one is reported as inconclusive, never as a negative certificate.
    """
    rng = random.Random(seed)
    for t in range(trials):
        f = [rng.randint(-bound, bound) for _ in range(alg.dim)]
        elim = Eliminator()
        for i in range(alg.dim):
            row: dict = {}
            for j in range(alg.dim):
                total = CycloNum.zero(alg.conductor)
                for k, c in alg.mult[i][j]:
                    if f[k]:
                        total = total + c * f[k]
                if not total.is_zero():
                    row[j] = total
            elim.add(row)
        if elim.rank == alg.dim:
            return OracleReport("frobenius", tuple(f), t + 1)
    return OracleReport("inconclusive", None, trials)
