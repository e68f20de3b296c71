"""The concrete Hopf families on basic cycles.

C_d(n,mu,q) lives on the paths of length < d of the n-cycle (basis p_i^l,
linear index i*d + l); A(n,d,mu,q) is its generator-and-relations twin on
the normal-form basis g^a x^b (same linear index a*d + b).  Both carry the
wrap-around product controlled by mu, with x^d = mu(1 - g^d).

The antipode stored here is S(p_i^l) = (-1)^l q^{-l(l-1)/2 - il} p_{n-l-i}^l
(equivalently S(x) = -g^{-1} x); it is the unique choice satisfying the
convolution law for this product/coproduct pair, and the verifier suites
prove that instance by instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .cyclo import (CycloNum, RootOfUnity, as_root_of_unity, divisors, lcm,
                    order_of)
from .qcalc import q_binomial, q_factorial, q_power
from .algebra import FDBialgebra, IsoWitness, check_map, extend_from_generators


class TruncationError(Exception):
    """A product left the stored window of a truncated graded table."""


@dataclass(frozen=True)
class FamilyParams:
    n: int
    d: int
    q: RootOfUnity
    mu: CycloNum
    mu_given: CycloNum = field(default=None, compare=False)

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("need d >= 2")
        if self.n % self.d:
            raise ValueError(
                f"no Hopf structure on C_{self.d}({self.n}): "
                f"{self.d} does not divide {self.n}")
        if order_of(self.q) != self.d:
            raise ValueError("q must be a primitive root of unity of order d")
        mu = self.mu
        if not isinstance(mu, CycloNum):
            mu = CycloNum.from_rational(mu)
        object.__setattr__(self, "mu_given", mu)
        if self.d == self.n and not mu.is_zero():
            # x^d = mu(1 - g^d) = 0 identically when g^d = 1
            mu = CycloNum.zero(mu.conductor)
        object.__setattr__(self, "mu", mu)

    def __hash__(self):
        return hash((self.n, self.d, self.q, self.mu.key()))

    @property
    def conductor(self) -> int:
        return lcm(self.q.conductor, self.mu.conductor)

    def q_cyclo(self) -> CycloNum:
        return self.q.to_cyclo()

    def label(self, family: str) -> str:
        mu = self.mu_given
        mu_s = str(mu.as_rational()) if mu.is_rational() else repr(mu)
        return f"{family}({self.n},{self.d},{mu_s}," \
               f"z{self.q.conductor}^{self.q.exponent})"


def params(n: int, d: int, mu, q) -> FamilyParams:
    """Convenience constructor; q may be a RootOfUnity, CycloNum, or +-1."""
    if not isinstance(q, RootOfUnity):
        if isinstance(q, CycloNum):
            q = as_root_of_unity(q)
        elif q == 1:
            q = RootOfUnity(1, 0)
        elif q == -1:
            q = RootOfUnity(2, 1)
        else:
            raise ValueError("q must be a root of unity")
    if not isinstance(mu, CycloNum):
        mu = CycloNum.from_rational(Fraction(mu))
    return FamilyParams(n, d, q, mu)


# --- truncated KZ_n(q) ----------------------------------------------------


class KZWindow:
    """The graded Hopf table of KZ_n(q) on paths of length <= bound.

    Products that would leave the window raise TruncationError rather than
    fabricate a value.
    """

    def __init__(self, n: int, q: RootOfUnity, bound: int):
        if bound < 1:
            raise ValueError("window bound must be >= 1")
        self.n = n
        self.q = q.to_cyclo()
        self.bound = bound

    def _check(self, i, l):
        if not (0 <= i < self.n and 0 <= l <= self.bound):
            raise ValueError("index outside the stored window")

    def product(self, i, l, j, m):
        """p_i^l * p_j^m as [( (i', l'), coeff )]."""
        self._check(i, l)
        self._check(j, m)
        if l + m > self.bound:
            raise TruncationError(
                f"product of lengths {l}+{m} exceeds window {self.bound}")
        c = q_power(j * l, self.q) * q_binomial(m + l, l, self.q)
        if c.is_zero():
            return []
        return [(((i + j) % self.n, l + m), c)]

    def comultiply(self, i, l):
        self._check(i, l)
        one = CycloNum.one(self.q.conductor)
        return [((((i + k) % self.n, l - k), (i, k)), one)
                for k in range(l + 1)]

    def counit(self, i, l):
        self._check(i, l)
        return CycloNum.from_rational(1 if l == 0 else 0, self.q.conductor)

    def antipode(self, i, l):
        self._check(i, l)
        sign = -1 if l % 2 else 1
        c = q_power(-(l * (l - 1)) // 2 - i * l, self.q) * sign
        return (((self.n - l - i) % self.n, l), c)


def kz_n_q_truncated(n: int, q: RootOfUnity, bound: int) -> KZWindow:
    return KZWindow(n, q, bound)


# --- the finite-dimensional families --------------------------------------

_cache: dict = {}


def _accumulate(terms: dict, key, c: CycloNum):
    cur = terms.get(key)
    nv = c if cur is None else cur + c
    if nv.is_zero():
        terms.pop(key, None)
    else:
        terms[key] = nv


def c_d_n_mu_q(p: FamilyParams) -> FDBialgebra:
    """Hopf structure constants on the coalgebra C_d(n) of the n-cycle."""
    key = ("C", p)
    if key in _cache:
        return _cache[key]
    n, d, q, mu = p.n, p.d, p.q_cyclo(), p.mu
    N = p.conductor
    dim = n * d
    idx = lambda i, l: i * d + l
    mult = [[[] for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for l in range(d):
            for j in range(n):
                for m in range(d):
                    terms: dict = {}
                    if l + m < d:
                        c = q_power(j * l, q) * q_binomial(m + l, l, q)
                        _accumulate(terms, idx((i + j) % n, l + m), c)
                    else:
                        r = l + m - d
                        base = mu * q_power(j * l, q) * (
                            q_factorial(r, q)
                            / (q_factorial(l, q) * q_factorial(m, q)))
                        _accumulate(terms, idx((i + j) % n, r), base)
                        _accumulate(terms, idx((i + j + d) % n, r), -base)
                    mult[idx(i, l)][idx(j, m)] = sorted(terms.items())
    one = CycloNum.one(N)
    comult = []
    counit = []
    antipode = []
    for i in range(n):
        for l in range(d):
            comult.append([((idx((i + k) % n, l - k), idx(i, k)), one)
                           for k in range(l + 1)])
            counit.append(CycloNum.from_rational(1 if l == 0 else 0, N))
            sign = -1 if l % 2 else 1
            c = q_power(-(l * (l - 1)) // 2 - i * l, q) * sign
            antipode.append([(idx((n - l - i) % n, l), c)])
    unit = [one if k == 0 else CycloNum.zero(N) for k in range(dim)]
    labels = [f"p_{i}^{l}" for i in range(n) for l in range(d)]
    alg = FDBialgebra(dim, N, labels, mult, unit, comult, counit, antipode,
                      meta={"family": "C", "params": p})
    _cache[key] = alg
    return alg


def a_n_d_mu_q(p: FamilyParams) -> FDBialgebra:
    """A(n,d,mu,q) on the normal-form basis g^a x^b (index a*d + b)."""
    key = ("A", p)
    if key in _cache:
        return _cache[key]
    n, d, q, mu = p.n, p.d, p.q_cyclo(), p.mu
    N = p.conductor
    dim = n * d
    idx = lambda a, b: a * d + b
    mult = [[[] for _ in range(dim)] for _ in range(dim)]
    for a in range(n):
        for b in range(d):
            for c_ in range(n):
                for e in range(d):
                    terms: dict = {}
                    coef = q_power(b * c_, q)
                    if b + e < d:
                        _accumulate(terms, idx((a + c_) % n, b + e), coef)
                    else:
                        r = b + e - d
                        base = mu * coef
                        _accumulate(terms, idx((a + c_) % n, r), base)
                        _accumulate(terms, idx((a + c_ + d) % n, r), -base)
                    mult[idx(a, b)][idx(c_, e)] = sorted(terms.items())
    one = CycloNum.one(N)
    comult = []
    counit = []
    antipode = []
    for a in range(n):
        for b in range(d):
            comult.append([((idx((a + k) % n, b - k), idx(a, k)),
                            q_binomial(b, k, q)) for k in range(b + 1)])
            counit.append(CycloNum.from_rational(1 if b == 0 else 0, N))
            sign = -1 if b % 2 else 1
            c = q_power(-(b * (b - 1)) // 2 - a * b, q) * sign
            antipode.append([(idx((-(a + b)) % n, b), c)])
    unit = [one if k == 0 else CycloNum.zero(N) for k in range(dim)]
    labels = [f"g^{a}x^{b}" for a in range(n) for b in range(d)]
    alg = FDBialgebra(dim, N, labels, mult, unit, comult, counit, antipode,
                      meta={"family": "A", "params": p})
    _cache[key] = alg
    return alg


def family_iso(p: FamilyParams) -> IsoWitness:
    """The verified isomorphism A(n,d,mu,q) -> C_d(n,mu,q), g^a x^b -> b!_q p_a^b."""
    src = a_n_d_mu_q(p)
    dst = c_d_n_mu_q(p)
    q = p.q_cyclo()
    rows = []
    for a in range(p.n):
        for b in range(p.d):
            rows.append({a * p.d + b: q_factorial(b, q).embed(p.conductor)})
    w = IsoWitness(src, dst, tuple(rows), meta={"params": p})
    report = check_map(w)
    if not report.ok:
        raise ArithmeticError(
            f"family isomorphism failed verification: {report.failures[:1]}")
    return w


# --- existence and classification ------------------------------------------


@dataclass(frozen=True)
class AdmitsReport:
    n: int
    d: int
    admits: bool
    # (d0, q, pattern) per divisor d0 of n and primitive q of order d0;
    # pattern: all (l+m choose l)_q with l,m <= d-1, l+m >= d vanish
    witness: tuple

    @property
    def consistent(self) -> bool:
        return all(holds == (d0 == self.d) for d0, _, holds in self.witness)


def admits_hopf(n: int, d: int) -> AdmitsReport:
    """Whether C_d(n) admits a Hopf structure (= d divides n), with the
    vanishing-pattern evidence for every divisor of n."""
    if d < 2:
        raise ValueError("need d >= 2")
    witness = []
    for d0 in divisors(n):
        for k in range(d0):
            if gcd(k, d0) != 1:
                continue
            q = RootOfUnity(d0, k).to_cyclo()
            holds = True
            for l in range(1, d):
                for m in range(d - l, d):
                    if not q_binomial(l + m, l, q).is_zero():
                        holds = False
                        break
                if not holds:
                    break
            witness.append((d0, RootOfUnity(d0, k), holds))
    return AdmitsReport(n, d, n % d == 0, tuple(witness))


@dataclass
class PairVerdict:
    kind: str  # "isomorphic" | "not-isomorphic" | "isomorphic-over-extension"
    delta: CycloNum | None = None
    invariant: str | None = None
    witness: IsoWitness | None = None


def _int_nth_root(x: int, d: int):
    if x < 0:
        return None
    if x in (0, 1):
        return x
    r = round(x ** (1.0 / d))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** d == x:
            return cand
    return None


def _rational_nth_root(r: Fraction, d: int):
    num = _int_nth_root(r.numerator, d)
    den = _int_nth_root(r.denominator, d)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _dth_root_in_cyclotomics(ratio: CycloNum, d: int, conductor_bound: int):
    """An exact delta with delta^d = ratio, as s * zeta, if one exists with
    rational s and a root of unity within the conductor bound."""
    N = ratio.conductor
    roots = [RootOfUnity(N, k) for k in range(N)]
    if N % 2:
        roots += [RootOfUnity(2 * N, (2 * k + N) % (2 * N)) for k in range(N)]
    for rho in roots:
        quot = ratio / rho.to_cyclo()
        if not quot.is_rational():
            continue
        s = quot.as_rational()
        # fold the sign of s into the root of unity
        if s < 0:
            rho = rho * RootOfUnity(2, 1)
            s = -s
        root_s = _rational_nth_root(s, d)
        if root_s is None:
            continue
        # tau^d = rho for tau = zeta_{d*M}^e where rho = zeta_M^e
        tau = RootOfUnity(d * rho.conductor, rho.exponent)
        if tau.conductor > conductor_bound:
            continue
        delta = tau.to_cyclo() * CycloNum.from_rational(root_s)
        if (delta ** d) == ratio:
            return delta
    return None


def classify_pair(p1: FamilyParams, p2: FamilyParams,
                  conductor_bound: int = 64) -> PairVerdict:
    """Isomorphism test on parameters: (n, d, q) are invariants; for d < n
    the mu's must differ by a d-th power delta^d = mu2/mu1."""
    if p1.n != p2.n:
        return PairVerdict("not-isomorphic", invariant=f"n: {p1.n} != {p2.n}")
    if p1.d != p2.d:
        return PairVerdict("not-isomorphic", invariant=f"d: {p1.d} != {p2.d}")
    if p1.q != p2.q:
        return PairVerdict("not-isomorphic",
                           invariant=f"q: {p1.q} != {p2.q}")
    one = CycloNum.one(1)
    if p1.d == p1.n:
        # mu collapses: both algebras are A(n,n,0,q)
        return PairVerdict("isomorphic", delta=one,
                           witness=_delta_witness(p1, p2, one))
    mu1, mu2 = p1.mu, p2.mu
    if mu1.is_zero() and mu2.is_zero():
        return PairVerdict("isomorphic", delta=one,
                           witness=_delta_witness(p1, p2, one))
    if mu1.is_zero() != mu2.is_zero():
        return PairVerdict("not-isomorphic",
                           invariant="mu: zero vs nonzero (no nonzero delta)")
    delta = _dth_root_in_cyclotomics(mu2 / mu1, p1.d, conductor_bound)
    if delta is None:
        return PairVerdict("isomorphic-over-extension")
    return PairVerdict("isomorphic", delta=delta,
                       witness=_delta_witness(p1, p2, delta))


def _delta_witness(p1: FamilyParams, p2: FamilyParams,
                   delta: CycloNum) -> IsoWitness:
    """Verified Hopf iso A(p2) -> A(p1) sending g -> g, x -> delta x."""
    src = a_n_d_mu_q(p2)
    dst = a_n_d_mu_q(p1)
    N = lcm(lcm(src.conductor, dst.conductor), delta.conductor)
    src_e, dst_e = src.embed(N), dst.embed(N)
    images = {p2.d: {p2.d: CycloNum.one(N)},      # g -> g
              1: {1: delta.embed(N)}}             # x -> delta x
    w = extend_from_generators(src_e, dst_e, images)
    report = check_map(w)
    if not report.ok:
        raise ArithmeticError(
            f"delta witness failed verification: {report.failures[:1]}")
    w.meta["delta"] = delta
    return w
