"""q-integers, q-factorials and Gaussian binomials at exact scalars.

Gaussian binomials are built with the q-Pascal recurrence
(a choose b)_q = (a-1 choose b-1)_q + q^b (a-1 choose b)_q,
never as a quotient of q-factorials: at roots of unity the factorials
vanish while the binomial is still well defined.
"""

from __future__ import annotations

from .cyclo import CycloNum, RootOfUnity

_triangles: dict[tuple, list[list[CycloNum]]] = {}
_powers: dict[tuple, list[CycloNum]] = {}
_inverses: dict[tuple, CycloNum] = {}


def _as_cyclo(q) -> CycloNum:
    if isinstance(q, CycloNum):
        return q
    if isinstance(q, RootOfUnity):
        return q.to_cyclo()
    return CycloNum.from_rational(q)


def q_power(e: int, q) -> CycloNum:
    """q**e with a per-q cache (e may be negative for invertible q)."""
    q = _as_cyclo(q)
    if e < 0:
        key = q.key()
        if key not in _inverses:
            _inverses[key] = q.inverse()
        return q_power(-e, _inverses[key])
    cache = _powers.setdefault(q.key(), [CycloNum.one(q.conductor)])
    while len(cache) <= e:
        cache.append(cache[-1] * q)
    return cache[e]


def q_integer(l: int, q) -> CycloNum:
    """[l]_q = 1 + q + ... + q^(l-1)."""
    if l < 0:
        raise ValueError("q-integer needs l >= 0")
    q = _as_cyclo(q)
    total = CycloNum.zero(q.conductor)
    for e in range(l):
        total = total + q_power(e, q)
    return total


def q_factorial(l: int, q) -> CycloNum:
    """[l]!_q = [1]_q [2]_q ... [l]_q."""
    if l < 0:
        raise ValueError("q-factorial needs l >= 0")
    q = _as_cyclo(q)
    total = CycloNum.one(q.conductor)
    for e in range(2, l + 1):
        total = total * q_integer(e, q)
    return total


def q_binomial(a: int, b: int, q) -> CycloNum:
    """Gaussian binomial (a choose b)_q via the q-Pascal recurrence."""
    if b < 0 or a < 0 or b > a:
        raise ValueError(f"bad Gaussian binomial ({a} choose {b})")
    q = _as_cyclo(q)
    rows = _triangles.setdefault(q.key(), [[CycloNum.one(q.conductor)]])
    while len(rows) <= a:
        prev = rows[-1]
        n = len(rows)
        row = [CycloNum.one(q.conductor)]
        for k in range(1, n):
            row.append(prev[k - 1] + q_power(k, q) * prev[k])
        row.append(CycloNum.one(q.conductor))
        rows.append(row)
    return rows[a][b]


def binomial_vanishes(l: int, m: int, d: int) -> bool:
    """Whether (m+l choose l)_q = 0 for q of multiplicative order d.

    Carry criterion: the binomial vanishes exactly when adding m and l
    produces a carry across a multiple of d.
    """
    if l < 0 or m < 0:
        raise ValueError("need l, m >= 0")
    if d < 1:
        raise ValueError("order must be positive")
    if d == 1:
        return False
    return (m + l) // d - m // d - l // d > 0


def q_vandermonde_check(n0: int, l: int, k: int, q) -> bool:
    """Exact check of the q-Vandermonde identity

    sum_{r+s=k} q^(s*l - s*r) (k choose r)_q (n0-k choose l-r)_q
        = (n0 choose l)_q   for 0 < k < n0, 0 <= l <= n0.
    """
    if not (0 < k < n0) or not (0 <= l <= n0):
        raise ValueError("need 0 < k < n0 and 0 <= l <= n0")
    q = _as_cyclo(q)
    total = CycloNum.zero(q.conductor)
    for r in range(max(0, l + k - n0), min(k, l) + 1):
        s = k - r
        term = q_binomial(k, r, q) * q_binomial(n0 - k, l - r, q)
        total = total + q_power(s * l - s * r, q) * term
    return total == q_binomial(n0, l, q)
