"""Quivers, paths, path-coalgebra splits, and monomial presentations.

Paths store their arrows in traversal order (first arrow first).  The
product convention matches the dual of the path coalgebra: beta * alpha is
"traverse alpha, then beta", nonzero only when alpha ends where beta starts.
Comultiplication splits a path into (later leg) (x) (earlier leg).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .cyclo import CycloNum
from .algebra import FDBialgebra


@dataclass(frozen=True)
class Quiver:
    vertices: int
    arrows: tuple = ()

    def __post_init__(self):
        if self.vertices < 1:
            raise ValueError("quiver needs at least one vertex")
        object.__setattr__(self, "arrows",
                           tuple((int(s), int(t)) for s, t in self.arrows))
        for s, t in self.arrows:
            if not (0 <= s < self.vertices and 0 <= t < self.vertices):
                raise ValueError("arrow endpoint out of range")

    def source(self, a: int) -> int:
        return self.arrows[a][0]

    def target(self, a: int) -> int:
        return self.arrows[a][1]

    def arrows_from(self, v: int) -> list[int]:
        return [a for a, (s, _) in enumerate(self.arrows) if s == v]

    def arrows_into(self, v: int) -> list[int]:
        return [a for a, (_, t) in enumerate(self.arrows) if t == v]

    def trivial_path(self, v: int) -> "Path":
        return Path(self, v)

    def path(self, start: int, arrows) -> "Path":
        return Path(self, start, tuple(arrows))

    def paths_from(self, v: int, length: int) -> list["Path"]:
        """All paths of the given length starting at v, lexicographic."""
        out = [Path(self, v)]
        for _ in range(length):
            out = [p.extended(a) for p in out for a in self.arrows_from(p.target)]
        return out

    def components(self) -> list[list[int]]:
        parent = list(range(self.vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for s, t in self.arrows:
            rs, rt = find(s), find(t)
            if rs != rt:
                parent[rs] = rt
        groups: dict = {}
        for v in range(self.vertices):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())


def cycle_quiver(n: int) -> Quiver:
    """The basic cycle: n vertices, one arrow i -> i+1 mod n."""
    if n < 1:
        raise ValueError("cycle needs at least one vertex")
    return Quiver(n, tuple((i, (i + 1) % n) for i in range(n)))


@dataclass(frozen=True)
class Path:
    quiver: Quiver
    start: int
    arrows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(int(a) for a in self.arrows))
        if not 0 <= self.start < self.quiver.vertices:
            raise ValueError("start vertex out of range")
        at = self.start
        for a in self.arrows:
            if self.quiver.source(a) != at:
                raise ValueError("arrows do not compose")
            at = self.quiver.target(a)

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def source(self) -> int:
        return self.start

    @property
    def target(self) -> int:
        at = self.start
        for a in self.arrows:
            at = self.quiver.target(a)
        return at

    def extended(self, arrow: int) -> "Path":
        return Path(self.quiver, self.start, self.arrows + (arrow,))

    def contains(self, sub: "Path") -> bool:
        """Contiguous subpath test."""
        if sub.length == 0:
            at = self.start
            if at == sub.start:
                return True
            for a in self.arrows:
                at = self.quiver.target(a)
                if at == sub.start:
                    return True
            return False
        n, m = len(self.arrows), len(sub.arrows)
        return any(self.arrows[i:i + m] == sub.arrows
                   for i in range(n - m + 1))

    def key(self):
        return (self.length, self.start, self.arrows)

    def label(self) -> str:
        if not self.arrows:
            return f"e{self.start}"
        return ".".join(f"a{a}" for a in self.arrows)

    def __repr__(self):
        return f"Path({self.label()}:{self.source}->{self.target})"


def path_compose(later: Path, earlier: Path):
    """later * earlier = traverse earlier then later; None if not composable."""
    if earlier.quiver != later.quiver or earlier.target != later.start:
        return None
    return Path(earlier.quiver, earlier.start, earlier.arrows + later.arrows)


def path_comultiply(p: Path) -> list[tuple[Path, Path]]:
    """All splits (later, earlier) with p = later * earlier, boundary included."""
    out = []
    mid = p.start
    for k in range(p.length + 1):
        earlier = Path(p.quiver, p.start, p.arrows[:k])
        later = Path(p.quiver, earlier.target, p.arrows[k:])
        out.append((later, earlier))
    return out


def path_counit(p: Path) -> int:
    return 1 if p.length == 0 else 0


@dataclass(frozen=True)
class MonomialPresentation:
    quiver: Quiver
    forbidden: tuple = ()
    bound: int = 2

    def __post_init__(self):
        object.__setattr__(self, "forbidden", tuple(self.forbidden))
        if self.bound < 2:
            raise ValueError("truncation bound must be at least 2")
        for f in self.forbidden:
            if f.quiver != self.quiver:
                raise ValueError("forbidden path from a different quiver")
            if f.length < 2:
                raise ValueError("forbidden paths must have length >= 2 "
                                 "(admissible ideal sits inside J^2)")


def monomial_basis(pres: MonomialPresentation) -> list[Path]:
    """All paths below the bound avoiding every forbidden subpath.

    Raises if a path of length = bound avoids all forbidden paths, i.e. the
    ideal fails to contain J^bound.
    """
    q = pres.quiver
    basis = []
    level = [q.trivial_path(v) for v in range(q.vertices)]
    for _ in range(pres.bound):
        level.sort(key=Path.key)
        basis.extend(level)
        nxt = []
        for p in level:
            for a in q.arrows_from(p.target):
                ext = p.extended(a)
                if not any(ext.contains(f) for f in pres.forbidden):
                    nxt.append(ext)
        level = nxt
    if level:
        raise ValueError(
            f"presentation is not admissible: path {level[0].label()} of "
            f"length {pres.bound} avoids every forbidden path")
    return basis


def socle_dimensions(pres: MonomialPresentation):
    """Counts of one-side-maximal basis paths per vertex.

    left[i]: basis paths starting at i that no arrow extends at the target
    end (dimension of the left-socle summand at i); right[i]: basis paths
    ending at i that no arrow extends at the source end.
    """
    q = pres.quiver
    basis = monomial_basis(pres)
    members = {(p.start, p.arrows) for p in basis}
    left = [0] * q.vertices
    right = [0] * q.vertices
    for p in basis:
        if not any((p.start, p.arrows + (a,)) in members
                   for a in q.arrows_from(p.target)):
            left[p.start] += 1
        if not any((q.source(a), (a,) + p.arrows) in members
                   for a in q.arrows_into(p.start)):
            right[p.target] += 1
    return tuple(left), tuple(right)


@dataclass(frozen=True)
class ComponentVerdict:
    vertices: tuple
    kind: str  # "PointAlgebra" | "TruncatedCycle" | "NotFrobenius"
    n: int | None = None
    d: int | None = None
    reason: str | None = None


def frobenius_classify(pres: MonomialPresentation) -> list[ComponentVerdict]:
    """Per-component verdict: point algebra, truncated cycle, or neither."""
    q = pres.quiver
    basis = monomial_basis(pres)
    verdicts = []
    for comp in q.components():
        compset = set(comp)
        arrows_in = [a for a, (s, _) in enumerate(q.arrows) if s in compset]
        if len(comp) == 1 and not arrows_in:
            verdicts.append(ComponentVerdict(tuple(comp), "PointAlgebra"))
            continue
        reason = None
        for v in comp:
            outs = len(q.arrows_from(v))
            ins = len(q.arrows_into(v))
            if outs == 0:
                reason = f"vertex {v} is a sink"
            elif ins == 0:
                reason = f"vertex {v} is a source"
            elif outs > 1:
                reason = f"vertex {v} has {outs} outgoing arrows"
            elif ins > 1:
                reason = f"vertex {v} has {ins} incoming arrows"
            if reason:
                break
        if reason is None:
            # in/out degree all exactly 1 and connected: a single basic cycle
            n = len(comp)
            by_vertex = {v: set() for v in comp}
            count = 0
            for p in basis:
                if p.start in compset:
                    by_vertex[p.start].add(p.length)
                    count += 1
            dmax = {v: max(ls) + 1 for v, ls in by_vertex.items()}
            dvals = set(dmax.values())
            d = dvals.pop() if len(dvals) == 1 else None
            if d is None or d < 2 or count != n * d or \
                    any(ls != set(range(d)) for ls in by_vertex.values()):
                reason = "ideal on the cycle is not a power of the arrow ideal"
            else:
                verdicts.append(
                    ComponentVerdict(tuple(comp), "TruncatedCycle", n=n, d=d))
                continue
        verdicts.append(
            ComponentVerdict(tuple(comp), "NotFrobenius", reason=reason))
    return verdicts


def is_frobenius(verdicts: list[ComponentVerdict]) -> bool:
    return all(v.kind != "NotFrobenius" for v in verdicts)


@dataclass(frozen=True)
class PathCoalgebra:
    """Explicit comultiplication table on a finite set of paths."""
    dim: int
    labels: tuple
    comult: tuple   # comult[i] = (((j, k), CycloNum), ...)
    counit: tuple   # counit[i] = CycloNum
    paths: tuple


def cofrobenius_classify(d: int, n: int):
    """The coFrobenius subcoalgebra of paths of length < d on the n-cycle.

    Returns (True, C_d(n)); basis p_i^l at linear index i*d + l.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    q = cycle_quiver(n)
    paths = []
    for i in range(n):
        p = q.trivial_path(i)
        for l in range(d):
            paths.append(p)
            if l + 1 < d:
                p = p.extended(p.target)   # arrow index = its source vertex
    idx = lambda i, l: i * d + l
    one = CycloNum.one(1)
    comult = []
    counit = []
    for i in range(n):
        for l in range(d):
            terms = tuple(
                ((idx((i + k) % n, l - k), idx(i, k)), one)
                for k in range(l + 1))
            comult.append(terms)
            counit.append(CycloNum.from_rational(1 if l == 0 else 0))
    labels = tuple(f"p_{i}^{l}" for i in range(n) for l in range(d))
    return True, PathCoalgebra(n * d, labels, tuple(comult), tuple(counit),
                               tuple(paths))


def monomial_algebra(pres: MonomialPresentation, conductor: int = 1) -> FDBialgebra:
    """Structure constants of the monomial algebra on its path basis."""
    basis = monomial_basis(pres)
    index = {(p.start, p.arrows): i for i, p in enumerate(basis)}
    one = CycloNum.one(conductor)
    dim = len(basis)
    mult = [[[] for _ in range(dim)] for _ in range(dim)]
    for i, beta in enumerate(basis):
        for j, alpha in enumerate(basis):
            whole = path_compose(beta, alpha)
            if whole is not None:
                k = index.get((whole.start, whole.arrows))
                if k is not None:
                    mult[i][j] = [(k, one)]
    unit = [one if p.length == 0 else CycloNum.zero(conductor) for p in basis]
    alg = FDBialgebra(dim, conductor, [p.label() for p in basis], mult, unit,
                      meta={"presentation": pres})
    return alg


def enumerate_small_presentations(max_vertices: int = 3, max_arrows: int = 4,
                                  max_basis: int = 8):
    """Every monomial presentation with at most max_basis basis paths.

    Presentations are identified with their (subpath-closed) path bases;
    two forbidden sets with the same basis give the same algebra.  Quivers
    run over all arrow multisets; forbidden paths are emitted as the minimal
    excluded paths and the bound is one more than the longest basis path.
    """
    for v in range(1, max_vertices + 1):
        pair_types = [(s, t) for s in range(v) for t in range(v)]
        for a in range(0, max_arrows + 1):
            for arrows in combinations_with_replacement(pair_types, a):
                quiver = Quiver(v, arrows)
                budget = max_basis - v - a
                if budget < 0:
                    continue
                yield from _presentations_for(quiver, budget)


def _presentations_for(quiver: Quiver, budget: int):
    # level 1 = arrows, always in the basis
    level1 = [quiver.path(s, (i,)) for i, (s, _) in enumerate(quiver.arrows)]

    def extensions(level):
        out = []
        members = {(p.start, p.arrows) for p in level}
        for p in level:
            for arr in quiver.arrows_from(p.target):
                ext = p.extended(arr)
                # minimal candidate: the other one-shorter subpath is also
                # in the level (the prefix is p itself)
                if (quiver.source(ext.arrows[1]), ext.arrows[1:]) in members:
                    out.append(ext)
        return out

    def emit(chosen_levels, candidates, remaining):
        # candidates: minimal paths of the next length given chosen levels
        for r in range(0, min(remaining, len(candidates)) + 1):
            for pick in combinations(range(len(candidates)), r):
                if pick:
                    chosen = [candidates[i] for i in pick]
                    yield from emit(chosen_levels + [chosen],
                                    extensions(chosen),
                                    remaining - len(chosen))
                else:
                    # stop here: every remaining candidate gets forbidden
                    yield chosen_levels, list(candidates)

    for levels, last_excluded in emit([level1], extensions(level1), budget):
        # forbidden = minimal excluded at every length + the cutoff level
        forbidden = []
        for lvl_idx in range(1, len(levels)):
            lvl_members = {(p.start, p.arrows) for p in levels[lvl_idx]}
            for cand in extensions(levels[lvl_idx - 1]):
                if (cand.start, cand.arrows) not in lvl_members:
                    forbidden.append(cand)
        forbidden.extend(last_excluded)
        longest = levels[-1][0].length if levels[-1] else 1
        bound = max(longest + 1, 2)
        yield MonomialPresentation(quiver, tuple(forbidden), bound)
