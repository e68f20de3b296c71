"""Exact sparse linear algebra over cyclotomic fields.

Vectors are dicts {index: CycloNum}; zeros are never stored.  Everything
here is deterministic: pivots are chosen by column order, kernel bases come
out in reduced echelon form with leading coefficient 1.
"""

from __future__ import annotations

from .cyclo import CycloNum

Vec = dict


def vec_add_scaled(target: dict, source: dict, scale: CycloNum) -> None:
    """target += scale * source, dropping cancelled entries (in place)."""
    if scale.is_zero():
        return
    for k, v in source.items():
        cur = target.get(k)
        nv = v * scale if cur is None else cur + v * scale
        if nv.is_zero():
            target.pop(k, None)
        else:
            target[k] = nv


def vec_scale(v: dict, scale: CycloNum) -> dict:
    if scale.is_zero():
        return {}
    return {k: x * scale for k, x in v.items()}


def vec_equal(a: dict, b: dict) -> bool:
    if len(a) != len(b):
        return False
    for k, v in a.items():
        w = b.get(k)
        if w is None or w != v:
            return False
    return True


class Eliminator:
    """Incremental Gaussian elimination with optional augmented images.

    Row vectors are reduced against the stored pivots; a surviving residual
    becomes a new pivot row (normalized to leading coefficient 1, and back-
    substituted so the basis stays reduced).  `add` returns the residual's
    pivot column or None if the vector was dependent; the reduced image of
    a dependent vector can be recovered through `solve`.
    """

    def __init__(self):
        self.pivots: dict[int, tuple[dict, dict]] = {}  # col -> (row, image)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, vec: dict, img: dict) -> tuple[dict, dict]:
        vec, img = dict(vec), dict(img)
        while True:
            hits = [c for c in vec if c in self.pivots]
            if not hits:
                return vec, img
            col = min(hits)
            row, image = self.pivots[col]
            coef = -vec[col]
            vec_add_scaled(vec, row, coef)
            vec_add_scaled(img, image, coef)

    def add(self, vec: dict, img: dict | None = None) -> int | None:
        vec, img = self._reduce(vec, {} if img is None else img)
        if not vec:
            if img:
                raise ArithmeticError("inconsistent image for dependent vector")
            return None
        col = min(vec)
        inv = vec[col].inverse()
        vec = vec_scale(vec, inv)
        img = vec_scale(img, inv)
        for pcol, (pvec, pimg) in self.pivots.items():
            c = pvec.get(col)
            if c is not None:
                vec_add_scaled(pvec, vec, -c)
                vec_add_scaled(pimg, img, -c)
        self.pivots[col] = (vec, img)
        return col

    def contains(self, vec: dict) -> bool:
        residual, _ = self._reduce(vec, {})
        return not residual

    def solve(self, vec: dict) -> dict:
        """Image of `vec` under the stored correspondence; error if outside."""
        residual, img = self._reduce(vec, {})
        if residual:
            raise ArithmeticError("vector outside the recorded span")
        return {k: -v for k, v in img.items()}


def rank(rows: list[dict]) -> int:
    elim = Eliminator()
    for row in rows:
        elim.add(row)
    return elim.rank


def nullspace(rows: list[dict], ncols: int) -> list[dict]:
    """Basis of {x : row . x = 0 for every row}, reduced echelon, sorted by
    free column.  `rows` are linear functionals on ncols coordinates."""
    elim = Eliminator()
    for row in rows:
        elim.add(row)
    pivot_cols = elim.pivots.keys()
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = {free: CycloNum.one()}
        for pcol, (prow, _) in elim.pivots.items():
            c = prow.get(free)
            if c is not None:
                vec[pcol] = -c
        basis.append(vec)
    return basis


def solve_in_span(basis_vectors: list[dict], target: dict):
    """Coefficients expressing target in the given spanning set, or None."""
    elim = Eliminator()
    for i, v in enumerate(basis_vectors):
        if not elim.contains(v):
            elim.add(v, {i: CycloNum.one()})
    try:
        return elim.solve(target)
    except ArithmeticError:
        return None
