"""Canonical JSON interchange for algebras, presentations, and group data.

Coefficients are exact: a CycloNum is `{"conductor": N, "coeffs": [...]}`
with one decimal `"p"` or `"p/q"` string per coefficient of the power basis
of Q(zeta_N).  Serialization is canonical (sorted rows, compact separators),
so equal objects produce byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cyclo import CycloNum, as_root_of_unity, euler_phi
from .algebra import FDBialgebra
from .quiver import MonomialPresentation, Path, Quiver
from .groupdata import FiniteGroup, GroupDatum


def frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else \
        f"{f.numerator}/{f.denominator}"


def cyclo_to_json(c: CycloNum) -> dict:
    return {"conductor": c.conductor,
            "coeffs": [frac_str(x) for x in c.coeffs]}


def cyclo_from_json(obj) -> CycloNum:
    if not isinstance(obj, dict) or set(obj) != {"conductor", "coeffs"}:
        raise ValueError(f"not a coefficient object: {obj!r}")
    n = obj["conductor"]
    coeffs = [Fraction(s) for s in obj["coeffs"]]
    if not isinstance(n, int) or n < 1 or len(coeffs) != euler_phi(n):
        raise ValueError(
            f"coefficient object needs {euler_phi(n) if isinstance(n, int) and n >= 1 else '?'} "
            f"entries at conductor {n}")
    return CycloNum.from_coeffs(n, coeffs)


def algebra_to_json(alg: FDBialgebra) -> dict:
    out = {
        "dim": alg.dim,
        "conductor": alg.conductor,
        "labels": list(alg.labels),
        "mult": [[i, j, k, cyclo_to_json(c)]
                 for i in range(alg.dim)
                 for j in range(alg.dim)
                 for k, c in alg.mult[i][j]],
        "unit": [cyclo_to_json(c) for c in alg.unit],
    }
    if alg.comult is not None:
        out["comult"] = [[i, j, k, cyclo_to_json(c)]
                         for i in range(alg.dim)
                         for (j, k), c in alg.comult[i]]
        out["counit"] = [cyclo_to_json(c) for c in alg.counit]
    if alg.antipode is not None:
        out["antipode"] = [[i, j, cyclo_to_json(c)]
                           for i in range(alg.dim)
                           for j, c in alg.antipode[i]]
    return out


def algebra_from_json(obj) -> FDBialgebra:
    required = {"dim", "conductor", "labels", "mult", "unit"}
    if not isinstance(obj, dict) or not required <= set(obj):
        missing = required - set(obj) if isinstance(obj, dict) else required
        raise ValueError(f"algebra document is missing {sorted(missing)}")
    dim = obj["dim"]
    mult = [[[] for _ in range(dim)] for _ in range(dim)]
    for i, j, k, c in obj["mult"]:
        mult[i][j].append((k, cyclo_from_json(c)))
    comult = counit = antipode = None
    if "comult" in obj:
        comult = [[] for _ in range(dim)]
        for i, j, k, c in obj["comult"]:
            comult[i].append(((j, k), cyclo_from_json(c)))
        counit = [cyclo_from_json(c) for c in obj["counit"]]
    if "antipode" in obj:
        antipode = [[] for _ in range(dim)]
        for i, j, c in obj["antipode"]:
            antipode[i].append((j, cyclo_from_json(c)))
    return FDBialgebra(dim, obj["conductor"], obj["labels"], mult,
                       [cyclo_from_json(c) for c in obj["unit"]],
                       comult, counit, antipode)


def presentation_to_json(pres: MonomialPresentation) -> dict:
    q = pres.quiver
    return {"vertices": q.vertices,
            "arrows": [list(a) for a in q.arrows],
            "forbidden": sorted(list(p.arrows) for p in pres.forbidden),
            "bound": pres.bound}


def presentation_from_json(obj) -> MonomialPresentation:
    required = {"vertices", "arrows", "forbidden", "bound"}
    if not isinstance(obj, dict) or not required <= set(obj):
        missing = required - set(obj) if isinstance(obj, dict) else required
        raise ValueError(f"presentation document is missing {sorted(missing)}")
    q = Quiver(obj["vertices"], tuple((s, t) for s, t in obj["arrows"]))
    forbidden = []
    for arrows in obj["forbidden"]:
        if not arrows:
            raise ValueError("forbidden paths must name at least one arrow")
        start = q.source(arrows[0])
        forbidden.append(Path(q, start, tuple(arrows)))
    return MonomialPresentation(q, tuple(forbidden), obj["bound"])


def datum_to_json(alpha: GroupDatum) -> dict:
    return {"cayley": [list(r) for r in alpha.group.cayley],
            "g": alpha.g,
            "chi": [cyclo_to_json(z.to_cyclo()) for z in alpha.chi],
            "mu": cyclo_to_json(alpha.mu)}


def datum_from_json(obj) -> GroupDatum:
    required = {"cayley", "g", "chi", "mu"}
    if not isinstance(obj, dict) or not required <= set(obj):
        missing = required - set(obj) if isinstance(obj, dict) else required
        raise ValueError(f"datum document is missing {sorted(missing)}")
    group = FiniteGroup(obj["cayley"])
    chi = tuple(as_root_of_unity(cyclo_from_json(z)) for z in obj["chi"])
    return GroupDatum(group, obj["g"], chi, cyclo_from_json(obj["mu"]))


def detect_kind(obj) -> str:
    if not isinstance(obj, dict):
        raise ValueError("document root must be an object")
    if "mult" in obj:
        return "algebra"
    if "forbidden" in obj:
        return "presentation"
    if "cayley" in obj:
        return "datum"
    raise ValueError("unrecognized document: expected algebra, "
                     "presentation, or group-datum keys")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str):
    return json.loads(text)
