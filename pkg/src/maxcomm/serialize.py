"""JSON encodings for domains, matrices, subspaces and reports.

Rationals are written as ``"p/q"`` strings, F_p residues as ints and
quaternions as 4-arrays in the basis (1, i, j, k).  Every writer has a
matching reader, and ``dumps`` sorts keys so output is byte-stable.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .centralizer import ZSubspace, span
from .dmat import DMat, flatten
from .errors import ParseError
from .scalars import Domain, F, HQ, QQ, format_elem, make_domain, parse_elem
from .subalgebra import DecompositionReport


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def domain_to_json(dom: Domain) -> dict:
    if dom.kind == "Q":
        return {"kind": "Q"}
    if dom.kind == "Fp":
        return {"kind": "Fp", "p": dom.p}
    return {"kind": "quat", "a": str(dom.a), "b": str(dom.b)}


def domain_from_json(obj) -> Domain:
    if isinstance(obj, str):
        return parse_domain_name(obj)
    try:
        spec = dict(obj)
        for key in ("a", "b"):
            if key in spec:
                spec[key] = Fraction(spec[key])
        return make_domain(spec)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad domain {obj!r}: {exc}") from exc


def parse_domain_name(name: str) -> Domain:
    """``Q``, ``F5`` / ``F_5`` / ``Fp:5``, ``H`` or ``H(a,b)``."""
    s = name.strip()
    if s in ("Q", "QQ"):
        return QQ
    if s in ("H", "HQ", "quat"):
        return HQ
    m = re.fullmatch(r"F_?(\d+)|Fp:(\d+)", s)
    if m:
        return F(int(m.group(1) or m.group(2)))
    m = re.fullmatch(r"H\(\s*([-\d/]+)\s*,\s*([-\d/]+)\s*\)", s)
    if m:
        return make_domain(kind="quat", a=Fraction(m.group(1)), b=Fraction(m.group(2)))
    raise ParseError(f"unknown domain {name!r}")


def matrix_to_json(A: DMat) -> dict:
    return {
        "domain": domain_to_json(A.domain),
        "n": A.n,
        "entries": [[format_elem(x) for x in r] for r in A.entries],
    }


def matrix_from_json(obj, domain: Domain | None = None) -> DMat:
    try:
        if isinstance(obj, dict):
            dom = domain_from_json(obj["domain"]) if "domain" in obj else domain
            rows = obj["entries"]
        else:
            dom, rows = domain, obj
        if dom is None:
            raise ParseError("matrix literal without a domain")
        A = DMat(dom, [[parse_elem(dom, x) for x in r] for r in rows])
        if isinstance(obj, dict) and "n" in obj and obj["n"] != A.n:
            raise ParseError("declared n does not match entries")
        return A
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad matrix literal: {exc}") from exc


def zsubspace_to_json(V: ZSubspace) -> dict:
    return {
        "domain": domain_to_json(V.domain),
        "n": V.n,
        "dimZ": V.dimZ,
        "basis": [matrix_to_json(A) for A in V.matrices],
    }


def zsubspace_from_json(obj) -> ZSubspace:
    dom = domain_from_json(obj["domain"])
    mats = [matrix_from_json(m, dom) for m in obj["basis"]]
    V = span(dom, obj["n"], mats)
    if V.dimZ != obj.get("dimZ", V.dimZ):
        raise ParseError("basis is not independent")
    return V


def report_to_json(rep: DecompositionReport) -> dict:
    return {
        "factors": [
            {
                "idempotent": matrix_to_json(f.idempotent),
                "blockRange": list(f.blockRange),
                "dimZ": f.dimZ,
                "nilDimZ": f.nilradicalBasis.dimZ,
                "residueFieldDimZ": f.residueFieldDimZ,
            }
            for f in rep.factors
        ],
        "factorCount": rep.factorCount,
        "basisChange": matrix_to_json(rep.basisChange),
        "nilradical": zsubspace_to_json(rep.nilradical),
        "nilIndex": rep.nilIndex,
        "maximal": rep.maximal,
        "jEqualsN": rep.jEqualsN,
        "nilIndexAtMostN": rep.nilIndexAtMostN,
        "factorCountAtMostN": rep.factorCountAtMostN,
        "reducedImpliesFields": rep.reducedImpliesFields,
    }


@dataclass
class ReportSummary:
    """A decomposition report read back from JSON."""

    factors: list
    basisChange: DMat
    nilradical: ZSubspace
    nilIndex: int
    maximal: bool
    jEqualsN: bool
    nilIndexAtMostN: bool
    factorCountAtMostN: bool
    reducedImpliesFields: bool

    @property
    def factorCount(self) -> int:
        return len(self.factors)

    def to_json(self) -> dict:
        return {
            "factors": [
                {
                    "idempotent": matrix_to_json(f["idempotent"]),
                    "blockRange": list(f["blockRange"]),
                    "dimZ": f["dimZ"],
                    "nilDimZ": f["nilDimZ"],
                    "residueFieldDimZ": f["residueFieldDimZ"],
                }
                for f in self.factors
            ],
            "factorCount": self.factorCount,
            "basisChange": matrix_to_json(self.basisChange),
            "nilradical": zsubspace_to_json(self.nilradical),
            "nilIndex": self.nilIndex,
            "maximal": self.maximal,
            "jEqualsN": self.jEqualsN,
            "nilIndexAtMostN": self.nilIndexAtMostN,
            "factorCountAtMostN": self.factorCountAtMostN,
            "reducedImpliesFields": self.reducedImpliesFields,
        }


def report_from_json(obj) -> ReportSummary:
    try:
        factors = [
            {
                "idempotent": matrix_from_json(f["idempotent"]),
                "blockRange": tuple(f["blockRange"]),
                "dimZ": f["dimZ"],
                "nilDimZ": f["nilDimZ"],
                "residueFieldDimZ": f["residueFieldDimZ"],
            }
            for f in obj["factors"]
        ]
        if obj.get("factorCount", len(factors)) != len(factors):
            raise ParseError("factorCount disagrees with the factor list")
        return ReportSummary(
            factors=factors,
            basisChange=matrix_from_json(obj["basisChange"]),
            nilradical=zsubspace_from_json(obj["nilradical"]),
            nilIndex=obj["nilIndex"],
            maximal=obj["maximal"],
            jEqualsN=obj["jEqualsN"],
            nilIndexAtMostN=obj["nilIndexAtMostN"],
            factorCountAtMostN=obj["factorCountAtMostN"],
            reducedImpliesFields=obj["reducedImpliesFields"],
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad report: {exc}") from exc


def flat_key(A: DMat) -> list:
    """Flattened Z-coordinates in JSON form."""
    return [c if isinstance(c, int) else str(c) for c in flatten(A)]
