"""Exact arithmetic in the supported division rings.

Three kinds of division ring are modelled:

* ``Q``    -- the rationals (center is itself),
* ``Fp``   -- the prime field F_p (center is itself),
* ``quat`` -- the quaternion algebra (a, b)_Q with basis 1, i, j, k where
  i^2 = a, j^2 = b and ij = -ji = k.  The default (-1, -1) is Hamilton's
  division algebra.

Every element is stored as a coordinate vector over the center Z in a fixed
Z-basis of D.  Over Q the coordinates are :class:`fractions.Fraction`; over
F_p they are ints in ``range(p)``.  The designated maximal subfield L is D
itself for fields and Q(i) = span{1, i} for quaternions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DivisionByZero,
    DomainMismatch,
    NonPrimeModulus,
    SplitAlgebraWitness,
    UnsupportedKind,
)

MAX_PRIME = 97

_KIND_ALIASES = {
    "Q": "Q",
    "RationalField": "Q",
    "Fp": "Fp",
    "PrimeField": "Fp",
    "quat": "quat",
    "QuaternionAlgebra": "quat",
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Domain:
    """A supported division ring D together with its center Z and subfield L."""

    kind: str
    p: int = 0
    a: Fraction = Fraction(-1)
    b: Fraction = Fraction(-1)

    @property
    def zp(self) -> int:
        """Characteristic of Z: ``p`` for F_p, 0 otherwise."""
        return self.p if self.kind == "Fp" else 0

    @property
    def z_basis_size(self) -> int:
        return 4 if self.kind == "quat" else 1

    @property
    def l_basis_size(self) -> int:
        return 2 if self.kind == "quat" else 1

    @property
    def is_field(self) -> bool:
        return self.kind != "quat"

    @property
    def name(self) -> str:
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"F{self.p}"
        if self.a == -1 and self.b == -1:
            return "H"
        return f"H({self.a},{self.b})"

    def __repr__(self) -> str:
        return f"Domain({self.name})"

    # -- center arithmetic -------------------------------------------------
    def zcoerce(self, x):
        """Normalise a center scalar (int, Fraction or 'p/q' string)."""
        if self.kind == "Fp":
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise DivisionByZero(f"{x} has no image in F_{self.p}")
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        return Fraction(x)

    def zzero(self):
        return 0 if self.kind == "Fp" else Fraction(0)

    def zone(self):
        return 1 if self.kind == "Fp" else Fraction(1)

    # -- element constructors ----------------------------------------------
    def elem(self, coords: Iterable) -> "DElem":
        coords = tuple(self.zcoerce(c) for c in coords)
        if len(coords) != self.z_basis_size:
            raise DomainMismatch(
                f"{self.name} needs {self.z_basis_size} coordinates, got {len(coords)}"
            )
        return DElem(self, coords)

    def scalar(self, z) -> "DElem":
        """Embed a center scalar."""
        z = self.zcoerce(z)
        return DElem(self, (z,) + (self.zzero(),) * (self.z_basis_size - 1))

    def zero(self) -> "DElem":
        return self.scalar(0)

    def one(self) -> "DElem":
        return self.scalar(1)

    def z_basis(self) -> list["DElem"]:
        """The fixed Z-basis of D (1 for fields; 1, i, j, k for quaternions)."""
        k = self.z_basis_size
        return [
            DElem(self, tuple(self.zone() if t == s else self.zzero() for t in range(k)))
            for s in range(k)
        ]

    def l_basis(self) -> list["DElem"]:
        return self.z_basis()[: self.l_basis_size]

    def gen(self, name: str) -> "DElem":
        """Named generator: '1', 'i', 'j' or 'k' (the last three only for quaternions)."""
        names = ["1", "i", "j", "k"][: self.z_basis_size]
        if name not in names:
            raise UnsupportedKind(f"{self.name} has no generator {name!r}")
        return self.z_basis()[names.index(name)]


def make_domain(spec: dict | None = None, *, max_prime: int = MAX_PRIME, **kw) -> Domain:
    """Build and validate a :class:`Domain` from ``{kind, p?, a?, b?}``."""
    spec = dict(spec or {}, **kw)
    kind = _KIND_ALIASES.get(spec.get("kind"))
    if kind is None:
        raise UnsupportedKind(f"unsupported kind {spec.get('kind')!r}")
    if kind == "Q":
        return Domain("Q")
    if kind == "Fp":
        if "p" not in spec:
            raise UnsupportedKind("PrimeField needs p")
        p = int(spec["p"])
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        if p > max_prime:
            raise UnsupportedKind(f"p = {p} exceeds the supported bound {max_prime}")
        return Domain("Fp", p=p)
    a = Fraction(spec.get("a", -1))
    b = Fraction(spec.get("b", -1))
    if a == 0 or b == 0:
        raise UnsupportedKind("quaternion parameters must be nonzero")
    return Domain("quat", a=a, b=b)


QQ = Domain("Q")
HQ = Domain("quat")


def F(p: int) -> Domain:
    return make_domain(kind="Fp", p=p)


class DElem:
    """An element of D as a coordinate vector over Z.  Immutable."""

    __slots__ = ("domain", "coords")

    def __init__(self, domain: Domain, coords: tuple):
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("DElem is immutable")

    def __repr__(self) -> str:
        return f"DElem({self.domain.name}, {format_elem(self)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, DElem):
            return NotImplemented
        return self.domain == other.domain and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.domain, self.coords))

    def __bool__(self) -> bool:
        return any(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "DElem") -> "DElem":
        return d_add(self, other)

    def __sub__(self, other: "DElem") -> "DElem":
        return d_add(self, d_neg(other))

    def __neg__(self) -> "DElem":
        return d_neg(self)

    def __mul__(self, other: "DElem") -> "DElem":
        return d_mul(self, other)

    def inverse(self) -> "DElem":
        return d_inv(self.domain, self)


def _check(x: DElem, y: DElem) -> Domain:
    if x.domain != y.domain:
        raise DomainMismatch(f"{x.domain.name} vs {y.domain.name}")
    return x.domain


def d_add(x: DElem, y: DElem) -> DElem:
    dom = _check(x, y)
    if dom.kind == "Fp":
        return DElem(dom, ((x.coords[0] + y.coords[0]) % dom.p,))
    return DElem(dom, tuple(s + t for s, t in zip(x.coords, y.coords)))


def d_neg(x: DElem) -> DElem:
    dom = x.domain
    if dom.kind == "Fp":
        return DElem(dom, ((-x.coords[0]) % dom.p,))
    return DElem(dom, tuple(-s for s in x.coords))


def d_mul(x: DElem, y: DElem) -> DElem:
    dom = _check(x, y)
    if dom.kind == "Fp":
        return DElem(dom, (x.coords[0] * y.coords[0] % dom.p,))
    if dom.kind == "Q":
        return DElem(dom, (x.coords[0] * y.coords[0],))
    x0, x1, x2, x3 = x.coords
    y0, y1, y2, y3 = y.coords
    # central operands only rescale; this covers most entries of structured matrices
    if not (x1 or x2 or x3):
        return DElem(dom, (x0 * y0, x0 * y1, x0 * y2, x0 * y3)) if x0 else dom.zero()
    if not (y1 or y2 or y3):
        return DElem(dom, (x0 * y0, x1 * y0, x2 * y0, x3 * y0)) if y0 else dom.zero()
    a, b = dom.a, dom.b
    if a == -1 and b == -1:
        return DElem(
            dom,
            (
                x0 * y0 - x1 * y1 - x2 * y2 - x3 * y3,
                x0 * y1 + x1 * y0 + x2 * y3 - x3 * y2,
                x0 * y2 + x2 * y0 - x1 * y3 + x3 * y1,
                x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
            ),
        )
    return DElem(
        dom,
        (
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        ),
    )


def conj(x: DElem) -> DElem:
    if x.domain.kind != "quat":
        return x
    c0, c1, c2, c3 = x.coords
    return DElem(x.domain, (c0, -c1, -c2, -c3))


def norm(x: DElem):
    """Reduced norm x * conj(x), an element of Z."""
    if x.domain.kind != "quat":
        return x.coords[0]
    a, b = x.domain.a, x.domain.b
    c0, c1, c2, c3 = x.coords
    return c0 * c0 - a * c1 * c1 - b * c2 * c2 + a * b * c3 * c3


def d_inv(domain: Domain, x: DElem) -> DElem:
    if x.domain != domain:
        raise DomainMismatch(f"{x.domain.name} vs {domain.name}")
    if x.is_zero():
        raise DivisionByZero("inverse of zero")
    if domain.kind == "Fp":
        return DElem(domain, (pow(x.coords[0], -1, domain.p),))
    if domain.kind == "Q":
        return DElem(domain, (1 / x.coords[0],))
    nrm = norm(x)
    if nrm == 0:
        raise SplitAlgebraWitness(x)
    return DElem(domain, tuple(c / nrm for c in conj(x).coords))


def d_op(domain: Domain, op: str, x: DElem, y: DElem | None = None) -> DElem:
    if x.domain != domain or (y is not None and y.domain != domain):
        raise DomainMismatch("operand outside the given domain")
    if op == "add":
        return d_add(x, y)
    if op == "mul":
        return d_mul(x, y)
    if op == "neg":
        return d_neg(x)
    raise ValueError(f"unknown op {op!r}")


def membership(domain: Domain, x: DElem, subset: str) -> bool:
    """Whether ``x`` lies in the center Z (``"CenterZ"``) or in L (``"SubfieldL"``)."""
    if subset == "CenterZ":
        return not any(x.coords[1:])
    if subset == "SubfieldL":
        return not any(x.coords[domain.l_basis_size:])
    raise ValueError(f"unknown subset {subset!r}")


def format_coord(c):
    """JSON form of a center scalar: int for F_p, 'p/q' string for Q."""
    if isinstance(c, Fraction):
        return str(c)
    return int(c)


def format_elem(x: DElem):
    if x.domain.kind == "quat":
        return [format_coord(c) for c in x.coords]
    return format_coord(x.coords[0])


def parse_elem(domain: Domain, value) -> DElem:
    if domain.kind == "quat":
        if isinstance(value, (list, tuple)):
            return domain.elem(Fraction(v) for v in value)
        return domain.scalar(Fraction(value))
    if isinstance(value, (list, tuple)):
        return domain.elem(value)
    if domain.kind == "Fp":
        return domain.scalar(Fraction(value))
    return domain.scalar(Fraction(value))


def elems(domain: Domain, values: Sequence) -> list[DElem]:
    return [parse_elem(domain, v) for v in values]
