"""Projective rays in C^3 with exact canonical forms.

A Ray keeps the component triple it was built from (so certificates can
quote the source coordinates) together with a canonical representative
used for equality, hashing and ordering.  Canonicalization divides by the
first nonzero component, rescales to a primitive integral coefficient
vector, then picks the nicest unit multiple, so any two scalar multiples
of the same vector collapse to one Ray.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclotomic import Cyc


def _fraction_key(c: Fraction) -> tuple[int, int, int]:
    # 0 first, then 1, -1, 2, -2, ... then proper fractions
    return (c.denominator, abs(c.numerator), 0 if c.numerator >= 0 else 1)


def _cyc_key(c: Cyc):
    d, coeffs = c.minimal_form()
    return (d, tuple(_fraction_key(x) for x in coeffs))


def _canonical_triple(components: tuple[Cyc, Cyc, Cyc]) -> tuple[Cyc, Cyc, Cyc]:
    first = next((c for c in components if not c.is_zero()), None)
    if first is None:
        raise ValueError("ray components must not all be zero")
    scaled = tuple(c / first for c in components)
    # clear denominators and divide out integer content, jointly
    fracs = [x for c in scaled for x in c.minimal_form()[1]]
    lcm_den = 1
    for f in fracs:
        lcm_den = lcm_den * f.denominator // gcd(lcm_den, f.denominator)
    content = 0
    for f in fracs:
        content = gcd(content, abs(f.numerator * (lcm_den // f.denominator)))
    factor = Fraction(lcm_den, content)
    integral = tuple(c * factor for c in scaled)
    conductor = 1
    for c in integral:
        d = c.minimal_form()[0]
        conductor = conductor * d // gcd(conductor, d)
    one = Cyc.one()
    units = [Cyc.root_of_unity(conductor, k) for k in range(conductor)]
    units += [-u for u in units]

    def candidate_key(triple):
        lead = next(c for c in triple if not c.is_zero())
        return (0 if lead == one else 1, tuple(_cyc_key(c) for c in triple))

    return min(
        (tuple(u * c for c in integral) for u in units), key=candidate_key
    )


class Ray:
    """A vector in C^3 up to a nonzero scalar."""

    __slots__ = ("components", "canonical", "_hash")

    def __init__(self, components) -> None:
        comps = tuple(Cyc._as_cyc(c) for c in components)
        if len(comps) != 3:
            raise ValueError("a ray has exactly 3 components")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "canonical", _canonical_triple(comps))
        object.__setattr__(self, "_hash", hash(self.canonical))

    def __setattr__(self, name, value):
        raise AttributeError("Ray values are immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ray):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return tuple(_cyc_key(c) for c in self.canonical)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.canonical) + ")"

    def __repr__(self) -> str:
        return f"Ray{self}"

    def norm_sq(self) -> Cyc:
        """<v|v> on the stored components."""
        return inner(self, self)

    def scaled(self, scalar) -> "Ray":
        """Same projective ray, rebuilt from scaled components."""
        s = Cyc._as_cyc(scalar)
        return Ray(tuple(s * c for c in self.components))


def canonicalize(components) -> Ray:
    """Deterministic canonical representative; idempotent by construction."""
    return Ray(components)


def inner(v: Ray, u: Ray) -> Cyc:
    """Hermitian inner product <v|u> = sum conj(v_j) u_j on stored components."""
    total = Cyc.zero()
    for a, b in zip(v.components, u.components):
        total = total + a.conj() * b
    return total


def is_orthogonal(u: Ray, v: Ray) -> bool:
    return inner(u, v).is_zero()


def complete_basis_third(u: Ray, v: Ray) -> Ray:
    """The unique ray orthogonal to two orthogonal rays.

    Componentwise conjugate of the bilinear cross product, canonicalized.
    """
    if not is_orthogonal(u, v):
        raise ValueError(
            f"rays are not orthogonal: <{u}|{v}> = {inner(u, v)}"
        )
    a, b = u.components, v.components
    cross = (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
    return Ray(tuple(c.conj() for c in cross))


@dataclass(frozen=True)
class BasisViolation:
    index_a: int
    index_b: int
    product: Cyc

    def __str__(self) -> str:
        return f"pair ({self.index_a},{self.index_b}) has inner product {self.product}"


def validate_basis(rays) -> list[BasisViolation]:
    """Empty list iff the three rays are pairwise orthogonal."""
    rays = list(rays)
    if len(rays) != 3:
        raise ValueError("a basis must have exactly 3 rays")
    violations = []
    for i in range(3):
        for j in range(i + 1, 3):
            p = inner(rays[i], rays[j])
            if not p.is_zero():
                violations.append(BasisViolation(i, j, p))
    return violations


class Basis:
    """An ordered triple of pairwise orthogonal rays."""

    __slots__ = ("rays",)

    def __init__(self, rays) -> None:
        rays = tuple(rays)
        violations = validate_basis(rays)
        if violations:
            detail = "; ".join(str(v) for v in violations)
            raise ValueError(f"not an orthogonal basis: {detail}")
        object.__setattr__(self, "rays", rays)

    def __setattr__(self, name, value):
        raise AttributeError("Basis values are immutable")

    def __iter__(self):
        return iter(self.rays)

    def __len__(self) -> int:
        return 3

    def __getitem__(self, i):
        return self.rays[i]

    def __eq__(self, other):
        if not isinstance(other, Basis):
            return NotImplemented
        return frozenset(self.rays) == frozenset(other.rays)

    def __hash__(self):
        return hash(frozenset(self.rays))

    def __str__(self) -> str:
        return "{" + ", ".join(str(r) for r in self.rays) + "}"

    def __repr__(self) -> str:
        return f"Basis{self}"


_TERM_RE = re.compile(
    r"^(?P<coef>[+-]?\d+(?:/\d+)?|[+-])?\s*\*?\s*(?:(?P<sym>w|z(?P<n>\d+))(?:\^(?P<k>\d+))?)?$"
)


def _parse_component(text: str) -> Cyc:
    """Parse '1', '-2/3', 'w', '-w^2', '2*z8^3', '1+w' into a Cyc."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty component")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+|[+-](?=[+-])", s)
    if "".join(terms) != s:
        raise ValueError(f"cannot parse component {text!r}")
    total = Cyc.zero()
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("coef") is None and m.group("sym") is None):
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        coef_text = m.group("coef")
        if coef_text in (None, "+", "-"):
            coef = Fraction(-1 if coef_text == "-" else 1)
        else:
            coef = Fraction(coef_text)
        value = Cyc.from_rational(coef)
        if m.group("sym"):
            n = 3 if m.group("sym") == "w" else int(m.group("n"))
            k = int(m.group("k") or 1)
            value = value * Cyc.root_of_unity(n, k)
        total = total + value
    return total


def parse_ray(text: str) -> Ray:
    """Parse a ray literal like '(1,-w,w^2)'."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    parts = s.split(",")
    if len(parts) != 3:
        raise ValueError(f"a ray literal needs 3 components: {text!r}")
    return Ray(tuple(_parse_component(p) for p in parts))
