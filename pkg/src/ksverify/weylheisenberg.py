"""Qutrit Weyl-Heisenberg generators acting on rays.

X is the cyclic shift, Z the phase matrix diag(1, w, w^2) with w the
primitive cube root of unity.  Actions are computed on canonical ray
components and re-canonicalized, so orbits live entirely in Q(zeta_3)
with no normalization factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyc, omega
from .rays import Ray, inner


@dataclass(frozen=True)
class GeneratorMatrix:
    label: str
    entries: tuple[tuple[Cyc, Cyc, Cyc], ...]


def _rows(values) -> tuple[tuple[Cyc, Cyc, Cyc], ...]:
    return tuple(tuple(Cyc._as_cyc(v) for v in row) for row in values)


def generator(label: str) -> GeneratorMatrix:
    w = omega()
    if label == "X":
        return GeneratorMatrix("X", _rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]]))
    if label == "Z":
        return GeneratorMatrix("Z", _rows([[1, 0, 0], [0, w, 0], [0, 0, w * w]]))
    raise ValueError(f"unknown generator {label!r}; expected 'X' or 'Z'")


def apply(m: GeneratorMatrix, r: Ray) -> Ray:
    """Canonicalized matrix-vector product on the ray's canonical components."""
    v = r.canonical
    out = []
    for row in m.entries:
        acc = Cyc.zero()
        for c, x in zip(row, v):
            acc = acc + c * x
        out.append(acc)
    return Ray(tuple(out))


def orbit_closure(seed, gens) -> tuple[Ray, ...]:
    """Least set of rays containing `seed` and closed under all generators."""
    closed = set(seed)
    frontier = list(closed)
    while frontier:
        nxt = []
        for ray in frontier:
            for g in gens:
                image = apply(g, ray)
                if image not in closed:
                    closed.add(image)
                    nxt.append(image)
        frontier = nxt
    return tuple(sorted(closed, key=Ray.sort_key))


@dataclass(frozen=True)
class SicReport:
    is_sic: bool
    rays: tuple[Ray, ...]
    overlaps: tuple[tuple[Fraction, ...], ...]  # normalized |<u|v>|^2 table
    failures: tuple[str, ...]


def is_sic_povm(rays) -> SicReport:
    """Check the d=3 SIC condition: nine rays, all cross overlaps 1/4.

    Exact test on unnormalized rays: 4 |<u|v>|^2 = |u|^2 |v|^2 for all
    distinct pairs (the normalized overlap-squared then equals 1/(d+1)).
    """
    rays = tuple(sorted(set(rays), key=Ray.sort_key))
    failures = []
    if len(rays) != 9:
        failures.append(f"expected 9 distinct rays, got {len(rays)}")
    norms = [inner(r, r) for r in rays]
    table = []
    for i, u in enumerate(rays):
        row = []
        for j, v in enumerate(rays):
            amp = inner(u, v)
            overlap = (amp * amp.conj()) / (norms[i] * norms[j])
            if not overlap.is_rational():
                failures.append(f"overlap of {u} and {v} is irrational")
                row.append(Fraction(0))
                continue
            value = overlap.as_fraction()
            row.append(value)
            if i != j and value != Fraction(1, 4):
                failures.append(
                    f"normalized overlap^2 of {u} and {v} is {value}, want 1/4")
        table.append(tuple(row))
    return SicReport(not failures, rays, tuple(table), tuple(failures))
