"""Subgroups of the finite phase space Z_N x Z_N and their adjoints.

A lattice is an arbitrary subgroup of Z_N x Z_N, stored with a canonical
lexicographic enumeration of its points; every summation in the toolkit runs
in that order so serial residuals are reproducible.  The adjoint lattice
collects the phase-space points whose shifts commute with every shift from
the lattice; the pairing is perfect, so |L| * |adjoint(L)| = N^2 and the
adjoint of the adjoint returns the original subgroup.  The covolume is the
rational N / |L|; critical density is covolume 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import TFPoint

__all__ = [
    "Lattice",
    "lattice_from_generators",
    "full_lattice",
    "trivial_lattice",
    "adjoint_lattice",
    "volume",
    "enumerate_subgroups",
]


def _closure(n: int, gens: list[tuple[int, int]]) -> list[tuple[int, int]]:
    points = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        base = frontier.pop()
        for gk, gl in gens:
            nxt = ((base[0] + gk) % n, (base[1] + gl) % n)
            if nxt not in points:
                points.add(nxt)
                frontier.append(nxt)
    return sorted(points)


def _minimal_generators(n: int, points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Greedy small generating set, scanned in canonical order."""
    gens: list[tuple[int, int]] = []
    span = {(0, 0)}
    for p in points:
        if p in span:
            continue
        gens.append(p)
        span = set(_closure(n, gens))
        if len(span) == len(points):
            break
    return gens


@dataclass(frozen=True)
class Lattice:
    """A subgroup of Z_N x Z_N with canonical (lexicographic) point order."""

    n: int
    points: tuple[TFPoint, ...]
    generators: tuple[TFPoint, ...]
    _index: dict = field(repr=False, compare=False, hash=False, default=None)

    def __post_init__(self) -> None:
        index = {(p.k, p.l): i for i, p in enumerate(self.points)}
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.points)

    def index_of(self, p: TFPoint) -> int:
        try:
            return self._index[(p.k % self.n, p.l % self.n)]
        except KeyError:
            raise KeyError(f"point ({p.k},{p.l}) not in lattice") from None

    def __contains__(self, p: TFPoint) -> bool:
        return (p.k % self.n, p.l % self.n) in self._index

    def as_array(self) -> np.ndarray:
        """Points as an integer array of shape (|L|, 2) in canonical order."""
        return np.array([(p.k, p.l) for p in self.points], dtype=np.int64)


def _build(n: int, point_tuples: list[tuple[int, int]], gens: list[tuple[int, int]]) -> Lattice:
    points = tuple(TFPoint(n, k, l) for k, l in point_tuples)
    generators = tuple(TFPoint(n, k, l) for k, l in gens)
    return Lattice(n, points, generators)


def lattice_from_generators(n: int, gens) -> Lattice:
    """Subgroup generated by the given points (closure under addition mod N).

    An empty generator list yields the trivial lattice {(0, 0)}.
    """
    if n < 2:
        raise ValueError(f"group order must be >= 2, got {n}")
    pairs = []
    for g in gens:
        if isinstance(g, TFPoint):
            if g.n != n:
                raise ValueError(f"generator ({g.k},{g.l}) has order {g.n}, lattice has {n}")
            pairs.append((g.k, g.l))
        else:
            k, l = g
            pairs.append((int(k) % n, int(l) % n))
    return _build(n, _closure(n, pairs), pairs)


def full_lattice(n: int) -> Lattice:
    return lattice_from_generators(n, [(1, 0), (0, 1)])


def trivial_lattice(n: int) -> Lattice:
    return lattice_from_generators(n, [])


@lru_cache(maxsize=256)
def adjoint_lattice(lat: Lattice) -> Lattice:
    """All points whose shifts commute with every shift from the lattice.

    Exact integer criterion: (m, n') is adjoint iff m*l - k*n' = 0 mod N for
    every (k, l) in the lattice.
    """
    n = lat.n
    pts = lat.as_array()
    kk, ll = pts[:, 0], pts[:, 1]
    adjoint_pts = []
    for m in range(n):
        for nn in range(n):
            if np.all((m * ll - kk * nn) % n == 0):
                adjoint_pts.append((m, nn))
    return _build(n, adjoint_pts, _minimal_generators(n, adjoint_pts))


def volume(lat: Lattice) -> Fraction:
    """Covolume N / |L|; equals 1 exactly at critical density."""
    return Fraction(lat.n, lat.size)


def enumerate_subgroups(n: int) -> list[Lattice]:
    """Every subgroup of Z_N x Z_N (each needs at most two generators)."""
    single: dict[frozenset, tuple] = {}
    for k in range(n):
        for l in range(n):
            pts = frozenset(_closure(n, [(k, l)]))
            single.setdefault(pts, (k, l))
    seen: dict[frozenset, list] = {frozenset({(0, 0)}): []}
    for pts_a, gen_a in single.items():
        seen.setdefault(pts_a, [gen_a])
        for pts_b, gen_b in single.items():
            merged = frozenset(_closure(n, [gen_a, gen_b]))
            seen.setdefault(merged, [gen_a, gen_b])
    lattices = []
    for pts, gens in seen.items():
        lattices.append(_build(n, sorted(pts), gens))
    lattices.sort(key=lambda lat: (lat.size, tuple((p.k, p.l) for p in lat.points)))
    return lattices
