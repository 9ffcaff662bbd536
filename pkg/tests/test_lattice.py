"""Subgroup closure, adjoints, covolume and subgroup enumeration."""
import itertools
from fractions import Fraction

import numpy as np
import pytest

from ncgabor import (
    TFPoint,
    adjoint_lattice,
    enumerate_subgroups,
    full_lattice,
    lattice_from_generators,
    shift_matrix,
    trivial_lattice,
    volume,
)


def brute_force_closure(n, gens):
    """Independent oracle: all integer combinations of the generators."""
    pts = {(0, 0)}
    for coeffs in itertools.product(range(n), repeat=len(gens)):
        k = sum(c * g[0] for c, g in zip(coeffs, gens)) % n
        l = sum(c * g[1] for c, g in zip(coeffs, gens)) % n
        pts.add((k, l))
    return sorted(pts)


def test_separable_closure_example():
    lat = lattice_from_generators(12, [(2, 0), (0, 3)])
    assert lat.size == 24
    expect = brute_force_closure(12, [(2, 0), (0, 3)])
    assert [(p.k, p.l) for p in lat.points] == expect


def test_trivial_and_full():
    assert [(p.k, p.l) for p in trivial_lattice(4).points] == [(0, 0)]
    assert full_lattice(4).size == 16


def test_lattice_invariants():
    lat = lattice_from_generators(12, [(2, 1), (0, 6)])
    pts = {(p.k, p.l) for p in lat.points}
    assert (0, 0) in pts
    for a in pts:
        assert ((-a[0]) % 12, (-a[1]) % 12) in pts
        for b in pts:
            assert ((a[0] + b[0]) % 12, (a[1] + b[1]) % 12) in pts
    assert 144 % lat.size == 0
    assert list(lat.points) == sorted(lat.points, key=lambda p: (p.k, p.l))


def test_generators_reduced_mod_n():
    lat = lattice_from_generators(6, [(-2, 8)])
    assert (lat.generators[0].k, lat.generators[0].l) == (4, 2)


def test_bad_order_rejected():
    with pytest.raises(ValueError):
        lattice_from_generators(1, [(0, 0)])


def brute_force_commutant(lat):
    """Independent oracle: matrix commutation against every lattice shift."""
    n = lat.n
    mats = [shift_matrix(p) for p in lat.points]
    out = []
    for m in range(n):
        for nn in range(n):
            B = shift_matrix(TFPoint(n, m, nn))
            if all(np.abs(A @ B - B @ A).max() < 1e-10 for A in mats):
                out.append((m, nn))
    return out


def test_adjoint_example_against_matrix_commutant():
    lat = lattice_from_generators(12, [(2, 0), (0, 3)])
    adj = adjoint_lattice(lat)
    assert adj.size == 6
    assert [(p.k, p.l) for p in adj.points] == brute_force_commutant(lat)
    gen_set = {(p.k, p.l) for p in adj.generators}
    assert gen_set == {(4, 0), (0, 6)}


def test_adjoint_of_full_and_trivial():
    assert [(p.k, p.l) for p in adjoint_lattice(full_lattice(6)).points] == [(0, 0)]
    adj = adjoint_lattice(trivial_lattice(6))
    assert adj.size == 36


def test_adjoint_duality_and_pairing_all_subgroups():
    for n in (4, 6):
        for lat in enumerate_subgroups(n):
            adj = adjoint_lattice(lat)
            assert lat.size * adj.size == n * n
            assert adjoint_lattice(adj).points == lat.points


def test_adjoint_commutation_witness(rng, lattices):
    for lat in lattices:
        adj = adjoint_lattice(lat)
        for _ in range(5):
            p = lat.points[int(rng.integers(lat.size))]
            q = adj.points[int(rng.integers(adj.size))]
            A, B = shift_matrix(p), shift_matrix(q)
            assert np.abs(A @ B - B @ A).max() < 1e-12


def test_volume_values():
    assert volume(lattice_from_generators(12, [(2, 0), (0, 3)])) == Fraction(1, 2)
    assert volume(full_lattice(5)) == Fraction(1, 5)
    assert volume(trivial_lattice(5)) == Fraction(5)


def test_volume_critical_density():
    lat = lattice_from_generators(6, [(1, 1)])
    assert volume(lat) == 1
    assert adjoint_lattice(lat).points == lat.points  # self-dual diagonal


def exhaustive_subgroups(n):
    """Oracle: scan all subsets of Z_n x Z_n for closure (tiny n only)."""
    elems = list(itertools.product(range(n), repeat=2))
    found = set()
    for mask in range(1, 2 ** len(elems)):
        subset = frozenset(e for i, e in enumerate(elems) if mask >> i & 1)
        if (0, 0) not in subset:
            continue
        closed = all(
            ((a[0] + b[0]) % n, (a[1] + b[1]) % n) in subset
            for a in subset
            for b in subset
        )
        if closed:
            found.add(subset)
    return found


def test_enumerate_subgroups_exhaustive_oracle():
    for n in (2, 3):
        enumerated = {frozenset((p.k, p.l) for p in lat.points) for lat in enumerate_subgroups(n)}
        assert enumerated == exhaustive_subgroups(n)


def test_enumerate_subgroups_structural():
    lats = enumerate_subgroups(4)
    seen = set()
    for lat in lats:
        pts = frozenset((p.k, p.l) for p in lat.points)
        assert pts not in seen
        seen.add(pts)
        assert 16 % lat.size == 0
        regenerated = lattice_from_generators(4, [(p.k, p.l) for p in lat.generators])
        assert regenerated.points == lat.points
