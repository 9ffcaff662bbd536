"""Finite phase-space substrate on the cyclic group Z_N.

Signals are complex vectors indexed by Z_N.  The time-frequency shift of a
signal by (k, l) modulates after translating,

    (shift by (k,l) f)(t) = exp(2*pi*i*l*t/N) * f(t - k mod N),

so shifts compose only up to a unimodular cocycle,

    pi(lam) pi(mu) = cocycle(lam, mu) * pi(lam + mu),
    cocycle((k,l), (m,n)) = exp(-2*pi*i*k*n/N),

and commute up to the antisymmetric symplectic bicharacter

    c_symp((k,l), (m,n)) = exp(2*pi*i*(m*l - k*n)/N).

The short-time Fourier transform samples inner products against all N^2
shifted copies of a window.  Everything here is exact finite linear algebra:
the direct-summation STFT is the reference, the per-shift FFT is the fast
path, and the two agree to machine precision.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DimensionMismatch",
    "Signal",
    "TFPoint",
    "PhaseSpaceArray",
    "tf_shift",
    "shift_matrix",
    "cocycle",
    "symplectic_bicharacter",
    "stft",
    "stft_direct",
    "random_signal",
]


class DimensionMismatch(ValueError):
    """Operands live on cyclic groups of different order."""


def _check_same_n(*ns: int) -> int:
    first = ns[0]
    for n in ns[1:]:
        if n != first:
            raise DimensionMismatch(f"group orders differ: {ns}")
    return first


@dataclass(frozen=True)
class Signal:
    """A complex-valued function on Z_N."""

    n: int
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"group order must be >= 2, got {self.n}")
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (self.n,):
            raise ValueError(f"expected {self.n} samples, got shape {vals.shape}")
        if not np.all(np.isfinite(vals.view(float))):
            raise ValueError("signal contains non-finite entries")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def norm2(self) -> float:
        return float(np.linalg.norm(self.values))

    def is_zero(self, tol: float = 0.0) -> bool:
        return bool(np.abs(self.values).max(initial=0.0) <= tol)

    @staticmethod
    def zero(n: int) -> "Signal":
        return Signal(n, np.zeros(n, dtype=complex))

    @staticmethod
    def delta(n: int, t: int = 0) -> "Signal":
        vals = np.zeros(n, dtype=complex)
        vals[t % n] = 1.0
        return Signal(n, vals)


@dataclass(frozen=True)
class TFPoint:
    """A phase-space point (k, l) in Z_N x Z_N, canonically reduced mod N."""

    n: int
    k: int
    l: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"group order must be >= 2, got {self.n}")
        object.__setattr__(self, "k", int(self.k) % self.n)
        object.__setattr__(self, "l", int(self.l) % self.n)

    def __add__(self, other: "TFPoint") -> "TFPoint":
        _check_same_n(self.n, other.n)
        return TFPoint(self.n, self.k + other.k, self.l + other.l)

    def __sub__(self, other: "TFPoint") -> "TFPoint":
        _check_same_n(self.n, other.n)
        return TFPoint(self.n, self.k - other.k, self.l - other.l)

    def __neg__(self) -> "TFPoint":
        return TFPoint(self.n, -self.k, -self.l)

    def lift(self) -> tuple[int, int]:
        """Minimal integer representative; ties at N/2 resolve positive."""
        half = self.n // 2
        k = self.k if self.k <= half else self.k - self.n
        l = self.l if self.l <= half else self.l - self.n
        return (k, l)


@dataclass(frozen=True)
class PhaseSpaceArray:
    """An N x N complex array over phase space, indexed [k, l]."""

    n: int
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (self.n, self.n):
            raise ValueError(f"expected shape ({self.n}, {self.n}), got {vals.shape}")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)


def cocycle(lam: TFPoint, mu: TFPoint) -> complex:
    """Composition factor: pi(lam) pi(mu) = cocycle(lam, mu) pi(lam + mu)."""
    n = _check_same_n(lam.n, mu.n)
    return complex(np.exp(-2j * np.pi * ((lam.k * mu.l) % n) / n))

def symplectic_bicharacter(lam: TFPoint, mu: TFPoint) -> complex:
    """Commutation factor: pi(lam) pi(mu) = c_symp(lam, mu) pi(mu) pi(lam).

    Equals cocycle(lam, mu) * conj(cocycle(mu, lam)) and is antisymmetric.
    """
    n = _check_same_n(lam.n, mu.n)
    return complex(np.exp(2j * np.pi * ((mu.k * lam.l - lam.k * mu.l) % n) / n))


def tf_shift(p: TFPoint, f: Signal) -> Signal:
    """Apply the time-frequency shift by p; preserves the 2-norm."""
    n = _check_same_n(p.n, f.n)
    phases = np.exp(2j * np.pi * p.l * np.arange(n) / n)
    return Signal(n, phases * np.roll(f.values, p.k))


def shift_matrix(p: TFPoint) -> np.ndarray:
    """The N x N unitary matrix of the time-frequency shift by p."""
    n = p.n
    rows = np.arange(n)
    mat = np.zeros((n, n), dtype=complex)
    mat[rows, (rows - p.k) % n] = np.exp(2j * np.pi * p.l * rows / n)
    return mat


def _rolled_window(g: np.ndarray) -> np.ndarray:
    """Stack of all cyclic translates: out[k, t] = g[(t - k) mod N]."""
    n = g.shape[0]
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return g[idx]


def stft(f: Signal, g: Signal) -> PhaseSpaceArray:
    """Short-time Fourier transform V_g f(k, l) = <f, pi(k,l) g>.

    Fast path: one length-N FFT of f * conj(translate of g) per time shift k.
    Satisfies the Moyal identity  sum |V_g f|^2 = N ||f||^2 ||g||^2.
    """
    n = _check_same_n(f.n, g.n)
    products = f.values[None, :] * np.conj(_rolled_window(g.values))
    return PhaseSpaceArray(n, np.fft.fft(products, axis=1))


def stft_direct(f: Signal, g: Signal) -> PhaseSpaceArray:
    """Reference STFT by direct summation in canonical (k, l, t) order."""
    n = _check_same_n(f.n, g.n)
    t = np.arange(n)
    kernel = np.exp(-2j * np.pi * np.outer(t, t) / n)  # kernel[l, t]
    out = np.zeros((n, n), dtype=complex)
    for k in range(n):
        windowed = f.values * np.conj(np.roll(g.values, k))
        out[k, :] = kernel @ windowed
    return PhaseSpaceArray(n, out)


def stft_sample(f: Signal, g: Signal, p: TFPoint) -> complex:
    """Single STFT sample <f, pi(p) g> by direct summation."""
    _check_same_n(f.n, g.n, p.n)
    return complex(np.vdot(tf_shift(p, g).values, f.values))


def random_signal(n: int, rng: np.random.Generator) -> Signal:
    """Complex standard-normal signal, the generic test vector."""
    return Signal(n, rng.standard_normal(n) + 1j * rng.standard_normal(n))
