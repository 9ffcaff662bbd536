"""Two-sided Hilbert-module structure on signals over a lattice pair.

Signals carry a left action of the lattice algebra and a right action of the
adjoint-lattice algebra.  The left inner product collects the analysis
coefficients as an algebra element; the right inner product samples
<pi(adjoint point) g, f>, stored against the adjoint shifts, with the
covolume factor carried by the right action:

    act_right(f, b) = vol^{-1} sum b(adjoint point) pi(adjoint point)^H f.

Both conventions together make the associativity identity

    act_left(inner_left(f, g), h) = act_right(f, inner_right(g, h))

hold exactly; it is the fundamental identity in operator form.  Of the two
conjugate-placement variants seen for right inner products, the one used
here (<pi g, f>, shift applied to the first argument of the sample) is the
one under which positivity, compatibility and associativity all pass; the
other fails associativity outright.

A family of windows is a module frame exactly when the stacked multi-window
system is a frame; tightening by the inverse square root of the summed frame
operator realizes the reconstruction identity, whose trace is the ordinary
multi-window Parseval identity.  A lattice of covolume v needs at least
ceil(v) windows, by counting rank.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import (
    DimensionMismatch,
    Signal,
    cocycle,
    random_signal,
    shift_matrix,
    tf_shift,
)
from .lattice import Lattice, adjoint_lattice, volume
from .algebra import CoeffSeq, OperatorMatrix, represent, twisted_conv
from .frames import (
    GaborSystem,
    NotAFrame,
    analysis_coefficients,
    frame_bounds,
    frame_operator,
    hermitian_inverse_sqrt,
)

__all__ = [
    "ModuleFrameReport",
    "MinWindowsResult",
    "inner_left",
    "inner_right",
    "act_left",
    "act_right",
    "right_operator",
    "frame_type_operator",
    "associativity_residual",
    "module_frame_check",
    "module_frame_identity_residual",
    "multiwindow_parseval_residual",
    "tight_multiwindow",
    "min_windows",
]


def inner_left(f: Signal, g: Signal, lat: Lattice) -> CoeffSeq:
    """Left inner product: analysis coefficients <f, pi(lam) g> on the lattice."""
    if f.n != lat.n or g.n != lat.n:
        raise DimensionMismatch("signal length does not match lattice order")
    return CoeffSeq(lat, analysis_coefficients(f, g, lat))


def inner_right(f: Signal, g: Signal, lat: Lattice) -> CoeffSeq:
    """Right inner product: coefficients <pi(adjoint point) g, f> on the adjoint.

    The covolume prefactor is not stored; it belongs to the right action and
    to right_operator, so that associativity holds verbatim.
    """
    if f.n != lat.n or g.n != lat.n:
        raise DimensionMismatch("signal length does not match lattice order")
    adj = adjoint_lattice(lat)
    return CoeffSeq(adj, np.conj(analysis_coefficients(f, g, adj)))


def act_left(a: CoeffSeq, g: Signal) -> Signal:
    """Left action: sum a(lam) pi(lam) g, equal to represent(a) applied to g."""
    if g.n != a.lattice.n:
        raise DimensionMismatch("signal length does not match lattice order")
    out = np.zeros(g.n, dtype=complex)
    for c, p in zip(a.coeffs, a.lattice.points):
        out += c * tf_shift(p, g).values
    return Signal(g.n, out)


def _adjoint_volume_scale(b: CoeffSeq) -> float:
    # b lives on the adjoint lattice; vol(lattice)^-1 = N / |adjoint lattice|
    return b.lattice.n / b.lattice.size


def act_right(g: Signal, b: CoeffSeq, lat: Lattice | None = None) -> Signal:
    """Right action: vol^{-1} sum b(mu) pi(mu)^H g over the adjoint lattice."""
    if g.n != b.lattice.n:
        raise DimensionMismatch("signal length does not match lattice order")
    if lat is not None and adjoint_lattice(lat).points != b.lattice.points:
        raise DimensionMismatch("coefficients do not live on the adjoint lattice")
    out = np.zeros(g.n, dtype=complex)
    for c, p in zip(b.coeffs, b.lattice.points):
        # pi(p)^H = cocycle(p, p) pi(-p)
        out += (c * cocycle(p, p)) * tf_shift(-p, g).values
    return Signal(g.n, _adjoint_volume_scale(b) * out)


def right_operator(b: CoeffSeq) -> OperatorMatrix:
    """Matrix of a right-algebra element: vol^{-1} sum b(mu) pi(mu)^H."""
    n = b.lattice.n
    out = np.zeros((n, n), dtype=complex)
    for c, p in zip(b.coeffs, b.lattice.points):
        out += c * shift_matrix(p).conj().T
    return OperatorMatrix(n, _adjoint_volume_scale(b) * out)


def frame_type_operator(g: Signal, h: Signal, lat: Lattice, f: Signal) -> Signal:
    """Apply the (g, h) frame-type operator: analyze against g, synthesize with h."""
    return act_left(inner_left(f, g, lat), h)


def associativity_residual(f: Signal, g: Signal, h: Signal, lat: Lattice) -> float:
    """Relative gap between the two associativity routes; identically small."""
    lhs = act_left(inner_left(f, g, lat), h)
    rhs = act_right(f, inner_right(g, h, lat))
    return float(
        np.linalg.norm(lhs.values - rhs.values) / (1.0 + np.linalg.norm(lhs.values))
    )


@dataclass(frozen=True)
class ModuleFrameReport:
    residual: float
    is_module_frame: bool
    window_count: int
    vol: Fraction


def _summed_frame_operator(windows: list[Signal], lat: Lattice) -> np.ndarray:
    return frame_operator(GaborSystem(tuple(windows), lat)).entries


def module_frame_identity_residual(windows, lat: Lattice, f: Signal) -> float:
    """l1 gap in  inner_left(f, f) = sum_i inner_left(f, g_i) # inner_left(g_i, f).

    Holds exactly when the windows form a (tight) module frame.
    """
    lhs = inner_left(f, f, lat)
    acc = np.zeros(lat.size, dtype=complex)
    for w in windows:
        acc += twisted_conv(inner_left(f, w, lat), inner_left(w, f, lat)).coeffs
    return float(np.abs(lhs.coeffs - acc).sum())


def multiwindow_parseval_residual(windows, lat: Lattice, f: Signal) -> float:
    """Gap in the scalar identity ||f||^2 = sum_i sum_lam |<f, pi(lam) g_i>|^2."""
    total = 0.0
    for w in windows:
        total += float(np.sum(np.abs(analysis_coefficients(f, w, lat)) ** 2))
    norm_sq = f.norm2() ** 2
    return abs(norm_sq - total) / (1.0 + norm_sq)


def module_frame_check(windows, lat: Lattice, seed: int = 0) -> ModuleFrameReport:
    """Decide the module-frame property and measure tightening quality.

    The verdict is invertibility of the summed frame operator.  For frames,
    the report's residual is the Frobenius distance of the tightened system's
    frame operator from the identity, and the reconstruction identity is
    verified on seeded random signals as an internal consistency check.
    """
    windows = list(windows)
    if not windows:
        raise ValueError("need at least one window")
    sys = GaborSystem(tuple(windows), lat)
    bounds = frame_bounds(sys)
    vol = volume(lat)
    if not bounds.is_frame:
        return ModuleFrameReport(
            residual=math.inf,
            is_module_frame=False,
            window_count=len(windows),
            vol=vol,
        )
    tight = tight_multiwindow(windows, lat)
    s_tight = _summed_frame_operator(tight, lat)
    residual = float(np.linalg.norm(s_tight - np.eye(lat.n)))
    rng = np.random.default_rng(seed)
    for _ in range(2):
        probe = random_signal(lat.n, rng)
        gap = module_frame_identity_residual(tight, lat, probe)
        if gap > 1e-10 * (1.0 + probe.norm2() ** 2):
            raise ArithmeticError(
                f"tightened system failed the reconstruction identity (gap {gap:.3e})"
            )
    return ModuleFrameReport(
        residual=residual,
        is_module_frame=True,
        window_count=len(windows),
        vol=vol,
    )


def tight_multiwindow(windows, lat: Lattice) -> list[Signal]:
    """Rescale all windows by the inverse square root of the summed frame operator."""
    windows = list(windows)
    sys = GaborSystem(tuple(windows), lat)
    bounds = frame_bounds(sys)
    if not bounds.is_frame:
        raise NotAFrame(bounds.lower)
    inv_sqrt = hermitian_inverse_sqrt(_summed_frame_operator(windows, lat))
    return [Signal(lat.n, inv_sqrt @ w.values) for w in windows]


@dataclass(frozen=True)
class MinWindowsResult:
    lower_bound: int
    achieved: int
    success_rates: tuple[float, ...]


def min_windows(lat: Lattice, trials: int, seed: int) -> MinWindowsResult:
    """Probe how many random windows a frame on this lattice needs.

    The counting bound is ceil(covolume): k windows contribute k * |L|
    system vectors, which span at most k * |L| dimensions.  The achieved
    count is the smallest k at or one above the bound for which random
    k-window systems were frames in at least 90 percent of the trials.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    lower = math.ceil(volume(lat))
    rng = np.random.default_rng(seed)
    rates = []
    achieved = None
    for count in range(1, lower + 2):
        hits = 0
        for _ in range(trials):
            ws = tuple(random_signal(lat.n, rng) for _ in range(count))
            if frame_bounds(GaborSystem(ws, lat)).is_frame:
                hits += 1
        rate = hits / trials
        rates.append(rate)
        if achieved is None and rate >= 0.9:
            achieved = count
            if count >= lower:
                break
    if achieved is None:
        raise ArithmeticError(
            f"no window count up to {lower + 1} reached a 90 percent frame rate"
        )
    if achieved < lower:
        raise AssertionError(
            f"achieved {achieved} windows below the rank bound {lower}"
        )
    return MinWindowsResult(lower_bound=lower, achieved=achieved, success_rates=tuple(rates))
