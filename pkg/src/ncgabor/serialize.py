"""JSON and CSV schemas for every value the toolkit emits or ingests.

Complex numbers serialize as [re, im] pairs and rationals as "p/q" strings,
so integer and rational data round-trip bit-exactly and floats survive at
full double precision.  Parsers raise ValueError naming the offending field.
"""
from __future__ import annotations

import io
from fractions import Fraction

import numpy as np

from .core import PhaseSpaceArray, Signal
from .lattice import Lattice, lattice_from_generators
from .algebra import CoeffSeq
from .frames import FrameBounds
from .module import ModuleFrameReport
from .weights import GrsReport, Weight

__all__ = [
    "signal_to_dict",
    "signal_from_dict",
    "lattice_to_dict",
    "lattice_from_dict",
    "coeffseq_to_dict",
    "coeffseq_from_dict",
    "weight_to_dict",
    "weight_from_dict",
    "bounds_to_dict",
    "module_report_to_dict",
    "fraction_to_str",
    "fraction_from_str",
    "phase_space_to_csv",
    "phase_space_from_csv",
    "grs_report_to_csv",
]


def _require(mapping: dict, field: str, context: str):
    if field not in mapping:
        raise ValueError(f"{context} JSON is missing field {field!r}")
    return mapping[field]


def fraction_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fraction_from_str(s: str) -> Fraction:
    try:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    except Exception:
        raise ValueError(f"malformed rational {s!r}, expected 'p/q'") from None


def signal_to_dict(f: Signal) -> dict:
    return {
        "n": f.n,
        "re": [float(x) for x in f.values.real],
        "im": [float(x) for x in f.values.imag],
    }


def signal_from_dict(d: dict) -> Signal:
    n = _require(d, "n", "signal")
    re = _require(d, "re", "signal")
    im = _require(d, "im", "signal")
    if len(re) != n or len(im) != n:
        raise ValueError(f"signal field 're'/'im' length must equal n={n}")
    return Signal(int(n), np.asarray(re, dtype=float) + 1j * np.asarray(im, dtype=float))


def lattice_to_dict(lat: Lattice) -> dict:
    return {"n": lat.n, "generators": [[p.k, p.l] for p in lat.generators]}


def lattice_from_dict(d: dict) -> Lattice:
    n = _require(d, "n", "lattice")
    gens = _require(d, "generators", "lattice")
    for g in gens:
        if len(g) != 2:
            raise ValueError(f"lattice field 'generators' entry {g!r} is not a pair")
    return lattice_from_generators(int(n), [(int(k), int(l)) for k, l in gens])


def coeffseq_to_dict(a: CoeffSeq) -> dict:
    return {
        "lattice": lattice_to_dict(a.lattice),
        "coeffs": [[float(c.real), float(c.imag)] for c in a.coeffs],
    }


def coeffseq_from_dict(d: dict) -> CoeffSeq:
    lat = lattice_from_dict(_require(d, "lattice", "coefficient sequence"))
    raw = _require(d, "coeffs", "coefficient sequence")
    if len(raw) != lat.size:
        raise ValueError(
            f"coefficient sequence field 'coeffs' has {len(raw)} entries, lattice has {lat.size} points"
        )
    coeffs = np.array([complex(re, im) for re, im in raw])
    return CoeffSeq(lat, coeffs)


def weight_to_dict(v: Weight) -> dict:
    if v.family == "polynomial":
        return {"family": "polynomial", "s": v.s}
    if v.family == "subexponential":
        return {"family": "subexponential", "b": v.b, "beta": v.beta}
    if v.family == "exponential":
        return {"family": "exponential", "b": v.b}
    d = {
        "family": "custom",
        "table": [[x, y, val] for (x, y), val in sorted(v.table.items())],
    }
    if v.outer_power != 1.0:
        d["power"] = v.outer_power
    return d


def weight_from_dict(d: dict) -> Weight:
    family = _require(d, "family", "weight")
    if family == "polynomial":
        return Weight.polynomial(float(_require(d, "s", "weight")))
    if family == "subexponential":
        return Weight.subexponential(
            float(_require(d, "b", "weight")), float(_require(d, "beta", "weight"))
        )
    if family == "exponential":
        return Weight.exponential(float(_require(d, "b", "weight")))
    if family == "custom":
        table = {}
        for entry in _require(d, "table", "weight"):
            if len(entry) != 3:
                raise ValueError(f"weight field 'table' entry {entry!r} is not [x, y, value]")
            x, y, val = entry
            table[(int(x), int(y))] = float(val)
        w = Weight.custom(table)
        power = d.get("power", 1.0)
        return w.power(float(power)) if power != 1.0 else w
    raise ValueError(f"weight field 'family' has unknown value {family!r}")


def bounds_to_dict(b: FrameBounds) -> dict:
    return {"A": b.lower, "B": b.upper, "is_frame": b.is_frame}


def module_report_to_dict(r: ModuleFrameReport) -> dict:
    residual = None if not np.isfinite(r.residual) else float(r.residual)
    return {
        "is_module_frame": r.is_module_frame,
        "residual": residual,
        "window_count": r.window_count,
        "vol": fraction_to_str(r.vol),
    }


def phase_space_to_csv(arr: PhaseSpaceArray) -> str:
    out = io.StringIO()
    out.write("k,l,re,im\n")
    for k in range(arr.n):
        for l in range(arr.n):
            val = arr.values[k, l]
            out.write(f"{k},{l},{float(val.real)!r},{float(val.imag)!r}\n")
    return out.getvalue()


def phase_space_from_csv(text: str) -> PhaseSpaceArray:
    lines = [ln for ln in text.strip().splitlines() if ln]
    if not lines or lines[0].replace(" ", "") != "k,l,re,im":
        raise ValueError("phase-space CSV must start with header 'k,l,re,im'")
    entries = {}
    for ln in lines[1:]:
        k, l, re, im = ln.split(",")
        entries[(int(k), int(l))] = complex(float(re), float(im))
    n = max(k for k, _ in entries) + 1
    if len(entries) != n * n:
        raise ValueError(f"phase-space CSV has {len(entries)} rows, expected {n * n}")
    vals = np.zeros((n, n), dtype=complex)
    for (k, l), v in entries.items():
        vals[k, l] = v
    return PhaseSpaceArray(n, vals)


def grs_report_to_csv(report: GrsReport) -> str:
    out = io.StringIO()
    out.write("n,sample\n")
    for n, val in report.samples:
        out.write(f"{n},{float(val)!r}\n")
    return out.getvalue()
