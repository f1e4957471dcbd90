"""
Numerical invariants of smooth 4-folds and how they change under point
blow-ups, surface blow-ups/blow-downs and flips of exceptional lines.

All arithmetic is exact; the half-integer terms of the surface formulas are
checked for integrality before a record is produced.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from fractions import Fraction

from .surfaces import SurfaceData

__all__ = [
    "ParityError",
    "FourfoldRecord",
    "p4_record",
    "blow_up_point",
    "flip_lines",
    "blow_up_surface",
    "blow_down_surface",
]


class ParityError(ValueError):
    """``(K_W|S)^2 + K_S.K_W|S`` is odd, so chi(-K) would not be an integer."""


@dataclass(frozen=True)
class FourfoldRecord:
    rho: int
    K4: int
    K2c2: int
    chi_mK: int
    h11: int
    h22: int
    h13: int
    b3: int
    chiT: int

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"{f.name} must be an int, got {v!r}")

    @property
    def b4(self) -> int:
        return self.h13 + self.h22 + self.h13

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def p4_record() -> FourfoldRecord:
    return FourfoldRecord(rho=1, K4=625, K2c2=250, chi_mK=126, h11=1, h22=1, h13=0, b3=0, chiT=24)


def blow_up_point(rec: FourfoldRecord) -> FourfoldRecord:
    return replace(
        rec,
        rho=rec.rho + 1,
        K4=rec.K4 - 81,
        K2c2=rec.K2c2 - 18,
        chi_mK=rec.chi_mK - 15,
        h11=rec.h11 + 1,
        h22=rec.h22 + 1,
        chiT=rec.chiT - 4,
    )


def flip_lines(rec: FourfoldRecord, n: int) -> FourfoldRecord:
    """Flip ``n`` exceptional lines, going from the model that contains them to
    its small modification."""
    if n < 0:
        raise ValueError("number of flipped lines must be nonnegative")
    return replace(rec, K4=rec.K4 + n, K2c2=rec.K2c2 - 2 * n, h22=rec.h22 + n)


def _integral(x: Fraction) -> int:
    if x.denominator != 1:
        raise ParityError(f"non-integral value {x}")
    return int(x)


def _surface_deltas(s: SurfaceData) -> dict[str, int]:
    if (s.KW2 + s.KS_dot_KW) % 2:
        raise ParityError(
            f"(K_W|S)^2 + K_S.K_W|S = {s.KW2 + s.KS_dot_KW} is odd"
        )
    return {
        "rho": 1,
        "K4": -3 * s.KW2 - 2 * s.KS_dot_KW + s.c2N - s.KS2,
        "K2c2": -12 * s.chiOS + 2 * s.KS2 - 2 * s.KS_dot_KW - 2 * s.c2N,
        "chi_mK": _integral(-s.chiOS - Fraction(s.KW2 + s.KS_dot_KW, 2)),
        "h11": 1,
        "h22": s.h11S,
        "h13": s.h20S,
        "b3": s.b1S,
        # KW2 - KS_dot_KW has the parity of KW2 + KS_dot_KW
        "chiT": _integral(-2 * s.chiOS - Fraction(s.KW2 - s.KS_dot_KW, 2) + s.c2N),
    }


def blow_up_surface(rec: FourfoldRecord, s: SurfaceData) -> FourfoldRecord:
    d = _surface_deltas(s)
    return FourfoldRecord(**{k: v + d[k] for k, v in rec.as_dict().items()})


def blow_down_surface(rec: FourfoldRecord, s: SurfaceData) -> FourfoldRecord:
    """Invariants of ``W`` from those of ``X = Bl_S W``."""
    if rec.rho < 2:
        raise ValueError("a blow-down needs rho >= 2")
    d = _surface_deltas(s)
    out = {k: v - d[k] for k, v in rec.as_dict().items()}
    for name in ("h11", "h22", "h13", "b3"):
        if out[name] < 0:
            raise ValueError(f"blow-down would make {name} = {out[name]} negative")
    return FourfoldRecord(**out)
