"""Anticanonical degree bookkeeping for the 3-fold bases ``Y = Bl_{r pts} Y0``."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

__all__ = [
    "Kind",
    "ThreefoldRecord",
    "MAX_DEGREE_RHO1",
    "MAX_DEGREE_RHO2",
    "base_table",
    "blow_up_point3",
    "h0_minusK",
    "ScanRow",
    "BoundScan",
    "elementary_bound_scan",
]

# upper bounds for -K_Y^3 of a weak Fano Y, for rho(Y0) = 1 and rho(Y0) = 2
MAX_DEGREE_RHO1 = 64
MAX_DEGREE_RHO2 = 54


class Kind(enum.Enum):
    FANO = "Fano"
    WEAK_FANO = "weak Fano"


@dataclass(frozen=True)
class ThreefoldRecord:
    name: str
    minusK3: int
    rho: int
    kind: Kind

    def __post_init__(self):
        if self.minusK3 <= 0:
            raise ValueError(f"{self.name}: -K^3 = {self.minusK3} is not positive")
        if self.rho < 1:
            raise ValueError("rho must be positive")


def base_table() -> list[ThreefoldRecord]:
    return [
        ThreefoldRecord("P^3", 64, 1, Kind.FANO),
        ThreefoldRecord("P(T_P^2)", 48, 2, Kind.FANO),
        ThreefoldRecord("linear section of Gr(2,5)", 40, 1, Kind.FANO),
        ThreefoldRecord("JPR 2.13(1.iv)", 40, 2, Kind.WEAK_FANO),
        ThreefoldRecord("JPR 2.13(1.iii)", 32, 2, Kind.WEAK_FANO),
        ThreefoldRecord("(1,2) divisor in P^2 x P^2", 30, 2, Kind.FANO),
    ]


def blow_up_point3(rec: ThreefoldRecord, r: int) -> ThreefoldRecord:
    """Blow up ``r`` points; each drops ``-K^3`` by 8, which must stay positive."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    deg = rec.minusK3 - 8 * r
    if deg <= 0:
        raise ValueError(
            f"blowing up {r} points of {rec.name} gives -K^3 = {deg}, not weak Fano"
        )
    name = rec.name if r == 0 else f"Bl_{r} {rec.name}"
    return replace(rec, name=name, minusK3=deg, rho=rec.rho + r,
                   kind=rec.kind if r == 0 else Kind.WEAK_FANO)


def h0_minusK(rec: ThreefoldRecord | int) -> int:
    """Riemann-Roch for ``-K`` on a weak Fano 3-fold: ``-K^3/2 + 3``."""
    deg = rec if isinstance(rec, int) else rec.minusK3
    if deg % 2:
        raise ValueError(f"-K^3 = {deg} is odd")
    return deg // 2 + 3


@dataclass(frozen=True)
class ScanRow:
    base: ThreefoldRecord
    r_max: int
    rho_X_max: int
    min_rho_X: int

    @property
    def exact(self) -> bool:
        return self.rho_X_max == self.min_rho_X

    @property
    def r_offset(self) -> int:
        """``r = rho_X - r_offset``."""
        return self.base.rho + 1

    def describe(self) -> str:
        if self.exact:
            return f"rho_X={self.rho_X_max}, r={self.r_max}"
        return f"rho_X<={self.rho_X_max}, r=rho_X-{self.r_offset}"


@dataclass(frozen=True)
class BoundScan:
    rows: tuple[ScanRow, ...]
    global_max_rho_X: int
    degree_caps: tuple[int, int] = (MAX_DEGREE_RHO1, MAX_DEGREE_RHO2)


def elementary_bound_scan(min_rho_X: int = 6) -> BoundScan:
    """For each base ``Y0``, the most points one can blow up keeping ``-K^3 > 0``,
    and the resulting bound on ``rho_X = rho(Y0) + r + 1``.

    Rows are ordered by decreasing bound; bases that cannot reach
    ``min_rho_X`` are dropped.  The global maximum is taken over all bases.
    """
    all_rows = []
    for base in base_table():
        r_max = (base.minusK3 - 1) // 8
        all_rows.append(ScanRow(base, r_max, base.rho + r_max + 1, min_rho_X))
    rows = sorted((row for row in all_rows if row.rho_X_max >= min_rho_X),
                  key=lambda row: -row.rho_X_max)
    return BoundScan(tuple(rows), max(row.rho_X_max for row in all_rows))
