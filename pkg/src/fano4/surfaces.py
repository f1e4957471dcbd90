"""Lattice models of the surfaces that get blown up, and the numbers the
surface blow-up formulas consume."""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction

from .chow import DivisorClass, Lattice, LatticeMismatchError

__all__ = [
    "AdjunctionError",
    "SurfaceModel",
    "SurfaceData",
    "del_pezzo",
    "quadric",
    "k3_sextic",
    "intersect",
    "surface_data",
]


class AdjunctionError(ValueError):
    """Normal bundle pieces do not add up to ``K_S - K_W|S``."""

    def __init__(self, residual: DivisorClass):
        self.residual = residual
        super().__init__(f"adjunction violated, residual class {residual}")


@dataclass(frozen=True)
class SurfaceModel:
    lattice: Lattice
    gram: tuple[tuple[int, ...], ...]
    K: DivisorClass
    chiO: int
    h11: int
    h20: int
    b1: int

    def __post_init__(self):
        n = self.lattice.rank
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise ValueError("gram matrix does not match the basis size")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        if self.K.lattice != self.lattice:
            raise LatticeMismatchError("canonical class lives in another lattice")

    def cls(self, coeffs) -> DivisorClass:
        return self.lattice.element(coeffs)


@dataclass(frozen=True)
class SurfaceData:
    """Numbers of a surface ``S`` in a 4-fold ``W`` entering the blow-up formulas.

    ``KS_dot_KW`` is ``K_S . K_W|S`` and ``KW2`` is ``(K_W|S)^2``;
    ``c2N`` is ``c2`` of the normal bundle.
    """

    KS2: int
    KS_dot_KW: int
    KW2: int
    c2N: int
    chiOS: int
    h11S: int
    h20S: int
    b1S: int

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"{f.name} must be an int, got {v!r}")
        for name in ("h11S", "h20S", "b1S"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))


def _diag_gram(diag: list[int]) -> tuple[tuple[int, ...], ...]:
    n = len(diag)
    return tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n))


def del_pezzo(k: int, start: int = 1) -> SurfaceModel:
    """``Bl_k P^2`` with basis ``h, e_start, ..., e_{start+k-1}``."""
    if not 0 <= k <= 8:
        raise ValueError("del Pezzo presets cover 0 <= k <= 8")
    names = ("h",) + tuple(f"e{i}" for i in range(start, start + k))
    lat = Lattice(f"Bl{k}P2", names)
    K = lat.element([-3] + [1] * k)
    return SurfaceModel(lat, _diag_gram([1] + [-1] * k), K, chiO=1, h11=k + 1, h20=0, b1=0)


def quadric() -> SurfaceModel:
    """``P^1 x P^1`` with the two rulings ``f1, f2``."""
    lat = Lattice("P1xP1", ("f1", "f2"))
    return SurfaceModel(lat, ((0, 1), (1, 0)), lat.element([-2, -2]), chiO=1, h11=2, h20=0, b1=0)


def k3_sextic(r: int) -> SurfaceModel:
    """K3 surface with a degree 6 polarization ``h`` and disjoint (-2)-curves
    ``C0, ..., Cr`` orthogonal to ``h``."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    names = ("h",) + tuple(f"C{i}" for i in range(r + 1))
    lat = Lattice(f"K3_6[{r + 1}]", names)
    return SurfaceModel(lat, _diag_gram([6] + [-2] * (r + 1)), lat.zero(), chiO=2, h11=20, h20=1, b1=0)


def intersect(s: SurfaceModel, a: DivisorClass, b: DivisorClass) -> Fraction:
    for c in (a, b):
        if c.lattice != s.lattice:
            raise LatticeMismatchError(f"class of {c.basis_id} used on surface {s.lattice.basis_id}")
    total = Fraction(0)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        row = s.gram[i]
        for j, bj in enumerate(b.coeffs):
            if bj and row[j]:
                total += ai * bj * row[j]
    return total


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ValueError(f"{what} = {x} is not an integer")
    return int(x)


def surface_data(s: SurfaceModel, KW_restr: DivisorClass,
                 normal_pieces: tuple[DivisorClass, DivisorClass] | None = None,
                 c2N: int | None = None) -> SurfaceData:
    """Extract :class:`SurfaceData` from a lattice model.

    ``KW_restr`` is the restriction of ``K_W`` to the surface.  With split
    ``normal_pieces`` the normal bundle ``c2`` is their product, and the pieces
    must satisfy ``n1 + n2 = K_S - K_W|S``.  Otherwise ``c2N`` must be passed.
    """
    if (normal_pieces is None) == (c2N is None):
        raise ValueError("pass exactly one of normal_pieces and c2N")
    if KW_restr.lattice != s.lattice:
        raise LatticeMismatchError(f"K_W|S lives in {KW_restr.basis_id}, not {s.lattice.basis_id}")
    if normal_pieces is not None:
        n1, n2 = normal_pieces
        residual = (n1 + n2) - (s.K - KW_restr)
        if not residual.is_zero():
            raise AdjunctionError(residual)
        c2N = _as_int(intersect(s, n1, n2), "c2(N)")
    return SurfaceData(
        KS2=_as_int(intersect(s, s.K, s.K), "K_S^2"),
        KS_dot_KW=_as_int(intersect(s, s.K, KW_restr), "K_S.K_W"),
        KW2=_as_int(intersect(s, KW_restr, KW_restr), "K_W^2"),
        c2N=c2N,
        chiOS=s.chiO,
        h11S=s.h11,
        h20S=s.h20,
        b1S=s.b1,
    )
