"""
Divisor classes and quartic intersection numbers on blow-ups of P^4 at points.

A :class:`RingModel` carries the basis ``H, D0, ..., D{n-1}`` (optionally
extended by a formal symbol ``E`` for the exceptional divisor of a surface
blow-up).  The quartic form is the one of ``Bl_{n pts} P^4``::

    H^4 = 1,   Di^4 = -1,   every mixed monomial = 0

``E`` only takes part in linear arithmetic: its quartic products depend on the
blown-up surface and are refused rather than silently set to zero.

Example::

    >>> m = blowup_points_ring(1)
    >>> K = anticanonical(m)
    >>> quartic_degree(m, K, K, K, K)
    Fraction(544, 1)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "LatticeMismatchError",
    "Lattice",
    "DivisorClass",
    "RingModel",
    "blowup_points_ring",
    "quartic_degree",
    "anticanonical",
    "curve_anticanonical_degree",
    "CurveClass",
    "DEFAULT_EXCEPTIONAL",
    "classify_curve",
    "SectionDegrees",
    "section_degrees",
    "verify_linear_identity",
]


class LatticeMismatchError(ValueError):
    """Raised when classes from different lattices are combined."""


@dataclass(frozen=True)
class Lattice:
    """A named, ordered basis.  Two lattices are equal iff id and names agree."""

    basis_id: str
    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate basis names in {self.names}")

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a basis element of {self.basis_id}") from None

    def zero(self) -> "DivisorClass":
        return DivisorClass(self, (Fraction(0),) * self.rank)

    def basis(self, name: str) -> "DivisorClass":
        coeffs = [Fraction(0)] * self.rank
        coeffs[self.index(name)] = Fraction(1)
        return DivisorClass(self, tuple(coeffs))

    def element(self, coeffs: Mapping[str, int | Fraction] | Sequence[int | Fraction]) -> "DivisorClass":
        """Build a class from a ``{name: coeff}`` mapping or a full coefficient list."""
        if isinstance(coeffs, Mapping):
            vec = [Fraction(0)] * self.rank
            for name, c in coeffs.items():
                vec[self.index(name)] += Fraction(c)
            return DivisorClass(self, tuple(vec))
        return DivisorClass(self, tuple(Fraction(c) for c in coeffs))

    def total(self, names: Iterable[str]) -> "DivisorClass":
        out = self.zero()
        for name in names:
            out = out + self.basis(name)
        return out


@dataclass(frozen=True)
class DivisorClass:
    lattice: Lattice
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.lattice.rank:
            raise ValueError(
                f"{len(self.coeffs)} coefficients for a rank {self.lattice.rank} lattice"
            )
        for c in self.coeffs:
            if not isinstance(c, Fraction):
                raise TypeError(f"coefficients must be Fraction, got {type(c).__name__}")

    @property
    def basis_id(self) -> str:
        return self.lattice.basis_id

    def _check(self, other: "DivisorClass") -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected DivisorClass, got {type(other).__name__}")
        if other.lattice != self.lattice:
            raise LatticeMismatchError(
                f"cannot combine classes of {self.basis_id} and {other.basis_id}"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.lattice, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.lattice, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.lattice, tuple(-a for a in self.coeffs))

    def __mul__(self, scalar) -> "DivisorClass":
        if isinstance(scalar, DivisorClass):
            return NotImplemented
        if isinstance(scalar, float):
            raise TypeError("floating point scalars are not allowed")
        s = Fraction(scalar)
        return DivisorClass(self.lattice, tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    def __getitem__(self, name: str) -> Fraction:
        return self.coeffs[self.lattice.index(name)]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_dict(self) -> dict[str, Fraction]:
        return {n: c for n, c in zip(self.lattice.names, self.coeffs) if c != 0}

    def __str__(self) -> str:
        terms = []
        for name, c in zip(self.lattice.names, self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = name if mag == 1 else f"{mag}{name}" if mag.denominator == 1 else f"({mag}){name}"
            terms.append(f"{sign} {body}")
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


@dataclass(frozen=True)
class RingModel:
    """Divisor lattice of ``Bl_{n pts} P^4`` with its quartic form."""

    lattice: Lattice
    n_points: int
    with_E: bool = False

    @property
    def H(self) -> DivisorClass:
        return self.lattice.basis("H")

    def D(self, i: int) -> DivisorClass:
        if not 0 <= i < self.n_points:
            raise IndexError(f"D{i} out of range for {self.n_points} points")
        return self.lattice.basis(f"D{i}")

    @property
    def E(self) -> DivisorClass:
        if not self.with_E:
            raise KeyError("this model has no surface exceptional divisor E")
        return self.lattice.basis("E")

    def sum_D(self) -> DivisorClass:
        return self.lattice.total(f"D{i}" for i in range(self.n_points))


def blowup_points_ring(n_points: int, with_E: bool = False) -> RingModel:
    if n_points < 0:
        raise ValueError("n_points must be nonnegative")
    names = ("H",) + tuple(f"D{i}" for i in range(n_points)) + (("E",) if with_E else ())
    basis_id = f"Bl{n_points}P4" + ("+E" if with_E else "")
    return RingModel(Lattice(basis_id, names), n_points, with_E)


def quartic_degree(model: RingModel, c1: DivisorClass, c2: DivisorClass,
                   c3: DivisorClass, c4: DivisorClass) -> Fraction:
    classes = (c1, c2, c3, c4)
    for c in classes:
        if c.lattice != model.lattice:
            raise LatticeMismatchError(f"class of {c.basis_id} used on model {model.lattice.basis_id}")
        if model.with_E and c["E"] != 0:
            raise ValueError("quartic products involving E are not defined on this model")
    h = model.lattice.index("H")
    total = Fraction(1)
    for c in classes:
        total *= c.coeffs[h]
    for i in range(model.n_points):
        j = model.lattice.index(f"D{i}")
        term = Fraction(1)
        for c in classes:
            term *= c.coeffs[j]
        total -= term
    return total


def anticanonical(model: RingModel) -> DivisorClass:
    """``-K = 5H - 3 sum Di``."""
    return 5 * model.H - 3 * model.sum_D()


def curve_anticanonical_degree(d: int, mults: Sequence[int]) -> int:
    """-K degree of the transform of a degree ``d`` curve through blown-up points
    with multiplicities ``mults``."""
    if any(m < 0 for m in mults):
        raise ValueError("multiplicities must be nonnegative")
    return 5 * d - 3 * sum(mults)


class CurveClass(enum.Enum):
    POSITIVE = "Positive"
    EXCEPTIONAL_LINE = "ExceptionalLine"
    VIOLATION = "Violation"


def _profile(d: int, mults: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    return d, tuple(sorted((m for m in mults if m), reverse=True))


# lines through 2 points and rational normal quartics through 7 points
DEFAULT_EXCEPTIONAL = frozenset({_profile(1, (1, 1)), _profile(4, (1,) * 7)})


def classify_curve(d: int, mults: Sequence[int],
                   allowed_exceptional: Iterable[tuple[int, Sequence[int]]] | None = None) -> CurveClass:
    if allowed_exceptional is None:
        allowed = DEFAULT_EXCEPTIONAL
    else:
        allowed = {_profile(dd, mm) for dd, mm in allowed_exceptional}
    deg = curve_anticanonical_degree(d, mults)
    if deg >= 1:
        return CurveClass.POSITIVE
    if deg == -1 and _profile(d, mults) in allowed:
        return CurveClass.EXCEPTIONAL_LINE
    return CurveClass.VIOLATION


class SectionDegrees(NamedTuple):
    negative: int
    positive: int
    parity_ok: bool | None


def section_degrees(c: int, e: int, det_degree: int | None = None) -> SectionDegrees:
    """-K degrees of the negative and positive sections of ``F_e`` over a
    rational curve ``C`` with ``-K_Y.C = c`` in a P^1-bundle.

    ``det_degree`` is ``det(E).C``; when given, ``parity_ok`` checks
    ``det(E).C = e mod 2``.
    """
    if e < 0:
        raise ValueError("e must be nonnegative")
    parity = None if det_degree is None else (det_degree - e) % 2 == 0
    return SectionDegrees(c - e, c + e, parity)


def verify_linear_identity(lhs: DivisorClass,
                           terms: Iterable[tuple[int | Fraction, DivisorClass]]) -> bool:
    rhs = lhs.lattice.zero()
    for coeff, cls in terms:
        lhs._check(cls)
        rhs = rhs + Fraction(coeff) * cls
    return rhs == lhs
