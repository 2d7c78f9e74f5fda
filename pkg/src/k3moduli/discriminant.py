"""The cyclic discriminant group of L2D(d) and the quotient group G_2d.

``A = Z/2d`` with ``q(x) = -x^2/(2d) mod 2``; an isometry of ``A`` is
multiplication by a residue ``a`` with ``a^2 = 1 (mod 4d)``. ``G_2d`` is the
group of those multipliers modulo ``a ~ -a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import p_of, prime_factors
from .kernels import unit_square_roots
from .lattice import Isometry, is_isometry, l2d

__all__ = [
    "DiscMultiplier",
    "GroupElementG",
    "p_of",
    "enumerate_multipliers",
    "group_elements",
    "compose",
    "induced_multiplier",
    "cubic_admissible",
    "disc_q",
]


def _check_d(d):
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"d must be a positive integer, got {d!r}")


def disc_q(d: int, x: int) -> Fraction:
    """``q(x) = -x^2/(2d)`` modulo 2 on ``Z/2d``."""
    return Fraction(-x * x, 2 * d) % 2


@dataclass(frozen=True, order=True)
class DiscMultiplier:
    d: int
    a: int

    def __post_init__(self):
        _check_d(self.d)
        N = 2 * self.d
        object.__setattr__(self, "a", self.a % N)
        if gcd(self.a, N) != 1 or (self.a * self.a - 1) % (4 * self.d):
            raise ValueError(f"{self.a} is not an isometry of the discriminant form mod {N}")

    @property
    def element(self) -> "GroupElementG":
        return GroupElementG.from_multiplier(self.d, self.a)


@dataclass(frozen=True, order=True)
class GroupElementG:
    """Class ``{a, 2d - a}`` stored by its smaller representative."""

    d: int
    rep: int

    def __post_init__(self):
        _check_d(self.d)
        N = 2 * self.d
        a = self.rep % N
        if gcd(a, N) != 1 or (a * a - 1) % (4 * self.d):
            raise ValueError(f"{self.rep} is not an isometry of the discriminant form mod {N}")
        object.__setattr__(self, "rep", min(a, N - a))

    @classmethod
    def from_multiplier(cls, d: int, a: int) -> "GroupElementG":
        return cls(d, a)

    @property
    def is_identity(self) -> bool:
        return self.rep == 1

    def to_dict(self) -> dict:
        return {"d": self.d, "rep": self.rep}

    @classmethod
    def from_dict(cls, data: dict) -> "GroupElementG":
        return cls(int(data["d"]), int(data["rep"]))


def enumerate_multipliers(d: int) -> list[DiscMultiplier]:
    """All ``a`` in ``[1, 2d)`` with ``a^2 = 1 (mod 4d)``, ascending."""
    _check_d(d)
    return [DiscMultiplier(d, a) for a in unit_square_roots(d)]


def group_elements(d: int) -> list[GroupElementG]:
    """Elements of ``G_2d`` sorted by representative; the identity comes first."""
    reps = sorted({min(a, 2 * d - a) for a in unit_square_roots(d)})
    return [GroupElementG(d, r) for r in reps]


def compose(g1: GroupElementG, g2: GroupElementG) -> GroupElementG:
    if g1.d != g2.d:
        raise ValueError(f"elements of G_{2 * g1.d} and G_{2 * g2.d} cannot be composed")
    return GroupElementG(g1.d, g1.rep * g2.rep)


def induced_multiplier(d: int, F) -> DiscMultiplier:
    """Action on ``A = <k/2d>`` of an isometry of L2D(d).

    ``F(k/2d) = F00 k/2d + l/2d`` with ``l/2d`` integral, so the class of the
    image is ``F00`` times the generator.
    """
    _check_d(d)
    M = F.matrix if isinstance(F, Isometry) else tuple(map(tuple, F))
    if not is_isometry(l2d(d), M):
        raise ValueError("not an isometry of L2D(d)")
    return DiscMultiplier(d, M[0][0])


def cubic_admissible(two_d: int) -> bool:
    """``2d`` is not divisible by 4, 9, or any odd prime ``p = 2 (mod 3)``."""
    if not isinstance(two_d, int) or two_d < 2 or two_d % 2:
        raise ValueError(f"expected a positive even integer, got {two_d!r}")
    if two_d % 4 == 0 or two_d % 9 == 0:
        return False
    return not any(p % 3 == 2 for p in prime_factors(two_d) if p != 2)
