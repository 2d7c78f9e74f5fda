"""Mukai duality data: coprime factorizations ``d = rs`` and their group elements.

The involution attached to ``(r, s)`` is realized on the discriminant group by
the multiplier ``a`` with ``a = 1 (mod 2s)`` and ``a = -1 (mod 2r)``. This
choice is a convention; only the resulting bijection onto ``G_2d`` is
meaningful, and swapping ``r`` and ``s`` sends ``a`` to ``-a``, the same class.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import crt, p_of
from .discriminant import GroupElementG, _check_d


@dataclass(frozen=True, order=True)
class CoprimePair:
    r: int
    s: int

    def __post_init__(self):
        r, s = int(self.r), int(self.s)
        if r < 1 or s < 1 or gcd(r, s) != 1:
            raise ValueError(f"({r}, {s}) is not a pair of coprime positive integers")
        object.__setattr__(self, "r", min(r, s))
        object.__setattr__(self, "s", max(r, s))

    @property
    def d(self) -> int:
        return self.r * self.s

    def to_list(self) -> list[int]:
        return [self.r, self.s]


@dataclass(frozen=True)
class MukaiVector:
    """``(r, c * l, s)`` with ``l`` the polarization class and ``l^2 = two_d``."""

    r: int
    c: int
    s: int
    two_d: int


def coprime_factorizations(d: int) -> list[CoprimePair]:
    _check_d(d)
    pairs = []
    r = 1
    while r * r <= d:
        if d % r == 0 and gcd(r, d // r) == 1:
            pairs.append(CoprimePair(r, d // r))
        r += 1
    return pairs


def mukai_multiplier(d: int, pair: CoprimePair) -> int:
    """The residue ``a mod 2d`` with ``a = 1 (mod 2s)``, ``a = -1 (mod 2r)``."""
    _check_d(d)
    if pair.d != d:
        raise ValueError(f"{pair} is not a factorization of {d}")
    a, mod = crt([1, -1], [2 * pair.s, 2 * pair.r])
    assert mod == 2 * d
    return a


def mukai_group_element(d: int, pair: CoprimePair) -> GroupElementG:
    return GroupElementG(d, mukai_multiplier(d, pair))


def mukai_table(d: int) -> list[tuple[CoprimePair, GroupElementG]]:
    return [(p, mukai_group_element(d, p)) for p in coprime_factorizations(d)]


def fm_partner_count(d: int) -> int:
    """Number of Fourier-Mukai partners of a 2d-polarized K3 of Picard rank one."""
    return 2 ** (p_of(d) - 1)


def mukai_pairing(v: MukaiVector, w: MukaiVector) -> int:
    if v.two_d != w.two_d:
        raise ValueError("Mukai vectors over different polarizations")
    return v.c * w.c * v.two_d - v.r * w.s - v.s * w.r
