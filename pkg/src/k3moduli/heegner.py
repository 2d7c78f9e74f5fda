"""Reflective vectors of L2D(d) and the Heegner divisors fixed by G_2d.

A vector ``beta = alpha k + m j`` (``j`` primitive in the unimodular part) is
recorded as ``ReflectiveCandidate(alpha, m, jsq)`` with ``jsq = j.j``. Divisor
classes are labelled by ``HeegnerInvariant(n, div, t)``: ``n = -beta^2``,
``div`` the divisibility of ``beta`` and ``t`` the class of ``beta/div`` in
``Z/2d`` up to sign. Two primitive vectors with the same label lie in one orbit
of the stable orthogonal group (Eichler's criterion; L2D(d) contains U + U),
so the label determines the divisor.

Two routes compute the fixed classes. :func:`classify_fixed_divisors` walks the
admissible norms and realizes each candidate label by a congruence search;
:func:`brute_force_classify` enumerates actual lattice vectors in a box of
``<-2d> + U + U``. They share only the per-vector predicates.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .discriminant import DiscMultiplier, GroupElementG, _check_d, group_elements
from .lattice import k3_lattice, l2d_to_lambda, polarization_vector, saturate_pair

WEHLER_GRAM = ((2, 4), (4, 2))


@dataclass(frozen=True, order=True)
class ReflectiveCandidate:
    alpha: int
    m: int
    jsq: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if self.jsq % 2:
            raise ValueError(f"j lives in an even lattice; jsq = {self.jsq} is odd")

    def beta_square(self, d: int) -> int:
        return -2 * d * self.alpha**2 + self.m**2 * self.jsq

    @property
    def is_primitive(self) -> bool:
        return math.gcd(self.alpha, self.m) == 1

    def vector(self, d: int) -> tuple[int, ...]:
        """Coordinates in L2D(d), taking ``j = e + (jsq/2) f`` in the first U."""
        return (self.alpha, self.m, self.m * (self.jsq // 2)) + (0,) * 18


@dataclass(frozen=True, order=True)
class HeegnerInvariant:
    d: int
    n: int
    div: int
    t: int

    def __post_init__(self):
        N = 2 * self.d
        if self.n <= 0 or self.n % 2:
            raise ValueError(f"n must be positive and even, got {self.n}")
        if not 0 <= self.t <= self.d:
            raise ValueError(f"t = {self.t} is not canonical in [0, {self.d}]")
        if self.div != N // math.gcd(self.t, N):
            raise ValueError(f"div = {self.div} is not the order of {self.t} in Z/{N}")
        if (Fraction(self.t**2, N) - Fraction(self.n, self.div**2)) % 2:
            raise ValueError("norm and discriminant class are incompatible")

    @property
    def sort_key(self):
        return self.n, self.t

    def to_dict(self) -> dict:
        return {"n": self.n, "div": self.div, "t": self.t}

    @classmethod
    def from_dict(cls, d: int, data: dict) -> "HeegnerInvariant":
        return cls(d, int(data["n"]), int(data["div"]), int(data["t"]))


# -- per-vector predicates ---------------------------------------------------

def in_refl_set(d: int, cand: ReflectiveCandidate) -> bool:
    b2 = cand.beta_square(d)
    return (
        cand.is_primitive
        and b2 < 0
        and (2 * cand.m) % b2 == 0
        and (2 * d) % b2 == 0
        and b2 not in (-2, -2 * d)
    )


def _closed_form_ratio(d: int, cand: ReflectiveCandidate) -> int:
    b2 = cand.beta_square(d)
    if b2 >= 0 or (2 * d) % b2:
        raise ValueError(f"beta^2 = {b2} must be negative and divide 2d = {2 * d}")
    return (2 * d) // b2 * cand.alpha**2


def multiplier_of(d: int, cand: ReflectiveCandidate) -> DiscMultiplier:
    """Action of ``r_beta`` on ``A``: ``1 + 4 d alpha^2 / beta^2 (mod 2d)``."""
    _check_d(d)
    return DiscMultiplier(d, 1 + 2 * _closed_form_ratio(d, cand))


def is_nontrivial_in_G(d: int, cand: ReflectiveCandidate) -> bool:
    """Both ``x != 0`` and ``1 + x != 0 (mod d)`` for ``x = (2d/beta^2) alpha^2``."""
    _check_d(d)
    x = _closed_form_ratio(d, cand)
    return x % d != 0 and (1 + x) % d != 0


def orbit_invariant(d: int, cand: ReflectiveCandidate) -> HeegnerInvariant:
    _check_d(d)
    if not cand.is_primitive:
        raise ValueError(f"{cand} is not primitive")
    b2 = cand.beta_square(d)
    if b2 >= 0:
        raise ValueError(f"beta^2 = {b2} is not negative")
    N = 2 * d
    div = math.gcd(N * cand.alpha, cand.m)
    t = (N * cand.alpha // div) % N
    return HeegnerInvariant(d, -b2, div, min(t, N - t))


# -- norms and candidate labels ----------------------------------------------

def admissible_norms(d: int) -> list[int]:
    """Even ``n | 2d`` with ``n`` not in ``{2, 2d}``."""
    _check_d(d)
    N = 2 * d
    return [n for n in range(4, N, 2) if N % n == 0]


def _check_norm(d: int, n: int):
    _check_d(d)
    if n not in admissible_norms(d):
        raise ValueError(f"n = {n} is not an even divisor of {2 * d} outside {{2, {2 * d}}}")


def exists_fixed_class_with_norm(d: int, n: int) -> bool:
    """Whether ``(2d/n) alpha^2 = 1 (mod n/2)`` has a solution."""
    _check_norm(d, n)
    e, c = n // 2, 2 * d // n
    return any((c * a * a - 1) % e == 0 for a in range(e))


def candidate_invariants(d: int, n: int) -> list[HeegnerInvariant]:
    """Labels with norm ``n`` permitted by order, compatibility and integrality."""
    _check_norm(d, n)
    N = 2 * d
    out = []
    for t in range(d + 1):
        div = N // math.gcd(t, N)
        if (2 * div) % n:
            continue
        if (Fraction(t * t, N) - Fraction(n, div * div)) % 2:
            continue
        out.append(HeegnerInvariant(d, n, div, t))
    return out


def realized_classes(d: int, n: int) -> dict[HeegnerInvariant, set[GroupElementG]]:
    """Labels of norm ``n`` realized with ``alpha in [0, 2d)`` and ``mu in [1, 2d]``.

    With ``m = (n/2) mu`` and ``jsq = 2w`` the norm equation reads
    ``(2d/n) alpha^2 = 1 + (n/2) mu^2 w``; ``w`` is solved for exactly.
    """
    out: dict[HeegnerInvariant, set[GroupElementG]] = {}
    for cand in _realizations(d, n):
        out.setdefault(orbit_invariant(d, cand), set()).add(multiplier_of(d, cand).element)
    return out


def _realizations(d: int, n: int):
    _check_norm(d, n)
    e, c = n // 2, 2 * d // n
    for alpha, mu in kernels.realization_pairs(d, n):
        w = (c * alpha * alpha - 1) // (e * mu * mu)
        cand = ReflectiveCandidate(alpha, e * mu, 2 * w)
        if in_refl_set(d, cand) and is_nontrivial_in_G(d, cand):
            yield cand


def representative(d: int, inv: HeegnerInvariant) -> ReflectiveCandidate:
    """A reflective vector carrying the label ``inv`` (smallest alpha, then mu)."""
    if inv.d != d:
        raise ValueError(f"{inv} is a label for d = {inv.d}")
    for cand in _realizations(d, inv.n):
        if orbit_invariant(d, cand) == inv:
            return cand
    raise ValueError(f"{inv} is not realized by a reflective vector")


# -- reports -----------------------------------------------------------------

@dataclass(frozen=True)
class FixedLocusReport:
    """For each element of G_2d, the divisor classes contained in its fixed locus."""

    d: int
    entries: dict = field(default_factory=dict)

    def pairs(self) -> frozenset:
        return frozenset((inv, g) for g, invs in self.entries.items() for inv in invs)

    def classes(self) -> list[HeegnerInvariant]:
        return sorted((inv for invs in self.entries.values() for inv in invs),
                      key=lambda i: i.sort_key)

    @property
    def is_empty(self) -> bool:
        return not any(self.entries.values())

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "entries": [
                {"rep": g.rep, "fixed": [inv.to_dict() for inv in invs]}
                for g, invs in sorted(self.entries.items())
                if not g.is_identity
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "FixedLocusReport":
        d = int(data["d"])
        entries = {GroupElementG(d, 1): ()}
        for row in data["entries"]:
            entries[GroupElementG(d, int(row["rep"]))] = tuple(
                HeegnerInvariant.from_dict(d, x) for x in row["fixed"]
            )
        return cls(d, entries)


class IllDefinedAssignment(RuntimeError):
    """One divisor label was realized by reflections in different classes of G_2d."""


def classify_fixed_divisors(d: int) -> FixedLocusReport:
    _check_d(d)
    fixed: dict[GroupElementG, list[HeegnerInvariant]] = {g: [] for g in group_elements(d)}
    for n in admissible_norms(d):
        realized = realized_classes(d, n)
        for inv in candidate_invariants(d, n):
            owners = realized.pop(inv, None)
            if not owners:
                continue
            if len(owners) > 1:
                raise IllDefinedAssignment(f"{inv} realized by {sorted(owners)}")
            (g,) = owners
            fixed[g].append(inv)
        if realized:
            raise RuntimeError(f"realized labels outside the candidate list: {sorted(realized)}")
    entries = {g: tuple(sorted(v, key=lambda i: i.sort_key)) for g, v in fixed.items()}
    return FixedLocusReport(d, entries)


def brute_force_classify(d: int, bound: int | None = None) -> frozenset:
    """Pairs ``(label, element)`` found among lattice vectors with coordinates in a box.

    Vectors ``(alpha; a, b; c, e)`` of ``<-2d> + U + U`` with every coordinate in
    ``[-bound, bound]`` (default ``bound = 2d``). The kernel only visits vectors
    that can pass :func:`in_refl_set`: squares ``-n`` for admissible ``n``, and
    ``n/2`` dividing every coordinate of ``j``. Only ``alpha >= 0`` is visited,
    since ``beta`` and ``-beta`` carry the same label and reflection.
    """
    _check_d(d)
    if bound is None:
        bound = 2 * d
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    found = set()
    for n in admissible_norms(d):
        e, c = n // 2, 2 * d // n
        for alpha, g in kernels.oracle_hits(d, n, bound):
            W = (c * alpha * alpha - 1) // e
            cand = ReflectiveCandidate(alpha, e * g, 2 * W // (g * g))
            assert cand.beta_square(d) == -n
            if cand.is_primitive and in_refl_set(d, cand) and is_nontrivial_in_G(d, cand):
                found.add((orbit_invariant(d, cand), multiplier_of(d, cand).element))
    return frozenset(found)


# -- Neron-Severi lattice of the generic point -------------------------------

def ns_gram_generic(d: int, cand: ReflectiveCandidate):
    """Gram matrix of the primitive closure of ``<h, beta>`` in the K3 lattice."""
    _check_d(d)
    if not in_refl_set(d, cand):
        raise ValueError(f"{cand} is not a reflective vector for d = {d}")
    h = polarization_vector(d)
    beta = l2d_to_lambda(d, cand.vector(d))
    return saturate_pair(k3_lattice(), h, beta)
