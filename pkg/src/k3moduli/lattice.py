"""Exact integer lattices given by Gram matrices.

Everything here works on Python ints and ``fractions.Fraction``; no floating
point is involved. Vectors are plain integer tuples in the lattice's basis.

Basis conventions
-----------------
``U``         hyperbolic plane, basis (e, f) with e.e = f.f = 0, e.f = 1.
``E8_MINUS``  negative of the E8 Cartan matrix, Bourbaki node order
              1..8 with edges 1-3, 3-4, 2-4, 4-5, 5-6, 6-7, 7-8.
``LAMBDA``    U + U + U + E8(-1) + E8(-1)  (rank 22).
``L2D(d)``    <k> + U + U + E8(-1) + E8(-1) with k.k = -2d, k first  (rank 21).

The polarization ``h`` of square 2d sits in LAMBDA as ``e1 + d f1``; then
``k = e1 - d f1`` and the orthogonal complement of ``h`` is identified with
L2D(d) by sending the remaining 20 basis vectors to themselves
(see :func:`l2d_to_lambda`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .snf import _snf, identity, matmul, saturation_basis, transpose

_E8_EDGES = [(0, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7)]


def _e8_minus_gram():
    G = [[0] * 8 for _ in range(8)]
    for i in range(8):
        G[i][i] = -2
    for i, j in _E8_EDGES:
        G[i][j] = G[j][i] = 1
    return G


E8_MINUS_GRAM = tuple(tuple(r) for r in _e8_minus_gram())
U_GRAM = ((0, 1), (1, 0))


def determinant(M) -> int:
    """Bareiss fraction-free elimination."""
    A = [list(r) for r in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[-1][-1] if n else 1


def signature(M) -> tuple[int, int]:
    """(positive, negative) inertia of a symmetric matrix by congruence reduction."""
    A = [[Fraction(x) for x in r] for r in M]
    pos = neg = 0
    while A:
        n = len(A)
        k = next((i for i in range(n) if A[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if A[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # x_i <- x_i + x_j makes the (i, i) entry 2 A[i][j] != 0
            for c in range(n):
                A[i][c] += A[j][c]
            for r in range(n):
                A[r][i] += A[r][j]
            k = i
        p = A[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [i for i in range(n) if i != k]
        A = [[A[i][j] - A[i][k] * A[k][j] / p for j in rest] for i in rest]
    return pos, neg


@dataclass(frozen=True)
class GramLattice:
    """Non-degenerate integral lattice with a symmetric Gram matrix."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if n == 0 or any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square and non-empty")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise ValueError("Gram matrix must be symmetric")
        if self.det == 0:
            raise ValueError("Gram matrix is degenerate")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    @cached_property
    def det(self) -> int:
        return determinant(self.gram)

    @cached_property
    def signature(self) -> tuple[int, int]:
        return signature(self.gram)

    def basis_vector(self, i: int) -> tuple[int, ...]:
        return tuple(int(j == i) for j in range(self.rank))

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.gram], separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "GramLattice":
        return cls(tuple(tuple(r) for r in json.loads(text)))


def orthogonal_sum(*lattices: GramLattice) -> GramLattice:
    n = sum(L.rank for L in lattices)
    G = [[0] * n for _ in range(n)]
    off = 0
    for L in lattices:
        for i in range(L.rank):
            for j in range(L.rank):
                G[off + i][off + j] = L.gram[i][j]
        off += L.rank
    return GramLattice(tuple(map(tuple, G)))


def hyperbolic_plane() -> GramLattice:
    return GramLattice(U_GRAM)


def e8_minus() -> GramLattice:
    return GramLattice(E8_MINUS_GRAM)


def rank_one(norm: int) -> GramLattice:
    if norm == 0 or norm % 2:
        raise ValueError(f"rank-one lattice needs a nonzero even norm, got {norm}")
    return GramLattice(((norm,),))


def k3_lattice() -> GramLattice:
    U, E = hyperbolic_plane(), e8_minus()
    return orthogonal_sum(U, U, U, E, E)


def l2d(d: int) -> GramLattice:
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    U, E = hyperbolic_plane(), e8_minus()
    return orthogonal_sum(rank_one(-2 * d), U, U, E, E)


def build_standard(name: str, param: int | None = None) -> GramLattice:
    """Construct one of ``U``, ``E8_MINUS``, ``RANK1`` (norm), ``LAMBDA``, ``L2D`` (d)."""
    key = name.upper()
    if key == "U":
        return hyperbolic_plane()
    if key in ("E8_MINUS", "E8"):
        return e8_minus()
    if key == "LAMBDA":
        return k3_lattice()
    if key == "RANK1":
        if param is None:
            raise ValueError("RANK1 needs its norm")
        return rank_one(param)
    if key == "L2D":
        if param is None:
            raise ValueError("L2D needs d")
        return l2d(param)
    raise ValueError(f"unknown standard lattice {name!r}")


# -- vectors -----------------------------------------------------------------

def _check_vec(L: GramLattice, v) -> tuple[int, ...]:
    v = tuple(int(x) for x in v)
    if len(v) != L.rank:
        raise ValueError(f"vector of length {len(v)} in a rank-{L.rank} lattice")
    return v


def _check_nonzero(L: GramLattice, v) -> tuple[int, ...]:
    v = _check_vec(L, v)
    if not any(v):
        raise ValueError("zero vector")
    return v


def gram_times(L: GramLattice, v) -> tuple[int, ...]:
    v = _check_vec(L, v)
    return tuple(sum(g * x for g, x in zip(row, v)) for row in L.gram)


def inner(L: GramLattice, v, w) -> int:
    w = _check_vec(L, w)
    return sum(a * b for a, b in zip(gram_times(L, v), w))


def content(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def is_primitive(L: GramLattice, v) -> bool:
    return content(_check_nonzero(L, v)) == 1


def divisibility(L: GramLattice, v) -> int:
    """Positive generator of the ideal ``v . L``."""
    return content(gram_times(L, _check_nonzero(L, v)))


# -- discriminant group ------------------------------------------------------

@dataclass(frozen=True)
class DiscriminantGroup:
    """``L^v / L`` as a product of cyclic groups with its discriminant form.

    ``generators[i]`` is a lift to ``L (x) Q`` (coordinates in the lattice basis)
    of a generator of the i-th cyclic factor. ``q_values`` live in [0, 2) and
    ``pairing_values`` in [0, 1).
    """

    elementary_divisors: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]
    q_values: tuple[Fraction, ...]
    pairing_values: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        n = 1
        for x in self.elementary_divisors:
            n *= x
        return n

    @property
    def is_cyclic(self) -> bool:
        return len(self.elementary_divisors) <= 1

    def q(self, coeffs) -> Fraction:
        """Discriminant quadratic form of ``sum c_i g_i``, modulo 2."""
        total = Fraction(0)
        for i, ci in enumerate(coeffs):
            total += ci * ci * self.q_values[i]
            for j in range(i + 1, len(coeffs)):
                total += 2 * ci * coeffs[j] * self.pairing_values[i][j]
        return total % 2


def _bilinear(G, x, y) -> Fraction:
    return sum(x[i] * sum(G[i][j] * y[j] for j in range(len(y))) for i in range(len(x)))


def discriminant_group(L: GramLattice) -> DiscriminantGroup:
    """Invariants of ``L^v/L`` from the Smith form ``P G Q = D``.

    The columns ``Q e_i / d_i`` lie in ``L^v`` because ``G Q e_i = P^-1 D e_i``;
    they generate the cyclic factors of order ``d_i`` (unit factors dropped).
    """
    G = L.gram
    D, _, Q, _ = _snf(G)
    n = L.rank
    gens, divs = [], []
    for i in range(n):
        di = D[i][i]
        if di == 0:
            raise ValueError("degenerate Gram matrix")
        if di > 1:
            divs.append(di)
            gens.append(tuple(Fraction(Q[r][i], di) for r in range(n)))
    qv = tuple(_bilinear(G, g, g) % 2 for g in gens)
    pair = tuple(tuple(_bilinear(G, g, h) % 1 for h in gens) for g in gens)
    return DiscriminantGroup(tuple(divs), tuple(gens), qv, pair)


# -- isometries --------------------------------------------------------------

class NonIntegralReflection(ArithmeticError):
    """The reflection in a vector does not preserve the lattice."""


@dataclass(frozen=True)
class Isometry:
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(int(x) for x in r) for r in self.matrix))

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(matmul(self.matrix, other.matrix))

    def apply(self, v) -> tuple[int, ...]:
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.matrix)

    @property
    def det(self) -> int:
        return determinant(self.matrix)

    @classmethod
    def identity(cls, n: int) -> "Isometry":
        return cls(identity(n))


def is_isometry(L: GramLattice, F) -> bool:
    M = F.matrix if isinstance(F, Isometry) else F
    if len(M) != L.rank or any(len(r) != L.rank for r in M):
        return False
    G = [list(r) for r in L.gram]
    if matmul(matmul(transpose(M), G), M) != G:
        return False
    return abs(determinant(M)) == 1


def reflection(L: GramLattice, beta) -> Isometry:
    """Matrix of ``x -> x - 2 (x.beta)/beta^2 beta`` in the lattice basis."""
    beta = _check_nonzero(L, beta)
    Gb = gram_times(L, beta)
    b2 = sum(a * b for a, b in zip(Gb, beta))
    if b2 == 0:
        raise ValueError("cannot reflect in an isotropic vector")
    n = L.rank
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            num = 2 * beta[i] * Gb[j]
            if num % b2:
                raise NonIntegralReflection(
                    f"beta^2 = {b2} does not divide 2 (x.beta) beta for all x"
                )
            row.append(int(i == j) - num // b2)
        rows.append(tuple(row))
    return Isometry(tuple(rows))


# -- sublattices -------------------------------------------------------------

def saturate_pair(L: GramLattice, v, w) -> tuple[tuple[int, int], tuple[int, int]]:
    """Gram matrix of ``(Qv + Qw) ∩ L`` in an integral basis."""
    basis, _ = saturated_basis(L, v, w)
    return tuple(tuple(inner(L, x, y) for y in basis) for x in basis)


def saturated_basis(L: GramLattice, v, w):
    """Basis of the saturation of ``<v, w>`` and the index of ``<v, w>`` in it."""
    v, w = _check_vec(L, v), _check_vec(L, w)
    try:
        basis, index = saturation_basis([list(v), list(w)])
    except (ValueError, IndexError):
        raise ValueError("vectors are linearly dependent") from None
    return [tuple(b) for b in basis], index


# -- the polarized K3 model --------------------------------------------------

def polarization_vector(d: int) -> tuple[int, ...]:
    """``h = e1 + d f1`` in LAMBDA coordinates."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    return (1, d) + (0,) * 20


def l2d_to_lambda(d: int, v) -> tuple[int, ...]:
    """Image in LAMBDA of a vector of L2D(d) (first coordinate along k = e1 - d f1)."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    v = tuple(int(x) for x in v)
    if len(v) != 21:
        raise ValueError("L2D vectors have 21 coordinates")
    return (v[0], -d * v[0]) + v[1:]
