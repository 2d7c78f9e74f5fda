"""GL2(Z)-equivalence of integral binary quadratic forms.

A Gram matrix ``[[a, b], [b, c]]`` is handled as the form
``(A, B, C) = (a, 2b, c)``, i.e. ``A x^2 + B xy + C y^2`` of discriminant
``B^2 - 4AC = -4 det``. Definite forms are compared by Gauss reduction,
indefinite anisotropic forms by their cycles of reduced forms, and isotropic
forms (square discriminant) through a normal form ``(0, s, C mod s)`` taken
along either isotropic line.
"""

from __future__ import annotations

from math import gcd, isqrt

Form = tuple[int, int, int]


def form_of_gram(G) -> Form:
    (a, b), (b2, c) = G
    if b != b2:
        raise ValueError("Gram matrix must be symmetric")
    return int(a), 2 * int(b), int(c)


def discriminant(f: Form) -> int:
    A, B, C = f
    return B * B - 4 * A * C


def _definite_reduced(f: Form) -> Form:
    A, B, C = f
    while True:
        if A > C:
            A, B, C = C, -B, A
        if abs(B) > A:
            # x -> x - k y with B - 2kA in (-A, A]
            k = -((A - B) // (2 * A))
            B, C = B - 2 * k * A, C - k * B + k * k * A
            continue
        if A > C:
            continue
        break
    # GL2 allows (A, B, C) -> (A, -B, C)
    return A, abs(B), C


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _eval(f: Form, x: int, y: int) -> int:
    A, B, C = f
    return A * x * x + B * x * y + C * y * y


def _isotropic_lines(f: Form, s: int):
    A, B, C = f
    if A == 0:
        cand = [(1, 0), (-C, B)]
    else:
        cand = [(-B + s, 2 * A), (-B - s, 2 * A)]
    lines = []
    for x, y in cand:
        g = gcd(x, y)
        lines.append((x // g, y // g))
    return lines


def _isotropic_invariant(f: Form) -> tuple[int, int]:
    s = isqrt(discriminant(f))
    best = None
    for p, q in _isotropic_lines(f, s):
        # complete (p, q) to a unimodular basis: p v - q u = 1
        g, x0, y0 = _ext_gcd(p, q)
        u, v = -y0, x0
        assert p * v - q * u == 1
        Bp = 2 * f[0] * p * u + f[1] * (p * v + q * u) + 2 * f[2] * q * v
        Cp = _eval(f, u, v)
        assert _eval(f, p, q) == 0 and abs(Bp) == s
        key = (s, Cp % s)
        if best is None or key < best:
            best = key
    return best


def _ext_gcd(a: int, b: int):
    """Return (g, x, y) with a x + b y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _is_reduced_indef(f: Form, D: int, r: int) -> bool:
    A, B, _ = f
    # |sqrt D - 2|A|| < B < sqrt D, in integers since D is not a square
    return 0 < B <= r and B >= r - 2 * abs(A) + 1 and 2 * abs(A) - B <= r


def _rho(f: Form, D: int, r: int) -> Form:
    _, B, C = f
    m = 2 * abs(C)
    if C * C > D:
        b = (-B) % m
        if b > abs(C):
            b -= m
    else:
        b = r - ((r + B) % m)
    return C, b, (b * b - D) // (4 * C)


def _reduced_cycle(f: Form) -> frozenset:
    D = discriminant(f)
    r = isqrt(D)
    for _ in range(10_000):
        if _is_reduced_indef(f, D, r):
            break
        f = _rho(f, D, r)
    else:  # pragma: no cover
        raise RuntimeError("reduction did not terminate")
    cycle = [f]
    g = _rho(f, D, r)
    while g != f:
        cycle.append(g)
        g = _rho(g, D, r)
    return frozenset(cycle)


def _reduce_to_reduced(f: Form) -> Form:
    D = discriminant(f)
    r = isqrt(D)
    while not _is_reduced_indef(f, D, r):
        f = _rho(f, D, r)
    return f


def binary_forms_equivalent(G1, G2) -> bool:
    """True iff the two 2x2 Gram matrices are related by a GL2(Z) change of basis."""
    f1, f2 = form_of_gram(G1), form_of_gram(G2)
    D = discriminant(f1)
    if D == 0 or discriminant(f2) == 0:
        raise ValueError("degenerate binary form")
    if D != discriminant(f2):
        return False
    if D < 0:
        if (f1[0] > 0) != (f2[0] > 0):
            return False
        if f1[0] < 0:
            f1 = (-f1[0], -f1[1], -f1[2])
            f2 = (-f2[0], -f2[1], -f2[2])
        return _definite_reduced(f1) == _definite_reduced(f2)
    if _is_square(D):
        return _isotropic_invariant(f1) == _isotropic_invariant(f2)
    r2 = _reduce_to_reduced(f2)
    if r2 in _reduced_cycle(f1):
        return True
    A, B, C = f1
    return r2 in _reduced_cycle((A, -B, C))
