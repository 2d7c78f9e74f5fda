"""Pure-Python versions of the hot loops (same contract as ``_kernels.pyx``)."""

from math import gcd


def unit_square_roots(d):
    N, M = 2 * d, 4 * d
    return [a for a in range(1, N) if (a * a) % M == 1 % M]


def realization_pairs(d, n):
    """Pairs ``(alpha, mu)``, ``0 <= alpha < 2d``, ``1 <= mu <= 2d``, with
    ``(n/2) mu^2 | (2d/n) alpha^2 - 1``."""
    N = 2 * d
    e, c = n // 2, N // n
    out = []
    for alpha in range(N):
        v = c * alpha * alpha - 1
        if v % e:
            continue
        u = abs(v // e)
        for mu in range(1, N + 1):
            sq = mu * mu
            if u and sq > u:
                break
            if u % sq == 0:
                out.append((alpha, mu))
    return out


def has_primitive_solution(T, S):
    """Is there a primitive ``(a, b, c, e)`` in ``[-S, S]^4`` with ``ab + ce = T``?"""
    if S < 1 or abs(T) > 2 * S * S:
        return False
    S2 = S * S
    for a in range(S, -S - 1, -1):
        for b in range(S, -S - 1, -1):
            q = T - a * b
            if q == 0:
                return True  # (a, b, 0, 1)
            if abs(q) > S2:
                continue
            g = gcd(a, b)
            for c in range(1, S + 1):
                if q % c == 0:
                    e = q // c
                    if -S <= e <= S and gcd(g, gcd(c, e)) == 1:
                        return True
    return False


def oracle_hits(d, n, bound):
    """Box search in <-2d> + U + U for vectors of square ``-n``.

    Vectors ``(alpha; j)`` with every coordinate in ``[-bound, bound]``,
    ``alpha >= 0`` and ``n/2`` dividing all coordinates of ``j``. Returns the
    distinct pairs ``(alpha, g)`` where ``g`` is the content of ``j / (n/2)``.
    """
    e = n // 2
    c = 2 * d // n
    R = bound // e
    out = []
    for alpha in range(bound + 1):
        v = c * alpha * alpha - 1
        if v % e:
            continue
        W = v // e
        if abs(W) > 2 * R * R:
            continue
        for g in range(1, R + 1):
            if W % (g * g):
                continue
            if has_primitive_solution(W // (g * g), R // g):
                out.append((alpha, g))
    return out
