# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; see ``_kernels_py`` for the reference versions."""


cdef long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef long long _abs(long long a) nogil:
    return -a if a < 0 else a


def unit_square_roots(long long d):
    cdef long long N = 2 * d, M = 4 * d, a, one = 1 % M
    out = []
    for a in range(1, N):
        if (a * a) % M == one:
            out.append(a)
    return out


def realization_pairs(long long d, long long n):
    cdef long long N = 2 * d, e = n // 2, c = N // n
    cdef long long alpha, v, u, mu, sq
    out = []
    for alpha in range(N):
        v = c * alpha * alpha - 1
        # C remainder keeps the sign of v; only zero matters here
        if v % e != 0:
            continue
        u = _abs(v // e)
        for mu in range(1, N + 1):
            sq = mu * mu
            if u != 0 and sq > u:
                break
            if u % sq == 0:
                out.append((alpha, mu))
    return out


cdef bint _has_primitive_solution(long long T, long long S) nogil:
    cdef long long a, b, c, e, q, g, S2
    if S < 1 or _abs(T) > 2 * S * S:
        return False
    S2 = S * S
    a = S
    while a >= -S:
        b = S
        while b >= -S:
            q = T - a * b
            if q == 0:
                return True
            if _abs(q) <= S2:
                g = _gcd(a, b)
                for c in range(1, S + 1):
                    if q % c == 0:
                        e = q // c
                        if -S <= e <= S and _gcd(g, _gcd(c, e)) == 1:
                            return True
            b -= 1
        a -= 1
    return False


def has_primitive_solution(long long T, long long S):
    return bool(_has_primitive_solution(T, S))


def oracle_hits(long long d, long long n, long long bound):
    cdef long long e = n // 2, c = 2 * d // n, R = bound // e
    cdef long long alpha, v, W, g, g2
    cdef bint hit
    out = []
    for alpha in range(bound + 1):
        v = c * alpha * alpha - 1
        if v % e != 0:
            continue
        W = v // e
        if _abs(W) > 2 * R * R:
            continue
        for g in range(1, R + 1):
            g2 = g * g
            if W % g2 != 0:
                continue
            with nogil:
                hit = _has_primitive_solution(W // g2, R // g)
            if hit:
                out.append((alpha, g))
    return out
