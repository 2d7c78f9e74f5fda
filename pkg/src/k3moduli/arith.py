"""Small integer helpers: factorization, prime counts, CRT."""

from math import gcd


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n``, ascending (trial division)."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        primes.append(n)
    return primes


def p_of(d: int) -> int:
    """Number of distinct primes dividing ``d``, with the convention p(1) = 1."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if d == 1:
        return 1
    return len(prime_factors(d))


def is_prime_power(n: int) -> bool:
    return n > 1 and len(prime_factors(n)) == 1


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def crt(residues, moduli) -> tuple[int, int]:
    """Combine ``x = r_i (mod m_i)`` for moduli that need not be coprime.

    Returns ``(x, lcm)`` with ``0 <= x < lcm``. Raises ``ValueError`` when the
    system is inconsistent.
    """
    x, mod = 0, 1
    for r, m in zip(residues, moduli):
        if m < 1:
            raise ValueError(f"moduli must be positive, got {m}")
        g = gcd(mod, m)
        if (r - x) % g:
            raise ValueError(f"inconsistent congruences modulo {mod} and {m}")
        step = (r - x) // g * pow(mod // g, -1, m // g) if m // g > 1 else 0
        x += mod * step
        mod = mod // g * m
        x %= mod
    return x, mod
