"""Modular-arithmetic helpers: primality, divisors, multiplicative orders."""

from __future__ import annotations

from .errors import InputError

MAX_PRIME = 2**31  # desk-scale moduli only; trial division stays fast below this


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    """Validate a field characteristic; returns p."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise InputError(f"p must be an integer, got {p!r}")
    if p >= MAX_PRIME:
        raise InputError(f"p must be < 2^31, got {p}")
    if not is_prime(p):
        raise InputError(f"p must be prime, got {p}")
    return p


def divisors(n: int) -> list[int]:
    """All positive divisors of n, in increasing order."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def multiplicative_order(a: int, m: int) -> int | None:
    """Order of a in (Z/mZ)^*, or None if gcd(a, m) != 1.

    m = 1 is the trivial group: every a has order 1.
    """
    if m < 1:
        raise InputError(f"modulus must be positive, got {m}")
    if m == 1:
        return 1
    a %= m
    if _gcd(a, m) != 1:
        return None
    k, x = 1, a
    while x != 1:
        x = (x * a) % m
        k += 1
    return k


def element_of_order(p: int, n: int) -> int | None:
    """Smallest residue in F_p^* of multiplicative order exactly n, or None.

    Exists iff n divides p - 1.
    """
    check_prime(p)
    if n < 1:
        raise InputError(f"order must be positive, got {n}")
    if (p - 1) % n != 0:
        return None
    if n == 1:
        return 1
    for w in range(2, p):
        if multiplicative_order(w, p) == n:
            return w
    return None


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
