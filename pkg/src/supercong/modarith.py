"""Exact modular arithmetic over prime-power moduli up to p^3.

Provides the prime context shared by every congruence check, Legendre/Jacobi
symbols (two independent implementations), Tonelli-Shanks square roots, prime
generation, and brute-force representation of small integers by binary
quadratic forms a*x^2 + b*y^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

PRIME_BOUND = 1 << 20  # keeps p^3 < 2^60 so products fit 128-bit intermediates

# witnesses making Miller-Rabin deterministic for all n < 3.3 * 10^24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NotInvertible(ValueError):
    """gcd(a, modulus) > 1: the inverse does not exist."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 64-bit integers."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], by a segmented sieve."""
    if hi < 2 or hi < lo:
        return []
    lo = max(lo, 2)
    root = math.isqrt(hi)
    base = bytearray([1]) * (root + 2)
    base[:2] = b"\x00\x00"
    for i in range(2, math.isqrt(root) + 1):
        if base[i]:
            base[i * i : root + 1 : i] = bytearray(len(range(i * i, root + 1, i)))
    base_primes = [i for i in range(2, root + 1) if base[i]]

    out = []
    seg_size = max(root, 1 << 16)
    for start in range(lo, hi + 1, seg_size):
        end = min(start + seg_size - 1, hi)
        seg = bytearray([1]) * (end - start + 1)
        for q in base_primes:
            first = max(q * q, (start + q - 1) // q * q)
            seg[first - start :: q] = bytearray(len(range(first, end + 1, q)))
        out.extend(start + i for i, v in enumerate(seg) if v)
    return out


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base^exp mod modulus by square-and-multiply (exp >= 0)."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    return pow(base, exp, modulus)


def mod_inv(a: int, modulus: int) -> int:
    """Inverse of a mod modulus via extended Euclid.

    Raises NotInvertible when gcd(a, modulus) > 1; callers treat that as a
    skipped statement instance (denominator divisible by p).
    """
    a %= modulus
    g, x = _xgcd(a, modulus)
    if g != 1:
        raise NotInvertible(f"{a} not invertible mod {modulus} (gcd {g})")
    return x % modulus


def _xgcd(a: int, b: int) -> tuple[int, int]:
    # returns (g, x) with a*x = g (mod b)
    x0, x1 = 1, 0
    a0, b0 = a, b
    while b0:
        q = a0 // b0
        a0, b0 = b0, a0 - q * b0
        x0, x1 = x1, x0 - q * x1
    return a0, x0


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1}, by the reciprocity (Jacobi) algorithm."""
    return _jacobi(a % p, p)


def legendre_symbol_euler(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion a^((p-1)/2); independent twin of
    legendre_symbol, kept for cross-checking."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _jacobi(a: int, n: int) -> int:
    # n odd positive
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def sqrt_mod(a: int, p: int) -> int | None:
    """Square root of a mod an odd prime p, or None for a non-residue.

    Returns the root in [0, p/2] for determinism (Tonelli-Shanks, with the
    p = 3 mod 4 shortcut).
    """
    a %= p
    if a == 0:
        return 0
    if legendre_symbol(a, p) == -1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while legendre_symbol(z, p) != -1:
            z += 1
        c = pow(z, q, p)
        r = pow(a, (q + 1) // 2, p)
        t = pow(a, q, p)
        m = s
        while t != 1:
            t2i = t
            i = 0
            for i in range(1, m):
                t2i = t2i * t2i % p
                if t2i == 1:
                    break
            b = pow(c, 1 << (m - i - 1), p)
            r = r * b % p
            c = b * b % p
            t = t * c % p
            m = i
    assert r * r % p == a
    return min(r, p - r)


@dataclass(frozen=True)
class PrimeCtx:
    """A prime p > 3 with exponent e in {1,2,3}; the environment of every
    mod-p^e computation. Immutable, safe to share across workers."""

    p: int
    e: int = 1
    modulus: int = field(init=False)

    def __post_init__(self):
        if not 3 < self.p < PRIME_BOUND:
            raise ValueError(f"p must satisfy 3 < p < 2^20, got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.e not in (1, 2, 3):
            raise ValueError(f"e must be 1, 2 or 3, got {self.e}")
        object.__setattr__(self, "modulus", self.p**self.e)


@dataclass(frozen=True)
class QuadFormWitness:
    """Nonnegative (x, y) with a*x^2 + b*y^2 = target, target in {p, 2p}."""

    a: int
    b: int
    x: int
    y: int
    target: int

    def __post_init__(self):
        if self.a * self.x**2 + self.b * self.y**2 != self.target:
            raise ValueError("witness does not satisfy the form equation")


def represent(target: int, a: int, b: int) -> QuadFormWitness | None:
    """Solve a*x^2 + b*y^2 = target over nonnegative integers by brute force.

    Scans y upward, so the returned witness has the smallest y among all
    solutions (with x >= 0); returns None when no representation exists.
    Brute force is its own oracle at desk scale (target < 2 * 10^6).
    """
    y = 0
    while b * y * y <= target:
        rem = target - b * y * y
        if rem % a == 0:
            x = math.isqrt(rem // a)
            if a * x * x == rem:
                return QuadFormWitness(a, b, x, y, target)
        y += 1
    return None
