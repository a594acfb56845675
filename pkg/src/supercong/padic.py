"""Valuation-tracked factorials and binomials modulo p^e.

A PadicScaled holds an integer as (p-adic valuation, unit mod p^e), which
lets binomial products like C(2k,k)^3 / m^k be divided exactly even when the
individual binomials are divisible by p. The factorial table covers
n <= 6(p-1), enough for C(6k,3k) at k = p-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .modarith import PrimeCtx


class NegativeValuation(ArithmeticError):
    """Division produced a negative p-adic valuation; malformed term."""


@dataclass(frozen=True, slots=True)
class PadicScaled:
    """Integer as unit * p^val with gcd(unit, p) = 1, or the zero flag."""

    zero: bool
    val: int
    unit: int

    @staticmethod
    def from_int(n: int, ctx: PrimeCtx) -> "PadicScaled":
        if n == 0:
            return PADIC_ZERO
        v = 0
        while n % ctx.p == 0:
            n //= ctx.p
            v += 1
        return PadicScaled(False, v, n % ctx.modulus)


PADIC_ZERO = PadicScaled(True, 0, 0)
PADIC_ONE = PadicScaled(False, 0, 1)


def padic_mul(x: PadicScaled, y: PadicScaled, ctx: PrimeCtx) -> PadicScaled:
    if x.zero or y.zero:
        return PADIC_ZERO
    return PadicScaled(False, x.val + y.val, x.unit * y.unit % ctx.modulus)


def padic_div(x: PadicScaled, y: PadicScaled, ctx: PrimeCtx) -> PadicScaled:
    """x / y; requires val(x) >= val(y), else NegativeValuation (an internal
    bug signal: the truncated sums never produce such terms)."""
    if y.zero:
        raise ZeroDivisionError("division by p-adic zero")
    if x.zero:
        return PADIC_ZERO
    if x.val < y.val:
        raise NegativeValuation(f"valuation {x.val} < {y.val}")
    inv_u = kernels.inv_mod(y.unit, ctx.modulus)
    return PadicScaled(False, x.val - y.val, x.unit * inv_u % ctx.modulus)


def to_residue(x: PadicScaled, ctx: PrimeCtx) -> int:
    """unit * p^val mod p^e; zero when val >= e."""
    if x.zero or x.val >= ctx.e:
        return 0
    return x.unit * ctx.p**x.val % ctx.modulus


class FactTable:
    """Factorials 0! .. (6(p-1))! as (valuation, unit mod p^e).

    Stored as flat arrays (shared with the kernel lanes); indexing yields
    PadicScaled views. Immutable after build, shareable across workers.
    """

    __slots__ = ("ctx", "vals", "units", "iunits")

    def __init__(self, ctx: PrimeCtx, vals, units, iunits):
        self.ctx = ctx
        self.vals = vals
        self.units = units
        self.iunits = iunits

    def __len__(self) -> int:
        return len(self.vals)

    def __getitem__(self, n: int) -> PadicScaled:
        return PadicScaled(False, self.vals[n], self.units[n])


def build_fact_table(ctx: PrimeCtx) -> FactTable:
    """Incremental n! table for n <= 6(p-1): strip factors of p from n,
    multiply the unit, accumulate the valuation. O(p) time and space."""
    vals, units, iunits = kernels.fact_vu(ctx.p, ctx.e)
    return FactTable(ctx, vals, units, iunits)


def binom_padic(n: int, k: int, table: FactTable) -> PadicScaled:
    """C(n,k) as PadicScaled (0 <= k <= n <= 6(p-1))."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    pe = table.ctx.modulus
    v = table.vals[n] - table.vals[k] - table.vals[n - k]
    u = table.units[n] * table.iunits[k] % pe * table.iunits[n - k] % pe
    assert v == _kummer_carries(k, n - k, table.ctx.p)
    return PadicScaled(False, v, u)


def _kummer_carries(a: int, b: int, p: int) -> int:
    # carries when adding a and b in base p equal v_p(C(a+b, a))
    carries = 0
    carry = 0
    while a or b:
        carry = 1 if a % p + b % p + carry >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries
