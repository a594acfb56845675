"""Pure-Python kernel lane.

Reference implementation of the per-prime hot loops: factorial tables with
p-adic valuations stripped out, binomial-product coefficient arrays, sequence
arrays from their three-term recurrences, truncated power sums, and cubic
character sums. The compiled lane in supercong._ckernels mirrors this module
function-for-function; tests assert elementwise parity between the two.

All array arguments and results use array('q') (signed 64-bit), which both
lanes accept; residues stay below 2^60 by the p < 2^20 context bound.
"""

from __future__ import annotations

from array import array

BACKEND = "python"

# coefficient-kind codes shared by both lanes
KIND_C3 = 1  # C(2k,k)^3
KIND_C236 = 2  # C(2k,k) C(3k,k) C(6k,3k)
KIND_C223 = 3  # C(2k,k)^2 C(3k,k)
KIND_C224 = 4  # C(2k,k)^2 C(4k,2k)
KIND_C2 = 5  # C(2k,k)

SEQ_A = 1
SEQ_LITTLE_A = 2
SEQ_B = 3


def inv_mod(a: int, m: int) -> int:
    """Inverse of a mod m (extended Euclid); a must be coprime to m."""
    a %= m
    g, x = a, m
    x0, x1 = 1, 0
    while x:
        q = g // x
        g, x = x, g - q * x
        x0, x1 = x1, x0 - q * x1
    if g != 1:
        raise ValueError(f"{a} not invertible mod {m}")
    return x0 % m


def fact_vu(p: int, e: int):
    """Factorial table n! = unit * p^val for n = 0 .. 6(p-1).

    Returns (vals, units, iunits): valuations, units mod p^e, and inverse
    units mod p^e (batch-inverted, one gcd total).
    """
    pe = p**e
    n_max = 6 * (p - 1)
    vals = array("q", [0]) * (n_max + 1)
    units = array("q", [0]) * (n_max + 1)
    units[0] = 1
    v, u = 0, 1
    for n in range(1, n_max + 1):
        m = n
        while m % p == 0:
            m //= p
            v += 1
        u = u * m % pe
        vals[n] = v
        units[n] = u

    # batch inversion of the unit column
    pref = array("q", [0]) * (n_max + 1)
    run = 1
    for n in range(n_max + 1):
        run = run * units[n] % pe
        pref[n] = run
    iunits = array("q", [0]) * (n_max + 1)
    inv_run = inv_mod(run, pe)
    for n in range(n_max, -1, -1):
        iunits[n] = inv_run * (pref[n - 1] if n else 1) % pe
        inv_run = inv_run * units[n] % pe
    return vals, units, iunits


def coeff_resid(kind: int, kmax: int, p: int, e: int, fv, fu, fiu):
    """Residues mod p^e of a binomial-product coefficient for k = 0 .. kmax.

    Each entry is assembled from factorial-table units and valuations, never
    by a term-to-term ratio recurrence, so division by p cannot occur.
    """
    pe = p**e
    out = array("q", [0]) * (kmax + 1)
    pw = [p**v if v < e else 0 for v in range(e)] + [0]

    def binom_vu(n, k):
        return fv[n] - fv[k] - fv[n - k], fu[n] * fiu[k] % pe * fiu[n - k] % pe

    for k in range(kmax + 1):
        if kind == KIND_C3:
            v1, u1 = binom_vu(2 * k, k)
            v, u = 3 * v1, u1 * u1 % pe * u1 % pe
        elif kind == KIND_C236:
            v1, u1 = binom_vu(2 * k, k)
            v2, u2 = binom_vu(3 * k, k)
            v3, u3 = binom_vu(6 * k, 3 * k)
            v, u = v1 + v2 + v3, u1 * u2 % pe * u3 % pe
        elif kind == KIND_C223:
            v1, u1 = binom_vu(2 * k, k)
            v2, u2 = binom_vu(3 * k, k)
            v, u = 2 * v1 + v2, u1 * u1 % pe * u2 % pe
        elif kind == KIND_C224:
            v1, u1 = binom_vu(2 * k, k)
            v2, u2 = binom_vu(4 * k, 2 * k)
            v, u = 2 * v1 + v2, u1 * u1 % pe * u2 % pe
        elif kind == KIND_C2:
            v, u = binom_vu(2 * k, k)
        else:
            raise ValueError(f"unknown coefficient kind {kind}")
        out[k] = u * (pw[v] if v < e else 0) % pe
    return out


def seq_rec_mod(which: int, count: int, p: int, e: int, fu, fiu):
    """A_n / a_n / b_n mod p^e for n = 0 .. count-1 via three-term recurrences.

    Requires count <= p so every leading coefficient ((n+2)^3 resp. (n+2)^2)
    stays coprime to p. inv(j) for j < p is read off the factorial units.
    """
    if count > p:
        raise ValueError("recurrence indices must stay below p")
    pe = p**e

    def inv_small(j):  # j in [1, p)
        return fu[j - 1] * fiu[j] % pe

    out = array("q", [0]) * count
    if count >= 1:
        out[0] = 1
    if which == SEQ_A:
        if count >= 2:
            out[1] = 4 % pe
        for m in range(count - 2):
            lead = inv_small(m + 2)
            lead = lead * lead % pe * lead % pe
            t = 2 * (2 * m + 3) * (5 * m * m + 15 * m + 12) % pe * out[m + 1] % pe
            t = (t - 64 * (m + 1) ** 3 % pe * out[m] % pe) % pe
            out[m + 2] = t * lead % pe
    elif which == SEQ_LITTLE_A:
        if count >= 2:
            out[1] = 3 % pe
        for n in range(count - 2):
            lead = inv_small(n + 2)
            lead = lead * lead % pe
            t = (10 * n * n + 30 * n + 23) % pe * out[n + 1] % pe
            t = (t - 9 * (n + 1) ** 2 % pe * out[n] % pe) % pe
            out[n + 2] = t * lead % pe
    elif which == SEQ_B:
        if count >= 2:
            out[1] = (-3) % pe
        for m in range(count - 2):
            lead = inv_small(m + 2)
            lead = lead * lead % pe * lead % pe
            t = (2 * m + 3) * (7 * m * m + 21 * m + 17) % pe * out[m + 1] % pe
            t = (-t - 81 * (m + 1) ** 3 % pe * out[m] % pe) % pe
            out[m + 2] = t * lead % pe
    else:
        raise ValueError(f"unknown sequence code {which}")
    return out


def dsum_mod(p: int, e: int) -> int:
    """sum_{n=0}^{p-1} sum_{k=0}^{n} C(n,k)^4 mod p^e, by Pascal-row updates."""
    pe = p**e
    row = [0] * p
    row[0] = 1
    total = 1
    for n in range(1, p):
        for k in range(n, 0, -1):
            row[k] = (row[k] + row[k - 1]) % pe
        s = 0
        for k in range(n + 1):
            r = row[k]
            r = r * r % pe
            s += r * r % pe
        total = (total + s) % pe
    return total


def powersum(vals, kmax: int, z: int, pe: int) -> int:
    """sum_{k=0}^{kmax} vals[k] * z^k mod pe (Horner)."""
    acc = 0
    for k in range(kmax, -1, -1):
        acc = (acc * z + vals[k]) % pe
    return acc


def mul_arrays(x, y, pe: int):
    """Elementwise product mod pe (arrays of equal length)."""
    out = array("q", [0]) * len(x)
    for i in range(len(x)):
        out[i] = x[i] * y[i] % pe
    return out


def chi_table(p: int) -> bytes:
    """Quadratic-character lookup table: byte r holds chi(r) + 1."""
    tab = bytearray(p)
    tab[0] = 1
    for x in range(1, (p - 1) // 2 + 1):
        tab[x * x % p] = 2
    return bytes(tab)


def char_sum(p: int, chi, a: int, b: int) -> int:
    """sum_{x=0}^{p-1} chi(x^3 + a*x + b) using a chi_table."""
    a %= p
    b %= p
    s = 0
    for x in range(p):
        s += chi[(x * x % p * x + a * x + b) % p]
    return s - p
