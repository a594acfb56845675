# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel lane; mirrors supercong.kernels.pyref exactly.

Moduli stay below 2^60 (p < 2^20, e <= 3), so every product fits an
unsigned 128-bit intermediate.
"""

from array import array

from cpython.array cimport array as carray

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef long long i64
ctypedef unsigned long long u64

BACKEND = "c"

KIND_C3 = 1
KIND_C236 = 2
KIND_C223 = 3
KIND_C224 = 4
KIND_C2 = 5

SEQ_A = 1
SEQ_LITTLE_A = 2
SEQ_B = 3


cdef inline u64 mulmod(u64 a, u64 b, u64 m) noexcept:
    return <u64>((<u128>a * b) % m)


cdef inline u64 upow(u64 base, int e) noexcept:
    cdef u64 r = base
    cdef int i
    for i in range(e - 1):
        r *= base
    return r


cdef u64 _inv_mod(u64 a, u64 m) except? 0:
    cdef i64 g = <i64>(a % m), x = <i64>m
    cdef i64 x0 = 1, x1 = 0, q, t
    while x:
        q = g / x
        t = g - q * x
        g = x
        x = t
        t = x0 - q * x1
        x0 = x1
        x1 = t
    if g != 1:
        raise ValueError(f"{a} not invertible mod {m}")
    return <u64>((x0 % <i64>m + <i64>m) % <i64>m)


def inv_mod(a, m):
    """Inverse of a mod m (extended Euclid); a must be coprime to m."""
    return _inv_mod(a % m, m)


def fact_vu(p, e):
    """Factorial table n! = unit * p^val for n = 0 .. 6(p-1); see pyref."""
    cdef u64 cp = p, pe = upow(cp, e)
    cdef Py_ssize_t n_max = 6 * (p - 1), n
    cdef carray vals = array("q", [0]) * (n_max + 1)
    cdef carray units = array("q", [0]) * (n_max + 1)
    cdef carray iunits = array("q", [0]) * (n_max + 1)
    cdef carray pref = array("q", [0]) * (n_max + 1)
    cdef i64* vd = vals.data.as_longlongs
    cdef i64* ud = units.data.as_longlongs
    cdef i64* iud = iunits.data.as_longlongs
    cdef i64* pd = pref.data.as_longlongs

    cdef u64 v = 0, u = 1, m, run = 1, inv_run, prev
    ud[0] = 1
    for n in range(1, n_max + 1):
        m = <u64>n
        while m % cp == 0:
            m = m / cp
            v += 1
        u = mulmod(u, m % pe, pe)
        vd[n] = <i64>v
        ud[n] = <i64>u

    for n in range(n_max + 1):
        run = mulmod(run, <u64>ud[n], pe)
        pd[n] = <i64>run
    inv_run = _inv_mod(run, pe)
    for n in range(n_max, -1, -1):
        prev = <u64>pd[n - 1] if n else 1
        iud[n] = <i64>mulmod(inv_run, prev, pe)
        inv_run = mulmod(inv_run, <u64>ud[n], pe)
    return vals, units, iunits


def coeff_resid(kind, kmax, p, e, fv, fu, fiu):
    """Residues mod p^e of a binomial-product coefficient for k = 0 .. kmax."""
    cdef int ckind = kind, ce = e
    cdef u64 cp = p, pe = upow(cp, ce)
    cdef Py_ssize_t ckmax = kmax, k
    cdef i64[:] vv = fv
    cdef i64[:] uu = fu
    cdef i64[:] iu = fiu
    cdef carray out = array("q", [0]) * (ckmax + 1)
    cdef i64* od = out.data.as_longlongs
    cdef u64 pw[4]
    cdef int i
    pw[0] = 1 % pe
    for i in range(1, 4):
        pw[i] = mulmod(pw[i - 1], cp % pe, pe) if i < ce else 0

    cdef i64 v, v2
    cdef u64 u, u2
    for k in range(ckmax + 1):
        if ckind == 1:  # C3
            v = vv[2 * k] - 2 * vv[k]
            u = mulmod(mulmod(<u64>uu[2 * k], <u64>iu[k], pe), <u64>iu[k], pe)
            v = 3 * v
            u = mulmod(mulmod(u, u, pe), u, pe)
        elif ckind == 2:  # C236
            v = vv[2 * k] - 2 * vv[k]
            u = mulmod(mulmod(<u64>uu[2 * k], <u64>iu[k], pe), <u64>iu[k], pe)
            v2 = vv[3 * k] - vv[k] - vv[2 * k]
            u2 = mulmod(mulmod(<u64>uu[3 * k], <u64>iu[k], pe), <u64>iu[2 * k], pe)
            v += v2
            u = mulmod(u, u2, pe)
            v2 = vv[6 * k] - 2 * vv[3 * k]
            u2 = mulmod(mulmod(<u64>uu[6 * k], <u64>iu[3 * k], pe), <u64>iu[3 * k], pe)
            v += v2
            u = mulmod(u, u2, pe)
        elif ckind == 3:  # C223
            v = vv[2 * k] - 2 * vv[k]
            u = mulmod(mulmod(<u64>uu[2 * k], <u64>iu[k], pe), <u64>iu[k], pe)
            v2 = vv[3 * k] - vv[k] - vv[2 * k]
            u2 = mulmod(mulmod(<u64>uu[3 * k], <u64>iu[k], pe), <u64>iu[2 * k], pe)
            v = 2 * v + v2
            u = mulmod(mulmod(u, u, pe), u2, pe)
        elif ckind == 4:  # C224
            v = vv[2 * k] - 2 * vv[k]
            u = mulmod(mulmod(<u64>uu[2 * k], <u64>iu[k], pe), <u64>iu[k], pe)
            v2 = vv[4 * k] - 2 * vv[2 * k]
            u2 = mulmod(mulmod(<u64>uu[4 * k], <u64>iu[2 * k], pe), <u64>iu[2 * k], pe)
            v = 2 * v + v2
            u = mulmod(mulmod(u, u, pe), u2, pe)
        elif ckind == 5:  # C2
            v = vv[2 * k] - 2 * vv[k]
            u = mulmod(mulmod(<u64>uu[2 * k], <u64>iu[k], pe), <u64>iu[k], pe)
        else:
            raise ValueError(f"unknown coefficient kind {kind}")
        od[k] = <i64>mulmod(u, pw[v] if v < ce else 0, pe)
    return out


def seq_rec_mod(which, count, p, e, fu, fiu):
    """A_n / a_n / b_n mod p^e for n < count (count <= p); see pyref."""
    if count > p:
        raise ValueError("recurrence indices must stay below p")
    cdef int cwhich = which
    cdef u64 cp = p, pe = upow(cp, <int>e)
    cdef Py_ssize_t ccount = count, m
    cdef i64[:] uu = fu
    cdef i64[:] iu = fiu
    cdef carray out = array("q", [0]) * max(ccount, 1)
    cdef i64* od = out.data.as_longlongs
    cdef u64 lead, t, t2, cm

    if ccount >= 1:
        od[0] = <i64>(1 % pe)
    if cwhich == 1:  # A
        if ccount >= 2:
            od[1] = <i64>(4 % pe)
        for m in range(ccount - 2):
            cm = <u64>m
            lead = mulmod(<u64>uu[m + 1], <u64>iu[m + 2], pe)
            lead = mulmod(mulmod(lead, lead, pe), lead, pe)
            t = mulmod((2 * (2 * cm + 3)) % pe, (5 * cm * cm + 15 * cm + 12) % pe, pe)
            t = mulmod(t, <u64>od[m + 1], pe)
            t2 = mulmod((64 * (cm + 1) * (cm + 1)) % pe, (cm + 1) % pe, pe)
            t2 = mulmod(t2, <u64>od[m], pe)
            t = (t + pe - t2) % pe
            od[m + 2] = <i64>mulmod(t, lead, pe)
    elif cwhich == 2:  # a
        if ccount >= 2:
            od[1] = <i64>(3 % pe)
        for m in range(ccount - 2):
            cm = <u64>m
            lead = mulmod(<u64>uu[m + 1], <u64>iu[m + 2], pe)
            lead = mulmod(lead, lead, pe)
            t = mulmod((10 * cm * cm + 30 * cm + 23) % pe, <u64>od[m + 1], pe)
            t2 = mulmod((9 * (cm + 1) * (cm + 1)) % pe, <u64>od[m], pe)
            t = (t + pe - t2) % pe
            od[m + 2] = <i64>mulmod(t, lead, pe)
    elif cwhich == 3:  # b
        if ccount >= 2:
            od[1] = <i64>((pe - 3) % pe)
        for m in range(ccount - 2):
            cm = <u64>m
            lead = mulmod(<u64>uu[m + 1], <u64>iu[m + 2], pe)
            lead = mulmod(mulmod(lead, lead, pe), lead, pe)
            t = mulmod((2 * cm + 3) % pe, (7 * cm * cm + 21 * cm + 17) % pe, pe)
            t = mulmod(t, <u64>od[m + 1], pe)
            t2 = mulmod((81 * (cm + 1) * (cm + 1)) % pe, (cm + 1) % pe, pe)
            t2 = mulmod(t2, <u64>od[m], pe)
            t = (2 * pe - t - t2) % pe
            od[m + 2] = <i64>mulmod(t, lead, pe)
    else:
        raise ValueError(f"unknown sequence code {which}")
    return out


def dsum_mod(p, e):
    """sum_{n<p} sum_k C(n,k)^4 mod p^e by Pascal-row updates."""
    cdef u64 cp = p, pe = upow(cp, <int>e)
    cdef Py_ssize_t n, k, np_ = p
    cdef carray rowa = array("q", [0]) * np_
    cdef i64* row = rowa.data.as_longlongs
    cdef u64 total = 1 % pe, s, r
    row[0] = 1
    for n in range(1, np_):
        for k in range(n, 0, -1):
            row[k] = <i64>((<u64>row[k] + <u64>row[k - 1]) % pe)
        s = 0
        for k in range(n + 1):
            r = mulmod(<u64>row[k], <u64>row[k], pe)
            s = (s + mulmod(r, r, pe)) % pe
        total = (total + s) % pe
    return total


def powersum(vals, kmax, z, pe):
    """sum_{k=0}^{kmax} vals[k] * z^k mod pe (Horner)."""
    cdef i64[:] vv = vals
    cdef u64 cpe = pe, cz = z % pe
    cdef u64 acc = 0
    cdef Py_ssize_t k
    for k in range(kmax, -1, -1):
        acc = (mulmod(acc, cz, cpe) + <u64>vv[k]) % cpe
    return acc


def mul_arrays(x, y, pe):
    """Elementwise product mod pe."""
    cdef i64[:] xv = x
    cdef i64[:] yv = y
    cdef u64 cpe = pe
    cdef Py_ssize_t n = xv.shape[0], i
    cdef carray out = array("q", [0]) * n
    cdef i64* od = out.data.as_longlongs
    for i in range(n):
        od[i] = <i64>mulmod(<u64>xv[i], <u64>yv[i], cpe)
    return out


def chi_table(p):
    """Quadratic-character lookup table: byte r holds chi(r) + 1."""
    cdef u64 cp = p
    cdef bytearray tab = bytearray(p)
    cdef unsigned char[:] td = tab
    cdef u64 x
    td[0] = 1
    for x in range(1, (cp - 1) // 2 + 1):
        td[x * x % cp] = 2
    return bytes(tab)


def char_sum(p, chi, a, b):
    """sum_{x=0}^{p-1} chi(x^3 + a*x + b) using a chi_table."""
    cdef u64 cp = p
    cdef const unsigned char[:] tab = chi
    cdef u64 ca = a % cp, cb = b % cp
    cdef i64 s = 0
    cdef u64 x
    for x in range(cp):
        s += tab[(x * x % cp * x + ca * x + cb) % cp]
    return s - <i64>cp
