"""Pure-Python polynomial kernel.

Polynomials cross the kernel boundary as parallel sequences: packed
monomial keys in strictly decreasing order and matching nonzero
coefficients.  The compiled kernel (`fast`) implements the same
functions with the same semantics; this module is the always-available
fallback and the reference for differential testing.
"""

from __future__ import annotations

from math import gcd

from ..errors import BudgetExceeded, ExponentOverflow
from ..packing import DEG_SHIFT, EXP_LIMIT, UNIT_KEY, mono_divides

NAME = "pure"


def merge_terms(k1, c1, k2, c2, subtract=False):
    """Add (or subtract) two term sequences."""
    out_k = []
    out_c = []
    i = j = 0
    n1 = len(k1)
    n2 = len(k2)
    while i < n1 and j < n2:
        a = k1[i]
        b = k2[j]
        if a > b:
            out_k.append(a)
            out_c.append(c1[i])
            i += 1
        elif a < b:
            out_k.append(b)
            out_c.append(-c2[j] if subtract else c2[j])
            j += 1
        else:
            c = c1[i] - c2[j] if subtract else c1[i] + c2[j]
            if c:
                out_k.append(a)
                out_c.append(c)
            i += 1
            j += 1
    while i < n1:
        out_k.append(k1[i])
        out_c.append(c1[i])
        i += 1
    while j < n2:
        out_k.append(k2[j])
        out_c.append(-c2[j] if subtract else c2[j])
        j += 1
    return out_k, out_c


def scale_terms(k, c, s):
    """Multiply every coefficient by the nonzero scalar s."""
    return list(k), [v * s for v in c]


def term_mul(k, c, mkey, mc):
    """Multiply a term sequence by the single term mc * x^mkey."""
    if not k:
        return [], []
    shift = mkey - UNIT_KEY
    if ((k[0] + shift) >> DEG_SHIFT) > EXP_LIMIT:
        raise ExponentOverflow("monomial product exceeds the degree limit")
    return [a + shift for a in k], [v * mc for v in c]


def mul_terms(k1, c1, k2, c2):
    """Full product of two term sequences."""
    if not k1 or not k2:
        return [], []
    if (k1[0] >> DEG_SHIFT) + (k2[0] >> DEG_SHIFT) > EXP_LIMIT:
        raise ExponentOverflow("polynomial product exceeds the degree limit")
    acc = {}
    get = acc.get
    for i, a in enumerate(k1):
        ca = c1[i]
        base = a - UNIT_KEY
        for j, b in enumerate(k2):
            key = base + b
            v = get(key)
            p = ca * c2[j]
            acc[key] = p if v is None else v + p
    keys = sorted((key for key, v in acc.items() if v), reverse=True)
    return keys, [acc[key] for key in keys]


def normal_form(fk, fc, basis):
    """Unique full remainder of f modulo a list of (keys, coeffs) divisors.

    Exact field arithmetic; divisor choice is first-match in basis
    order, which does not affect the result when the basis is a
    Groebner basis.
    """
    work = dict(zip(fk, fc))
    rem_k = []
    rem_c = []
    leads = [(bk[0], bc[0], bk, bc) for bk, bc in basis if bk]
    while work:
        m = max(work)
        c = work.pop(m)
        for lk, lc, bk, bc in leads:
            if mono_divides(lk, m):
                q = c / lc
                delta = m - lk
                for t in range(1, len(bk)):
                    nk = bk[t] + delta
                    v = work.get(nk)
                    nv = -q * bc[t] if v is None else v - q * bc[t]
                    if nv:
                        work[nk] = nv
                    elif v is not None:
                        del work[nk]
                break
        else:
            rem_k.append(m)
            rem_c.append(c)
    return rem_k, rem_c


def reduce_int(fk, fc, basis, limit):
    """Full pseudo-remainder of an integer polynomial, up to a positive scalar.

    basis entries are (keys, int coeffs) with positive leading
    coefficients.  The result is content-free with positive leading
    coefficient; it is zero exactly when the true normal form is zero.
    Raises BudgetExceeded after `limit` elementary reduction steps.
    """
    work = dict(zip(fk, fc))
    rem = []
    scale = 1
    steps = 0
    leads = [(bk[0], bc[0], bk, bc) for bk, bc in basis if bk]
    while work:
        m = max(work)
        c = work.pop(m)
        for lk, lc, bk, bc in leads:
            if mono_divides(lk, m):
                steps += 1
                if steps > limit:
                    raise BudgetExceeded("reduction step limit exceeded")
                g = gcd(c, lc)
                mult = lc // g
                q = c // g
                if mult != 1:
                    for kk in work:
                        work[kk] *= mult
                    scale *= mult
                delta = m - lk
                for t in range(1, len(bk)):
                    nk = bk[t] + delta
                    v = work.get(nk, 0) - q * bc[t]
                    if v:
                        work[nk] = v
                    elif nk in work:
                        del work[nk]
                break
        else:
            rem.append((m, c, scale))
    if not rem:
        return [], [], steps
    keys = [r[0] for r in rem]
    coeffs = [r[1] * (scale // r[2]) for r in rem]
    g = 0
    for v in coeffs:
        g = gcd(g, v)
    if coeffs[0] < 0:
        g = -g
    coeffs = [v // g for v in coeffs]
    return keys, coeffs, steps
