"""Packed monomial keys.

A monomial in up to six variables is stored in a single nonnegative
integer so that plain integer comparison realizes graded reverse
lexicographic order with z1 > z2 > ... > z6.

Layout (most significant to least):

    bits 48..63   total degree
    bits 40..47   127 - e6
    bits 32..39   127 - e5
    ...
    bits  0..7    127 - e1

Storing complemented exponents makes the integer order agree with
degrevlex: ties in total degree are broken by the smallest complemented
exponent of the *last* differing variable, which is exactly the reverse
lexicographic rule.  Unused variable slots hold the constant 127 and
never influence comparisons.

Multiplication of monomials is key addition up to the constant offset
UNIT_KEY, and divisibility is a branch-free per-byte comparison.  Every
exponent (hence every total degree) is capped at 127 so the byte tricks
stay sound; violations raise ExponentOverflow.
"""

from __future__ import annotations

from .errors import ExponentOverflow

NVARS_MAX = 6
EXP_LIMIT = 127
DEG_SHIFT = 8 * NVARS_MAX
COMP_MASK = (1 << DEG_SHIFT) - 1
HIGH_BITS = 0x808080808080  # high bit of each exponent byte

#: key of the unit monomial (all exponents zero)
UNIT_KEY = sum(EXP_LIMIT << (8 * i) for i in range(NVARS_MAX))


def pack(exponents) -> int:
    """Pack an exponent sequence (length <= 6) into a monomial key."""
    total = 0
    key = UNIT_KEY
    for i, e in enumerate(exponents):
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        total += e
        key -= e << (8 * i)
    if total > EXP_LIMIT:
        raise ExponentOverflow(f"total degree {total} exceeds limit {EXP_LIMIT}")
    return (total << DEG_SHIFT) | key


def unpack(key: int, nvars: int) -> tuple:
    """Recover the exponent tuple of the first `nvars` variables."""
    return tuple(EXP_LIMIT - ((key >> (8 * i)) & 0xFF) for i in range(nvars))


def mono_degree(key: int) -> int:
    return key >> DEG_SHIFT


def exp_of(key: int, var: int) -> int:
    """Exponent of variable `var` (1-indexed)."""
    return EXP_LIMIT - ((key >> (8 * (var - 1))) & 0xFF)


def var_key(var: int) -> int:
    """Key of the single variable zv (1-indexed)."""
    return pack(tuple(1 if i == var - 1 else 0 for i in range(var)))


def mono_mul(a: int, b: int) -> int:
    k = a + b - UNIT_KEY
    if (k >> DEG_SHIFT) > EXP_LIMIT:
        raise ExponentOverflow("monomial product exceeds the degree limit")
    return k


def mono_divides(a: int, b: int) -> bool:
    """True when monomial a divides monomial b (componentwise e_a <= e_b)."""
    x = (a & COMP_MASK) | HIGH_BITS
    return (x - (b & COMP_MASK)) & HIGH_BITS == HIGH_BITS


def mono_div(b: int, a: int) -> int:
    """b / a for monomials; caller guarantees divisibility."""
    return b - a + UNIT_KEY


def mono_lcm(a: int, b: int) -> int:
    key = 0
    total = 0
    for i in range(NVARS_MAX):
        shift = 8 * i
        ca = (a >> shift) & 0xFF
        cb = (b >> shift) & 0xFF
        c = ca if ca < cb else cb
        key |= c << shift
        total += EXP_LIMIT - c
    return (total << DEG_SHIFT) | key
