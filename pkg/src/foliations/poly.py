"""Exact sparse multivariate polynomials over the rationals.

Coefficients are `fractions.Fraction` (always in lowest terms, positive
denominator), monomials are packed integer keys (see `packing`), and
every operation is exact: there is no floating point anywhere in the
package.  Polynomials are immutable and hashable; the zero polynomial
is the unique value with no terms.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Union

from . import _kernel as K
from . import packing
from .errors import AmbientMismatch, NotDivisible

Scalar = Fraction
ScalarLike = Union[Fraction, int]


def as_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


class Monomial(NamedTuple):
    """Exponent vector of a single monomial."""

    exponents: tuple

    @property
    def degree(self) -> int:
        return sum(self.exponents)


class Poly:
    """Immutable sparse polynomial with a fixed ambient variable count."""

    __slots__ = ("ambient", "_keys", "_coeffs", "_hash")

    def __init__(self, ambient: int, keys: Sequence[int], coeffs: Sequence[Fraction]):
        if not 1 <= ambient <= packing.NVARS_MAX:
            raise ValueError(f"ambient variable count {ambient} out of range")
        self.ambient = ambient
        self._keys = tuple(keys)
        self._coeffs = tuple(coeffs)
        self._hash = None

    # -- construction -------------------------------------------------

    @classmethod
    def from_terms(cls, ambient: int, terms: Iterable[tuple]) -> "Poly":
        """Build from (exponent tuple, scalar) pairs; like terms combine."""
        acc: dict = {}
        for exps, c in terms:
            if len(exps) > ambient:
                raise ValueError("exponent tuple longer than ambient")
            c = as_scalar(c)
            if not c:
                continue
            key = packing.pack(exps)
            v = acc.get(key)
            v = c if v is None else v + c
            if v:
                acc[key] = v
            elif key in acc:
                del acc[key]
        keys = sorted(acc, reverse=True)
        return cls(ambient, keys, [acc[k] for k in keys])

    @classmethod
    def zero(cls, ambient: int) -> "Poly":
        return cls(ambient, (), ())

    @classmethod
    def constant(cls, ambient: int, value: ScalarLike) -> "Poly":
        c = as_scalar(value)
        if not c:
            return cls.zero(ambient)
        return cls(ambient, (packing.UNIT_KEY,), (c,))

    @classmethod
    def variable(cls, index: int, ambient: int) -> "Poly":
        """The variable z_index (1-indexed) in the given ambient ring."""
        if not 1 <= index <= ambient:
            raise ValueError(f"variable index {index} out of range 1..{ambient}")
        return cls(ambient, (packing.var_key(index),), (Fraction(1),))

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self._keys

    def __bool__(self) -> bool:
        return bool(self._keys)

    def __len__(self) -> int:
        return len(self._keys)

    def terms(self) -> Iterator[tuple]:
        """Yield (Monomial, coefficient) pairs in descending degrevlex order."""
        for k, c in zip(self._keys, self._coeffs):
            yield Monomial(packing.unpack(k, self.ambient)), c

    def leading_term(self) -> tuple:
        if not self._keys:
            raise ValueError("zero polynomial has no leading term")
        return Monomial(packing.unpack(self._keys[0], self.ambient)), self._coeffs[0]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        key = packing.pack(tuple(exps) + (0,) * (self.ambient - len(exps)))
        try:
            return self._coeffs[self._keys.index(key)]
        except ValueError:
            return Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coefficient(())

    def total_degree(self) -> int:
        """Degree of the largest monomial; -1 for the zero polynomial."""
        if not self._keys:
            return -1
        return packing.mono_degree(self._keys[0])

    def degrees(self) -> set:
        return {packing.mono_degree(k) for k in self._keys}

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return (
                self.ambient == other.ambient
                and self._keys == other._keys
                and self._coeffs == other._coeffs
            )
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(self.ambient, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ambient, self._keys, self._coeffs))
        return self._hash

    def __repr__(self) -> str:
        from .textio import print_polynomial

        return f"Poly({print_polynomial(self)!r}, ambient={self.ambient})"

    # -- ring operations ----------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.ambient != other.ambient:
            raise AmbientMismatch(
                f"ambient mismatch: {self.ambient} vs {other.ambient}"
            )

    def _coerce(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.ambient, other)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        k, c = K.merge_terms(self._keys, self._coeffs, q._keys, q._coeffs)
        return Poly(self.ambient, k, c)

    __radd__ = __add__

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        k, c = K.merge_terms(self._keys, self._coeffs, q._keys, q._coeffs, True)
        return Poly(self.ambient, k, c)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        k, c = K.merge_terms(q._keys, q._coeffs, self._keys, self._coeffs, True)
        return Poly(self.ambient, k, c)

    def __neg__(self):
        return Poly(self.ambient, self._keys, [-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_scalar(other)
            if not c:
                return Poly.zero(self.ambient)
            k, v = K.scale_terms(self._keys, self._coeffs, c)
            return Poly(self.ambient, k, v)
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        k, v = K.mul_terms(self._keys, self._coeffs, q._keys, q._coeffs)
        return Poly(self.ambient, k, v)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(self.ambient, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def extended(self, ambient: int) -> "Poly":
        """Reinterpret in a larger ambient ring (extra variables unused)."""
        if ambient < self.ambient:
            for k in self._keys:
                for v in range(ambient + 1, self.ambient + 1):
                    if packing.exp_of(k, v):
                        raise ValueError("polynomial uses a variable beyond the target ambient")
        return Poly(max(ambient, 1), self._keys, self._coeffs)


def ring_add(p: Poly, q: Poly) -> Poly:
    return p + q


def ring_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def partial_derivative(p: Poly, var: int) -> Poly:
    """Formal partial derivative with respect to z_var (1-indexed)."""
    if not 1 <= var <= p.ambient:
        raise ValueError(f"variable index {var} out of range 1..{p.ambient}")
    shift = 8 * (var - 1)
    keys = []
    coeffs = []
    for k, c in zip(p._keys, p._coeffs):
        e = packing.EXP_LIMIT - ((k >> shift) & 0xFF)
        if e:
            keys.append(k - (1 << packing.DEG_SHIFT) + (1 << shift))
            coeffs.append(c * e)
    return Poly(p.ambient, keys, coeffs)


def homogeneous_degree(p: Poly) -> Optional[int]:
    """Common total degree of all terms, or None for zero or mixed degrees.

    The zero polynomial is distinguishable via `p.is_zero()`.
    """
    if not p._keys:
        return None
    d = packing.mono_degree(p._keys[0])
    if packing.mono_degree(p._keys[-1]) != d:
        return None
    return d


def evaluate(p: Poly, point: Sequence[ScalarLike]) -> Fraction:
    """Exact value of p at a rational point."""
    if len(point) != p.ambient:
        raise ValueError(f"point length {len(point)} != ambient {p.ambient}")
    values = [as_scalar(v) for v in point]
    total = Fraction(0)
    for mono, c in p.terms():
        term = c
        for v, e in zip(values, mono.exponents):
            if e:
                term *= v**e
        total += term
    return total


def euler_sum(p: Poly) -> Poly:
    """The Euler operator sum(z_i * d/dz_i) applied to p."""
    out = Poly.zero(p.ambient)
    for i in range(1, p.ambient + 1):
        out = out + Poly.variable(i, p.ambient) * partial_derivative(p, i)
    return out


# -- linear maps ------------------------------------------------------


class LinearMap:
    """Matrix of exact scalars acting by substitution z -> M.z."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[ScalarLike]]):
        mat = tuple(tuple(as_scalar(v) for v in row) for row in rows)
        if not mat or any(len(r) != len(mat[0]) for r in mat):
            raise ValueError("matrix rows must be nonempty and of equal length")
        self.rows = mat

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.rows[0]))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[ScalarLike]) -> "LinearMap":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearMap) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"LinearMap({[[str(v) for v in r] for r in self.rows]})"

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ValueError("incompatible shapes for composition")
        return LinearMap(
            [
                [sum((self.rows[i][k] * other.rows[k][j] for k in range(m)), Fraction(0)) for j in range(p)]
                for i in range(n)
            ]
        )

    def transpose(self) -> "LinearMap":
        n, m = self.shape
        return LinearMap([[self.rows[i][j] for i in range(n)] for j in range(m)])

    def rank(self) -> int:
        n, m = self.shape
        mat = [list(r) for r in self.rows]
        rank = 0
        for col in range(m):
            pivot = next((r for r in range(rank, n) if mat[r][col]), None)
            if pivot is None:
                continue
            mat[rank], mat[pivot] = mat[pivot], mat[rank]
            pv = mat[rank][col]
            for r in range(rank + 1, n):
                if mat[r][col]:
                    f = mat[r][col] / pv
                    for c in range(col, m):
                        mat[r][c] -= f * mat[rank][c]
            rank += 1
        return rank

    def determinant(self) -> Fraction:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        mat = [list(r) for r in self.rows]
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if mat[r][col]), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                mat[col], mat[pivot] = mat[pivot], mat[col]
                det = -det
            det *= mat[col][col]
            pv = mat[col][col]
            for r in range(col + 1, n):
                if mat[r][col]:
                    f = mat[r][col] / pv
                    for c in range(col, n):
                        mat[r][c] -= f * mat[col][c]
        return det

    def is_invertible(self) -> bool:
        n, m = self.shape
        return n == m and self.determinant() != 0


def linear_substitute(p: Poly, m: LinearMap, out_ambient: Optional[int] = None) -> Poly:
    """Evaluate p at z -> M.z.

    M has one row per variable of p; row i is the linear image of z_i
    in the target ring.  For square invertible M the degree is
    preserved and substitution composes contravariantly:
    substitute(p, M @ N) == substitute(substitute(p, N), M) ... applied
    with the matrices acting on coordinates.
    """
    rows, cols = m.shape
    if rows != p.ambient:
        raise ValueError(f"matrix has {rows} rows but polynomial ambient is {p.ambient}")
    ambient = cols if out_ambient is None else out_ambient
    if ambient < cols:
        raise ValueError("target ambient smaller than matrix width")
    images = [
        Poly.from_terms(
            ambient,
            [
                (tuple(1 if t == j else 0 for t in range(j + 1)), m.rows[i][j])
                for j in range(cols)
            ],
        )
        for i in range(rows)
    ]
    powers: list = [{0: Poly.constant(ambient, 1)} for _ in range(rows)]

    def power(i: int, e: int) -> Poly:
        cache = powers[i]
        got = cache.get(e)
        if got is None:
            got = cache[e - 1] if e - 1 in cache else power(i, e - 1)
            got = got * images[i]
            cache[e] = got
        return got

    total = Poly.zero(ambient)
    for mono, c in p.terms():
        term = Poly.constant(ambient, c)
        for i, e in enumerate(mono.exponents):
            if e:
                term = term * power(i, e)
        total = total + term
    return total


# -- exact division ---------------------------------------------------


def divmod_single(p: Poly, h: Poly) -> tuple:
    """Divide p by a single nonzero polynomial: returns (quotient, remainder).

    For a single divisor the division algorithm is canonical: the
    remainder is zero exactly when h divides p.
    """
    p._check(h)
    if h.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lk = h._keys[0]
    lc = h._coeffs[0]
    work = dict(zip(p._keys, p._coeffs))
    q_acc: dict = {}
    rem_k = []
    rem_c = []
    while work:
        mkey = max(work)
        c = work.pop(mkey)
        if packing.mono_divides(lk, mkey):
            qc = c / lc
            delta = mkey - lk
            q_acc[packing.mono_div(mkey, lk)] = qc
            for t in range(1, len(h._keys)):
                nk = h._keys[t] + delta
                v = work.get(nk)
                nv = -qc * h._coeffs[t] if v is None else v - qc * h._coeffs[t]
                if nv:
                    work[nk] = nv
                elif v is not None:
                    del work[nk]
        else:
            rem_k.append(mkey)
            rem_c.append(c)
    qk = sorted(q_acc, reverse=True)
    quotient = Poly(p.ambient, qk, [q_acc[k] for k in qk])
    return quotient, Poly(p.ambient, rem_k, rem_c)


def exact_divide(p: Poly, h: Poly) -> Poly:
    """p / h when the division is exact; raises NotDivisible otherwise."""
    q, r = divmod_single(p, h)
    if not r.is_zero():
        raise NotDivisible("polynomial division is not exact", remainder=r)
    return q


def primitive_part(p: Poly) -> Poly:
    """Scale to integer coefficients with content 1 and positive lead."""
    if p.is_zero():
        return p
    num_gcd = 0
    den_lcm = 1
    for c in p._coeffs:
        num_gcd = gcd(num_gcd, c.numerator)
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    factor = Fraction(den_lcm, num_gcd)
    if p._coeffs[0] < 0:
        factor = -factor
    return p * factor


def proportional(p: Poly, q: Poly) -> Optional[Fraction]:
    """Scalar c with q == c*p, or None; both inputs must be nonzero."""
    if p.is_zero() or q.is_zero():
        raise ValueError("proportionality needs nonzero polynomials")
    p._check(q)
    if p._keys != q._keys:
        return None
    ratio = q._coeffs[0] / p._coeffs[0]
    for a, b in zip(p._coeffs[1:], q._coeffs[1:]):
        if b != ratio * a:
            return None
    return ratio
