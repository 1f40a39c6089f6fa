"""Arithmetic in small finite fields F_q, q = p^e <= 16 by default.

Field elements are encoded as integers in [0, q): the element
sum_i c_i * t^i (c_i in F_p, t the residue of x mod the modulus) has
code sum_i c_i * p^i.  For e = 1 the modulus is x itself and codes are
plain residues mod p.  For e > 1 the modulus is the irreducible monic
polynomial of degree e with the least integer code, so element codes
are reproducible across runs.

Full q x q addition and multiplication tables are precomputed; all
group-theoretic hot loops index into them directly.
"""

from __future__ import annotations

from functools import lru_cache

from .config import DEFAULT_MAX_Q
from .errors import FieldTooLarge, NoIrreduciblePolynomial, NonPrimeP, SizeMismatch


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_from_code(code: int, p: int) -> tuple[int, ...]:
    coeffs = []
    while code:
        coeffs.append(code % p)
        code //= p
    return tuple(coeffs)


def _poly_mod_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_rem(a: list[int], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    # b monic
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - db
            for i, cb in enumerate(b):
                a[shift + i] = (a[shift + i] - lead * cb) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Exhaustive divisor check for a monic poly over F_p."""
    e = len(poly) - 1
    if e <= 0:
        return False
    for deg in range(1, e // 2 + 1):
        for code in range(p**deg, 2 * p**deg):  # monic of degree deg
            cand = _poly_from_code(code, p)
            if len(cand) != deg + 1:
                continue
            if not _poly_rem(list(poly), cand, p):
                return False
    return True


def _least_irreducible(p: int, e: int) -> tuple[int, ...]:
    for code in range(p**e, 2 * p**e):
        poly = _poly_from_code(code, p)
        if len(poly) == e + 1 and _is_irreducible(poly, p):
            return poly
    raise NoIrreduciblePolynomial(f"no irreducible monic of degree {e} over F_{p}")


class FiniteField:
    """F_q with element codes in [0, q) and precomputed op tables.

    Attributes `add`, `sub`, `mul` are flat q*q lookup lists indexed by
    a*q + b; `neg` and `inv` are length-q lists (inv[0] is unused).
    """

    def __init__(self, p: int, e: int, max_q: int = DEFAULT_MAX_Q):
        if not is_prime(p):
            raise NonPrimeP(f"p = {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        q = p**e
        if q > max_q:
            raise FieldTooLarge(f"q = {q} exceeds cap {max_q}")
        self.p = p
        self.e = e
        self.q = q
        if e == 1:
            self.modulus: tuple[int, ...] = (0, 1)  # x
        else:
            self.modulus = _least_irreducible(p, e)
        self._build_tables()

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        polys = [_poly_from_code(c, p) for c in range(q)]
        add = [0] * (q * q)
        mul = [0] * (q * q)
        for a in range(q):
            for b in range(q):
                add[a * q + b] = self._code(
                    tuple(
                        ((polys[a][i] if i < len(polys[a]) else 0)
                         + (polys[b][i] if i < len(polys[b]) else 0)) % p
                        for i in range(e)
                    )
                )
                prod = _poly_mod_mul(polys[a], polys[b], p)
                mul[a * q + b] = self._code(_poly_rem(list(prod), self.modulus, p))
        self.add = add
        self.mul = mul
        neg = [0] * q
        for a in range(q):
            for b in range(q):
                if add[a * q + b] == 0:
                    neg[a] = b
                    break
        self.neg = neg
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a * q + b] == 1:
                    inv[a] = b
                    break
            else:
                raise NoIrreduciblePolynomial(
                    f"element {a} has no inverse; modulus not irreducible?"
                )
        self.inv = inv
        self.sub = [add[a * q + neg[b]] for a in range(q) for b in range(q)]

    def _code(self, coeffs: tuple[int, ...]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c
        return code

    # -- scalar ops ------------------------------------------------------

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv[a], -k
        out, q = 1, self.q
        mul = self.mul
        while k:
            if k & 1:
                out = mul[out * q + a]
            a = mul[a * q + a]
            k >>= 1
        return out

    def trace_to_prime(self, a: int) -> int:
        """Tr_{F_q/F_p}(a), returned as an integer in [0, p)."""
        acc, frob = 0, a
        for _ in range(self.e):
            acc = self.add[acc * self.q + frob]
            frob = self.pow(frob, self.p)
        if acc >= self.p:
            raise AssertionError("trace landed outside the prime subfield")
        return acc

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteField)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, e={self.e})"


@lru_cache(maxsize=None)
def field_make(p: int, e: int, max_q: int = DEFAULT_MAX_Q) -> FiniteField:
    """Construct (and memoize) F_{p^e} with the canonical modulus."""
    return FiniteField(p, e, max_q=max_q)


def field_from_q(q: int, max_q: int = DEFAULT_MAX_Q) -> FiniteField:
    """Resolve a prime power q to its field; rejects non prime powers."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    p = 2
    while q % p:
        p += 1
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"q = {q} is not a prime power")
    return field_make(p, e, max_q=max_q)


# -- matrices ----------------------------------------------------------
#
# Hot loops in groups.py / characters.py work on flat row-major tuples
# of entry codes; MatrixGF is the user-facing wrapper.


def mat_identity(n: int) -> tuple[int, ...]:
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


def mat_mul(a: tuple[int, ...], b: tuple[int, ...], n: int, field: FiniteField) -> tuple[int, ...]:
    q, mul, add = field.q, field.mul, field.add
    out = []
    for i in range(n):
        row = a[i * n:(i + 1) * n]
        for j in range(n):
            s = 0
            for k in range(n):
                s = add[s * q + mul[row[k] * q + b[k * n + j]]]
            out.append(s)
    return tuple(out)


def mat_transpose(a: tuple[int, ...], n: int) -> tuple[int, ...]:
    return tuple(a[j * n + i] for i in range(n) for j in range(n))


def mat_det(a: tuple[int, ...], n: int, field: FiniteField) -> int:
    q, mul, sub_, inv = field.q, field.mul, field.sub, field.inv
    m = [list(a[i * n:(i + 1) * n]) for i in range(n)]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = field.neg[det]
        pval = m[col][col]
        det = mul[det * q + pval]
        pinv = inv[pval]
        for r in range(col + 1, n):
            f = mul[m[r][col] * q + pinv]
            if f:
                mrow, crow = m[r], m[col]
                for c in range(col, n):
                    mrow[c] = sub_[mrow[c] * q + mul[f * q + crow[c]]]
    return det


def mat_inv(a: tuple[int, ...], n: int, field: FiniteField) -> tuple[int, ...]:
    q, mul, sub_, inv = field.q, field.mul, field.sub, field.inv
    m = [list(a[i * n:(i + 1) * n]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
        pinv = inv[m[col][col]]
        crow = m[col]
        for c in range(2 * n):
            crow[c] = mul[crow[c] * q + pinv]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                rrow = m[r]
                for c in range(2 * n):
                    rrow[c] = sub_[rrow[c] * q + mul[f * q + crow[c]]]
    return tuple(m[i][n + j] for i in range(n) for j in range(n))


class MatrixGF:
    """An n x n matrix over a FiniteField; immutable value object."""

    __slots__ = ("field", "n", "entries")

    def __init__(self, field: FiniteField, n: int, entries):
        entries = tuple(entries)
        if len(entries) != n * n:
            raise SizeMismatch(f"expected {n * n} entries, got {len(entries)}")
        if any(not (0 <= c < field.q) for c in entries):
            raise ValueError("entry code out of range")
        self.field = field
        self.n = n
        self.entries = entries

    @classmethod
    def from_rows(cls, field: FiniteField, rows) -> "MatrixGF":
        rows = [list(r) for r in rows]
        n = len(rows)
        return cls(field, n, tuple(c for r in rows for c in r))

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def __mul__(self, other: "MatrixGF") -> "MatrixGF":
        if self.field != other.field or self.n != other.n:
            raise SizeMismatch("matrix size/field mismatch")
        return MatrixGF(self.field, self.n, mat_mul(self.entries, other.entries, self.n, self.field))

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.field, self.n, mat_transpose(self.entries, self.n))

    def det(self) -> int:
        return mat_det(self.entries, self.n, self.field)

    def inverse(self) -> "MatrixGF":
        return MatrixGF(self.field, self.n, mat_inv(self.entries, self.n, self.field))

    def is_invertible(self) -> bool:
        return self.det() != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatrixGF)
            and (self.field, self.n, self.entries) == (other.field, other.n, other.entries)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.entries))

    def __repr__(self) -> str:
        return f"MatrixGF({self.n}x{self.n}, q={self.field.q}, {self.entries})"
