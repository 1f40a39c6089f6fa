"""Exponent-vector and coset combinatorics behind the residue
computation of Eisenstein constant terms.

Everything lives on the block level: for a group of rank t*r cut into t
blocks of size r, exponent vectors are length-t tuples of exact
rationals, the relevant Weyl elements are permutations of the blocks,
and a parabolic containing the blocks is a composition of t.  The
staircase vector Lambda_t = ((t-1)/2, ..., (1-t)/2) is the point where
the multi-residue is taken.

Permutations act on exponent vectors by (w . v)_j = v_{w^-1(j)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedComposition

Vector = tuple  # of Fractions


def lambda_vec(t: int) -> Vector:
    """Lambda_t = ((t-1)/2, (t-3)/2, ..., (1-t)/2)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return tuple(Fraction(t - 1 - 2 * i, 2) for i in range(t))


def lambda_blockwise(composition: tuple[int, ...]) -> Vector:
    """Lambda^Q assembled per block: (Lambda_{m_1}, ..., Lambda_{m_s})."""
    out: list[Fraction] = []
    for m in composition:
        out.extend(lambda_vec(m))
    return tuple(out)


def block_project(vec: Vector, composition: tuple[int, ...]) -> Vector:
    """Orthogonal projection to the composition's Levi coordinates:
    one average per block."""
    if sum(composition) != len(vec):
        raise ValueError("composition does not match vector length")
    out = []
    pos = 0
    for m in composition:
        chunk = vec[pos:pos + m]
        out.append(sum(chunk, Fraction(0)) / m)
        pos += m
    return tuple(out)


def interior_indices(composition: tuple[int, ...]) -> list[int]:
    """Delta^L: the adjacent pairs (j, j+1) lying inside one block of
    the composition, 1-based."""
    out = []
    pos = 0
    for m in composition:
        out.extend(range(pos + 1, pos + m))
        pos += m
    return out


@dataclass(frozen=True)
class WeylElement:
    """A permutation of [1, t], stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        t = len(self.images)
        if sorted(self.images) != list(range(1, t + 1)):
            raise ValueError(f"not a permutation of [1, {t}]: {self.images}")

    @classmethod
    def identity(cls, t: int) -> "WeylElement":
        return cls(tuple(range(1, t + 1)))

    @classmethod
    def cycle(cls, t: int, i: int) -> "WeylElement":
        """The cycle (1, 2, ..., i) inside S_t: j -> j+1 for j < i, i -> 1."""
        images = [j + 2 for j in range(i - 1)] + [1] + list(range(i + 1, t + 1))
        return cls(tuple(images))

    @property
    def t(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def inverse(self) -> "WeylElement":
        inv = [0] * self.t
        for j, img in enumerate(self.images, start=1):
            inv[img - 1] = j
        return WeylElement(tuple(inv))

    def apply(self, vec: Vector) -> Vector:
        """(w . v)_j = v_{w^-1(j)}."""
        if len(vec) != self.t:
            raise ValueError("vector length mismatch")
        inv = self.inverse()
        return tuple(vec[inv(j) - 1] for j in range(1, self.t + 1))

    def cycle_string(self) -> str:
        seen = set()
        parts = []
        for start in range(1, self.t + 1):
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                orbit.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(orbit) > 1:
                parts.append("(" + " ".join(map(str, orbit)) + ")")
        return "".join(parts) or "e"


def descent_set(w: WeylElement) -> set[int]:
    """{i in [1, t-1] : w(i) > w(i+1)}."""
    return {i for i in range(1, w.t) if w(i) > w(i + 1)}


def coset_reps(t: int) -> list[WeylElement]:
    """The t reduced representatives for the (r, 2mr) parabolic, t = 2m+1
    odd: w^(i) = (1, 2, ..., i), the unique one with w^(i)(i) = 1."""
    if t < 1 or t % 2 == 0:
        raise UnsupportedComposition(
            f"only compositions of type (r, 2mr) with t = 2m+1 odd are supported, got t = {t}"
        )
    return [WeylElement.cycle(t, i) for i in range(1, t + 1)]


@dataclass(frozen=True)
class SurvivalTerm:
    i: int
    weyl: WeylElement
    descents: frozenset[int]
    bookkeeping: frozenset[int]
    pole_order: int
    required_order: int

    @property
    def survives(self) -> bool:
        return self.pole_order >= self.required_order


@dataclass(frozen=True)
class SurvivalReport:
    t: int
    m: int
    terms: tuple[SurvivalTerm, ...]

    @property
    def survivors(self) -> list[int]:
        return [term.i for term in self.terms if term.survives]

    @property
    def w_q_index(self) -> int:
        return self.t


def residue_survival(t: int) -> SurvivalReport:
    """Pole bookkeeping for each coset representative w^(i), t = 2m+1.

    The multi-residue multiplies by all 2m factors lambda_j - lambda_{j+1}
    - 1 vanishing at Lambda_t, so a term survives iff it supplies poles
    of total order 2m.  Two sources are counted from first principles:

    - descents of w (first-order poles of the intertwining operator),
    - positions w^-1(j) for interior indices j of the (1, 2m) block
      composition where (w . Lambda_t) steps down by exactly 1, i.e.
      residue hyperplanes of the inner Eisenstein series that pass
      through Lambda_t.  For i > 1 this set equals [1, 2m] minus
      {i-1, i}; for the identity it is [2, 2m], which is why the
      identity term also dies.
    """
    if t < 3 or t % 2 == 0:
        raise UnsupportedComposition(f"t must be odd and >= 3, got t = {t}")
    m = (t - 1) // 2
    lam = lambda_vec(t)
    inner = interior_indices((1, t - 1))
    terms = []
    for i, w in enumerate(coset_reps(t), start=1):
        moved = w.apply(lam)
        bookkeeping = set()
        w_inv = w.inverse()
        for j in inner:
            if moved[j - 1] - moved[j] == 1:
                bookkeeping.add(w_inv(j))
        descents = descent_set(w)
        terms.append(
            SurvivalTerm(
                i=i,
                weyl=w,
                descents=frozenset(descents),
                bookkeeping=frozenset(bookkeeping),
                pole_order=len(bookkeeping) + len(descents),
                required_order=2 * m,
            )
        )
    return SurvivalReport(t=t, m=m, terms=tuple(terms))


def mu_q(m: int) -> Vector:
    """w_Q Lambda_{2m+1} - Lambda^Q, projected to the (r, 2mr) Levi
    coordinates; always comes out (-m, 1/2)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    t = 2 * m + 1
    w_q = WeylElement.cycle(t, t)
    moved = w_q.apply(lambda_vec(t))
    diff = tuple(a - b for a, b in zip(moved, lambda_blockwise((1, t - 1))))
    # the difference is constant on each block, so projecting is just
    # reading one coordinate per block; assert rather than assume
    composition = (1, t - 1)
    pos = 0
    for size in composition:
        block = diff[pos:pos + size]
        if any(x != block[0] for x in block):
            raise AssertionError("difference vector not constant on blocks")
        pos += size
    return block_project(diff, composition)
