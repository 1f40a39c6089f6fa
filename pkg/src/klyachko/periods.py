"""Symbolic L-value period formulas and their numeric evaluation.

Expressions are immutable trees over four atoms:

- L(j): the Rankin-Selberg value L_sigma(j) = L(j, sigma x sigma~),
- Res:  the residue of L_sigma(s) at s = 1,
- alpha: the opaque finite product of local Whittaker normalization
  factors over the bad places,
- exact rational numerals,

combined by products, quotients, integer powers and absolute squares.
Atoms are never computed analytically here; evaluation substitutes a
user-supplied assignment, and every numeric output is defined only up
to the global Haar-measure normalization.

The squared-period formulas:

    t = 2m:    L(2) L(4) ... L(2m) / (Res L(3) ... L(2m-1))
    t = 2m+1:  (alpha / Res) * prod_{j=1..m} L(2j) / L(2j+1)

with the t = 1 case reducing to the Whittaker formula alpha / Res.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import DivisionByZero, MissingAtom, PoleAtEvaluationPoint


class PeriodExpression:
    """Base class; concrete nodes implement the small visitor surface."""

    def atoms(self) -> set[str]:
        raise NotImplementedError

    def evaluate(self, assignment: Mapping[str, complex]):
        raise NotImplementedError

    def to_string(self) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.to_string()

    def _needs_parens(self) -> bool:
        return False


@dataclass(frozen=True)
class Atom(PeriodExpression):
    """One of "L(j)", "Res", "alpha" by canonical key."""

    key: str

    def atoms(self) -> set[str]:
        return {self.key}

    def evaluate(self, assignment):
        if self.key not in assignment:
            raise MissingAtom(f"no value supplied for atom {self.key}")
        return assignment[self.key]

    def to_string(self) -> str:
        return self.key

    def to_json(self) -> dict:
        return {"kind": "atom", "atom": self.key}


def lval(j: int) -> Atom:
    if j < 2:
        raise ValueError(f"L-value atoms require j >= 2, got {j}")
    return Atom(f"L({j})")


RES = Atom("Res")
ALPHA = Atom("alpha")


@dataclass(frozen=True)
class Numeral(PeriodExpression):
    value: Fraction

    def atoms(self) -> set[str]:
        return set()

    def evaluate(self, assignment):
        return self.value

    def to_string(self) -> str:
        return str(self.value)

    def to_json(self) -> dict:
        return {"kind": "number", "value": str(self.value)}


@dataclass(frozen=True)
class Product(PeriodExpression):
    factors: tuple[PeriodExpression, ...]

    def atoms(self) -> set[str]:
        out: set[str] = set()
        for f in self.factors:
            out |= f.atoms()
        return out

    def evaluate(self, assignment):
        out = 1
        for f in self.factors:
            out = out * f.evaluate(assignment)
        return out

    def to_string(self) -> str:
        return "*".join(
            f"({f.to_string()})" if f._needs_parens() else f.to_string()
            for f in self.factors
        )

    def to_json(self) -> dict:
        return {"kind": "product", "children": [f.to_json() for f in self.factors]}

    def _needs_parens(self) -> bool:
        return True


@dataclass(frozen=True)
class Quotient(PeriodExpression):
    numerator: PeriodExpression
    denominator: PeriodExpression

    def atoms(self) -> set[str]:
        return self.numerator.atoms() | self.denominator.atoms()

    def evaluate(self, assignment):
        den = self.denominator.evaluate(assignment)
        if den == 0:
            raise DivisionByZero(f"denominator {self.denominator.to_string()} evaluated to 0")
        return self.numerator.evaluate(assignment) / den

    def to_string(self) -> str:
        num = self.numerator.to_string()
        den = self.denominator.to_string()
        if isinstance(self.denominator, Atom) or isinstance(self.denominator, Numeral):
            return f"{num}/{den}"
        return f"{num}/({den})"

    def to_json(self) -> dict:
        return {
            "kind": "quotient",
            "children": [self.numerator.to_json(), self.denominator.to_json()],
        }

    def _needs_parens(self) -> bool:
        return True


@dataclass(frozen=True)
class Power(PeriodExpression):
    base: PeriodExpression
    exponent: int

    def atoms(self) -> set[str]:
        return self.base.atoms()

    def evaluate(self, assignment):
        return self.base.evaluate(assignment) ** self.exponent

    def to_string(self) -> str:
        base = self.base.to_string()
        if self.base._needs_parens():
            base = f"({base})"
        return f"{base}^{self.exponent}"

    def to_json(self) -> dict:
        return {"kind": "power", "exponent": self.exponent, "children": [self.base.to_json()]}


@dataclass(frozen=True)
class AbsSquare(PeriodExpression):
    inner: PeriodExpression

    def atoms(self) -> set[str]:
        return self.inner.atoms()

    def evaluate(self, assignment):
        v = self.inner.evaluate(assignment)
        return abs(v) ** 2

    def to_string(self) -> str:
        return f"|{self.inner.to_string()}|^2"

    def to_json(self) -> dict:
        return {"kind": "abs_square", "children": [self.inner.to_json()]}


def _product(factors: list[PeriodExpression]) -> PeriodExpression:
    if not factors:
        return Numeral(Fraction(1))
    if len(factors) == 1:
        return factors[0]
    return Product(tuple(factors))


def period_formula(t: int) -> PeriodExpression:
    """Squared mixed period of the normalized spherical vector of the
    discrete-spectrum representation built from t cuspidal blocks."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if t % 2 == 0:
        m = t // 2
        num = [lval(2 * j) for j in range(1, m + 1)]
        den = [RES] + [lval(2 * j + 1) for j in range(1, m)]
        return Quotient(_product(num), _product(den))
    m = (t - 1) // 2
    num = [ALPHA] + [lval(2 * j) for j in range(1, m + 1)]
    den = [RES] + [lval(2 * j + 1) for j in range(1, m + 1)]
    return Quotient(_product(num), _product(den))


def norm_constant(t: int) -> PeriodExpression:
    """Squared inverse L^2-norm of the spherical multi-residue vector:
    L(2) L(3) ... L(t) / Res^(t-1)."""
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    num = [lval(j) for j in range(2, t + 1)]
    den = RES if t == 2 else Power(RES, t - 1)
    return Quotient(_product(num), den)


def intertwining_eigenvalue(t: int) -> PeriodExpression:
    """Eigenvalue of the residual intertwining operator at w_Q on the
    spherical vector: Res / L(t), t = 2m+1 odd."""
    if t < 3 or t % 2 == 0:
        raise ValueError(f"t must be odd and >= 3, got {t}")
    return Quotient(RES, lval(t))


def evaluate_period(expr: PeriodExpression, assignment: Mapping[str, complex]):
    """Evaluate under an atom assignment; exact when the values are exact."""
    return expr.evaluate(assignment)


# -- numeric instantiation ------------------------------------------------


def zeta_value(s: int, tol: float = 1e-8) -> float:
    """zeta(s) by direct Dirichlet series with a proven tail bound.

    Truncating after N terms and adding the integral tail
    N^(1-s)/(s-1) plus the N^-s/2 midpoint term leaves an error of at
    most N^-s / 2 (monotone comparison of sum and integral), so N is
    chosen with N^-s / 2 <= tol.
    """
    if s < 2:
        raise ValueError(f"zeta evaluation needs s >= 2, got {s}")
    n_terms = max(10, math.ceil((1.0 / (2.0 * tol)) ** (1.0 / s)))
    partial = sum(k ** (-float(s)) for k in range(1, n_terms + 1))
    tail = n_terms ** (1.0 - s) / (s - 1.0) - 0.5 * n_terms ** (-float(s))
    return partial + tail


def zeta_assignment(expr: PeriodExpression, tol: float = 1e-8) -> dict[str, float]:
    """The illustrative assignment for sigma trivial on GL_1 over Q:
    L(j) = zeta(j), Res = 1, alpha = 1."""
    out: dict[str, float] = {}
    for key in expr.atoms():
        if key == "Res":
            out[key] = 1.0
        elif key == "alpha":
            out[key] = 1.0
        elif key.startswith("L(") and key.endswith(")"):
            out[key] = zeta_value(int(key[2:-1]), tol=tol)
        else:
            raise MissingAtom(f"no zeta instantiation for atom {key}")
    return out


# -- one unramified local factor -----------------------------------------


@dataclass(frozen=True)
class LocalRSFactor:
    """The local factor of L(s, sigma x sigma~) at one unramified place:
    prod_{i,j} (1 - a_i / a_j * q^-s)^-1 over the Satake parameters."""

    satake: tuple[complex, ...]
    q: int

    def __post_init__(self):
        if not self.satake:
            raise ValueError("need at least one Satake parameter")
        if any(a == 0 for a in self.satake):
            raise ValueError("Satake parameters must be nonzero")
        if self.q < 2:
            raise ValueError(f"residue cardinality must be >= 2, got {self.q}")

    def denominator_coefficients(self) -> list[complex]:
        """Coefficients (ascending) of prod_{i,j} (1 - a_i/a_j X) in
        X = q^-s."""
        coeffs: list[complex] = [1 + 0j]
        for ai in self.satake:
            for aj in self.satake:
                ratio = ai / aj
                nxt = [0j] * (len(coeffs) + 1)
                for d, c in enumerate(coeffs):
                    nxt[d] += c
                    nxt[d + 1] -= c * ratio
                coeffs = nxt
        return coeffs

    def value(self, s: complex) -> complex:
        x = self.q ** (-complex(s))
        out = 1.0 + 0j
        for ai in self.satake:
            for aj in self.satake:
                factor = 1 - (ai / aj) * x
                if abs(factor) < 1e-12:
                    raise PoleAtEvaluationPoint(
                        f"factor (1 - {ai}/{aj} q^-s) vanishes at s = {s}"
                    )
                out *= factor
        return 1 / out


def local_rs_factor(satake, q: int, s: complex) -> complex:
    """Value of the unramified local Rankin-Selberg factor at s."""
    return LocalRSFactor(tuple(satake), q).value(s)
