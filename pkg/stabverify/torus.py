"""
Exact symbolic analysis of semisimple strata.

A torus element is described by a Substitution: each coordinate t_i is a
Monomial, an integer exponent vector over free parameters x_1..x_k times a
root of unity exp(2 pi i * torsion). Weights and roots are integer
characters of the torus coordinates; evaluating them under a Substitution
gives the eigenvalue symbols whose coincidences define the stratum.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from .errors import FanOutExceeded
from .exact_matrix import fraction_to_str
from .partitions import Partition
from .reports import CheckReport, Verdict, grassmannian_dim, semisimple_verdict
from .stable_dim import max_semisimple, semisimple_profiles

if TYPE_CHECKING:
    from .catalog import GenusConfig

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 12


def _reduce(torsion: Any) -> Fraction:
    value = Fraction(torsion)
    return value - (value.numerator // value.denominator)


@dataclass(frozen=True)
class Monomial:
    """
    x^exponents * exp(2 pi i * torsion), torsion reduced into [0, 1).

    Example:
        >>> Monomial((1, 0), Fraction(1, 3)) * Monomial((0, 1), Fraction(2, 3))
        Monomial(exponents=(1, 1), torsion=Fraction(0, 1))
    """
    exponents: Tuple[int, ...]
    torsion: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        object.__setattr__(self, "torsion", _reduce(self.torsion))

    @classmethod
    def one(cls, params: int) -> "Monomial":
        return cls((0,) * params)

    @classmethod
    def variable(cls, params: int, index: int) -> "Monomial":
        return cls(tuple(1 if j == index else 0 for j in range(params)))

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Monomial":
        return cls(tuple(data["exponents"]), Fraction(str(data.get("torsion", "0"))))

    @property
    def params(self) -> int:
        return len(self.exponents)

    @property
    def is_constant(self) -> bool:
        return not any(self.exponents)

    @property
    def is_one(self) -> bool:
        return self.is_constant and self.torsion == 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)),
                        self.torsion + other.torsion)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * other.power(-1)

    def power(self, k: int) -> "Monomial":
        return Monomial(tuple(k * a for a in self.exponents), k * self.torsion)

    def to_json(self) -> Dict[str, Any]:
        return {"exponents": list(self.exponents), "torsion": fraction_to_str(self.torsion)}

    def __str__(self) -> str:
        factors = [f"x{j + 1}" + (f"^{e}" if e != 1 else "")
                   for j, e in enumerate(self.exponents) if e]
        if self.torsion:
            factors.append(f"z({fraction_to_str(self.torsion)})")
        return "*".join(factors) or "1"


@dataclass(frozen=True)
class Infeasible:
    """A relation that cannot hold on the current stratum."""
    reason: str


@dataclass(frozen=True)
class Substitution:
    """
    Assignment of torus coordinates to Monomials in `params` free parameters.

    Attributes:
        values: Monomial for t_1..t_r
        params: number k of free parameters
        provenance: relations imposed so far, oldest first
    """
    values: Tuple[Monomial, ...]
    params: int
    provenance: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        for value in self.values:
            if value.params != self.params:
                raise ValueError(
                    f"Monomial {value} has {value.params} parameters, expected {self.params}")

    @classmethod
    def generic(cls, rank: int) -> "Substitution":
        """t_i = x_i."""
        return cls(tuple(Monomial.variable(rank, i) for i in range(rank)), rank)

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Substitution":
        values = tuple(Monomial.from_json(v) for v in data["t"])
        params = int(data.get("params", values[0].params if values else 0))
        return cls(values, params, tuple(data.get("provenance", ())))

    @property
    def rank(self) -> int:
        return len(self.values)

    def exponent_matrix(self) -> np.ndarray:
        """r x k integer matrix of exponents."""
        return np.array([v.exponents for v in self.values], dtype=np.int64).reshape(
            self.rank, self.params)

    def evaluate(self, character: Sequence[int]) -> Monomial:
        """Value of t^character."""
        result = Monomial.one(self.params)
        for c, value in zip(character, self.values):
            if c:
                result = result * value.power(int(c))
        return result

    def apply_weyl(self, matrix: np.ndarray) -> "Substitution":
        """
        Substitution s' with s'(chi) = s(W chi), i.e. t'_i = s(column i of W).
        """
        columns = np.asarray(matrix, dtype=np.int64).T
        return Substitution(tuple(self.evaluate(col) for col in columns),
                            self.params, self.provenance)

    def to_json(self) -> Dict[str, Any]:
        return {
            "params": self.params,
            "t": [v.to_json() for v in self.values],
            "provenance": list(self.provenance),
        }

    def describe(self) -> str:
        return ", ".join(f"t{i + 1}={v}" for i, v in enumerate(self.values))


@dataclass(frozen=True)
class WeightSystem:
    """
    Weights of V_g and roots of G as integer characters of the torus.

    Attributes:
        weights: n x r array
        roots: R x r array
        weyl_generators: r x r integer matrices acting on characters
        ambient_dim: dimension of the group whose conjugacy classes are counted
        rank: rank of that group
    """
    weights: np.ndarray
    roots: np.ndarray
    weyl_generators: Tuple[np.ndarray, ...]
    ambient_dim: int
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=np.int64))
        object.__setattr__(self, "roots", np.asarray(self.roots, dtype=np.int64))
        object.__setattr__(self, "weyl_generators",
                           tuple(np.asarray(w, dtype=np.int64) for w in self.weyl_generators))
        r = self.coordinates
        if self.roots.shape[1] != r:
            raise ValueError("Weights and roots must use the same torus coordinates")
        for w in self.weyl_generators:
            if w.shape != (r, r):
                raise ValueError(f"Weyl generator has shape {w.shape}, expected {(r, r)}")

    @property
    def coordinates(self) -> int:
        return int(self.weights.shape[1])

    @property
    def n(self) -> int:
        return int(self.weights.shape[0])

    def weight_values(self, s: Substitution) -> List[Monomial]:
        return [s.evaluate(w) for w in self.weights]

    def root_values(self, s: Substitution) -> List[Monomial]:
        return [s.evaluate(r) for r in self.roots]


def multiplicities(w: WeightSystem, s: Substitution) -> Partition:
    """
    Eigenspace multiplicities of s on V: weights grouped by exact equality.

    Example:
        generic g10 substitution -> [2, 1^12]
    """
    counts: Dict[Monomial, int] = {}
    for value in w.weight_values(s):
        counts[value] = counts.get(value, 0) + 1
    return Partition.of(counts.values())


def count_trivial_roots(roots: Union[np.ndarray, Sequence[Sequence[int]]], s: Substitution) -> int:
    """delta: the number of roots equal to 1 under s."""
    return sum(1 for r in np.asarray(roots, dtype=np.int64) if s.evaluate(r).is_one)


def class_dim(roots: Union[np.ndarray, Sequence[Sequence[int]]], s: Substitution,
              group_dim: int, rank: int) -> int:
    """Dimension of the conjugacy class: group_dim - rank - delta."""
    return group_dim - rank - count_trivial_roots(roots, s)


def check_stratum(genus: "GenusConfig", s: Substitution, case: str = "",
                  m_range: Optional[Tuple[int, int]] = None,
                  with_profiles: bool = False) -> List[CheckReport]:
    """
    Criterion check for a semisimple stratum at every m of the range.

    Strict iff class_dim + d_m < m (n - m); equality counts as exceptional.
    A stratum acting as a scalar on V gets the verdict SCALAR throughout.
    """
    torus = genus.torus
    if torus is None:
        raise ValueError(f"Genus {genus.g} has no torus data")
    e = multiplicities(torus, s)
    dim = class_dim(torus.roots, s, torus.ambient_dim, torus.rank)
    lo, hi = m_range if m_range is not None else genus.m_range
    scalar = len(e) == 1
    reports = []
    for m in range(lo, hi + 1):
        d_m = max_semisimple(e, m)
        rhs = grassmannian_dim(m, torus.n)
        verdict = Verdict.SCALAR if scalar else semisimple_verdict(dim + d_m, rhs)
        profiles = tuple(semisimple_profiles(e, m)) if with_profiles else None
        reports.append(CheckReport(case, m, dim, d_m, rhs, verdict, profiles))
    return reports


def _solve_torsion(exponent: int, torsion: Fraction) -> List[Fraction]:
    """All c in [0, 1) with exponent * c + torsion = 0 mod 1."""
    order = abs(exponent)
    return sorted({_reduce((r - torsion) / exponent) for r in range(order)})


def impose_relation(s: Substitution, m1: Monomial, m2: Monomial,
                    max_order: Optional[int] = DEFAULT_MAX_ORDER,
                    label: str = "") -> Union[List[Substitution], Infeasible]:
    """
    Restrict s to the locus where m1 = m2.

    The exponent difference d is brought to (e, 0, ..., 0) by a unimodular
    change of parameters (Smith normal form); the first new parameter then
    becomes a root of unity, one branch per solution.

    Args:
        s: current substitution
        m1, m2: Monomials in the parameters of s
        max_order: cap on |e|, None for no cap
        label: provenance text for the relation

    Returns:
        All branches, or Infeasible if d = 0 and the torsions differ

    Raises:
        ValueError: If m1 and m2 already agree
        FanOutExceeded: If |e| exceeds max_order
    """
    d = [a - b for a, b in zip(m1.exponents, m2.exponents)]
    tau = _reduce(m1.torsion - m2.torsion)
    if not any(d):
        if tau == 0:
            raise ValueError(f"Relation {m1} = {m2} already holds")
        return Infeasible(f"{m1} = {m2} is a non-trivial root of unity identity")

    k = s.params
    _, _, t = smith_normal_decomp(Matrix([d]), domain=ZZ)
    transform = [[int(t[i, j]) for j in range(k)] for i in range(k)]
    image = [sum(d[i] * transform[i][j] for i in range(k)) for j in range(k)]
    if any(image[1:]) or image[0] == 0:
        raise ArithmeticError(f"Unexpected Smith form image {image} for {d}")
    exponent = image[0]
    if max_order is not None and abs(exponent) > max_order:
        raise FanOutExceeded(f"Relation {m1} = {m2} needs roots of unity of order {abs(exponent)}")

    text = label or f"{m1} = {m2}"
    branches = []
    for c in _solve_torsion(exponent, tau):
        values = []
        for value in s.values:
            row = [sum(value.exponents[i] * transform[i][j] for i in range(k)) for j in range(k)]
            values.append(Monomial(tuple(row[1:]), value.torsion + row[0] * c))
        branch_text = text if c == 0 and abs(exponent) == 1 else f"{text} [branch {fraction_to_str(c)}]"
        branches.append(Substitution(tuple(values), k - 1, s.provenance + (branch_text,)))
    return branches


def impose_character(s: Substitution, character: Sequence[int],
                     max_order: Optional[int] = DEFAULT_MAX_ORDER,
                     label: str = "") -> Union[List[Substitution], Infeasible]:
    """Impose t^character = 1."""
    return impose_relation(s, s.evaluate(character), Monomial.one(s.params), max_order, label)


def instantiate(s: Substitution, weights: Sequence[int]) -> Substitution:
    """
    Specialize x_j -> y^{weights[j]} for a single parameter y.

    With generic integer weights no coincidences beyond those of s appear.
    """
    if len(weights) != s.params:
        raise ValueError(f"Need {s.params} weights, got {len(weights)}")
    values = tuple(
        Monomial((sum(e * w for e, w in zip(v.exponents, weights)),), v.torsion)
        for v in s.values
    )
    return Substitution(values, 1, s.provenance + ("instantiated",))


def torsion_code(torsion: Fraction) -> int:
    """Injective code of a reduced fraction p/q in [0, 1): q(q-1)/2 + p + 1."""
    q, p = torsion.denominator, torsion.numerator
    return q * (q - 1) // 2 + p + 1


def character_codes(s: Substitution, characters: np.ndarray) -> np.ndarray:
    """
    For each character: 0 if its value is non-constant, else torsion_code.

    Vectorized: exponents through an integer matrix product, torsions
    through a common denominator.
    """
    exps = characters @ s.exponent_matrix() if s.params else np.zeros((len(characters), 0))
    constant = ~np.any(exps != 0, axis=1)
    denom = 1
    for value in s.values:
        denom = denom * value.torsion.denominator // gcd(denom, value.torsion.denominator)
    numer = np.array([int(v.torsion * denom) for v in s.values], dtype=np.int64)
    residue = np.mod(characters @ numer, denom)
    common = np.gcd(residue, denom)
    p = residue // common
    q = denom // common
    codes = q * (q - 1) // 2 + p + 1
    return np.where(constant, codes, 0).astype(np.int64)
