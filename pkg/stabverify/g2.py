"""
Chevalley basis of g2 realized inside gl(7).

Simple roots: alpha (long) and beta (short). The 7-dimensional
representation has weights alpha+2beta, alpha+beta, beta, 0, -beta,
-alpha-beta, -alpha-2beta on v1..v7. Positive root vectors are generated
from the simple ones by
    X_{a+b}   = [X_b, X_a]
    X_{a+2b}  = [X_b, X_{a+b}] / 2
    X_{a+3b}  = [X_b, X_{a+2b}] / 3
    X_{2a+3b} = [X_a, X_{a+3b}]
and negative ones by the Chevalley involution X -> D^-1 X^T D with
D = diag(1, 1, 1, 2, 1, 1, 1), which sends e_i to f_i.

Basis order: h_alpha, h_beta, then positive roots by height and then
lexicographically on (alpha coefficient, beta coefficient), then the
negatives in the same order.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .errors import InternalConsistencyError, PartitionError
from .exact_matrix import ExactMatrix

Root = Tuple[int, int]

POSITIVE_ROOTS: Tuple[Root, ...] = ((0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (2, 3))
ROOTS: Tuple[Root, ...] = POSITIVE_ROOTS + tuple((-a, -b) for a, b in POSITIVE_ROOTS)

# Representatives of the non-zero orbits as sums of root vectors
ORBIT_REPRESENTATIVES: Dict[str, Tuple[Root, ...]] = {
    "reg": ((1, 0), (0, 1)),
    "subreg": ((1, 2), (0, 1)),
    "short": ((0, 1),),
    "min": ((1, 0),),
}


def _unit(i: int, j: int, value: int = 1) -> Dict[Tuple[int, int], int]:
    return {(i - 1, j - 1): value}


def _from_units(*units: Dict[Tuple[int, int], int]) -> ExactMatrix:
    entries: Dict[Tuple[int, int], int] = {}
    for unit in units:
        for key, value in unit.items():
            entries[key] = entries.get(key, 0) + value
    return ExactMatrix.from_entries(7, 7, entries)


class G2Algebra:
    """
    The 14 basis matrices of g2 in gl(7) and the adjoint action.

    Example:
        >>> g2 = get_g2()
        >>> g2.structure_constant((0, 1), (1, 1))
        Fraction(2, 1)
    """

    def __init__(self):
        x_alpha = _from_units(_unit(2, 3), _unit(5, 6))
        x_beta = _from_units(_unit(1, 2), _unit(3, 4, 2), _unit(4, 5), _unit(6, 7))
        positive: Dict[Root, ExactMatrix] = {(1, 0): x_alpha, (0, 1): x_beta}
        positive[(1, 1)] = x_beta.commutator(x_alpha)
        positive[(1, 2)] = x_beta.commutator(positive[(1, 1)]).scale(Fraction(1, 2))
        positive[(1, 3)] = x_beta.commutator(positive[(1, 2)]).scale(Fraction(1, 3))
        positive[(2, 3)] = x_alpha.commutator(positive[(1, 3)])

        d = ExactMatrix.from_entries(7, 7, {(i, i): 2 if i == 3 else 1 for i in range(7)})
        d_inv = d.inverse()
        vectors: Dict[Root, ExactMatrix] = dict(positive)
        for (a, b), x in positive.items():
            vectors[(-a, -b)] = d_inv @ x.T @ d

        h_alpha = x_alpha.commutator(vectors[(-1, 0)])
        h_beta = x_beta.commutator(vectors[(0, -1)])
        self.labels: List[str] = ["h_alpha", "h_beta"] + [f"X{root}" for root in ROOTS]
        self.basis: List[ExactMatrix] = [h_alpha, h_beta] + [vectors[root] for root in ROOTS]
        self.root_index: Dict[Root, int] = {root: 2 + i for i, root in enumerate(ROOTS)}

        flat = ExactMatrix.from_rows([
            [m.entry(i, j) for m in self.basis] for i in range(7) for j in range(7)
        ])
        if flat.rank() != 14:
            raise InternalConsistencyError("g2 basis matrices are not independent")
        self._flat = flat
        self._left_inverse = (flat.T @ flat).inverse() @ flat.T

    def coordinates(self, x: ExactMatrix) -> List[Fraction]:
        """Coordinates of a 7x7 matrix of g2 in the Chevalley basis."""
        column = ExactMatrix.from_rows([[x.entry(i, j)] for i in range(7) for j in range(7)])
        coords = self._left_inverse @ column
        if self._flat @ coords != column:
            raise InternalConsistencyError("Matrix does not lie in g2")
        return coords.column(0)

    def element(self, coords: Sequence[Fraction]) -> ExactMatrix:
        total = ExactMatrix.zeros(7, 7)
        for c, m in zip(coords, self.basis):
            if c:
                total = total + m.scale(c)
        return total

    def bracket(self, i: int, j: int) -> List[Fraction]:
        return self.coordinates(self.basis[i].commutator(self.basis[j]))

    def ad(self, x: ExactMatrix) -> ExactMatrix:
        """14x14 matrix of ad(x) in the Chevalley basis."""
        columns = [self.coordinates(x.commutator(m)) for m in self.basis]
        return ExactMatrix.from_rows(columns).T

    def structure_constant(self, gamma: Root, delta: Root) -> Fraction:
        """N with [X_gamma, X_delta] = N X_{gamma+delta} (0 if not a root)."""
        target = (gamma[0] + delta[0], gamma[1] + delta[1])
        coords = self.bracket(self.root_index[gamma], self.root_index[delta])
        if target not in self.root_index:
            return Fraction(0)
        return coords[self.root_index[target]]

    def jacobi_defects(self) -> List[Tuple[int, int, int]]:
        """Basis triples on which the Jacobi identity fails (expected empty)."""
        brackets = {
            (i, j): self.bracket(i, j) for i in range(14) for j in range(14)
        }

        def br(vec: Sequence[Fraction], k: int) -> List[Fraction]:
            out = [Fraction(0)] * 14
            for i, c in enumerate(vec):
                if c:
                    for idx, value in enumerate(brackets[(i, k)]):
                        out[idx] += c * value
            return out

        defects = []
        for i, j, k in combinations(range(14), 3):
            total = [a + b + c for a, b, c in zip(
                br(brackets[(i, j)], k), br(brackets[(j, k)], i), br(brackets[(k, i)], j))]
            if any(total):
                defects.append((i, j, k))
        return defects


@lru_cache(maxsize=1)
def get_g2() -> G2Algebra:
    return G2Algebra()


def string_depth(gamma: Root, delta: Root) -> int:
    """Largest p with delta - p*gamma a root."""
    p = 0
    while (delta[0] - (p + 1) * gamma[0], delta[1] - (p + 1) * gamma[1]) in ROOTS:
        p += 1
    return p


def g2_vector_rep(label: str) -> ExactMatrix:
    """
    The representative of the g2 orbit `label` acting on the 7-dimensional
    representation.

    Args:
        label: one of "reg", "subreg", "short", "min" ("zero" gives 0)
    """
    if label == "zero":
        return ExactMatrix.zeros(7, 7)
    if label not in ORBIT_REPRESENTATIVES:
        raise PartitionError(f"Unknown g2 orbit label: {label!r}")
    g2 = get_g2()
    x = ExactMatrix.zeros(7, 7)
    for root in ORBIT_REPRESENTATIVES[label]:
        x = x + g2.basis[g2.root_index[root]]
    return x


def g2_adjoint_rep(label: str) -> ExactMatrix:
    """ad(X) for the representative of the g2 orbit `label`."""
    if label == "zero":
        return ExactMatrix.zeros(14, 14)
    return get_g2().ad(g2_vector_rep(label))
