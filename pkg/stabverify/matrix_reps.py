"""
Exact matrix realizations of nilpotent representatives and of the
representations V_g they act on.

The Jordan type read off from ranks of powers is the independent oracle
against which the Clebsch-Gordan calculus of stabverify.jordan and the
catalogued tables are checked.
"""

import logging
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    InternalConsistencyError,
    NotNilpotentError,
    PartitionError,
    RepresentationError,
)
from .exact_matrix import ExactMatrix, Scalar
from .partitions import AlgebraKind, OrbitLabel, Partition, admissible

logger = logging.getLogger(__name__)


class RepTag(Enum):
    """Representations V_g (and the defining one) a representative can act on."""
    VECTOR = "vector"
    WEDGE2 = "wedge2"
    LAMBDA3_KERNEL = "lambda3_kernel"
    HALF_SPIN = "half_spin"
    G2_ADJOINT = "g2_adjoint"

    @property
    def dimension(self) -> Optional[int]:
        """Dimension of V for the fixed genus sizes; None for VECTOR."""
        return {
            RepTag.WEDGE2: 15,
            RepTag.LAMBDA3_KERNEL: 14,
            RepTag.HALF_SPIN: 16,
            RepTag.G2_ADJOINT: 14,
        }.get(self)


# ---------------------------------------------------------------------------
# Jordan type oracle
# ---------------------------------------------------------------------------

def jordan_type(m: ExactMatrix) -> Partition:
    """
    Jordan type of a nilpotent matrix from the ranks of its powers.

    The number of blocks of size k is r_{k-1} - 2 r_k + r_{k+1} with
    r_k = rank(M^k).

    Raises:
        NotNilpotentError: If M is not square or M^n != 0

    Example:
        >>> jordan_type(ExactMatrix.zeros(3, 3))
        Partition(parts=(1, 1, 1))
    """
    if not m.is_square:
        raise NotNilpotentError(f"Jordan type needs a square matrix, got {m.shape}")
    n = m.rows
    ranks = [n]
    power = ExactMatrix.identity(n)
    while ranks[-1] > 0:
        if len(ranks) > n:
            raise NotNilpotentError("Matrix is not nilpotent")
        power = power @ m
        rank = power.rank()
        if rank >= ranks[-1]:
            raise NotNilpotentError("Matrix is not nilpotent")
        ranks.append(rank)
    ranks.append(0)
    counts = {
        k: ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
        for k in range(1, len(ranks) - 1)
    }
    return Partition.from_block_counts({k: c for k, c in counts.items() if c})


# ---------------------------------------------------------------------------
# Bilinear forms
# ---------------------------------------------------------------------------

def symplectic_form(n: int) -> ExactMatrix:
    """
    Gram matrix of omega in the basis e_1..e_r, e_-r..e_-1 (n = 2r).

    omega(e_i, e_-i) = 1.
    """
    if n % 2:
        raise ValueError(f"Symplectic form needs even dimension, got {n}")
    entries = {}
    for i in range(n // 2):
        entries[(i, n - 1 - i)] = 1
        entries[(n - 1 - i, i)] = -1
    return ExactMatrix.from_entries(n, n, entries)


def split_form(n: int) -> ExactMatrix:
    """
    Gram matrix of Q in the basis e_1..e_r, f_1..f_r (and u if n is odd).

    Q(e_i, f_i) = 1, Q(u, u) = 1.
    """
    r = n // 2
    entries: Dict[Tuple[int, int], Scalar] = {}
    for i in range(r):
        entries[(i, r + i)] = 1
        entries[(r + i, i)] = 1
    if n % 2:
        entries[(n - 1, n - 1)] = 1
    return ExactMatrix.from_entries(n, n, entries)


def preserves_form(x: ExactMatrix, form: ExactMatrix) -> bool:
    """X^T Q + Q X == 0."""
    return (x.T @ form + form @ x).is_zero


def form_for(k: AlgebraKind) -> Optional[ExactMatrix]:
    if k.tag == "sp":
        return symplectic_form(k.n)
    if k.tag == "so":
        return split_form(k.n)
    return None


# ---------------------------------------------------------------------------
# Nilpotent representatives
# ---------------------------------------------------------------------------

class _ChainBuilder:
    """Collects X(v) = w for a basis of working vectors given in ambient coordinates."""

    def __init__(self, n: int):
        self.n = n
        self.sources: List[List[Fraction]] = []
        self.images: List[List[Fraction]] = []

    def unit(self, index: int, scale: Scalar = 1) -> List[Fraction]:
        vector = [Fraction(0)] * self.n
        vector[index] = Fraction(scale)
        return vector

    def set(self, source: List[Fraction], image: Optional[List[Fraction]]) -> None:
        self.sources.append(source)
        self.images.append(image if image is not None else [Fraction(0)] * self.n)

    def matrix(self) -> ExactMatrix:
        if len(self.sources) != self.n:
            raise InternalConsistencyError(
                f"Representative defined on {len(self.sources)} of {self.n} basis vectors")
        basis = ExactMatrix.from_rows(self.sources).T
        images = ExactMatrix.from_rows(self.images).T
        return images @ basis.inverse()


def _scaled(vector: List[Fraction], factor: Scalar) -> List[Fraction]:
    return [Fraction(factor) * x for x in vector]


def _sl_representative(p: Partition) -> ExactMatrix:
    entries = {}
    start = 0
    for part in p:
        for j in range(part - 1):
            entries[(start + j, start + j + 1)] = 1
        start += part
    return ExactMatrix.from_entries(p.size, p.size, entries)


def _sp_representative(p: Partition) -> ExactMatrix:
    n = p.size
    r = n // 2
    builder = _ChainBuilder(n)
    pos = lambda i: builder.unit(i)              # e_{i+1}
    neg = lambda i: builder.unit(n - 1 - i)      # e_{-(i+1)}
    cursor = 0
    # odd parts pair up into sl_mu inside sp_{2 mu}; they take the first pairs
    for size, count in sorted(p.block_counts().items()):
        if size % 2 == 0:
            continue
        for _ in range(count // 2):
            pairs = list(range(cursor, cursor + size))
            cursor += size
            for j, idx in enumerate(pairs):
                builder.set(pos(idx), pos(pairs[j - 1]) if j else None)
                builder.set(neg(idx), _scaled(neg(pairs[j + 1]), -1) if j + 1 < size else None)
    for part in p:
        if part % 2:
            continue
        k = part // 2
        pairs = list(range(cursor, cursor + k))
        cursor += k
        for j, idx in enumerate(pairs):
            builder.set(pos(idx), pos(pairs[j - 1]) if j else None)
            if j + 1 < k:
                builder.set(neg(idx), _scaled(neg(pairs[j + 1]), -1))
            else:
                builder.set(neg(idx), pos(idx))
    if cursor != r:
        raise InternalConsistencyError(f"Used {cursor} of {r} symplectic pairs for {p}")
    return builder.matrix()


def _so_representative(p: Partition) -> ExactMatrix:
    n = p.size
    r = n // 2
    builder = _ChainBuilder(n)
    e = lambda i: builder.unit(i)
    f = lambda i: builder.unit(r + i)
    cursor = 0

    even_pairs = []
    for size, count in sorted(p.block_counts().items(), reverse=True):
        if size % 2 == 0:
            even_pairs.extend([size] * (count // 2))
    for nu in even_pairs:
        pairs = list(range(cursor, cursor + nu))
        cursor += nu
        for j, idx in enumerate(pairs):
            builder.set(e(idx), e(pairs[j - 1]) if j else None)
            builder.set(f(idx), _scaled(f(pairs[j + 1]), -1) if j + 1 < nu else None)

    odd_parts = [part for part in p if part % 2 == 1]
    chains = []
    for mu in odd_parts:
        k = mu // 2
        chains.append(list(range(cursor, cursor + k)))
        cursor += k

    # anisotropic middle vectors: pairs of them span one hyperbolic plane as
    # e + f/2 (norm 1) and e - f/2 (norm -1); a leftover uses the basis vector u
    anisotropic: List[Tuple[List[Fraction], int]] = []
    for i in range(0, len(odd_parts) - 1, 2):
        plane = cursor
        cursor += 1
        anisotropic.append(([a + Fraction(1, 2) * b for a, b in zip(e(plane), f(plane))], 1))
        anisotropic.append(([a - Fraction(1, 2) * b for a, b in zip(e(plane), f(plane))], -1))
    if len(odd_parts) % 2:
        anisotropic.append((builder.unit(n - 1), 1))
    if cursor != r:
        raise InternalConsistencyError(f"Used {cursor} of {r} hyperbolic pairs for {p}")

    for chain, (u, norm) in zip(chains, anisotropic):
        k = len(chain)
        for j, idx in enumerate(chain):
            builder.set(e(idx), e(chain[j - 1]) if j else None)
            if j + 1 < k:
                builder.set(f(idx), _scaled(f(chain[j + 1]), -1))
            else:
                builder.set(f(idx), _scaled(u, -norm))
        builder.set(u, e(chain[-1]) if k else None)
    return builder.matrix()


def representative(label: OrbitLabel, k: AlgebraKind) -> ExactMatrix:
    """
    A nilpotent representative of the orbit `label` in k.

    Classical algebras act on their defining representation; g2 returns
    the adjoint matrix of stabverify.g2.

    Raises:
        PartitionError: If the label is not an orbit of k
        InternalConsistencyError: If the construction leaves the algebra
            or has the wrong Jordan type
    """
    if k.tag == "g2":
        from .g2 import g2_adjoint_rep
        if not isinstance(label, str):
            raise PartitionError(f"g2 orbits have symbolic labels, got {label!r}")
        return g2_adjoint_rep(label)
    if not isinstance(label, Partition) or not admissible(label, k):
        raise PartitionError(f"{label} is not a nilpotent orbit label of {k}")
    if k.tag == "sl":
        x = _sl_representative(label)
    elif k.tag == "sp":
        x = _sp_representative(label)
    else:
        x = _so_representative(label)
    form = form_for(k)
    if form is not None and not preserves_form(x, form):
        raise InternalConsistencyError(f"Representative of {label} is not in {k}")
    found = jordan_type(x)
    if found != label:
        raise InternalConsistencyError(f"Representative of {label} has Jordan type {found}")
    return x


# ---------------------------------------------------------------------------
# Induced actions
# ---------------------------------------------------------------------------

def _sorted_with_sign(items: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sort distinct indices, returning the permutation sign."""
    values = list(items)
    sign = 1
    for i in range(len(values)):
        for j in range(len(values) - 1 - i):
            if values[j] > values[j + 1]:
                values[j], values[j + 1] = values[j + 1], values[j]
                sign = -sign
    return sign, tuple(values)


def exterior_basis(n: int, k: int) -> List[Tuple[int, ...]]:
    return list(combinations(range(n), k))


def exterior_power(m: ExactMatrix, k: int) -> ExactMatrix:
    """Derivation action of M on the k-th exterior power (Leibniz rule)."""
    n = m.rows
    basis = exterior_basis(n, k)
    index = {subset: i for i, subset in enumerate(basis)}
    rows = m.to_rows()
    entries: Dict[Tuple[int, int], Fraction] = {}
    for col, subset in enumerate(basis):
        for slot, source in enumerate(subset):
            for target in range(n):
                value = rows[target][source]
                if not value or (target in subset and target != source):
                    continue
                replaced = list(subset)
                replaced[slot] = target
                sign, key = _sorted_with_sign(replaced)
                pos = (index[key], col)
                entries[pos] = entries.get(pos, Fraction(0)) + sign * value
    return ExactMatrix.from_entries(len(basis), len(basis), entries)


def lambda3_kernel_basis() -> ExactMatrix:
    """
    20x14 matrix whose columns span ker(Lambda^3 C^6 -> C^6) under omega.

    Columns: the eight f_{+-+-+-} = e_{+-1} ^ e_{+-2} ^ e_{+-3}, then
    g_1, g_2, g_3, g_-1, g_-2, g_-3 with
    g_k = e_k ^ (e_k' ^ e_-k' - e_k'' ^ e_-k'') for (k, k', k'') cyclic.
    """
    n = 6
    basis = exterior_basis(n, 3)
    index = {subset: i for i, subset in enumerate(basis)}
    vec = lambda i: i - 1 if i > 0 else n + i        # e_i -> basis index

    def wedge(*labels: int) -> Dict[int, int]:
        sign, key = _sorted_with_sign([vec(i) for i in labels])
        return {index[key]: sign}

    columns: List[Dict[int, int]] = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                columns.append(wedge(s1, 2 * s2, 3 * s3))
    for sign in (1, -1):
        for k, k1, k2 in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
            column = dict(wedge(sign * k, k1, -k1))
            for row, value in wedge(sign * k, k2, -k2).items():
                column[row] = column.get(row, 0) - value
            columns.append(column)
    entries = {(row, col): value for col, column in enumerate(columns)
               for row, value in column.items() if value}
    return ExactMatrix.from_entries(len(basis), len(columns), entries)


def omega_contraction() -> ExactMatrix:
    """6x20 matrix of a^b^c -> w(a,b)c - w(a,c)b + w(b,c)a."""
    n = 6
    omega = symplectic_form(n).to_rows()
    basis = exterior_basis(n, 3)
    entries: Dict[Tuple[int, int], Fraction] = {}
    for col, (a, b, c) in enumerate(basis):
        for coeff, target in ((omega[a][b], c), (-omega[a][c], b), (omega[b][c], a)):
            if coeff:
                entries[(target, col)] = entries.get((target, col), Fraction(0)) + coeff
    return ExactMatrix.from_entries(n, len(basis), entries)


def _restrict_to_subspace(action: ExactMatrix, basis: ExactMatrix) -> ExactMatrix:
    """Matrix of `action` on the invariant column span of `basis`."""
    gram = basis.T @ basis
    restricted = gram.inverse() @ basis.T @ action @ basis
    if basis @ restricted != action @ basis:
        raise RepresentationError("Subspace is not invariant under the action")
    return restricted


# -- spin module ------------------------------------------------------------

SPIN_RANK = 5


def spin_basis(rank: int = SPIN_RANK, parity: Optional[int] = 0) -> List[Tuple[int, ...]]:
    """Subsets of {0..rank-1} ordered by size then lexicographically."""
    sizes = range(rank + 1)
    if parity is not None:
        sizes = [s for s in sizes if s % 2 == parity]
    return [subset for size in sizes for subset in combinations(range(rank), size)]


def clifford_action(vector: Sequence[Scalar], rank: int = SPIN_RANK) -> ExactMatrix:
    """
    Action of v = a + alpha on the full exterior algebra of E.

    The E-part acts by a ^ (-), the F-part by contraction with Q.
    Coordinates of v are (a_1..a_r, alpha_1..alpha_r) in the split basis.
    """
    basis = spin_basis(rank, parity=None)
    index = {subset: i for i, subset in enumerate(basis)}
    entries: Dict[Tuple[int, int], Fraction] = {}
    coords = [Fraction(x) for x in vector]
    for col, subset in enumerate(basis):
        for i in range(rank):
            sign = -1 if sum(1 for s in subset if s < i) % 2 else 1
            if coords[i] and i not in subset:
                row = index[tuple(sorted(subset + (i,)))]
                entries[(row, col)] = entries.get((row, col), Fraction(0)) + sign * coords[i]
            if coords[rank + i] and i in subset:
                row = index[tuple(s for s in subset if s != i)]
                entries[(row, col)] = (entries.get((row, col), Fraction(0))
                                       + sign * coords[rank + i])
    size = len(basis)
    return ExactMatrix.from_entries(size, size, entries)


def so_bivector(x: Sequence[Scalar], y: Sequence[Scalar], n: int = 2 * SPIN_RANK) -> ExactMatrix:
    """The element v -> Q(y, v) x - Q(x, v) y of so(n) for the split form."""
    q = split_form(n)
    col_x = ExactMatrix.from_rows([[v] for v in x])
    col_y = ExactMatrix.from_rows([[v] for v in y])
    return col_x @ (col_y.T @ q) - col_y @ (col_x.T @ q)


def _half_spin(m: ExactMatrix) -> ExactMatrix:
    rank = m.rows // 2
    rows = m.to_rows()
    full = spin_basis(rank, parity=None)
    even = spin_basis(rank, parity=0)
    unit = lambda i: [1 if j == i else 0 for j in range(2 * rank)]
    ops = [clifford_action(unit(i), rank) for i in range(2 * rank)]
    size = len(full)
    total = ExactMatrix.zeros(size, size)
    for i in range(rank):
        for j in range(rank):
            c = rows[i][j]
            if c:
                term = ops[i] @ ops[rank + j]
                if i == j:
                    term = term - ExactMatrix.identity(size).scale(Fraction(1, 2))
                total = total + term.scale(c)
            if i < j:
                a = rows[i][rank + j]
                if a:
                    total = total + (ops[i] @ ops[j]).scale(a)
                b = rows[rank + i][j]
                if b:
                    total = total + (ops[rank + i] @ ops[rank + j]).scale(b)
    positions = [full.index(subset) for subset in even]
    picked = total.to_rows()
    return ExactMatrix.from_rows([[picked[r][c] for c in positions] for r in positions])


def induce(m: ExactMatrix, tag: RepTag) -> ExactMatrix:
    """
    Matrix of the action induced by M on the representation `tag`.

    Args:
        m: element of sl(6), sp(6), so(10) or (for G2_ADJOINT) an adjoint matrix
        tag: target representation

    Raises:
        RepresentationError: If M is not in the required algebra
        InternalConsistencyError: If the kernel basis has the wrong dimension
    """
    if tag in (RepTag.VECTOR, RepTag.G2_ADJOINT):
        return m
    if tag is RepTag.WEDGE2:
        return exterior_power(m, 2)
    if tag is RepTag.LAMBDA3_KERNEL:
        if m.shape != (6, 6) or not preserves_form(m, symplectic_form(6)):
            raise RepresentationError("lambda3_kernel needs an element of sp(6)")
        basis = lambda3_kernel_basis()
        if basis.rank() != 14 or not (omega_contraction() @ basis).is_zero:
            raise InternalConsistencyError("Kernel basis of Lambda^3 C^6 is not 14-dimensional")
        return _restrict_to_subspace(exterior_power(m, 3), basis)
    if tag is RepTag.HALF_SPIN:
        if m.shape != (10, 10) or not preserves_form(m, split_form(10)):
            raise RepresentationError("half_spin needs an element of so(10)")
        return _half_spin(m)
    raise ValueError(f"Unsupported representation: {tag}")
