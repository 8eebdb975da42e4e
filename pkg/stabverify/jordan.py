"""
Jordan types of induced nilpotent actions, computed without matrices.

The building blocks are the Clebsch-Gordan rules for a tensor product of
two regular nilpotents and for the second exterior power of one; spin
representations of so(10) are assembled from a small table of base
Jordan types through the half-spin branching rules.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InternalConsistencyError, PartitionError
from .partitions import AlgebraKind, Partition, admissible

logger = logging.getLogger(__name__)

JordanType = Partition

# Regular nilpotent of so_mu on its spin representation
SPIN_BASE: Dict[int, Tuple[int, ...]] = {
    1: (1,),
    3: (2,),
    5: (4,),
    7: (7, 1),
    9: (11, 5),
}

# Regular nilpotent of sl_nu on (even, odd) exterior powers of C^nu
EXTERIOR_BASE: Dict[int, Tuple[Tuple[int, ...], Tuple[int, ...]]] = {
    1: ((1,), (1,)),
    2: ((1, 1), (2,)),
    3: ((3, 1), (3, 1)),
    4: ((5, 1, 1, 1), (4, 4)),
}

BASE_TABLE: Dict[Tuple[str, str], JordanType] = {}
for _mu, _blocks in SPIN_BASE.items():
    BASE_TABLE[(f"so({_mu})", "spin")] = Partition(_blocks)
for _nu, (_even, _odd) in EXTERIOR_BASE.items():
    BASE_TABLE[(f"sl({_nu})", "even")] = Partition(_even)
    BASE_TABLE[(f"sl({_nu})", "odd")] = Partition(_odd)


def tensor_regular(u: int, v: int) -> JordanType:
    """
    Jordan type of J_u (x) 1 + 1 (x) J_v.

    Returns:
        Blocks u-v+1, u-v+3, ..., u+v-1 (v of them, after u >= v)

    Example:
        >>> tensor_regular(4, 2)
        Partition(parts=(5, 3))
    """
    if u < 1 or v < 1:
        raise ValueError(f"Block sizes must be positive, got {u}, {v}")
    if u < v:
        u, v = v, u
    return Partition(tuple(range(u + v - 1, u - v, -2)))


def wedge2_regular(u: int) -> JordanType:
    """
    Jordan type of J_u acting on the second exterior power.

    Even u gives 1, 5, ..., 2u-3; odd u gives 3, 7, ..., 2u-3.
    """
    if u < 2:
        raise ValueError(f"wedge2_regular needs u >= 2, got {u}")
    start = 1 if u % 2 == 0 else 3
    return Partition.of(range(start, 2 * u - 2, 4))


def _tensor_lists(a: Iterable[int], b: Sequence[int]) -> List[int]:
    blocks: List[int] = []
    for x in a:
        for y in b:
            blocks.extend(tensor_regular(x, y))
    return blocks


def tensor(a: JordanType, b: JordanType) -> JordanType:
    """Multiset union of tensor_regular over all pairs of blocks."""
    return Partition.of(_tensor_lists(a, list(b)))


def wedge2(a: JordanType) -> JordanType:
    """
    Jordan type on the second exterior power of a nilpotent of type a.

    Blocks of size 1 add nothing to the pure wedge part.
    """
    blocks: List[int] = []
    parts = a.to_list()
    for i, x in enumerate(parts):
        if x >= 2:
            blocks.extend(wedge2_regular(x))
        for y in parts[i + 1:]:
            blocks.extend(tensor_regular(x, y))
    return Partition.of(blocks)


# A factor is ("so", mu) for an odd part or ("sl", nu) for a pair of equal
# even parts.
Factor = Tuple[str, int]


def spin_factors(p: Partition) -> List[Factor]:
    """Split an so(n) partition into odd-part and paired even-part factors."""
    factors: List[Factor] = [("so", part) for part in p if part % 2 == 1]
    for size, count in sorted(p.block_counts().items(), reverse=True):
        if size % 2 == 0:
            factors.extend([("sl", size)] * (count // 2))
    return factors


def _spin_base(mu: int) -> List[int]:
    if mu not in SPIN_BASE:
        raise PartitionError(f"No spin base entry for so({mu})")
    return list(SPIN_BASE[mu])


def _exterior_base(nu: int, chirality: int) -> List[int]:
    if nu not in EXTERIOR_BASE:
        raise PartitionError(f"No exterior base entry for sl({nu})")
    even, odd = EXTERIOR_BASE[nu]
    return list(even if chirality > 0 else odd)


def _restrict_half_spin(factors: List[Factor], chirality: int) -> List[int]:
    """Blocks of the half-spin module of chirality +-1 restricted to factors."""
    if not factors:
        return [1] if chirality > 0 else []
    head, rest = factors[0], factors[1:]
    if head[0] == "sl":
        result = _tensor_lists(_exterior_base(head[1], +1), _restrict_half_spin(rest, chirality))
        result += _tensor_lists(_exterior_base(head[1], -1), _restrict_half_spin(rest, -chirality))
        return result
    partner = next((i for i, f in enumerate(rest) if f[0] == "so"), None)
    if partner is None:
        raise InternalConsistencyError("Odd factors must come in pairs")
    rest = rest[:partner] + rest[partner + 1:]
    pair = _tensor_lists(_spin_base(head[1]), _spin_base(factors[partner + 1][1]))
    full_rest = _restrict_half_spin(rest, +1) + _restrict_half_spin(rest, -1)
    # both chiralities restrict to the same module once an odd pair is split off
    return _tensor_lists(pair, full_rest)


def spin_compose(p: Partition, order: Optional[Sequence[int]] = None) -> JordanType:
    """
    Jordan type of the representative X_p of so(10) on the half-spin module.

    Args:
        p: admissible so(10) partition
        order: optional permutation of the factor list, changing the order
            in which the branching recursion peels factors

    Raises:
        PartitionError: If p is not an so(10) orbit label
    """
    k = AlgebraKind.so(10)
    if not admissible(p, k):
        raise PartitionError(f"{p} is not a nilpotent orbit label of {k}")
    factors = spin_factors(p)
    if order is not None:
        if sorted(order) != list(range(len(factors))):
            raise ValueError(f"order must permute range({len(factors)})")
        factors = [factors[i] for i in order]
    blocks = _restrict_half_spin(factors, +1)
    if sum(blocks) != 16:
        raise InternalConsistencyError(f"Half-spin composition for {p} has size {sum(blocks)}")
    logger.debug("spin_compose %s via %s -> %s", p, factors, sorted(blocks, reverse=True))
    return Partition.of(blocks)
