"""
Partition arithmetic and nilpotent-orbit bookkeeping.

A Partition doubles as a Jordan type and as the label of a nilpotent
orbit in sl_n, sp_2n or so_n. The exceptional algebra g2 has no partition
calculus; its orbits carry symbolic labels with a fixed dimension table.
"""

import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Tuple, Union

from .errors import PartitionError


G2_ORBITS: Tuple[str, ...] = ("reg", "subreg", "short", "min", "zero")
G2_ORBIT_DIMS: Dict[str, int] = {"reg": 12, "subreg": 10, "short": 8, "min": 6, "zero": 0}


@dataclass(frozen=True)
class Partition:
    """
    Weakly decreasing tuple of positive integers.

    Attributes:
        parts: the parts, largest first

    Example:
        >>> Partition((4, 2)).dual()
        Partition(parts=(2, 2, 1, 1))
    """
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        for value in parts:
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise PartitionError(f"Parts must be positive integers, got {list(parts)}")
        for left, right in zip(parts, parts[1:]):
            if left < right:
                raise PartitionError(f"Parts must be weakly decreasing, got {list(parts)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, values: Iterable[int]) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(tuple(sorted((int(v) for v in values), reverse=True)))

    @classmethod
    def from_block_counts(cls, counts: Dict[int, int]) -> "Partition":
        """Inverse of block_counts()."""
        parts: List[int] = []
        for size, count in counts.items():
            if count < 0:
                raise PartitionError(f"Negative block count for size {size}")
            parts.extend([size] * count)
        return cls.of(parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """
        Parse labels such as "3^2,2,1", "[3,3,2,1]" or "1^10".

        Raises:
            PartitionError: If the text is not a partition label
        """
        body = text.strip().strip("[]()").replace(" ", "")
        if not body:
            raise PartitionError("Empty partition label")
        parts: List[int] = []
        for token in body.split(","):
            match = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if match is None:
                raise PartitionError(f"Cannot parse partition label: {text!r}")
            size = int(match.group(1))
            repeat = int(match.group(2) or 1)
            parts.extend([size] * repeat)
        return cls.of(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        chunks = []
        for size, count in sorted(Counter(self.parts).items(), reverse=True):
            chunks.append(str(size) if count == 1 else f"{size}^{count}")
        return ",".join(chunks)

    def to_list(self) -> List[int]:
        return list(self.parts)

    def dual(self) -> "Partition":
        """Conjugate partition (transpose of the Young diagram)."""
        if not self.parts:
            return self
        return Partition(tuple(
            sum(1 for part in self.parts if part >= row)
            for row in range(1, self.parts[0] + 1)
        ))

    def block_counts(self) -> Dict[int, int]:
        """Map size k -> number b_k of parts equal to k."""
        return dict(Counter(self.parts))

    def partial_sums(self) -> List[int]:
        """
        The sequence beta_1, ..., beta_q with beta_p = b_q + ... + b_p.

        beta_p is the number of parts of size at least p, so this is the
        dual partition; index 0 holds beta_1.
        """
        return list(self.dual().parts)

    def multiplicity(self, size: int) -> int:
        return sum(1 for part in self.parts if part == size)

    @property
    def n_odd(self) -> int:
        """Number of odd parts counted with multiplicity."""
        return sum(1 for part in self.parts if part % 2 == 1)

    def is_refinement_of(self, other: "Partition") -> bool:
        """
        True if this partition splits each part of `other` into pieces.

        Decided by exhaustive assignment; fine for sizes used here.
        """
        if self.size != other.size:
            return False
        pieces = list(self.parts)
        bins = list(other.parts)

        def place(index: int, room: List[int]) -> bool:
            if index == len(pieces):
                return all(r == 0 for r in room)
            seen = set()
            for slot, free in enumerate(room):
                if free >= pieces[index] and (free, bins[slot]) not in seen:
                    seen.add((free, bins[slot]))
                    room[slot] -= pieces[index]
                    if place(index + 1, room):
                        room[slot] += pieces[index]
                        return True
                    room[slot] += pieces[index]
            return False

        return place(0, list(bins))


OrbitLabel = Union[Partition, str]


@dataclass(frozen=True)
class AlgebraKind:
    """
    One of sl(n), sp(2n), so(n) or g2.

    Attributes:
        tag: "sl", "sp", "so" or "g2"
        n: dimension of the defining representation (7 for g2)
    """
    tag: str
    n: int

    def __post_init__(self):
        if self.tag not in ("sl", "sp", "so", "g2"):
            raise ValueError(f"Unknown algebra tag: {self.tag}")
        if self.n < 1:
            raise ValueError(f"Ambient dimension must be positive, got {self.n}")
        if self.tag == "sp" and self.n % 2 != 0:
            raise ValueError(f"sp requires an even ambient dimension, got {self.n}")
        if self.tag == "g2" and self.n != 7:
            raise ValueError("g2 is realized on its 7-dimensional representation")

    @classmethod
    def sl(cls, n: int) -> "AlgebraKind":
        return cls("sl", n)

    @classmethod
    def sp(cls, n: int) -> "AlgebraKind":
        return cls("sp", n)

    @classmethod
    def so(cls, n: int) -> "AlgebraKind":
        return cls("so", n)

    @classmethod
    def g2(cls) -> "AlgebraKind":
        return cls("g2", 7)

    @classmethod
    def parse(cls, text: str) -> "AlgebraKind":
        """Parse "sl(6)", "sp(6)", "so(10)" or "g2"."""
        text = text.strip().lower()
        if text == "g2":
            return cls.g2()
        match = re.fullmatch(r"(sl|sp|so)\((\d+)\)", text)
        if match is None:
            raise ValueError(f"Cannot parse algebra: {text!r}")
        return cls(match.group(1), int(match.group(2)))

    @property
    def dimension(self) -> int:
        """Dimension of the Lie algebra."""
        if self.tag == "sl":
            return self.n * self.n - 1
        if self.tag == "sp":
            return self.n * (self.n + 1) // 2
        if self.tag == "so":
            return self.n * (self.n - 1) // 2
        return 14

    def __str__(self) -> str:
        return "g2" if self.tag == "g2" else f"{self.tag}({self.n})"


def dual(p: Partition) -> Partition:
    """Conjugate partition; dual(dual(p)) == p."""
    return p.dual()


def _check_size(p: Partition, k: AlgebraKind) -> None:
    if p.size != k.n:
        raise PartitionError(f"Partition {p} has size {p.size}, {k} needs {k.n}")


def admissible(p: Partition, k: AlgebraKind) -> bool:
    """
    True iff p labels a nilpotent orbit of k.

    sl: always. sp: odd parts have even multiplicity. so: even parts have
    even multiplicity. g2 orbits are not partition-labeled, so always False.

    Raises:
        PartitionError: If the size of p differs from the ambient dimension
    """
    _check_size(p, k)
    if k.tag == "g2":
        return False
    if k.tag == "sl":
        return True
    parity = 1 if k.tag == "sp" else 0
    counts = p.block_counts()
    return all(count % 2 == 0 for size, count in counts.items() if size % 2 == parity)


def orbit_dim(p: OrbitLabel, k: AlgebraKind) -> int:
    """
    Dimension of the nilpotent orbit labeled p inside k.

    Args:
        p: Partition for classical algebras, symbolic label for g2
        k: Algebra

    Returns:
        sl_n: n^2 - sum(dual_i^2); sp: dim - (sum(dual_i^2) + n_odd)/2;
        so: dim - (sum(dual_i^2) - n_odd)/2; g2: table value

    Example:
        >>> orbit_dim(Partition((4, 2)), AlgebraKind.sp(6))
        16
    """
    if k.tag == "g2":
        if not isinstance(p, str) or p not in G2_ORBIT_DIMS:
            raise PartitionError(f"Unknown g2 orbit label: {p!r}")
        return G2_ORBIT_DIMS[p]
    if not isinstance(p, Partition):
        raise PartitionError(f"{k} orbits are labeled by partitions, got {p!r}")
    if not admissible(p, k):
        raise PartitionError(f"{p} is not a nilpotent orbit label of {k}")
    squares = sum(part * part for part in p.dual())
    if k.tag == "sl":
        return k.n * k.n - squares
    if k.tag == "sp":
        return k.dimension - (squares + p.n_odd) // 2
    return k.dimension - (squares - p.n_odd) // 2


def orbit_codim(p: OrbitLabel, k: AlgebraKind) -> int:
    """Codimension of the orbit in the algebra (centralizer dimension)."""
    return k.dimension - orbit_dim(p, k)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, largest parts first (reverse lexicographic)."""
    def build(remaining: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in build(remaining - first, first):
                yield (first,) + rest

    for parts in build(n, n):
        yield Partition(parts)


def enumerate_orbits(k: AlgebraKind) -> List[OrbitLabel]:
    """
    Complete list of nilpotent orbit labels of k, zero orbit included.

    Returns:
        Partitions in reverse lexicographic order, or the g2 labels
    """
    if k.tag == "g2":
        return list(G2_ORBITS)
    return [p for p in partitions_of(k.n) if admissible(p, k)]


def is_zero_orbit(label: OrbitLabel) -> bool:
    if isinstance(label, str):
        return label == "zero"
    return all(part == 1 for part in label)


def label_to_str(label: OrbitLabel) -> str:
    return label if isinstance(label, str) else str(label)


def parse_label(text: str, k: AlgebraKind) -> OrbitLabel:
    """Parse an orbit label for k (symbolic for g2, partition otherwise)."""
    if k.tag == "g2":
        if text not in G2_ORBIT_DIMS:
            raise PartitionError(f"Unknown g2 orbit label: {text!r}")
        return text
    return Partition.parse(text)
