"""
Bounded search over semisimple strata by successive collapsings.

Starting from the generic torus element, the scan imposes relations
chi = 1 for characters chi that are still non-constant, where chi runs
through the weight differences and the roots. A relation on a root is a
degeneration (the conjugacy class shrinks, eigenspaces stay) and costs
nothing; any other relation is a collapsing (two eigenvalues merge) and
costs one unit of depth. Strata are deduplicated up to the Weyl group by
a canonical key, the lexicographically smallest code pattern of the
characters over all Weyl images.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import FanOutExceeded, ScanCapExceeded
from .partitions import Partition
from .reports import CheckReport, Verdict, exceptional_ms
from .torus import (
    DEFAULT_MAX_ORDER,
    Infeasible,
    Substitution,
    WeightSystem,
    character_codes,
    check_stratum,
    class_dim,
    impose_character,
    multiplicities,
)

if TYPE_CHECKING:
    from .catalog import GenusConfig

logger = logging.getLogger(__name__)

CanonicalKey = Tuple[int, ...]


DEFAULT_DEPTH = 3
# g8.1 needs four independent collapsings in the GL6 torus
GENUS_DEPTHS = {8: 4}


@dataclass
class ScanOptions:
    """
    Knobs of collapse_scan.

    Attributes:
        depth: maximal number of collapsings; None for the genus default
            (4 for genus 8, 3 otherwise)
        node_cap: maximal number of expanded nodes before giving up
        max_root_order: largest order of roots of unity a relation may introduce
    """
    depth: Optional[int] = None
    node_cap: int = 1_000_000
    max_root_order: int = DEFAULT_MAX_ORDER

    def __post_init__(self):
        if self.depth is not None and self.depth < 0:
            raise ValueError(f"Depth must be non-negative, got {self.depth}")
        if self.node_cap < 1:
            raise ValueError(f"Node cap must be positive, got {self.node_cap}")
        if self.max_root_order < 1:
            raise ValueError(f"Root order cap must be positive, got {self.max_root_order}")

    @property
    def resolved_depth(self) -> int:
        return self.depth if self.depth is not None else DEFAULT_DEPTH

    def for_genus(self, g: int) -> "ScanOptions":
        """A copy whose depth is the explicit one or the default of genus g."""
        if self.depth is not None:
            return self
        return replace(self, depth=GENUS_DEPTHS.get(g, DEFAULT_DEPTH))


def weyl_closure(generators: Sequence[np.ndarray], limit: int = 100_000) -> List[np.ndarray]:
    """
    All products of the generators, identity first.

    Raises:
        ValueError: If the group has more than `limit` elements
    """
    if not generators:
        raise ValueError("Weyl group needs at least one generator")
    r = generators[0].shape[0]
    identity = np.eye(r, dtype=np.int64)
    elements = [identity]
    seen = {identity.tobytes()}
    frontier = [identity]
    while frontier:
        fresh = []
        for element in frontier:
            for generator in generators:
                product = generator @ element
                key = product.tobytes()
                if key not in seen:
                    seen.add(key)
                    elements.append(product)
                    fresh.append(product)
        if len(elements) > limit:
            raise ValueError(f"Weyl group exceeds {limit} elements")
        frontier = fresh
    return elements


class CharacterTable:
    """
    Weight differences and roots with both signs, and their Weyl permutations.

    Attributes:
        characters: D x r array, sorted lexicographically
        is_root: boolean mask over characters
        representatives: indices of one character per +/- pair
        permutations: |W| x D array; row w maps i to the index of W_w chi_i
    """

    def __init__(self, torus: WeightSystem):
        rows = {tuple(int(x) for x in torus.roots[i]) for i in range(len(torus.roots))}
        weights = torus.weights
        for a in range(len(weights)):
            for b in range(len(weights)):
                diff = tuple(int(x) for x in weights[a] - weights[b])
                if any(diff):
                    rows.add(diff)
        for row in list(rows):
            rows.add(tuple(-x for x in row))
        ordered = sorted(rows)
        self.characters = np.array(ordered, dtype=np.int64).reshape(len(ordered), torus.coordinates)
        index = {row: i for i, row in enumerate(ordered)}
        roots = {tuple(int(x) for x in r) for r in torus.roots}
        self.is_root = np.array([row in roots for row in ordered], dtype=bool)
        self.representatives = np.array(
            [i for i, row in enumerate(ordered) if row > tuple(-x for x in row)], dtype=np.int64)

        self.weyl = weyl_closure(torus.weyl_generators)
        table = np.empty((len(self.weyl), len(ordered)), dtype=np.int64)
        for w, matrix in enumerate(self.weyl):
            images = self.characters @ matrix.T
            for i, image in enumerate(images):
                key = tuple(int(x) for x in image)
                if key not in index:
                    raise ValueError(f"Character set is not Weyl stable: {key}")
                table[w, i] = index[key]
        self.permutations = table

    def __len__(self) -> int:
        return int(self.characters.shape[0])

    def codes(self, s: Substitution) -> np.ndarray:
        return character_codes(s, self.characters)

    def canonical_key(self, s: Substitution) -> CanonicalKey:
        """
        Weyl-invariant key of a substitution.

        The code of s' = w.s at chi is the code of s at W_w chi, so each
        permutation row gives the code pattern of one Weyl image.
        """
        codes = self.codes(s)
        patterns = codes[self.permutations]
        order = np.lexsort(patterns.T[::-1])
        return tuple(int(x) for x in patterns[order[0]])


@dataclass
class ScanStratum:
    """
    One stratum found by the scan.

    Attributes:
        id: stable identifier within one scan
        key: canonical key
        substitution: a representative
        partition: eigenspace multiplicities on V
        class_dim: dimension of the conjugacy class
        depth: number of collapsings needed to reach it
        reports: criterion checks for every m
        case: catalog case matching the key, if any
    """
    id: str
    key: CanonicalKey
    substitution: Substitution
    partition: Partition
    class_dim: int
    depth: int
    reports: List[CheckReport] = field(default_factory=list)
    case: Optional[str] = None

    @property
    def exceptional_m(self) -> List[int]:
        return exceptional_ms(self.reports)

    @property
    def exceptional(self) -> bool:
        return any(r.verdict is Verdict.EXCEPTIONAL for r in self.reports)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "case": self.case,
            "depth": self.depth,
            "partition": self.partition.to_list(),
            "class_dim": self.class_dim,
            "substitution": self.substitution.to_json(),
            "description": self.substitution.describe(),
            "exceptional_m": self.exceptional_m,
            "checks": [r.to_dict() for r in self.reports],
        }


@dataclass
class ScanResult:
    genus: int
    depth: int
    nodes: int
    strata: List[ScanStratum]
    complete: bool = True

    @property
    def exceptional(self) -> List[ScanStratum]:
        return [s for s in self.strata if s.exceptional]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "genus": self.genus,
            "depth": self.depth,
            "nodes": self.nodes,
            "complete": self.complete,
            "strata": [s.to_dict() for s in self.strata],
            "exceptional": [s.id for s in self.exceptional],
        }


@dataclass
class _Node:
    key: CanonicalKey
    substitution: Substitution
    depth: int


def _finalize(genus: "GenusConfig", nodes: Iterable[_Node],
              known: Mapping[CanonicalKey, str],
              m_range: Optional[Tuple[int, int]]) -> List[ScanStratum]:
    torus = genus.torus
    assert torus is not None
    strata = [
        ScanStratum(
            id="", key=node.key, substitution=node.substitution,
            partition=multiplicities(torus, node.substitution),
            class_dim=class_dim(torus.roots, node.substitution, torus.ambient_dim, torus.rank),
            depth=node.depth, case=known.get(node.key),
        )
        for node in nodes
    ]
    strata.sort(key=lambda s: (s.depth, -s.class_dim, s.partition.parts, s.key))
    for index, stratum in enumerate(strata, start=1):
        stratum.id = f"g{genus.g}.s{index}"
        stratum.reports = check_stratum(
            genus, stratum.substitution, stratum.case or stratum.id, m_range)
    return strata


def collapse_scan(genus: "GenusConfig", options: Optional[ScanOptions] = None,
                  seeds: Optional[Sequence[Substitution]] = None,
                  known: Optional[Mapping[CanonicalKey, str]] = None,
                  m_range: Optional[Tuple[int, int]] = None,
                  table: Optional[CharacterTable] = None) -> ScanResult:
    """
    Enumerate strata reachable with at most options.depth collapsings
    (the genus default when options.depth is None).

    Args:
        genus: configuration carrying the weight system
        options: depth, node cap and root order cap
        seeds: starting substitutions (default: the generic one)
        known: canonical keys of catalog cases, used to label matches
        m_range: subspace dimensions to check (default: the genus range)
        table: precomputed CharacterTable for this genus

    Returns:
        ScanResult with strata sorted by depth, then decreasing class dimension

    Raises:
        ScanCapExceeded: If more than options.node_cap nodes are expanded;
            the exception carries the strata found so far
    """
    options = (options or ScanOptions()).for_genus(genus.g)
    depth = options.resolved_depth
    torus = genus.torus
    if torus is None:
        raise ValueError(f"Genus {genus.g} has no torus data")
    table = table or CharacterTable(torus)
    known = known or {}
    starts = list(seeds) if seeds else [Substitution.generic(torus.coordinates)]

    seen: Dict[CanonicalKey, _Node] = {}
    frontier: List[_Node] = []
    for start in starts:
        if len(multiplicities(torus, start)) == 1:
            continue
        key = table.canonical_key(start)
        if key not in seen:
            seen[key] = _Node(key, start, 0)
            frontier.append(seen[key])

    expanded = 0
    for level in range(depth + 1):
        next_frontier: List[_Node] = []
        queue = list(frontier)
        position = 0
        while position < len(queue):
            node = queue[position]
            position += 1
            expanded += 1
            if expanded > options.node_cap:
                partial = _finalize(genus, seen.values(), known, m_range)
                raise ScanCapExceeded(
                    f"Scan of genus {genus.g} stopped after {options.node_cap} nodes",
                    partial, expanded - 1)
            codes = table.codes(node.substitution)
            for index in table.representatives:
                if codes[index] != 0:
                    continue
                degeneration = bool(table.is_root[index])
                if not degeneration and level == depth:
                    continue
                try:
                    branches = impose_character(
                        node.substitution, table.characters[index], options.max_root_order)
                except FanOutExceeded as e:
                    logger.debug("Skipping relation: %s", e)
                    continue
                if isinstance(branches, Infeasible):
                    continue
                for child in branches:
                    if len(multiplicities(torus, child)) == 1:
                        continue
                    key = table.canonical_key(child)
                    if key in seen:
                        continue
                    record = _Node(key, child, level if degeneration else level + 1)
                    seen[key] = record
                    if degeneration:
                        queue.append(record)
                    else:
                        next_frontier.append(record)
        logger.info("Genus %d level %d: %d strata, %d nodes expanded",
                    genus.g, level, len(seen), expanded)
        frontier = next_frontier

    strata = _finalize(genus, seen.values(), known, m_range)
    logger.info("Genus %d scan finished: %d strata, %d exceptional",
                genus.g, len(strata), sum(1 for s in strata if s.exceptional))
    return ScanResult(genus.g, depth, expanded, strata)
