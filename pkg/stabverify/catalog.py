"""
Per-genus configuration and the packaged catalogs of reference data.

Each genus g in {7, 8, 9, 10} has a JSON file genus<g>.json carrying the
group data, the torus weight system, the nilpotent orbit table
and the list of semisimple strata with their expected exceptional m.
"""

import json
import logging
import os
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from .errors import CatalogError, PartitionError
from .matrix_reps import RepTag
from .partitions import AlgebraKind, OrbitLabel, Partition, label_to_str, parse_label
from .torus import Substitution, WeightSystem

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
CATALOG_ENV = "STABVERIFY_CATALOG"
GENERA: Tuple[int, ...] = (7, 8, 9, 10)

# (group, algebra, dim G, rank, n, k, representation)
KNOWN_GENERA: Dict[int, Tuple[str, str, int, int, int, int, str]] = {
    7: ("Spin10", "so(10)", 45, 5, 16, 4, "half_spin"),
    8: ("SL6", "sl(6)", 35, 5, 15, 3, "wedge2"),
    9: ("Sp6", "sp(6)", 21, 3, 14, 2, "lambda3_kernel"),
    10: ("G2", "g2", 14, 2, 14, 2, "g2_adjoint"),
}


@dataclass(frozen=True)
class GenusConfig:
    """
    Fixed data of one Mukai variety.

    Attributes:
        g: genus
        group: name of G
        algebra: Lie algebra of G
        group_dim: dim G
        rank: rank of G
        n: dim V_g
        k: codimension of the linear sections
        rep: representation V_g
        torus: weight system used for semisimple strata
    """
    g: int
    group: str
    algebra: AlgebraKind
    group_dim: int
    rank: int
    n: int
    k: int
    rep: RepTag
    torus: Optional[WeightSystem] = None

    def __post_init__(self):
        if self.g not in KNOWN_GENERA:
            raise ValueError(f"Unsupported genus: {self.g}")
        group, algebra, group_dim, rank, n, k, rep = KNOWN_GENERA[self.g]
        found = (self.group, str(self.algebra), self.group_dim, self.rank, self.n, self.k,
                 self.rep.value)
        if found != (group, algebra, group_dim, rank, n, k, rep):
            raise ValueError(f"Genus {self.g} data {found} does not match the Mukai model")
        if self.torus is not None and self.torus.n != self.n:
            raise ValueError(f"Torus has {self.torus.n} weights, expected {self.n}")

    @classmethod
    def builtin(cls, g: int) -> "GenusConfig":
        """Configuration without torus data."""
        if g not in KNOWN_GENERA:
            raise ValueError(f"Unsupported genus: {g}")
        group, algebra, group_dim, rank, n, k, rep = KNOWN_GENERA[g]
        return cls(g, group, AlgebraKind.parse(algebra), group_dim, rank, n, k, RepTag(rep))

    @property
    def m_range(self) -> Tuple[int, int]:
        """Subspace dimensions k..n-k checked by default."""
        return self.k, self.n - self.k


@dataclass(frozen=True)
class OrbitRecord:
    """One row of a nilpotent orbit table."""
    label: OrbitLabel
    dim: int
    jordan: Partition

    @property
    def name(self) -> str:
        return label_to_str(self.label)


@dataclass(frozen=True)
class StratumRecord:
    """
    One semisimple stratum of a catalog.

    Attributes:
        id: identifier unique within the genus
        case: name of the exceptional case, if the stratum is one
        description: human readable substitution
        substitution: the torus element
        partition: expected eigenspace multiplicities
        class_dim: expected conjugacy class dimension
        exceptional_m: expected m with a non-strict inequality
    """
    id: str
    case: Optional[str]
    description: str
    substitution: Substitution
    partition: Partition
    class_dim: int
    exceptional_m: Tuple[int, ...] = ()

    @property
    def exceptional(self) -> bool:
        return bool(self.exceptional_m)

    @property
    def name(self) -> str:
        return self.case or self.id


@dataclass
class GenusCatalog:
    config: GenusConfig
    orbits: List[OrbitRecord] = field(default_factory=list)
    strata: List[StratumRecord] = field(default_factory=list)
    source: Optional[Path] = None

    def orbit(self, label: Union[str, OrbitLabel]) -> OrbitRecord:
        """
        Look up an orbit by label.

        Raises:
            KeyError: If the label is not in the table
        """
        wanted = label_to_str(parse_label(label, self.config.algebra)) if isinstance(label, str) \
            else label_to_str(label)
        for record in self.orbits:
            if record.name == wanted:
                return record
        raise KeyError(f"No orbit {wanted} in genus {self.config.g}")

    def stratum(self, name: str) -> StratumRecord:
        for record in self.strata:
            if name in (record.id, record.case):
                return record
        raise KeyError(f"No stratum {name} in genus {self.config.g}")

    @property
    def exceptional_cases(self) -> List[str]:
        return [s.name for s in self.strata if s.exceptional]


# ---------------------------------------------------------------------------
# Loading
# ---------------------------------------------------------------------------

def packaged_catalog_dir() -> Path:
    return Path(__file__).resolve().parent / "catalogs"


def resolve_catalog_dir(explicit: Optional[Union[str, Path]] = None) -> Path:
    """
    Directory holding genus<g>.json.

    Precedence: explicit argument, then $STABVERIFY_CATALOG, then the
    catalogs shipped with the package.
    """
    if explicit:
        return Path(explicit)
    env = os.environ.get(CATALOG_ENV)
    if env:
        return Path(env)
    return packaged_catalog_dir()


def _require(data: Dict[str, Any], key: str, where: str) -> Any:
    if key not in data:
        raise CatalogError(f"{where}: missing field {key!r}")
    return data[key]


def _parse_torus(data: Dict[str, Any], where: str) -> WeightSystem:
    return WeightSystem(
        weights=_require(data, "weights", where),
        roots=_require(data, "roots", where),
        weyl_generators=tuple(_require(data, "weyl_generators", where)),
        ambient_dim=int(_require(data, "ambient_dim", where)),
        rank=int(_require(data, "rank", where)),
    )


def parse_catalog(data: Dict[str, Any], source: Optional[Path] = None) -> GenusCatalog:
    """
    Build a GenusCatalog from decoded JSON.

    Raises:
        CatalogError: If a field is missing or inconsistent
    """
    where = str(source) if source else "catalog"
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise CatalogError(f"{where}: unsupported schema_version {version!r}")
    try:
        algebra = AlgebraKind.parse(_require(data, "algebra", where))
        config = GenusConfig(
            g=int(_require(data, "genus", where)),
            group=_require(data, "group", where),
            algebra=algebra,
            group_dim=int(_require(data, "group_dim", where)),
            rank=int(_require(data, "rank", where)),
            n=int(_require(data, "n", where)),
            k=int(_require(data, "k", where)),
            rep=RepTag(_require(data, "representation", where)),
            torus=_parse_torus(_require(data, "torus", where), where),
        )
        m_range = tuple(data.get("m_range", config.m_range))
        if m_range != config.m_range:
            raise CatalogError(f"{where}: m_range {list(m_range)} != {list(config.m_range)}")
        orbits = [
            OrbitRecord(
                label=parse_label(str(row["label"]), algebra),
                dim=int(row["dim"]),
                jordan=Partition.of(row["jordan"]),
            )
            for row in _require(data, "orbits", where)
        ]
        strata = [
            StratumRecord(
                id=str(row["id"]),
                case=row.get("case"),
                description=str(row.get("description", "")),
                substitution=Substitution.from_json(row["substitution"]),
                partition=Partition.of(row["partition"]),
                class_dim=int(row["class_dim"]),
                exceptional_m=tuple(int(m) for m in row.get("exceptional_m", ())),
            )
            for row in _require(data, "strata", where)
        ]
    except CatalogError:
        raise
    except (KeyError, TypeError, ValueError, PartitionError) as e:
        raise CatalogError(f"{where}: invalid catalog: {e}") from e

    ids = [s.id for s in strata]
    if len(set(ids)) != len(ids):
        raise CatalogError(f"{where}: duplicate stratum ids")
    return GenusCatalog(config, orbits, strata, source)


def load_genus(g: int, directory: Optional[Union[str, Path]] = None) -> GenusCatalog:
    """
    Read and parse genus<g>.json.

    Raises:
        CatalogError: If the file is missing or malformed
    """
    path = resolve_catalog_dir(directory) / f"genus{g}.json"
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError as e:
        raise CatalogError(f"Catalog file not found: {path}") from e
    except (OSError, json.JSONDecodeError) as e:
        raise CatalogError(f"Failed to read catalog {path}: {e}") from e
    catalog = parse_catalog(data, path)
    if catalog.config.g != g:
        raise CatalogError(f"{path}: declares genus {catalog.config.g}, expected {g}")
    logger.debug("Loaded %s: %d orbits, %d strata", path, len(catalog.orbits), len(catalog.strata))
    return catalog


# Thread-safe cache keyed by resolved directory
_lock = threading.Lock()
_cache: Dict[Tuple[str, int], GenusCatalog] = {}


def load_catalog(g: int, directory: Optional[Union[str, Path]] = None) -> GenusCatalog:
    """
    Cached load_genus.

    Example:
        >>> load_catalog(10).config.group
        'G2'
    """
    key = (str(resolve_catalog_dir(directory).resolve()), g)
    cached = _cache.get(key)
    if cached is None:
        with _lock:
            cached = _cache.get(key)
            if cached is None:  # Double-check locking
                cached = load_genus(g, directory)
                _cache[key] = cached
    return cached


def clear_catalog_cache() -> None:
    with _lock:
        _cache.clear()
