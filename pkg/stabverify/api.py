"""
Simple function API for stabverify.
Each run_* function loads the catalogs, performs one verification and
returns a JSON-ready dictionary per genus.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .catalog import GENERA, GenusCatalog, load_catalog
from .errors import ScanCapExceeded
from .nilpotent import table_mismatches, verify_nilpotent
from .reports import Verdict, exceptional_ms
from .scan import CanonicalKey, CharacterTable, ScanOptions, ScanResult, ScanStratum, collapse_scan
from .torus import check_stratum, class_dim, multiplicities

logger = logging.getLogger(__name__)

CatalogDir = Optional[Union[str, Path]]


def parse_genera(text: str) -> List[int]:
    """
    Parse "all", "8" or "7,9".

    Raises:
        ValueError: If a genus is not one of 7, 8, 9, 10
    """
    if text.strip().lower() == "all":
        return list(GENERA)
    genera = []
    for token in text.split(","):
        g = int(token)
        if g not in GENERA:
            raise ValueError(f"Genus must be one of {list(GENERA)}, got {g}")
        if g not in genera:
            genera.append(g)
    return sorted(genera)


def resolve_m_range(catalog: GenusCatalog,
                    m_range: Optional[Tuple[int, int]] = None) -> Tuple[int, int]:
    """
    The explicit range, checked against n, or the default k..n-k.

    Raises:
        ValueError: If the range is not inside [0, n]
    """
    config = catalog.config
    if m_range is None:
        return config.m_range
    lo, hi = m_range
    if not 0 <= lo <= hi <= config.n:
        raise ValueError(f"m range {lo}:{hi} is not inside [0, {config.n}] for genus {config.g}")
    return lo, hi


def _genus_header(catalog: GenusCatalog, m_range: Tuple[int, int]) -> Dict[str, Any]:
    config = catalog.config
    return {
        "genus": config.g,
        "group": config.group,
        "algebra": str(config.algebra),
        "representation": config.rep.value,
        "n": config.n,
        "k": config.k,
        "m_range": list(m_range),
    }


def run_verify_nilpotent(genera: Sequence[int], catalog_dir: CatalogDir = None,
                         m_range: Optional[Tuple[int, int]] = None,
                         use_matrices: bool = True,
                         with_profiles: bool = False) -> List[Dict[str, Any]]:
    """
    Cross-validate the Jordan tables and run the unipotent criterion.

    A genus is ok iff its table cross-validates and no check is exceptional.
    Equality is reported but does not fail the run.

    Example:
        >>> [entry["ok"] for entry in run_verify_nilpotent([10])]
        [True]
    """
    results = []
    for g in genera:
        catalog = load_catalog(g, catalog_dir)
        span = resolve_m_range(catalog, m_range)
        mismatches = table_mismatches(catalog, use_matrices)
        for mismatch in mismatches:
            logger.error("Genus %d: %s", g, mismatch)
        reports = verify_nilpotent(catalog, span, with_profiles)
        exceptional = [r for r in reports if r.verdict is Verdict.EXCEPTIONAL]
        equality = [r for r in reports if r.verdict is Verdict.EQUALITY_OK]
        entry = _genus_header(catalog, span)
        entry.update({
            "orbits": [
                {"label": o.name, "dim": o.dim, "jordan": o.jordan.to_list()}
                for o in catalog.orbits
            ],
            "cross_validation": {
                "ok": not mismatches,
                "matrices": use_matrices,
                "mismatches": [str(x) for x in mismatches],
            },
            "checks": [r.to_dict() for r in reports],
            "equality": [{"case": r.case, "m": r.m} for r in equality],
            "exceptional": [{"case": r.case, "m": r.m} for r in exceptional],
            "ok": not mismatches and not exceptional,
        })
        results.append(entry)
    return results


def run_verify_semisimple(genera: Sequence[int], catalog_dir: CatalogDir = None,
                          m_range: Optional[Tuple[int, int]] = None,
                          with_profiles: bool = False) -> List[Dict[str, Any]]:
    """
    Replay every catalogued stratum through check_stratum.

    A genus is ok iff every stratum reproduces its partition, its class
    dimension and its expected exceptional m.
    """
    results = []
    for g in genera:
        catalog = load_catalog(g, catalog_dir)
        config = catalog.config
        torus = config.torus
        assert torus is not None
        span = resolve_m_range(catalog, m_range)
        differences: List[str] = []
        strata = []
        for record in catalog.strata:
            partition = multiplicities(torus, record.substitution)
            dim = class_dim(torus.roots, record.substitution, torus.ambient_dim, torus.rank)
            reports = check_stratum(config, record.substitution, record.name, span, with_profiles)
            found_m = exceptional_ms(reports)
            expected_m = [m for m in record.exceptional_m if span[0] <= m <= span[1]]
            if partition != record.partition:
                differences.append(f"{record.name}: partition {partition}, expected {record.partition}")
            if dim != record.class_dim:
                differences.append(f"{record.name}: class dim {dim}, expected {record.class_dim}")
            if found_m != expected_m:
                differences.append(f"{record.name}: exceptional at m={found_m}, expected m={expected_m}")
            strata.append({
                "id": record.id,
                "case": record.case,
                "description": record.description,
                "substitution": record.substitution.to_json(),
                "partition": partition.to_list(),
                "class_dim": dim,
                "exceptional_m": found_m,
                "expected": {
                    "partition": record.partition.to_list(),
                    "class_dim": record.class_dim,
                    "exceptional_m": expected_m,
                },
                "checks": [r.to_dict() for r in reports],
            })
        for text in differences:
            logger.error("Genus %d: %s", g, text)
        logger.info("Genus %d: %d strata replayed, %d differences", g, len(strata), len(differences))
        entry = _genus_header(catalog, span)
        entry.update({
            "strata": strata,
            "exceptional": [s["case"] or s["id"] for s in strata if s["exceptional_m"]],
            "expected_exceptional": [r.name for r in catalog.strata
                                     if any(span[0] <= m <= span[1] for m in r.exceptional_m)],
            "differences": differences,
            "ok": not differences,
        })
        results.append(entry)
    return results


def catalog_keys(catalog: GenusCatalog, table: CharacterTable) -> Dict[CanonicalKey, str]:
    """Canonical key of every catalogued stratum."""
    return {table.canonical_key(r.substitution): r.name for r in catalog.strata}


def match_strata(catalog: GenusCatalog,
                  strata: Sequence[ScanStratum]) -> Tuple[Dict[str, str], Dict[str, str]]:
    """
    Relate scanned strata to the catalog.

    Returns:
        (weyl, signature): ids of strata with a Weyl equivalent catalog entry,
        and ids of the remaining strata that only share the partition and
        class dimension of an entry, each mapped to the catalog name
    """
    weyl = {s.id: s.case for s in strata if s.case}
    signatures = {(r.partition, r.class_dim): r.name for r in catalog.strata}
    signature = {}
    for stratum in strata:
        if stratum.case:
            continue
        name = signatures.get((stratum.partition, stratum.class_dim))
        if name is not None:
            signature[stratum.id] = name
    return weyl, signature


def unexpected_strata(catalog: GenusCatalog, exceptional: Sequence[ScanStratum],
                weyl: Dict[str, str], signature: Dict[str, str],
                span: Tuple[int, int]) -> List[str]:
    """Exceptional strata without a Weyl match or a signature match with the same m."""
    unexpected = []
    for stratum in exceptional:
        if stratum.id in weyl:
            continue
        name = signature.get(stratum.id)
        if name is not None:
            expected = [m for m in catalog.stratum(name).exceptional_m if span[0] <= m <= span[1]]
            if stratum.exceptional_m == expected:
                logger.info("Genus %d: exceptional stratum %s matches %s by signature only",
                            catalog.config.g, stratum.id, name)
                continue
        unexpected.append(stratum.id)
    return unexpected


def missed_cases(catalog: GenusCatalog, table: CharacterTable, strata: Sequence[ScanStratum],
            span: Tuple[int, int]) -> List[str]:
    """Catalogued exceptional cases that no scanned stratum reaches."""
    keys = {s.key for s in strata}
    signatures = {(s.partition, s.class_dim) for s in strata}
    missed = []
    for record in catalog.strata:
        if not any(span[0] <= m <= span[1] for m in record.exceptional_m):
            continue
        if table.canonical_key(record.substitution) in keys:
            continue
        if (record.partition, record.class_dim) in signatures:
            continue
        missed.append(record.name)
    return missed


def run_scan(genera: Sequence[int], options: Optional[ScanOptions] = None,
             catalog_dir: CatalogDir = None,
             m_range: Optional[Tuple[int, int]] = None) -> List[Dict[str, Any]]:
    """
    Collapse scan from the generic substitution, compared with the catalog.

    A genus is ok iff the scan completed, every exceptional stratum found
    matches a catalogued one and every catalogued exceptional case was
    reached. Without an explicit depth each genus scans at its own default
    (see ScanOptions.for_genus).
    """
    options = options or ScanOptions()
    results = []
    for g in genera:
        catalog = load_catalog(g, catalog_dir)
        config = catalog.config
        assert config.torus is not None
        span = resolve_m_range(catalog, m_range)
        genus_options = options.for_genus(g)
        table = CharacterTable(config.torus)
        known = catalog_keys(catalog, table)
        try:
            result = collapse_scan(config, genus_options, known=known, m_range=span, table=table)
        except ScanCapExceeded as e:
            logger.warning("%s; reporting %d partial strata", e, len(e.partial))
            result = ScanResult(g, genus_options.resolved_depth, e.nodes, e.partial, complete=False)
        weyl, signature = match_strata(catalog, result.strata)
        unexpected = unexpected_strata(catalog, result.exceptional, weyl, signature, span)
        for stratum_id in unexpected:
            logger.warning("Genus %d: exceptional stratum %s is not catalogued", g, stratum_id)
        missed = missed_cases(catalog, table, result.strata, span)
        for name in missed:
            logger.warning("Genus %d: catalogued case %s not reached at depth %d",
                           g, name, result.depth)
        entry = _genus_header(catalog, span)
        entry.update(result.to_dict())
        entry.update({
            "matches": weyl,
            "signature_matches": signature,
            "unexpected_exceptional": unexpected,
            "missed_exceptional": missed,
            "ok": result.complete and not unexpected and not missed,
        })
        results.append(entry)
    return results
