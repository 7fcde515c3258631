"""Bundled catalog of explicit pentagonal geometries with expected statistics.

Every entry carries the stats it is supposed to have (point/line counts,
opposite line pairs, deficiency girth and connectivity, and for the labeled
cyclic systems the exact deficiency edge set); catalog_verify_all recomputes
everything from the payload and reports per-entry pass/fail.  The fixture
files were transcribed once; the verifier, not the transcriber, is trusted.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import defgraph
from .analysis import count_olps, verify_pentagonal
from .construct import (ConstructionError, Pbd, Sts, expand_orbits,
                        parse_orbit, parse_pbd, parse_sts)
from .core import Design, ParseError, parse_design, records


class UnknownEntryError(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    path: str
    source: str
    v: int
    b: int
    k: int
    r: int
    olp_count: int | None = None
    girth: int | None = None
    connected: bool | None = None
    olp: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    deficiency_edges: tuple[tuple[int, int], ...] = field(default_factory=tuple)


def catalog_dir() -> Path:
    override = os.environ.get("PENTFORGE_CATALOG")
    if override:
        return Path(override)
    return Path(str(resources.files("pentforge").joinpath("data")))


def _parse_manifest(text: str) -> list[CatalogEntry]:
    entries = []
    current: dict[str, object] | None = None

    def flush() -> None:
        if current is None:
            return
        edges = tuple(sorted(current.pop("deficiency_edges", ())))  # type: ignore[arg-type]
        entries.append(CatalogEntry(deficiency_edges=edges, **current))  # type: ignore[arg-type]

    for key, value in records(text):
        if key == "entry":
            flush()
            current = {"id": value, "deficiency_edges": []}
        elif current is None:
            raise ParseError("manifest must start with an 'entry:' record")
        elif key in ("path", "source"):
            current[key] = value
        elif key in ("v", "b", "k", "r", "olp_count", "girth"):
            current[key] = int(value)
        elif key == "connected":
            current[key] = value == "yes"
        elif key == "olp":
            left, right = value.split("|")
            current["olp"] = (tuple(sorted(int(p) for p in left.split())),
                              tuple(sorted(int(p) for p in right.split())))
        elif key == "defedge":
            u, w = (int(p) for p in value.split())
            current["deficiency_edges"].append((min(u, w), max(u, w)))  # type: ignore[union-attr]
        else:
            raise ParseError(f"unknown manifest field {key!r}")
    flush()
    return entries


def catalog_entries() -> list[CatalogEntry]:
    text = (catalog_dir() / "manifest.txt").read_text()
    return sorted(_parse_manifest(text), key=lambda e: e.id)


def catalog_entry(entry_id: str) -> CatalogEntry:
    for entry in catalog_entries():
        if entry.id == entry_id:
            return entry
    raise UnknownEntryError(entry_id)


# ---------------------------------------------------------------------------
# Labeled (family) orbit systems: points (family, j) on Z_m per family,
# encoded as family*m + j, developed by j -> j+1 simultaneously in every
# family.  Used by the hand-built systems given with lettered point names.

@dataclass(frozen=True)
class FamilyOrbitSpec:
    families: int
    modulus: int
    k: int
    bases: tuple[tuple[int, ...], ...]  # points already encoded as fam*m + j
    r: int | None = None
    expected_lines: int | None = None


def expand_family_orbits(spec: FamilyOrbitSpec) -> Design:
    m = spec.modulus
    v = spec.families * m
    lines: set[tuple[int, ...]] = set()
    for base in spec.bases:
        for shift in range(m):
            line = tuple(sorted((p // m) * m + (p % m + shift) % m for p in base))
            if line in lines:
                raise ConstructionError(
                    f"duplicate generated line {line} (base {base}, shift {shift})")
            lines.add(line)
    if spec.expected_lines is not None and len(lines) != spec.expected_lines:
        raise ConstructionError(
            f"expected {spec.expected_lines} lines, generated {len(lines)}")
    return Design.make(v=v, k=spec.k, lines=lines, r_claimed=spec.r, kind="pent")


def _label_point(label: str, modulus: int) -> int:
    family = ord(label[0]) - ord("a")
    j = int(label[1:])
    if family < 0 or j < 0 or j >= modulus:
        raise ParseError(f"bad point label {label!r}")
    return family * modulus + j


def parse_family_orbit(text: str) -> FamilyOrbitSpec:
    header: dict[str, int] = {}
    bases: list[tuple[int, ...]] = []
    raw_bases: list[list[str]] = []
    for key, value in records(text):
        if key == "kind":
            if value != "forbit":
                raise ParseError(f"expected kind forbit, got {value!r}")
        elif key == "base":
            raw_bases.append(value.split())
        elif key in ("families", "modulus", "k", "r", "lines"):
            header[key] = int(value)
        else:
            raise ParseError(f"unknown field {key!r} in forbit file")
    for req in ("families", "modulus", "k"):
        if req not in header:
            raise ParseError(f"forbit file missing {req!r}")
    m = header["modulus"]
    for raw in raw_bases:
        bases.append(tuple(_label_point(lbl, m) for lbl in raw))
    return FamilyOrbitSpec(families=header["families"], modulus=m,
                           k=header["k"], bases=tuple(bases),
                           r=header.get("r"), expected_lines=header.get("lines"))


# ---------------------------------------------------------------------------
# Loading and verification

def _load_payload(path: Path) -> Design:
    text = path.read_text()
    kind = dict(records(text)).get("kind")
    if kind == "orbit":
        return expand_orbits(parse_orbit(text))
    if kind == "forbit":
        return expand_family_orbits(parse_family_orbit(text))
    return parse_design(text)


def catalog_load(entry_id: str) -> Design:
    entry = catalog_entry(entry_id)
    return _load_payload(catalog_dir() / entry.path)


def verify_entry(entry: CatalogEntry) -> tuple[bool, list[str]]:
    """Recompute every expected statistic for one entry."""
    problems: list[str] = []
    try:
        design = _load_payload(catalog_dir() / entry.path)
    except (ParseError, ConstructionError, OSError) as exc:
        return False, [f"load failed: {exc}"]
    if design.v != entry.v:
        problems.append(f"v={design.v}, expected {entry.v}")
    if design.b != entry.b:
        problems.append(f"b={design.b}, expected {entry.b}")
    if design.k != entry.k:
        problems.append(f"k={design.k}, expected {entry.k}")
    report = verify_pentagonal(design)
    if not report.ok:
        problems.append(f"not pentagonal: {report.violations[:2]}")
        return False, problems
    if report.r != entry.r:
        problems.append(f"r={report.r}, expected {entry.r}")
    graph = defgraph.build_deficiency(design)
    if entry.olp_count is not None or entry.olp is not None:
        olps = count_olps(design)
        if entry.olp_count is not None and olps.q != entry.olp_count:
            problems.append(f"olp_count={olps.q}, expected {entry.olp_count}")
        if entry.olp is not None and entry.olp not in olps.pairs:
            problems.append(f"expected OLP {entry.olp} not found")
    if entry.girth is not None:
        gir = defgraph.girth(graph)
        if gir != entry.girth:
            problems.append(f"deficiency girth={gir}, expected {entry.girth}")
    if entry.connected is not None:
        conn = defgraph.is_connected(graph)
        if conn != entry.connected:
            problems.append(f"connected={conn}, expected {entry.connected}")
    if entry.deficiency_edges:
        if graph.edges != entry.deficiency_edges:
            problems.append("deficiency edge set differs from the stated edges")
    return not problems, problems


def catalog_verify_all() -> list[tuple[str, bool, list[str]]]:
    """Verify the whole corpus; deterministic, sorted by entry id."""
    return [(entry.id, *verify_entry(entry)) for entry in catalog_entries()]


# ---------------------------------------------------------------------------
# Support ingredients (Steiner triple systems and PBDs for the constructors)

def support_sts(name: str) -> Sts:
    return parse_sts((catalog_dir() / "support" / f"{name}.sts").read_text())


def support_pbd(name: str) -> Pbd:
    return parse_pbd((catalog_dir() / "support" / f"{name}.pbd").read_text())
