"""Instance documents: one JSON file naming every object a CLI invocation
can refer to.

Loading is eager and strict: every cross-reference must resolve, every value
must parse into the declared lattice, and every partition/candidate is fully
validated.  Non-fatal oddities (declared pairs outside the graph of an index
map) are collected as warnings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import lattice as lattice_mod
from .closure import ClosureSystem, system_from_explicit
from .errors import BudgetExceeded, DocumentError, WorkbenchError
from .fuzzyset import (
    FuzzySet,
    Universe,
    UniverseMap,
    ensure_budget,
    from_labels,
    set_at,
)
from .lattice import DEFAULT_BUDGET, Lattice
from .morphism import FPMapCandidate, make_candidate
from .partition import FuzzyPartition, validate_partition
from .relation import FuzzyRelation


@dataclass
class InstanceDocument:
    lattice: Lattice
    universes: dict[str, Universe] = field(default_factory=dict)
    fuzzy_sets: dict[str, FuzzySet] = field(default_factory=dict)
    partitions: dict[str, FuzzyPartition] = field(default_factory=dict)
    relations: dict[str, FuzzyRelation] = field(default_factory=dict)
    maps: dict[str, UniverseMap] = field(default_factory=dict)
    index_maps: dict[str, dict] = field(default_factory=dict)
    candidates: dict[str, FPMapCandidate] = field(default_factory=dict)
    pairings: dict[str, tuple[str, str]] = field(default_factory=dict)
    systems: dict[str, ClosureSystem] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def universe(self, name):
        return self._get("universe", self.universes, name)

    def fuzzy_set(self, name):
        return self._get("fuzzy set", self.fuzzy_sets, name)

    def partition(self, name):
        return self._get("partition", self.partitions, name)

    def relation(self, name):
        return self._get("relation", self.relations, name)

    def map(self, name):
        return self._get("map", self.maps, name)

    def candidate(self, name):
        return self._get("candidate", self.candidates, name)

    def system(self, name):
        return self._get("closure system", self.systems, name)

    @staticmethod
    def _get(kind, table, name):
        if name not in table:
            raise DocumentError(f"document names no {kind} {name!r}")
        return table[name]


def _require(cond, message):
    if not cond:
        raise DocumentError(message)


def load_document(source, budget: int = DEFAULT_BUDGET) -> InstanceDocument:
    """Parse a document from a path, JSON text, or an already-decoded dict."""
    if isinstance(source, (str, Path)) and not (
        isinstance(source, str) and source.lstrip().startswith("{")
    ):
        try:
            raw = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise DocumentError(f"cannot read document: {exc}") from exc
        return load_document(raw, budget)
    if isinstance(source, str):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"document is not valid JSON: {exc}") from exc
    else:
        data = source
    _require(isinstance(data, dict), "document root must be an object")

    try:
        return _build(data, budget)
    except (DocumentError, BudgetExceeded):
        raise
    except WorkbenchError as exc:
        raise DocumentError(str(exc)) from exc


def _build(data: dict, budget: int) -> InstanceDocument:
    _require("lattice" in data, "document lacks a lattice description")
    lat = lattice_mod.build(data["lattice"])
    doc = InstanceDocument(lattice=lat)

    for name, elements in data.get("universes", {}).items():
        _require(isinstance(elements, list),
                 f"universe {name}: elements must be a list")
        doc.universes[name] = Universe(name, tuple(elements))

    for name, spec in data.get("fuzzy_sets", {}).items():
        uni = doc.universe(spec["universe"])
        doc.fuzzy_sets[name] = from_labels(lat, uni, spec["values"])

    for name, spec in data.get("partitions", {}).items():
        uni = doc.universe(spec["universe"])
        blocks = [
            (bname, from_labels(lat, uni, values))
            for bname, values in spec["blocks"].items()
        ]
        doc.partitions[name] = validate_partition(uni, blocks, spec.get("xi"))

    for name, spec in data.get("relations", {}).items():
        uni = doc.universe(spec["universe"])
        rows = spec["rows"]
        _require(
            len(rows) == len(uni) and all(len(r) == len(uni) for r in rows),
            f"relation {name}: table is not {len(uni)}x{len(uni)}",
        )
        doc.relations[name] = FuzzyRelation(
            lat, uni, tuple(tuple(lat.parse(v) for v in row) for row in rows)
        )

    for name, spec in data.get("maps", {}).items():
        src = doc.universe(spec["source"])
        tgt = doc.universe(spec["target"])
        doc.maps[name] = UniverseMap.from_labels(src, tgt, spec["values"])

    for name, spec in data.get("index_maps", {}).items():
        doc.partition(spec["source"])
        doc.partition(spec["target"])
        doc.index_maps[name] = dict(spec)

    for name, spec in data.get("candidates", {}).items():
        source = doc.partition(spec["source"])
        target = doc.partition(spec["target"])
        phi = doc.map(spec["phi"])
        psi_spec = doc.index_maps.get(spec["psi"])
        _require(psi_spec is not None,
                 f"candidate {name}: unknown index map {spec['psi']!r}")
        _require(
            psi_spec["source"] == spec["source"]
            and psi_spec["target"] == spec["target"],
            f"candidate {name}: index map {spec['psi']} joins "
            f"{psi_spec['source']}->{psi_spec['target']}, not "
            f"{spec['source']}->{spec['target']}",
        )
        pairs = spec.get("pairs")
        if pairs is not None:
            pairs = [tuple(p) for p in pairs]
        cand, warns = make_candidate(
            source, target, phi, psi_spec["values"], pairs
        )
        doc.candidates[name] = cand
        doc.warnings.extend(f"candidate {name}: {w}" for w in warns)

    for name, spec in data.get("pairings", {}).items():
        left = doc.candidate(spec["left"])
        right = doc.candidate(spec["right"])
        _require(
            left.source == right.source,
            f"pairing {name}: candidates start from different sources",
        )
        doc.pairings[name] = (spec["left"], spec["right"])

    for name, spec in data.get("systems", {}).items():
        uni = doc.universe(spec["universe"])
        entries = spec["entries"]
        by_tuple = {}
        for entry in entries:
            _require(len(entry) == 2,
                     f"system {name}: entries are [value-tuple, value] pairs")
            key = tuple(lat.parse(v) for v in entry[0])
            _require(len(key) == len(uni),
                     f"system {name}: tuple arity does not match {uni.name}")
            _require(key not in by_tuple,
                     f"system {name}: duplicate entry for {entry[0]}")
            by_tuple[key] = lat.parse(entry[1])
        size = ensure_budget(lat, uni, budget, f"system {name} table")
        table = []
        for i in range(size):
            key = set_at(lat, uni, i).values
            _require(key in by_tuple,
                     f"system {name}: missing entry for "
                     f"{[lat.displays[v] for v in key]}")
            table.append(by_tuple[key])
        doc.systems[name] = system_from_explicit(lat, uni, table, budget)

    return doc
