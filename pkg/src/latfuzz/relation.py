"""Lattice-valued binary relations and the upper approximation operator."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MismatchError
from .fuzzyset import FuzzySet, Universe, ensure_budget, set_at
from .lattice import DEFAULT_BUDGET, Lattice


@dataclass(frozen=True)
class FuzzyRelation:
    lattice: Lattice
    universe: Universe
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.universe)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise MismatchError(
                f"relation on {self.universe.name}: table is not {n}x{n}"
            )
        for row in self.rows:
            for v in row:
                self.lattice.check_element(v)

    def value(self, x_label: str, y_label: str) -> int:
        return self.rows[self.universe.index(x_label)][self.universe.index(y_label)]

    def display_rows(self) -> list[list[str]]:
        return [[self.lattice.displays[v] for v in row] for row in self.rows]

    def is_reflexive(self) -> bool:
        return all(self.rows[i][i] == self.lattice.top for i in range(len(self.rows)))


def identity_relation(lat: Lattice, universe: Universe) -> FuzzyRelation:
    n = len(universe)
    return FuzzyRelation(lat, universe, tuple(
        tuple(lat.top if i == j else lat.bottom for j in range(n))
        for i in range(n)
    ))


def constant_relation(lat: Lattice, universe: Universe, a: int) -> FuzzyRelation:
    lat.check_element(a)
    n = len(universe)
    return FuzzyRelation(lat, universe, ((a,) * n,) * n)


def upper_approx(rel: FuzzyRelation, f: FuzzySet) -> FuzzySet:
    """Row-wise join of tensors: the approximation of f seen from each point."""
    if f.universe != rel.universe:
        raise MismatchError(
            f"upper approximation: set on {f.universe.name}, "
            f"relation on {rel.universe.name}"
        )
    if f.lattice is not rel.lattice:
        raise MismatchError("upper approximation: lattice mismatch")
    lat = rel.lattice
    vals = []
    for row in rel.rows:
        acc = lat.bottom
        for r, v in zip(row, f.values):
            acc = lat.join[acc][lat.tensor[r][v]]
        vals.append(acc)
    return FuzzySet(lat, rel.universe, tuple(vals))


def relation_from_system(system, budget: int = DEFAULT_BUDGET) -> FuzzyRelation:
    """Extract the relation of a closure system: the degree to which
    membership of x in each family member forces membership of z.

    R(x, z) = meet over all f of system(f) -> (f(x) -> f(z)).
    """
    lat: Lattice = system.lattice
    universe: Universe = system.universe
    size = ensure_budget(lat, universe, budget, "relation extraction")
    res = lat.residuum
    n = len(universe)
    acc = [[lat.top] * n for _ in range(n)]
    for i in range(size):
        f = set_at(lat, universe, i)
        u = system.value_at(i)
        for x in range(n):
            fx = f.values[x]
            for z in range(n):
                term = res[u][res[fx][f.values[z]]]
                acc[x][z] = lat.meet[acc[x][z]][term]
    return FuzzyRelation(lat, universe, tuple(tuple(r) for r in acc))
