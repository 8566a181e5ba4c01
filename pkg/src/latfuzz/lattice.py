"""Finite complete residuated lattices as validated lookup tables.

Carrier elements are ordinals into an ordered list of display strings; every
operation is an exact table lookup.  Rational arithmetic (for the chain
builders) happens at build time only, so no floating point ever enters a law
check.

Builders cover the three stock families (minimum-tensor chains, truncated-sum
chains, powerset algebras) plus fully explicit tables.  A product-style
tensor is deliberately not offered as a chain builder: quantizing it breaks
associativity, and this module never constructs an axiom-violating instance.
Users who want such a tensor must supply an explicit table, which is
validated like any other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import BudgetExceeded, ElementError, LatticeBuildError

DEFAULT_BUDGET = 4096

OP_KINDS = ("meet", "join", "tensor", "residuum")


@dataclass(frozen=True)
class LatticeElement:
    """An element presented as (carrier ordinal, display string)."""

    id: int
    display: str


@dataclass(frozen=True)
class Lattice:
    name: str
    displays: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    tensor: tuple[tuple[int, ...], ...]
    residuum: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    _parse: dict = field(repr=False, compare=False, hash=False, default=None)

    def __post_init__(self):
        object.__setattr__(
            self, "_parse", {d: i for i, d in enumerate(self.displays)}
        )

    @property
    def size(self) -> int:
        return len(self.displays)

    def __len__(self) -> int:
        return len(self.displays)

    def elements(self) -> range:
        return range(len(self.displays))

    def element(self, a: int) -> LatticeElement:
        self.check_element(a)
        return LatticeElement(a, self.displays[a])

    def check_element(self, a: int) -> None:
        if not isinstance(a, int) or not 0 <= a < len(self.displays):
            raise ElementError(f"{a!r} is not a carrier ordinal of {self.name}")

    def parse(self, text: str) -> int:
        try:
            return self._parse[text]
        except KeyError:
            raise ElementError(
                f"{text!r} is not an element of lattice {self.name}"
            ) from None

    def display(self, a: int) -> str:
        self.check_element(a)
        return self.displays[a]

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def apply(self, kind: str, a: int, b: int) -> int:
        """Binary operation dispatch; `kind` is one of OP_KINDS."""
        if kind not in OP_KINDS:
            raise ElementError(f"unknown operation kind {kind!r}")
        self.check_element(a)
        self.check_element(b)
        return getattr(self, kind)[a][b]

    def meet_all(self, items) -> int:
        out = self.top
        for a in items:
            out = self.meet[out][a]
        return out

    def join_all(self, items) -> int:
        out = self.bottom
        for a in items:
            out = self.join[out][a]
        return out


# ---------------------------------------------------------------------------
# validation

def _check_order(name, displays, leq):
    n = len(displays)
    for a in range(n):
        if not leq[a][a]:
            raise LatticeBuildError(f"{name}: order not reflexive at {displays[a]}")
    for a in range(n):
        for b in range(n):
            if a != b and leq[a][b] and leq[b][a]:
                raise LatticeBuildError(
                    f"{name}: order not antisymmetric at ({displays[a]}, {displays[b]})"
                )
    for a in range(n):
        for b in range(n):
            if not leq[a][b]:
                continue
            for c in range(n):
                if leq[b][c] and not leq[a][c]:
                    raise LatticeBuildError(
                        f"{name}: order not transitive at "
                        f"({displays[a]}, {displays[b]}, {displays[c]})"
                    )


def _bound_tables(name, displays, leq):
    """Derive meet/join tables; error if some pair lacks a bound.  All meets
    are checked before any join so a non-lattice order is reported as
    lacking meets first."""
    n = len(displays)
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lowers = [c for c in range(n) if leq[c][a] and leq[c][b]]
            greatest = [c for c in lowers if all(leq[d][c] for d in lowers)]
            if not greatest:
                raise LatticeBuildError(
                    f"{name}: order lacks meets: no greatest lower bound "
                    f"for ({displays[a]}, {displays[b]})"
                )
            meet[a][b] = greatest[0]
    for a in range(n):
        for b in range(n):
            uppers = [c for c in range(n) if leq[a][c] and leq[b][c]]
            least = [c for c in uppers if all(leq[c][d] for d in uppers)]
            if not least:
                raise LatticeBuildError(
                    f"{name}: order lacks joins: no least upper bound "
                    f"for ({displays[a]}, {displays[b]})"
                )
            join[a][b] = least[0]
    return meet, join


def _find_bounds(name, displays, leq):
    n = len(displays)
    bottoms = [a for a in range(n) if all(leq[a][b] for b in range(n))]
    tops = [a for a in range(n) if all(leq[b][a] for b in range(n))]
    if not bottoms:
        raise LatticeBuildError(f"{name}: order has no least element")
    if not tops:
        raise LatticeBuildError(f"{name}: order has no greatest element")
    return bottoms[0], tops[0]


def _check_monoid(name, displays, tensor, top):
    n = len(displays)
    for a in range(n):
        for b in range(n):
            if tensor[a][b] != tensor[b][a]:
                raise LatticeBuildError(
                    f"{name}: tensor not commutative at ({displays[a]}, {displays[b]}): "
                    f"{displays[tensor[a][b]]} vs {displays[tensor[b][a]]}"
                )
    for a in range(n):
        if tensor[a][top] != a:
            raise LatticeBuildError(
                f"{name}: top is not a tensor unit at {displays[a]}: "
                f"got {displays[tensor[a][top]]}"
            )
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if tensor[tensor[a][b]][c] != tensor[a][tensor[b][c]]:
                    raise LatticeBuildError(
                        f"{name}: tensor not associative at "
                        f"({displays[a]}, {displays[b]}, {displays[c]})"
                    )


def _derive_residuum(displays, leq, join, tensor):
    n = len(displays)
    res = [[0] * n for _ in range(n)]
    for b in range(n):
        for c in range(n):
            out = None
            for a in range(n):
                if leq[tensor[a][b]][c]:
                    out = a if out is None else join[out][a]
            res[b][c] = 0 if out is None else out
    return res


def _check_adjointness(name, displays, leq, tensor, residuum):
    n = len(displays)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                left = leq[tensor[a][b]][c]
                right = leq[a][residuum[b][c]]
                if left != right:
                    raise LatticeBuildError(
                        f"{name}: adjointness fails at "
                        f"(a={displays[a]}, b={displays[b]}, c={displays[c]}): "
                        f"tensor(a,b)<=c is {left} but a<=residuum(b,c) is {right}"
                    )


def from_tables(
    displays,
    leq,
    tensor,
    residuum=None,
    name: str = "table",
) -> Lattice:
    """Validate explicit tables and return a Lattice.

    Meet and join are always derived from the order; the residuum is derived
    from the tensor when not supplied.  Either way adjointness is verified
    exhaustively, so a non-residuable tensor cannot slip through.
    """
    displays = tuple(displays)
    if len(displays) < 2:
        raise LatticeBuildError(f"{name}: carrier needs at least two elements")
    if len(set(displays)) != len(displays):
        raise LatticeBuildError(f"{name}: duplicate display strings")
    leq = tuple(tuple(bool(v) for v in row) for row in leq)
    tensor = tuple(tuple(row) for row in tensor)
    _check_order(name, displays, leq)
    meet, join = _bound_tables(name, displays, leq)
    bottom, top = _find_bounds(name, displays, leq)
    _check_monoid(name, displays, tensor, top)
    if residuum is None:
        residuum = _derive_residuum(displays, leq, join, tensor)
    residuum = tuple(tuple(row) for row in residuum)
    _check_adjointness(name, displays, leq, tensor, residuum)
    return Lattice(
        name=name,
        displays=displays,
        leq=leq,
        meet=tuple(tuple(row) for row in meet),
        join=tuple(tuple(row) for row in join),
        tensor=tensor,
        residuum=residuum,
        bottom=bottom,
        top=top,
    )


# ---------------------------------------------------------------------------
# builders

def _fraction_labels(n: int) -> tuple[str, ...]:
    return tuple(str(Fraction(k, n - 1)) for k in range(n))


def _chain_leq(n: int):
    return [[a <= b for b in range(n)] for a in range(n)]


def godel_chain(n: int, labels=None, name: str | None = None) -> Lattice:
    """Equidistant chain with the minimum tensor.

    Only the order matters for min/max/residuum, so custom labels (e.g. the
    raw values of a quantized unit interval) are allowed as long as they are
    listed bottom-up.
    """
    if n < 2:
        raise LatticeBuildError("godel_chain needs n >= 2")
    if labels is None:
        labels = _fraction_labels(n)
    if len(labels) != n:
        raise LatticeBuildError(f"godel_chain: expected {n} labels, got {len(labels)}")
    tensor = [[min(a, b) for b in range(n)] for a in range(n)]
    return from_tables(labels, _chain_leq(n), tensor, name=name or f"godel_chain({n})")


def lukasiewicz_chain(n: int, name: str | None = None) -> Lattice:
    """Chain k/(n-1) with the truncated-sum tensor, built with exact rationals."""
    if n < 2:
        raise LatticeBuildError("lukasiewicz_chain needs n >= 2")
    vals = [Fraction(k, n - 1) for k in range(n)]
    idx = {v: i for i, v in enumerate(vals)}
    tensor = [[idx[max(Fraction(0), a + b - 1)] for b in vals] for a in vals]
    residuum = [[idx[min(Fraction(1), 1 - a + b)] for b in vals] for a in vals]
    return from_tables(
        _fraction_labels(n),
        _chain_leq(n),
        tensor,
        residuum,
        name=name or f"lukasiewicz_chain({n})",
    )


_ATOMS = "abcd"


def boolean_algebra(k: int, name: str | None = None) -> Lattice:
    """Powerset of k atoms; tensor is intersection, residuum is material
    implication."""
    if not 1 <= k <= 4:
        raise LatticeBuildError("boolean needs 1 <= atoms <= 4")
    n = 1 << k
    full = n - 1

    def show(mask):
        inside = ",".join(_ATOMS[i] for i in range(k) if mask >> i & 1)
        return "{" + inside + "}"

    displays = tuple(show(m) for m in range(n))
    leq = [[(a & b) == a for b in range(n)] for a in range(n)]
    tensor = [[a & b for b in range(n)] for a in range(n)]
    residuum = [[(full ^ a) | b for b in range(n)] for a in range(n)]
    return from_tables(displays, leq, tensor, residuum, name=name or f"boolean({k})")


def build(spec: dict) -> Lattice:
    """Build from a description dict (the lattice sub-document of an
    instance file)."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise LatticeBuildError("lattice description must be an object with a 'kind'")
    kind = spec["kind"]
    if kind == "godel_chain":
        return godel_chain(int(spec["n"]), labels=spec.get("labels"))
    if kind == "lukasiewicz_chain":
        return lukasiewicz_chain(int(spec["n"]))
    if kind == "boolean":
        return boolean_algebra(int(spec["atoms"]))
    if kind == "table":
        displays = spec["elements"]
        index = {d: i for i, d in enumerate(displays)}

        def op_table(rows):
            return [[index[v] for v in row] for row in rows]

        residuum = spec.get("residuum")
        return from_tables(
            displays,
            spec["leq"],
            op_table(spec["tensor"]),
            op_table(residuum) if residuum is not None else None,
            name=spec.get("name", "table"),
        )
    raise LatticeBuildError(f"unknown lattice kind {kind!r}")


# ---------------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class LatticeReport:
    """Axiom results (per definition clause) and zero-divisor witnesses."""

    lattice: str
    axioms: dict
    zero_divisors: tuple[tuple[str, str], ...]

    @property
    def zero_divisor_free(self) -> bool:
        return not self.zero_divisors

    def to_dict(self) -> dict:
        return {
            "lattice": self.lattice,
            "axioms": dict(self.axioms),
            "zero_divisors": [list(p) for p in self.zero_divisors],
            "zero_divisor_free": self.zero_divisor_free,
        }


def zero_divisor_scan(lat: Lattice) -> LatticeReport:
    """Exhaustive scan for pairs a,b != 0 with tensor(a,b) = 0."""
    witnesses = []
    for a in lat.elements():
        if a == lat.bottom:
            continue
        for b in lat.elements():
            if b == lat.bottom:
                continue
            if lat.tensor[a][b] == lat.bottom:
                witnesses.append((lat.displays[a], lat.displays[b]))
    # construction already validated the three definition clauses
    axioms = {"i": "ok", "ii": "ok", "iii": "ok"}
    return LatticeReport(lat.name, axioms, tuple(witnesses))


def has_zero_divisors(lat: Lattice) -> bool:
    return not zero_divisor_scan(lat).zero_divisor_free


@dataclass(frozen=True)
class LawClause:
    passed: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class LawSuiteReport:
    lattice: str
    clauses: dict

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.clauses.values())

    def to_dict(self) -> dict:
        return {
            "lattice": self.lattice,
            "clauses": {
                key: {"passed": c.passed, "counterexample": c.counterexample}
                for key, c in self.clauses.items()
            },
            "all_pass": self.all_pass,
        }


def _subsets(n: int):
    items = list(range(n))
    for size in range(n + 1):
        yield from combinations(items, size)


def law_suite(lat: Lattice, budget: int = DEFAULT_BUDGET) -> LawSuiteReport:
    """Check the nine derived-law clauses exhaustively.

    Triple-quantified clauses sweep all |L|^3 triples; the indexed-family
    clauses sweep every subset of the carrier, which suffices on a finite
    lattice (joins and meets of a family only depend on its underlying set).
    """
    n = len(lat)
    family_cost = (1 << n) * n
    if n ** 3 > budget or family_cost > budget:
        raise BudgetExceeded(max(n ** 3, family_cost), budget, "law suite")

    d = lat.displays
    meet, join = lat.meet, lat.join
    tensor, res = lat.tensor, lat.residuum
    le = lat.leq
    bot, top = lat.bottom, lat.top
    out: dict[str, LawClause] = {}

    def record(key, counterexample=None):
        if key not in out:
            out[key] = LawClause(counterexample is None, counterexample)

    def fail(key, text):
        if key not in out or out[key].passed:
            out[key] = LawClause(False, text)

    # (i) a*0 = 0 and a*1 = a
    for a in range(n):
        if tensor[a][bot] != bot:
            fail("i", f"tensor({d[a]}, 0) = {d[tensor[a][bot]]}")
        if tensor[a][top] != a:
            fail("i", f"tensor({d[a]}, 1) = {d[tensor[a][top]]}")
    record("i")

    # (ii) a->1 = 1, 1->a = a, a->a = 1
    for a in range(n):
        if res[a][top] != top:
            fail("ii", f"residuum({d[a]}, 1) = {d[res[a][top]]}")
        if res[top][a] != a:
            fail("ii", f"residuum(1, {d[a]}) = {d[res[top][a]]}")
        if res[a][a] != top:
            fail("ii", f"residuum({d[a]}, {d[a]}) = {d[res[a][a]]}")
    record("ii")

    # (iii) monotone in the right argument, antitone in the left
    for a in range(n):
        for b in range(n):
            if not le[a][b]:
                continue
            for c in range(n):
                if not le[res[c][a]][res[c][b]]:
                    fail("iii", f"a={d[a]} <= b={d[b]}, c={d[c]}: "
                                f"c->a !<= c->b")
                if not le[res[b][c]][res[a][c]]:
                    fail("iii", f"a={d[a]} <= b={d[b]}, c={d[c]}: "
                                f"a->c !>= b->c")
    record("iii")

    # (iv) currying: (a*b)->c = a->(b->c); and a*(b->c) <= (a->b)->c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if res[tensor[a][b]][c] != res[a][res[b][c]]:
                    fail("iv", f"(a*b)->c != a->(b->c) at "
                               f"({d[a]}, {d[b]}, {d[c]})")
                if not le[tensor[a][res[b][c]]][res[res[a][b]][c]]:
                    fail("iv", f"a*(b->c) !<= (a->b)->c at "
                               f"({d[a]}, {d[b]}, {d[c]})")
    record("iv")

    # (v) (a->b)*c <= a->(b*c); a*b->a*c >= b->c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if not le[tensor[res[a][b]][c]][res[a][tensor[b][c]]]:
                    fail("v", f"(a->b)*c !<= a->(b*c) at "
                              f"({d[a]}, {d[b]}, {d[c]})")
                if not le[res[b][c]][res[tensor[a][b]][tensor[a][c]]]:
                    fail("v", f"a*b->a*c !>= b->c at ({d[a]}, {d[b]}, {d[c]})")
    record("v")

    # (vi) (a->b)->(c->b) >= c->a; (a->b)->(a->c) >= b->c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if not le[res[c][a]][res[res[a][b]][res[c][b]]]:
                    fail("vi", f"(a->b)->(c->b) !>= c->a at "
                               f"({d[a]}, {d[b]}, {d[c]})")
                if not le[res[b][c]][res[res[a][b]][res[a][c]]]:
                    fail("vi", f"(a->b)->(a->c) !>= b->c at "
                               f"({d[a]}, {d[b]}, {d[c]})")
    record("vi")

    def show_family(fam):
        return "{" + ",".join(d[a] for a in fam) + "}"

    # (vii) join distributes over tensor; meet sub-distributes
    for fam in _subsets(n):
        j = lat.join_all(fam)
        m = lat.meet_all(fam)
        for b in range(n):
            if tensor[j][b] != lat.join_all(tensor[a][b] for a in fam):
                fail("vii", f"(join {show_family(fam)})*{d[b]} mismatch")
            if not le[tensor[m][b]][lat.meet_all(tensor[a][b] for a in fam)]:
                fail("vii", f"(meet {show_family(fam)})*{d[b]} too large")
    record("vii")

    # (viii) a->meet = meet of a->; join->b = meet of ->b
    for fam in _subsets(n):
        m = lat.meet_all(fam)
        j = lat.join_all(fam)
        for a in range(n):
            if res[a][m] != lat.meet_all(res[a][x] for x in fam):
                fail("viii", f"{d[a]}->meet {show_family(fam)} mismatch")
            if res[j][a] != lat.meet_all(res[x][a] for x in fam):
                fail("viii", f"join {show_family(fam)}->{d[a]} mismatch")
    record("viii")

    # (ix) join of a-> is below a->join
    for fam in _subsets(n):
        j = lat.join_all(fam)
        for a in range(n):
            if not le[lat.join_all(res[a][x] for x in fam)][res[a][j]]:
                fail("ix", f"join of {d[a]}->_ over {show_family(fam)} "
                           f"exceeds {d[a]}->join")
    record("ix")

    ordered = {k: out[k] for k in
               ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix")}
    return LawSuiteReport(lat.name, ordered)
