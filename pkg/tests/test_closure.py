import pytest

import latfuzz as lf
import oracles
from conftest import FIXTURES, fs
from latfuzz.document import load_document


@pytest.fixture(scope="module")
def w3_system(w3):
    return lf.system_from_partition(w3)


def to_fracs(l3, values):
    return tuple(oracles.L3[v] for v in values)


def test_w3_system_pins(l3, uni_x, w3_system):
    assert w3_system.value(fs(l3, uni_x, "0", "1/2", "1")) == l3.parse("0")
    assert w3_system.value(fs(l3, uni_x, "1", "1/2", "1/2")) == l3.parse("1")
    assert w3_system.value(lf.constant(l3, uni_x, l3.top)) == l3.top


def test_w3_system_full_table_matches_oracle(l3, uni_x, w3_system):
    expect = oracles.w3_system_table()
    for f, v in w3_system.entries():
        assert oracles.L3[v] == expect[to_fracs(l3, f.values)]


def test_system_from_relation_equals_partition_route(w3, p2, q, x2p):
    for p in (w3, p2, q, x2p):
        via_rel = lf.system_from_relation(lf.relation_from_partition(p))
        direct = lf.system_from_partition(p)
        assert via_rel.table == direct.table


def test_identity_relation_makes_trivial_system(l3, uni_x2):
    system = lf.system_from_relation(lf.identity_relation(l3, uni_x2))
    assert set(system.table) == {l3.top}


def test_constant_top_relation_formula(l3, uni_x2):
    rel = lf.constant_relation(l3, uni_x2, l3.top)
    system = lf.system_from_relation(rel)
    for f, v in system.entries():
        sup = l3.join_all(f.values)
        expect = l3.meet_all(l3.residuum[sup][x] for x in f.values)
        assert v == expect


def test_operator_pin_and_table(l3, uni_x, w3_system):
    op = lf.operator_from_system(w3_system)
    spike = fs(l3, uni_x, "1", "0", "0")
    assert op.apply(spike).displays() == ("1", "1/2", "1/2")
    expect = oracles.operator_table(oracles.w3_system_table(), 3)
    for i, image in enumerate(op.table):
        f = lf.set_at(l3, uni_x, i)
        assert to_fracs(l3, image) == expect[to_fracs(l3, f.values)]


def test_operator_fixes_top_and_inflates(l3, uni_x, w3_system):
    op = lf.operator_from_system(w3_system)
    top = lf.constant(l3, uni_x, l3.top)
    assert op.apply(top) == top
    for f in lf.enumerate_sets(l3, uni_x):
        assert f.le(op.apply(f))


def test_system_from_operator_pin(l3, uni_x, w3_system):
    op = lf.operator_from_system(w3_system)
    back = lf.system_from_operator(op)
    assert back.value(fs(l3, uni_x, "1", "0", "0")) == l3.parse("0")
    assert back.value(lf.constant(l3, uni_x, l3.top)) == l3.top


def test_identity_operator_gives_trivial_system(l3, uni_x2):
    op = lf.identity_operator(l3, uni_x2)
    system = lf.system_from_operator(op)
    assert set(system.table) == {l3.top}


def test_check_system_on_fixture_systems(w3, x2p, p2, q):
    for p in (w3, x2p, p2, q):
        report = lf.check_system(lf.system_from_partition(p))
        assert report.all_ok, report.to_dict()


def test_check_system_on_parity_window():
    doc = load_document(FIXTURES / "example31.json")
    prod = lf.product_partition(doc.partition("PN2"), doc.partition("PZ2"))
    report = lf.check_system(lf.system_from_partition(prod))
    assert report.all_ok, report.to_dict()


def test_check_system_trivial(l3, uni_x2):
    system = lf.system_from_explicit(l3, uni_x2, [l3.top] * 9)
    assert lf.check_system(system).all_ok


def test_check_system_fault_is_caught(l3, uni_x2):
    # membership 1 for (1,0), (0,1) and the top set, 0 elsewhere: the meet
    # (0,0) of two members has membership 0
    table = []
    for f in lf.enumerate_sets(l3, uni_x2):
        member = f.displays() in {("1", "0"), ("0", "1"), ("1", "1")}
        table.append(l3.top if member else l3.bottom)
    system = lf.system_from_explicit(l3, uni_x2, table)
    report = lf.check_system(system)
    assert report.axiom_i
    assert not report.axiom_ii
    assert "pair" in report.counterexamples["axiom_ii"]


def test_check_system_is_cached(w3):
    system = lf.system_from_partition(w3)
    first = lf.check_system(system)
    assert lf.check_system(system) is first


def test_check_operator_on_derived(w3, x2p):
    for p in (w3, x2p):
        op = lf.operator_from_system(lf.system_from_partition(p))
        report = lf.check_operator(op)
        assert report.all_ok, report.to_dict()


def test_check_operator_identity_and_constant_top(l3, uni_x2):
    assert lf.check_operator(lf.identity_operator(l3, uni_x2)).all_ok
    top = lf.constant(l3, uni_x2, l3.top)
    const_top = lf.operator_from_function(l3, uni_x2, lambda f: top)
    report = lf.check_operator(const_top)
    assert report.all_ok, report.to_dict()


def test_check_operator_catches_deflation(l3, uni_x2):
    bottom = lf.constant(l3, uni_x2, l3.bottom)
    crush = lf.operator_from_function(l3, uni_x2, lambda f: bottom)
    report = lf.check_operator(crush)
    assert not report.axiom_i
    assert not report.axiom_ii


def test_roundtrip_relation_reports(l3, uni_x2, w3):
    rel = lf.relation_from_partition(w3)
    report = lf.roundtrip_relation(rel)
    assert report.total == 9
    assert not report.exact
    assert [dict(m) for m in report.mismatches] == [
        {"at": ["x1", "x3"], "original": "0", "mapped_back": "1/2"},
    ]
    ident = lf.identity_relation(l3, uni_x2)
    assert lf.roundtrip_relation(ident).exact
    bot = lf.constant_relation(l3, uni_x2, l3.bottom)
    bot_report = lf.roundtrip_relation(bot)
    assert {tuple(m["at"]) for m in bot_report.mismatches} == \
        {("x1", "x1"), ("x2", "x2")}


def test_roundtrip_system_reports(w3, x2p):
    assert lf.roundtrip_system(lf.system_from_partition(w3)).exact
    assert lf.roundtrip_system(lf.system_from_partition(x2p)).exact


def test_roundtrip_system_fault_not_exact(l3, uni_x2):
    # the fault system is not meet-stable, so the operator round trip
    # repairs it and the report must show it
    table = []
    for f in lf.enumerate_sets(l3, uni_x2):
        member = f.displays() in {("1", "0"), ("0", "1"), ("1", "1")}
        table.append(l3.top if member else l3.bottom)
    system = lf.system_from_explicit(l3, uni_x2, table)
    report = lf.roundtrip_system(system)
    assert not report.exact


def test_budget_errors(w3):
    with pytest.raises(lf.BudgetExceeded):
        lf.system_from_partition(w3, budget=5)
    system = lf.system_from_partition(w3)
    with pytest.raises(lf.BudgetExceeded):
        lf.operator_from_system(system, budget=5)
    with pytest.raises(lf.BudgetExceeded):
        lf.roundtrip_system(system, budget=5)


def test_explicit_table_shape(l3, uni_x2):
    with pytest.raises(lf.MismatchError):
        lf.system_from_explicit(l3, uni_x2, [l3.top] * 4)
