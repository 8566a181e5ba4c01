import pytest

import latfuzz as lf
from conftest import fs


@pytest.fixture(scope="module")
def coalg_x2(x2p):
    return lf.coalgebra_from_partition(x2p)


@pytest.fixture(scope="module")
def dialg_x2(x2p):
    return lf.dialgebra_from_partition(x2p)


@pytest.fixture(scope="module")
def coalg_s(sp):
    return lf.coalgebra_from_partition(sp)


@pytest.fixture(scope="module")
def collapse(uni_x2, uni_s):
    return lf.UniverseMap.from_labels(uni_x2, uni_s, {"x1": "s1", "x2": "s1"})


def test_structure_values(l3, uni_x2, coalg_x2, dialg_x2):
    g01 = fs(l3, uni_x2, "0", "1")
    idx = lf.set_index(g01)
    assert l3.displays[coalg_x2.table[0][idx]] == "1/2"
    assert dialg_x2.table[0][idx] == coalg_x2.table[0][idx]
    top_idx = lf.set_index(lf.constant(l3, uni_x2, l3.top))
    bottom_idx = lf.set_index(lf.constant(l3, uni_x2, l3.bottom))
    for x in range(2):
        assert coalg_x2.table[x][top_idx] == l3.top
        assert coalg_x2.table[x][bottom_idx] == l3.bottom


def test_constants_fixed_in_dialgebra(l3, uni_x2, dialg_x2):
    for a in l3.elements():
        idx = lf.set_index(lf.constant(l3, uni_x2, a))
        for x in range(2):
            assert dialg_x2.table[x][idx] == a


def test_requires_identity_indexing(w3):
    with pytest.raises(lf.PreconditionError, match="identity-indexed"):
        lf.coalgebra_from_partition(w3)
    with pytest.raises(lf.PreconditionError):
        lf.dialgebra_from_partition(w3)


def test_t1_identity_and_constants(l3, uni_x2):
    ident = lf.UniverseMap.identity(uni_x2)
    lam = tuple(range(3)) * 3
    assert lf.t1_on_morphism(ident, lam, l3) == lam
    const = (l3.parse("1/2"),) * 9
    out = lf.t1_on_morphism(ident, const, l3)
    assert set(out) == {l3.parse("1/2")}


def test_t1_functor_law(l3, uni_x2, uni_s, swap, collapse):
    # phi1 = swap on the pair universe, phi2 = collapse to the singleton
    lam = tuple((i * 2 + 1) % 3 for i in range(9))  # arbitrary table on L^X
    via_composite = lf.t1_on_morphism(swap.compose(collapse), lam, l3)
    via_steps = lf.t1_on_morphism(collapse, lf.t1_on_morphism(swap, lam, l3), l3)
    assert via_composite == via_steps


def test_t2_functor_law(l3, uni_x2, uni_s, swap, collapse):
    # the pair functor acts as (map, pushforward); composition must match
    for f in lf.enumerate_sets(l3, uni_x2):
        one_step = lf.forward_image(swap.compose(collapse), f)
        two_step = lf.forward_image(collapse, lf.forward_image(swap, f))
        assert one_step == two_step
    ident = lf.UniverseMap.identity(uni_x2)
    for f in lf.enumerate_sets(l3, uni_x2):
        assert lf.forward_image(ident, f) == f


def test_coa_hom_identity_swap_collapse(coalg_x2, coalg_s, swap, collapse,
                                        uni_x2):
    ident = lf.UniverseMap.identity(uni_x2)
    assert lf.check_coa_hom(ident, coalg_x2, coalg_x2).holds
    assert lf.check_coa_hom(swap, coalg_x2, coalg_x2).holds
    assert lf.check_coa_hom(collapse, coalg_x2, coalg_s).holds


def test_swap_hom_holds_with_equality(l3, coalg_x2, swap, uni_x2):
    for i in range(9):
        g = lf.set_at(l3, uni_x2, i)
        pulled = lf.set_index(lf.backward_image(swap, g))
        for x in range(2):
            assert coalg_x2.table[x][pulled] == \
                coalg_x2.table[swap.mapping[x]][i]


def test_dia_hom_identity_swap_collapse(dialg_x2, sp, swap, collapse, uni_x2):
    ident = lf.UniverseMap.identity(uni_x2)
    dialg_s = lf.dialgebra_from_partition(sp)
    assert lf.check_dia_hom(ident, dialg_x2, dialg_x2).holds
    assert lf.check_dia_hom(swap, dialg_x2, dialg_x2).holds
    assert lf.check_dia_hom(collapse, dialg_x2, dialg_s).holds


def test_identity_indexed_images_are_homs(l3, x2p, sp, swap, collapse, uni_x2,
                                          coalg_x2, dialg_x2, coalg_s):
    # witness-top candidates between identity-indexed partitions
    candidates = [
        (lf.identity_candidate(x2p), x2p, x2p,
         lf.UniverseMap.identity(uni_x2)),
    ]
    swap_cand, _ = lf.make_candidate(x2p, x2p, swap, {"x1": "x2", "x2": "x1"})
    collapse_cand, _ = lf.make_candidate(
        x2p, sp, collapse, {"x1": "s1", "x2": "s1"}
    )
    candidates.append((swap_cand, x2p, x2p, swap))
    candidates.append((collapse_cand, x2p, sp, collapse))
    for cand, px, py, phi in candidates:
        assert lf.fp_witness(cand).value == l3.top
        cx = lf.coalgebra_from_partition(px)
        cy = lf.coalgebra_from_partition(py)
        assert lf.check_coa_hom(phi, cx, cy).holds
        dx = lf.dialgebra_from_partition(px)
        dy = lf.dialgebra_from_partition(py)
        assert lf.check_dia_hom(phi, dx, dy).holds


def test_half_witness_image_can_fail_hom_checks():
    """Documented limitation: an admissible identity-indexed candidate whose
    witness is below top need not induce holding homomorphism checks, even
    when indexing commutes with its point map.  The structure-table checks
    genuinely require the witness-top case, which is what the fixture
    morphisms used elsewhere provide."""
    lat = lf.lukasiewicz_chain(5)
    ux = lf.Universe("UX", ("x1", "x2"))
    uy = lf.Universe("UY", ("y1", "y2"))

    def mk(uni, *vv):
        return lf.FuzzySet(lat, uni, tuple(lat.parse(v) for v in vv))

    px = lf.validate_partition(ux, [
        ("x1", mk(ux, "1", "3/4")), ("x2", mk(ux, "1/4", "1")),
    ])
    py = lf.validate_partition(uy, [
        ("y1", mk(uy, "1", "1/4")), ("y2", mk(uy, "3/4", "1")),
    ])
    phi = lf.UniverseMap.from_labels(ux, uy, {"x1": "y1", "x2": "y2"})
    cand, _ = lf.make_candidate(px, py, phi, {"x1": "y1", "x2": "y2"})
    witness = lf.fp_witness(cand)
    assert witness.display == "1/2" and witness.admissible
    assert lf.index_square_diagnostic(cand).holds
    coa = lf.check_coa_hom(
        phi, lf.coalgebra_from_partition(px), lf.coalgebra_from_partition(py)
    )
    dia = lf.check_dia_hom(
        phi, lf.dialgebra_from_partition(px), lf.dialgebra_from_partition(py)
    )
    assert not coa.holds and coa.violation == ("x1", ("0", "1/2"))
    assert not dia.holds


def test_failing_coa_hom_has_violation(l3, uni_x2, x2p):
    crisp = lf.validate_partition(uni_x2, [
        ("x1", fs(l3, uni_x2, "1", "0")),
        ("x2", fs(l3, uni_x2, "0", "1")),
    ])
    ident = lf.UniverseMap.identity(uni_x2)
    cx = lf.coalgebra_from_partition(x2p)
    cy = lf.coalgebra_from_partition(crisp)
    verdict = lf.check_coa_hom(ident, cx, cy)
    assert not verdict.holds
    assert verdict.violation is not None


def test_conversion_roundtrips(coalg_x2, dialg_x2):
    assert lf.dia_to_coa(lf.coa_to_dia(coalg_x2)).table == coalg_x2.table
    assert lf.coa_to_dia(lf.dia_to_coa(dialg_x2)).table == dialg_x2.table


def test_triangle_coa_to_dia_equals_direct(x2p, sp, coalg_x2, dialg_x2):
    assert lf.coa_to_dia(coalg_x2).table == dialg_x2.table
    coalg_sp = lf.coalgebra_from_partition(sp)
    assert lf.coa_to_dia(coalg_sp).table == \
        lf.dialgebra_from_partition(sp).table


def test_transfer_checks(coalg_x2, dialg_x2, coalg_s, swap, collapse, uni_x2,
                         sp):
    ident = lf.UniverseMap.identity(uni_x2)
    assert lf.morphism_transfer_check(
        ident, coalg_x2, coalg_x2, "coa-dia"
    ).status == "holds"
    assert lf.morphism_transfer_check(
        swap, coalg_x2, coalg_x2, "coa-dia"
    ).status == "holds"
    assert lf.morphism_transfer_check(
        swap, dialg_x2, dialg_x2, "dia-coa"
    ).status == "holds"
    # non-injective collapse: proviso unmet even though the check holds
    assert lf.morphism_transfer_check(
        collapse, coalg_x2, coalg_s, "coa-dia"
    ).status == "proviso unmet"
    # non-surjective embedding: proviso unmet in the other direction
    embed = lf.UniverseMap.from_labels(sp.universe, uni_x2, {"s1": "x1"})
    dial_s = lf.dialgebra_from_partition(sp)
    assert lf.morphism_transfer_check(
        embed, dial_s, dialg_x2, "dia-coa"
    ).status == "proviso unmet"
    with pytest.raises(ValueError):
        lf.morphism_transfer_check(ident, coalg_x2, coalg_x2, "sideways")


def test_transfer_source_check_fails(l3, uni_x2, x2p, coalg_x2):
    crisp = lf.validate_partition(uni_x2, [
        ("x1", fs(l3, uni_x2, "1", "0")),
        ("x2", fs(l3, uni_x2, "0", "1")),
    ])
    ident = lf.UniverseMap.identity(uni_x2)
    cy = lf.coalgebra_from_partition(crisp)
    verdict = lf.morphism_transfer_check(ident, coalg_x2, cy, "coa-dia")
    assert verdict.status == "source check fails"


def test_adjunction_identity_and_swap(coalg_x2, dialg_x2, swap, uni_x2):
    ident = lf.UniverseMap.identity(uni_x2)
    for phi in (ident, swap):
        verdict = lf.adjunction_check(coalg_x2, dialg_x2, phi)
        assert verdict.holds
        assert verdict.rho_check.holds
        assert verdict.triangle_commutes
        assert verdict.uniqueness_forced


def test_adjunction_precondition(l3, uni_x2, x2p, coalg_x2):
    crisp = lf.validate_partition(uni_x2, [
        ("x1", fs(l3, uni_x2, "1", "0")),
        ("x2", fs(l3, uni_x2, "0", "1")),
    ])
    bad_target = lf.dialgebra_from_partition(crisp)
    ident = lf.UniverseMap.identity(uni_x2)
    with pytest.raises(lf.PreconditionError):
        lf.adjunction_check(coalg_x2, bad_target, ident)


def test_coa_hom_composition_on_fixture(coalg_x2, coalg_s, swap, collapse):
    # two holding checks compose to a holding check
    assert lf.check_coa_hom(swap, coalg_x2, coalg_x2).holds
    assert lf.check_coa_hom(collapse, coalg_x2, coalg_s).holds
    composed = swap.compose(collapse)
    assert lf.check_coa_hom(composed, coalg_x2, coalg_s).holds


def test_budget_paths(x2p, coalg_x2, uni_x2):
    with pytest.raises(lf.BudgetExceeded):
        lf.coalgebra_from_partition(x2p, budget=2)
    ident = lf.UniverseMap.identity(uni_x2)
    with pytest.raises(lf.BudgetExceeded):
        lf.check_coa_hom(ident, coalg_x2, coalg_x2, budget=2)
