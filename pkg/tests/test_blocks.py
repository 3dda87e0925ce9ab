import pytest

from conftest import group
from blockscope.blocks import (block_distribution, block_idempotent_vectors,
                               brauer_induce, central_characters,
                               lower_defect_multiplicities, p_subgroup_classes,
                               principal_block)
from blockscope.chartable import character_table
from blockscope.cyclotomic import Cyclo
from blockscope.groups import normalizer, quotient_by_normal, sylow_subgroup
from blockscope.modp import mod_p_context
from blockscope.perms import Perm


def cyc(degree, *cycles):
    return Perm.from_cycles(degree, [list(c) for c in cycles])


# -- central characters


def test_trivial_character_central_values_are_class_sizes():
    table = character_table(group("S4"))
    om = central_characters(table)
    for j, cls in enumerate(table.classes):
        assert om[0][j] == cls.size


def test_degree2_vanishes_on_transpositions():
    table = character_table(group("S4"))
    om = central_characters(table)
    i = table.degrees.index(2)
    j = next(j for j, c in enumerate(table.classes)
             if c.element_order == 2 and c.size == 6)
    assert om[i][j] == Cyclo.zero()


def test_a4_degree3_vanishes_on_three_cycles():
    table = character_table(group("A4"))
    om = central_characters(table)
    i = table.degrees.index(3)
    j = next(j for j, c in enumerate(table.classes) if c.element_order == 3)
    assert om[i][j] == Cyclo.zero()


# -- block distribution


def test_s4_single_block():
    blocks = block_distribution(character_table(group("S4")), 2)
    assert len(blocks) == 1
    b = blocks[0]
    assert b.k == 5 and b.defect == 3 and b.is_principal
    assert b.defect_group.order == 8


def test_s5_two_blocks():
    blocks = block_distribution(character_table(group("S5")), 2)
    assert len(blocks) == 2
    b, small = blocks
    assert b.is_principal and b.k == 5 and b.defect == 3
    assert small.k == 2 and small.defect == 1
    assert small.degrees() == (4, 4)
    assert small.defect_group.order == 2


def test_s5_small_block_defect_group_from_three_cycles():
    s5 = group("S5")
    blocks = block_distribution(character_table(s5), 2)
    small = blocks[1]
    # Sylow_2(C_S5((123))) = <(45)>
    assert small.defect_group.order == 2
    gen = small.defect_group.generators[0]
    assert gen.cycle_type() == (2,)


def test_a4_single_block():
    blocks = block_distribution(character_table(group("A4")), 2)
    assert len(blocks) == 1 and blocks[0].k == 4


def test_z6_three_blocks():
    blocks = block_distribution(character_table(group("Z6")), 2)
    assert [(b.k, b.l) for b in blocks] == [(2, 1)] * 3


def test_s4_at_3():
    blocks = block_distribution(character_table(group("S4")), 3)
    ks = sorted(b.k for b in blocks)
    assert ks == [1, 1, 3]
    b = blocks[0]
    assert b.is_principal and b.k == 3 and b.l == 2 and b.defect == 1


def test_odd_prime_pipeline_end_to_end():
    from blockscope.catalog import analyze_group
    r = analyze_group(group("S4"), 3)
    assert r["case_label"] is None  # case analysis is specific to p = 2
    assert all(r["invariant_suite"].values())
    assert r["lower_defect"] == [[3, 1], [1, 1]]
    r5 = analyze_group(group("A5"), 5)
    assert all(r5["invariant_suite"].values())
    assert [(b["k"], b["l"], b["defect"]) for b in r5["blocks"]] == \
        [(4, 2, 1), (1, 1, 0)]


# -- invariants k and l


@pytest.mark.parametrize("name,k,l", [
    ("S4", 5, 2), ("A4", 4, 3), ("A5", 4, 3), ("S5", 5, 2),
    ("L48", 8, 3), ("G96", 10, 2),
])
def test_principal_invariants(name, k, l):
    b = principal_block(group(name), 2)
    assert (b.k, b.l) == (k, l)


def test_block_count_sums():
    for name in ("S4", "S5", "A5", "L48", "G96", "Z6", "S3xS3", "Z3wrZ2"):
        table = character_table(group(name))
        blocks = block_distribution(table, 2)
        assert sum(b.k for b in blocks) == table.n_classes
        assert sum(b.l for b in blocks) == len(table.p_regular_indices(2))
        for b in blocks:
            assert 1 <= b.l <= b.k
            if b.defect == 0:
                assert b.k == b.l == 1 and b.defect_group.order == 1


def test_principal_defect_group_is_sylow():
    for name in ("S4", "S5", "G96", "F56"):
        g = group(name)
        b = principal_block(g, 2)
        assert b.defect_group.order == sylow_subgroup(g, 2).order


def test_partition_is_ideal_choice_independent():
    # conductor 15 part of exp(A5) = 30 splits in two factors mod 2
    table = character_table(group("A5"))
    om = central_characters(table)
    parts = []
    for idx in (0, 1):
        ctx = mod_p_context(table.exponent, 2, factor_index=idx)
        sig = {}
        for i in range(table.n_classes):
            key = tuple(ctx.reduce(w) for w in om[i])
            sig.setdefault(key, set()).add(i)
        parts.append(frozenset(frozenset(v) for v in sig.values()))
    assert parts[0] == parts[1]


# -- Brauer induction


def test_principal_of_klein_normalizer_induces_to_principal():
    s5 = group("S5")
    v4 = s5.subgroup([cyc(5, (0, 1), (2, 3)), cyc(5, (0, 2), (1, 3))])
    n = normalizer(s5, v4)
    assert n.order == 24
    c = principal_block(n, 2)
    ind = brauer_induce(c, s5)
    assert ind is not None and ind.is_principal


def test_principal_induction_for_all_local_subgroups():
    for name in ("S4", "A4", "S5", "L48"):
        g = group(name)
        for r in p_subgroup_classes(g, 2):
            if r.order == 1:
                continue
            n = normalizer(g, r)
            ind = brauer_induce(principal_block(n, 2), g)
            assert ind is not None and ind.is_principal


def test_nonprincipal_induction_s5():
    # the defect-1 block of Z2 x S3 = N_S5(<(12)>) induces to the defect-1
    # block of S5, not to the principal block
    s5 = group("S5")
    r = s5.subgroup([cyc(5, (0, 1))])
    n = normalizer(s5, r)
    assert n.order == 12
    blocks_n = block_distribution(character_table(n), 2)
    small_targets = [brauer_induce(b, s5) for b in blocks_n if not b.is_principal]
    assert any(t is not None and not t.is_principal for t in small_targets)


# -- idempotents


def test_idempotents_orthogonal_and_sum_to_one():
    for name in ("S5", "Z6", "A5", "S3xS3"):
        table = character_table(group(name))
        vectors, ctx = block_idempotent_vectors(table, 2)
        field = ctx.field
        r = table.n_classes
        from blockscope.catalog import _check_idempotents
        assert _check_idempotents(group(name), table, 2)
        # coefficients are p-integral by construction (reduction succeeded)
        assert len(vectors) == len(block_distribution(table, 2))


# -- lower defect multiplicities


def test_lower_defect_a4():
    b = principal_block(group("A4"), 2)
    t = lower_defect_multiplicities(b)
    assert t.by_order() == {4: 1, 1: 2}


def test_lower_defect_s4():
    b = principal_block(group("S4"), 2)
    t = lower_defect_multiplicities(b)
    assert t.by_order() == {8: 1, 1: 1}


def test_lower_defect_g96():
    b = principal_block(group("G96"), 2)
    t = lower_defect_multiplicities(b)
    assert t.by_order() == {32: 1, 1: 1}
    assert t.by_order().get(1) == 1


def test_lower_defect_sums_to_l_everywhere():
    for name in ("S4", "A4", "A5", "S5", "L48", "G96", "Z6", "S3xS3", "Z4wrZ2"):
        table = character_table(group(name))
        for b in block_distribution(table, 2):
            t = lower_defect_multiplicities(b)
            assert sum(t.multiplicities) == b.l
            # nonzero rows sit below the defect group; the defect group row is positive
            assert t.by_order().get(b.defect_group.order, 0) >= 1 or b.defect == 0


def test_lower_defect_quotient_compatibility():
    # normal p-subgroup R with p-power centralizer index: m(b, R) = m(bbar, 1)
    g = group("L48xZ2")
    z2 = g.subgroup([cyc(21, (19, 20))])
    b = principal_block(g, 2)
    t = lower_defect_multiplicities(b)
    m_at_z2 = t.by_order().get(2, 0)
    quo, _, _ = quotient_by_normal(g, z2)
    bq = principal_block(quo, 2)
    tq = lower_defect_multiplicities(bq)
    assert m_at_z2 == tq.by_order().get(1, 0) == 2


def test_lower_defect_json_fingerprints():
    b = principal_block(group("S4"), 2)
    rows = lower_defect_multiplicities(b).to_json()
    assert all({"fingerprint", "order", "multiplicity"} <= set(r) for r in rows)
    assert len({r["fingerprint"] for r in rows}) == len(rows)
