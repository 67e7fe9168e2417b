import pytest

from amalgbase.decide import (
    COMPONENT_NOT_CYCLIC,
    ORDER_NOT_PRIME_POWER,
    BaseVerdict,
    DeciderDisagreement,
    check_base,
    enumerate_bases,
    groups_up_to,
    is_base_bruteforce,
    is_base_structural,
    is_prime_power_order_necessary,
    witness_is_valid,
)
from amalgbase.groups import FinAbGroup, PointedGroup, prime_power_decompose
from amalgbase.subgroups import BoundExceeded, generate

Z = FinAbGroup.cyclic


def P(moduli, g):
    return PointedGroup(Z(*moduli), tuple(g))


def test_bruteforce_examples():
    assert is_base_bruteforce(P((8,), (1,))).is_base

    v = is_base_bruteforce(P((2, 2), (1, 1)))
    assert not v.is_base
    H, K = v.witness
    G = Z(2, 2)
    assert {H, K} == {generate(G, [(1, 0)]), generate(G, [(0, 1)])}

    pg = P((2, 4), (0, 1))
    v = is_base_bruteforce(pg)
    assert not v.is_base and witness_is_valid(pg, *v.witness)
    G = Z(2, 4)
    assert witness_is_valid(pg, generate(G, [(1, 1)]), generate(G, [(1, 0)]))


def test_structural_examples():
    v = is_base_structural(P((6,), (1,)))
    assert not v.is_base and v.failed_clause == ORDER_NOT_PRIME_POWER
    v = is_base_structural(P((12,), (3,)))
    assert v.is_base and (v.p, v.n) == (2, 2)
    v = is_base_structural(P((3, 3), (1, 0)))
    assert not v.is_base and v.failed_clause == COMPONENT_NOT_CYCLIC


def test_prime_power_necessary_examples():
    assert is_prime_power_order_necessary(P((8,), (1,)))
    assert not is_prime_power_order_necessary(P((6,), (1,)))
    assert is_prime_power_order_necessary(P((12,), (4,)))


def test_witness_validation_rejects_bad_pairs():
    pg = P((2, 2), (1, 1))
    G = pg.group
    whole = generate(G, G.basis())
    assert not witness_is_valid(pg, whole, generate(G, []))
    assert not witness_is_valid(pg, generate(G, [(1, 1)]), generate(G, [(1, 0)]))
    assert not witness_is_valid(pg, generate(G, [(1, 0)]), generate(G, [(1, 0)]))


def test_enumerate_up_to_4():
    rows = enumerate_bases(4)
    bases = [(r.group.moduli, r.g) for r in rows if r.is_base]
    assert bases == [
        ((2,), (1,)),
        ((3,), (1,)), ((3,), (2,)),
        ((4,), (1,)), ((4,), (2,)), ((4,), (3,)),
    ]
    assert not any(r.is_base for r in rows if r.group.moduli == (2, 2))


def test_enumerate_up_to_2():
    rows = enumerate_bases(2)
    assert len(rows) == 1 and rows[0].is_base and rows[0].g == (1,)


@pytest.mark.parametrize("n", [6, 12, 20])
def test_row_count(n):
    assert len(enumerate_bases(n, "structural")) == sum(G.order - 1 for G in groups_up_to(n))


def test_methods_give_same_table():
    s = [r.is_base for r in enumerate_bases(24, "structural")]
    b = [r.is_base for r in enumerate_bases(24, "bruteforce")]
    assert s == b


def test_table_order_is_deterministic():
    rows = enumerate_bases(16, "structural")
    assert [(r.group, r.g) for r in rows] == [(r.group, r.g) for r in enumerate_bases(16, "structural")]
    orders = [r.group.order for r in rows]
    assert orders == sorted(orders)


def test_cyclic_p_groups_are_bases_for_every_point():
    for p, n in [(2, 1), (2, 4), (3, 3), (5, 2), (7, 2)]:
        G = Z(p**n)
        for g in G.elements():
            if any(g):
                assert is_base_bruteforce(PointedGroup(G, g)).is_base
                assert is_base_structural(PointedGroup(G, g)).is_base


def test_corollary_on_sweep():
    for r in enumerate_bases(30):
        if r.is_base:
            assert prime_power_decompose(r.group.element_order(r.g)) is not None


def test_structural_works_past_the_bound():
    pg = P((1024, 3), (512, 0))
    v = is_base_structural(pg)
    assert v.is_base and (v.p, v.n) == (2, 10)
    with pytest.raises(BoundExceeded):
        is_base_bruteforce(pg)
    with pytest.raises(BoundExceeded):
        enumerate_bases(300)


def test_disagreement_is_fatal(monkeypatch):
    import amalgbase.decide as d

    monkeypatch.setattr(d, "is_base_structural", lambda pg: BaseVerdict(True, "structural", p=2, n=1))
    with pytest.raises(DeciderDisagreement, match="disagree"):
        check_base(P((2, 2), (1, 1)), "both")


def test_check_base_merges_details():
    v = check_base(P((2, 2), (1, 1)))
    assert v.method == "both" and v.witness and v.failed_clause == COMPONENT_NOT_CYCLIC
    v = check_base(P((9, 2), (3, 1)), "both")
    assert not v.is_base and v.failed_clause == ORDER_NOT_PRIME_POWER
    with pytest.raises(ValueError):
        check_base(P((2,), (1,)), "guess")
