from collections import Counter
from itertools import combinations

import pytest
from conftest import table

from granular import GranularError, distance_similar_classes, enumerate_reducts, is_resolving
from granular.datasets import POLITICAL_OPINIONS, political_network
from granular.discern import essential_sets
from granular.resolving import twin_pairs
from granular.zerodiv import gamma_boolean, gamma_zn, h_partition_zn, layer_partition_check, totient


def test_totient():
    assert [totient(n) for n in (1, 6, 9, 12, 30)] == [1, 2, 6, 4, 8]


def test_zn12_structure():
    g, meta = gamma_zn(12)
    assert g.labels == ("2", "3", "4", "6", "8", "9", "10")
    assert meta.class_sizes == {2: 2, 3: 2, 4: 2, 6: 1}
    assert not meta.trivial
    # class sizes are totients of n/d
    for d, size in meta.class_sizes.items():
        assert size == totient(12 // d)


def test_zn4_trivial():
    g, meta = gamma_zn(4)
    assert g.n == 1 and meta.trivial


@pytest.mark.parametrize("n", [2, 3, 7, 13])
def test_zn_rejects_primes_and_small(n):
    with pytest.raises(GranularError, match="no zero-divisor graph"):
        gamma_zn(n)


def test_zn_edges_are_products_zero():
    g, meta = gamma_zn(18)
    for i, j in g.edges():
        assert meta.elements[i] * meta.elements[j] % 18 == 0
    assert len(g.edges()) == sum(
        1 for i in range(g.n) for j in range(i + 1, g.n) if meta.elements[i] * meta.elements[j] % 18 == 0
    )


def test_divisor_classes_against_distance_classes():
    # reported, not asserted for every n: agreement has only been observed
    agree = {}
    for n in (8, 9, 12, 16, 18, 20, 24, 25, 27, 30):
        g, meta = gamma_zn(n)
        agree[n] = meta.class_partition() == distance_similar_classes(table(g).dm)
    print("divisor classes == distance classes:", agree)
    assert agree[12]


def test_boolean_k3_order_and_layers():
    g, meta = gamma_boolean(3)
    assert g.labels == ("100", "010", "001", "110", "101", "011")
    assert meta.layers == ((0, 1, 2), (3, 4, 5))
    assert meta.bitstring(meta.complement(0)) == "011"


def test_political_network():
    g = political_network()
    t = table(g)
    assert set(g.labels) == set(POLITICAL_OPINIONS)
    john, maria = g.index("John"), g.index("Maria")
    assert is_resolving(t, (john, maria))
    # John 100 and Jessica 011 share no opinion, so they are adjacent
    assert g.index("Jessica") in g.adjacency[john]


@pytest.mark.parametrize("k", [3, 4, 5])
def test_layers_are_discrete(k):
    g, meta = gamma_boolean(k)
    assert all(layer_partition_check(table(g), meta).values())


def test_boolean_k5_resolving_layers():
    g, meta = gamma_boolean(5)
    t = table(g)
    assert is_resolving(t, meta.layer(1))
    assert is_resolving(t, meta.layer(4))
    for i in (2, 3):
        for w in meta.layer(i):
            assert is_resolving(t, tuple(v for v in meta.layer(i) if v != w))


def test_boolean_twin_free():
    for k in (3, 4, 5):
        g, _ = gamma_boolean(k)
        assert all(len(b) == 1 for b in distance_similar_classes(table(g).dm))


def test_boolean_k4_reducts():
    g, meta = gamma_boolean(4)
    report = enumerate_reducts(table(g))
    assert report.metric_dimension == 3
    assert report.upper_dimension == 4
    assert len(report.reducts) == 363
    assert meta.layer(1) in report.reducts
    patterns = Counter(tuple(len(set(r) & set(meta.layer(i))) for i in (1, 2, 3)) for r in report.reducts)
    print("layer patterns for k=4:", dict(patterns))
    assert len(patterns) > 1


@pytest.mark.parametrize("n", [12, 16, 18, 20])
def test_zn_essential_sets_are_twin_pairs(n):
    g, meta = gamma_zn(n)
    t = table(g)
    ess = essential_sets(t).essential_sets
    assert sorted(ess) == sorted(twin_pairs(meta.class_partition()))


def test_h_partition():
    g, meta = gamma_zn(12)
    t = table(g)
    hp = h_partition_zn(t, meta, meta.divisor_classes[2])
    assert hp.singletons == meta.divisor_classes[2]
    assert hp.decomposes
    assert sorted(v for vs in hp.h_sets.values() for v in vs) == sorted(
        set(range(g.n)) - set(meta.divisor_classes[2])
    )
    with pytest.raises(GranularError) as exc:
        h_partition_zn(t, meta, (meta.index(2), meta.index(3)))
    assert exc.value.code == "not_class_contained"


@pytest.mark.parametrize("n", [8, 9, 16, 18, 20, 24, 30])
def test_h_partition_decomposes_for_every_class_subset(n):
    g, meta = gamma_zn(n)
    t = table(g)
    for vs in meta.divisor_classes.values():
        for k in range(1, len(vs) + 1):
            for attrs in combinations(vs, k):
                assert h_partition_zn(t, meta, attrs).decomposes, attrs
