import pytest
from conftest import connected_graphs, graphs_with_subset, table
from hypothesis import given, settings
from hypothesis import strategies as st

from granular import (
    GranularError,
    InformationTable,
    equivalent,
    granule,
    join,
    make_family,
    max_partitioner,
    meet,
    min_partitioners,
    partition,
    partitioners,
    refines,
    representation,
)
from granular.datasets import customer_matrix


def naive_partition(t, attrs):
    """Quadratic oracle: group vertices by pairwise comparison of distance columns."""
    blocks: list[list[int]] = []
    for v in range(t.n):
        for b in blocks:
            if all(t.value(v, a) == t.value(b[0], a) for a in attrs):
                b.append(v)
                break
        else:
            blocks.append([v])
    return sorted(tuple(b) for b in blocks)


def naive_meet(p, q):
    return sorted(tuple(sorted(set(a) & set(b))) for a in p for b in q if set(a) & set(b))


def naive_refines(p, q):
    return all(any(set(a) <= set(b) for b in q) for a in p)


def c4():
    return table(make_family("cycle", [4]))


def test_customer_table_values():
    t = InformationTable(customer_matrix())
    assert t.n == 7
    assert t.labels[0] == "c1"
    assert t.value(0, 1) == t.value(1, 0)


def test_representation():
    t = table(make_family("path", [4]))
    assert representation(t, 1, (0, 3)) == (1, 2)
    with pytest.raises(GranularError, match="empty attribute set"):
        representation(t, 1, ())


def test_empty_attributes_give_one_block():
    t = c4()
    assert partition(t, ()) == ((0, 1, 2, 3),)


def test_single_attribute_partition():
    # in C4 the vertex 0 sees 1 and 3 at the same distance
    assert partition(c4(), (0,)) == ((0,), (1, 3), (2,))
    assert granule(c4(), 3, (0,)) == (1, 3)


def test_unknown_label():
    t = c4()
    assert t.subset_of_labels(["v2", "v1"]) == (0, 1)
    with pytest.raises(GranularError) as exc:
        t.subset_of_labels(["nope"])
    assert exc.value.code == "unknown_label"


def test_lattice_operations_small():
    p = ((0, 1), (2, 3))
    q = ((0, 2), (1, 3))
    assert meet(p, q) == ((0,), (1,), (2,), (3,))
    assert join(p, q) == ((0, 1, 2, 3),)
    assert refines(((0,), (1,), (2, 3)), p)
    assert not refines(p, q)


def test_ground_set_mismatch():
    with pytest.raises(GranularError) as exc:
        meet(((0, 1),), ((0, 1, 2),))
    assert exc.value.code == "ground_set_mismatch"


def test_max_partitioner_c4_by_definition():
    # by definition Max({0}) is the union of the whole class of {0}; here {0, 2}
    report = partitioners(c4(), (0,))
    assert report.maximum == (0, 2)
    assert report.union_equivalent
    assert report.minimum == ((0,), (2,))
    assert max_partitioner(c4(), (0,)) == (0, 2)


def test_minimum_partitioners_need_not_lie_inside_attrs():
    mins = min_partitioners(c4(), (0,))
    assert (2,) in mins
    assert not set(mins[1]) <= {0}


def test_partitioner_cap(monkeypatch):
    t = table(make_family("path", [5]))
    with pytest.raises(GranularError, match="enumeration cap exceeded"):
        partitioners(t, (0,), cap=4)
    monkeypatch.setenv("GRANULAR_CAP", "4")
    with pytest.raises(GranularError):
        partitioners(t, (0,))


@settings(max_examples=200, deadline=None)
@given(graphs_with_subset())
def test_partition_matches_oracle(gs):
    g, attrs = gs
    t = table(g)
    p = partition(t, attrs)
    assert list(p) == naive_partition(t, attrs)
    assert sorted(v for b in p for v in b) == list(range(t.n))
    for b in p:
        for v in b:
            assert granule(t, v, attrs) == b


@settings(max_examples=150, deadline=None)
@given(connected_graphs(), st.data())
def test_partition_antitone_and_meet(g, data):
    t = table(g)
    a = tuple(sorted(data.draw(st.sets(st.integers(0, g.n - 1)))))
    b = tuple(sorted(data.draw(st.sets(st.integers(0, g.n - 1)))))
    union = tuple(sorted(set(a) | set(b)))
    pa, pb, pu = partition(t, a), partition(t, b), partition(t, union)
    # more attributes never coarsen, and the union realises the meet
    assert refines(pu, pa) and refines(pu, pb)
    assert pu == meet(pa, pb)
    assert list(meet(pa, pb)) == naive_meet(pa, pb)
    assert refines(pa, pb) == naive_refines(pa, pb)
    j = join(pa, pb)
    assert refines(pa, j) and refines(pb, j)
    assert equivalent(t, a, a)


@settings(max_examples=60, deadline=None)
@given(graphs_with_subset(max_n=7))
def test_partitioner_sandwich(gs):
    g, attrs = gs
    t = table(g)
    report = partitioners(t, attrs)
    target = partition(t, attrs)
    assert set(attrs) <= set(report.maximum)
    for m in report.minimum:
        assert partition(t, m) == target
        assert set(m) <= set(report.maximum)
    # some minimum partitioner sits inside A
    assert any(set(m) <= set(attrs) for m in report.minimum)
