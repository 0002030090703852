import json
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from depthzero.multisegments import (DEFAULT_CAP, Multisegment, MultisegmentError, Segment,
                                     all_multisegments, begin_end_encoding, decomposition_number,
                                     elementary_ops, format_multisegment, leq, linked, m_matrix,
                                     parse_multisegment, partition_P, poset, zelevinsky_dual)
from depthzero.partitions import dominates

P = parse_multisegment


def brute_below(a):
    """Closure of {a} under elementary operations, computed naively."""
    found, frontier = {a}, [a]
    while frontier:
        frontier = [d for c in frontier for d in elementary_ops(c) if d not in found]
        found.update(frontier)
    return found


def test_segment_basics():
    assert len(Segment(0, 2)) == 3
    assert str(Segment(1, 1)) == "[1]"
    with pytest.raises(MultisegmentError):
        Segment(2, 1)


def test_linked_examples():
    assert linked(Segment(0, 0), Segment(1, 1))
    assert linked(Segment(0, 1), Segment(1, 2))
    assert not linked(Segment(0, 0), Segment(2, 2))
    assert not linked(Segment(0, 2), Segment(1, 1))
    assert Segment(0, 0).precedes(Segment(1, 1))
    assert not Segment(1, 1).precedes(Segment(0, 0))


def test_text_forms():
    a = P("[1]+[0,2]+[1,1]")
    assert format_multisegment(a) == "[1]+[1]+[0,2]"
    assert P("0") == Multisegment()
    assert P(" [ -1 , 0 ] ") == Multisegment([(-1, 0)])
    with pytest.raises(MultisegmentError, match=r"\[2,x\]"):
        P("[0]+[2,x]")
    with pytest.raises(MultisegmentError, match="start > end"):
        P("[3,1]")


def test_canonical_order():
    a = Multisegment([(0, 0), (1, 3), (1, 1)])
    assert [(d.start, d.end) for d in a] == [(1, 3), (1, 1), (0, 0)]


def test_elementary_ops_examples():
    assert elementary_ops(P("[0]+[1]")) == {P("[0,1]")}
    assert elementary_ops(P("[0,1]+[1,2]")) == {P("[0,2]+[1]")}
    assert elementary_ops(P("[0]+[2]")) == set()
    assert elementary_ops(P("[0,2]+[1]")) == set()


def test_leq_examples():
    assert leq(P("[0,1]"), P("[0]+[1]"))
    assert not leq(P("[0]+[1]"), P("[0,1]"))
    assert leq(P("[0,2]"), P("[0]+[1]+[2]"))
    with pytest.raises(MultisegmentError, match="different cuspidal support"):
        leq(P("[0]"), P("[1]"))


def test_poset_three_singletons():
    p = poset(P("[0]+[1]+[2]"))
    assert set(p.nodes) == {P("[2]+[1]+[0]"), P("[2]+[0,1]"), P("[1,2]+[0]"), P("[0,2]")}
    assert p.nodes[0] == p.top
    assert len(p.edges) == 4


def test_poset_matches_naive_closure(msegs5):
    for a in msegs5:
        p = poset(a)
        assert set(p.nodes) == brute_below(a)
        assert set(p.edges) == {(c, d) for c in p.nodes for d in elementary_ops(c)}


def test_poset_invariants(msegs6):
    for a in msegs6:
        p = poset(a)
        index = {b: i for i, b in enumerate(p.nodes)}
        for u, v in p.edges:
            assert v.square_sum() > u.square_sum()
            assert index[u] < index[v]
            assert dominates(partition_P(u), partition_P(v))
        assert all(b.support() == a.support() for b in p.nodes)


def test_poset_cap():
    a = Multisegment([(k, k) for k in range(DEFAULT_CAP + 1)])
    with pytest.raises(MultisegmentError, match=f"cap of {DEFAULT_CAP}"):
        poset(a)
    with pytest.raises(MultisegmentError, match="cap of 3"):
        poset(P("[0]+[1]+[2]+[3]"), cap=3)


def test_exports():
    p = poset(P("[0]+[1]"))
    dot = p.to_dot()
    assert dot == 'digraph multisegments {\n  "[1]+[0]";\n  "[0,1]";\n  "[1]+[0]" -> "[0,1]";\n}\n'
    data = json.loads(p.to_json({b: decomposition_number(b, p.top) for b in p.nodes}))
    assert data == {"nodes": ["[1]+[0]", "[0,1]"], "edges": [["[1]+[0]", "[0,1]"]],
                    "m_values": {"[1]+[0]": 1, "[0,1]": 1}}


def test_partition_P_examples():
    assert partition_P(P("[0,2]")) == (1, 1, 1)
    assert partition_P(P("[0]+[1]+[2]")) == (3,)
    assert partition_P(P("[0,1]+[1]")) == (2, 1)
    with pytest.raises(MultisegmentError):
        partition_P(Multisegment())


def test_encoding_examples():
    a = P("[0]+[1]")
    assert begin_end_encoding(a, a) == (1, 2)
    assert begin_end_encoding(P("[0,1]"), a) == (2, 1)


def test_decomposition_number_examples():
    assert decomposition_number(P("[0,1]"), P("[0]+[1]")) == 1
    assert decomposition_number(P("[0]+[1]"), P("[0,1]")) == 0
    assert decomposition_number(P("[0,2]"), P("[0]+[1]+[2]")) == 1
    # two equal-length overlapping pairs: the middle term appears twice
    assert decomposition_number(P("[1]+[0,1]+[0]"), P("[1]+[1]+[0]+[0]")) == 2
    with pytest.raises(MultisegmentError):
        decomposition_number(P("[0]"), P("[1]"))


def test_m_support_and_unitriangularity(msegs5):
    for a in msegs5:
        below = set(poset(a).nodes)
        for b in all_multisegments(a.support()):
            assert (decomposition_number(b, a) != 0) == (b in below)
        nodes, mat = m_matrix(a)
        for i, b in enumerate(nodes):
            assert mat[i][i] == 1
            for j, c in enumerate(nodes):
                if mat[i][j]:
                    assert j <= i and leq(b, c)


def test_all_multisegments_counts():
    assert set(all_multisegments(Counter({0: 1, 1: 1}))) == {P("[0]+[1]"), P("[0,1]")}
    assert len(list(all_multisegments(Counter({0: 2, 1: 2})))) == 3


def test_dual_examples():
    for n in range(1, 7):
        assert zelevinsky_dual(Multisegment([(0, n - 1)])) == Multisegment([(k, k) for k in range(n)])
    assert zelevinsky_dual(P("[0]+[1]")) == P("[0,1]")
    assert zelevinsky_dual(P("[0]+[2]")) == P("[0]+[2]")


def test_dual_involution_exhaustive(msegs6):
    for a in msegs6:
        d = zelevinsky_dual(a)
        assert d.support() == a.support()
        assert zelevinsky_dual(d) == a


segments = st.tuples(st.integers(-3, 3), st.integers(0, 3)).map(lambda t: (t[0], t[0] + t[1]))


@settings(max_examples=200)
@given(st.lists(segments, max_size=5))
def test_dual_involution_property(segs):
    a = Multisegment(segs)
    assert zelevinsky_dual(zelevinsky_dual(a)) == a


@given(st.lists(segments, max_size=5))
def test_text_roundtrip(segs):
    a = Multisegment(segs)
    assert parse_multisegment(format_multisegment(a)) == a


def test_twist_invariance(msegs5):
    for a in msegs5[:200]:
        shifted = Multisegment([(d.start + 7, d.end + 7) for d in a])
        shift = lambda m: Multisegment([(d.start + 7, d.end + 7) for d in m])
        nodes = poset(a).nodes
        assert set(poset(shifted).nodes) == {shift(b) for b in nodes}
        for b in nodes:
            for c in nodes:
                assert decomposition_number(shift(b), shift(c)) == decomposition_number(b, c)
