import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings

from conftest import D4, Q, Q45, quivers
from toricposets import fixtures
from toricposets.errors import InputError, PreconditionError, ResourceError
from toricposets.extensions import (
    add_arc,
    bounded_bijection,
    count_ltor,
    cyclic_canonical,
    ltor,
    ltor_bruteforce,
    ltor_partition,
    ltor_recursion_tree,
    ltor_recursive,
)
from toricposets.generate import random_bounded_poset
from toricposets.greene import kk_quiver
from toricposets.quiver import linear_extensions
from toricposets.toric import flip_class, same_toric_poset

D4_LTOR = [(1, 2, 3, 4), (1, 3, 2, 4), (1, 4, 2, 3), (1, 4, 3, 2)]
Q45_4TO5 = [(1, 2, 3, 4, 5), (1, 2, 4, 3, 5), (1, 3, 2, 4, 5), (1, 3, 4, 2, 5), (1, 4, 2, 3, 5), (1, 4, 3, 2, 5),
            (1, 5, 2, 3, 4), (1, 5, 2, 4, 3), (1, 5, 3, 2, 4), (1, 5, 3, 4, 2), (1, 5, 4, 2, 3), (1, 5, 4, 3, 2)]
Q45_5TO4 = [(1, 2, 3, 5, 4), (1, 3, 2, 5, 4)]
Q0 = [(1, 4, 5, 2, 3), (1, 4, 5, 3, 2)]


def naive_ltor(q):
    """Every permutation, kept when some class member has one of its rotations as a linear extension."""
    members = flip_class(q)
    out = set()
    for w in itertools.permutations(range(1, q.n + 1)):
        if w[0] != 1:
            continue
        for k in range(q.n):
            r = w[k:] + w[:k]
            pos = {v: i for i, v in enumerate(r)}
            if any(all(pos[a] < pos[b] for a, b in m.arcs) for m in members):
                out.add(w)
                break
    return sorted(out)


def test_cyclic_canonical():
    assert cyclic_canonical((3, 1, 2)).canonical == (1, 2, 3)
    assert cyclic_canonical((2, 3, 1)) == cyclic_canonical((1, 2, 3))
    assert str(cyclic_canonical((4, 1, 3, 2))) == "[(1,3,2,4)]"
    with pytest.raises(InputError):
        cyclic_canonical((1, 1, 2))


@pytest.mark.parametrize("method", ["brute", "partition", "recursive"])
def test_d4_golden(method):
    assert ltor(D4, method).words() == D4_LTOR


def test_q45_example_listing():
    a = ltor_recursive(fixtures.quiver("q45_4to5"))
    b = ltor_recursive(fixtures.quiver("q45_5to4"))
    c = ltor_recursive(fixtures.quiver("q0"))
    assert a.words() == Q45_4TO5 and b.words() == Q45_5TO4 and c.words() == Q0
    whole = ltor_recursive(Q45)
    assert len(whole) == 16
    assert a.items | b.items | c.items == whole.items
    assert not (a.items & b.items or a.items & c.items or b.items & c.items)
    # adding 4->5 or 5->4 alone loses the two extensions of Q_0
    assert a.items | b.items < whole.items


def test_fixture_representatives():
    assert fixtures.quiver("q45") == Q45
    assert same_toric_poset(add_arc(Q45, 4, 5), fixtures.quiver("q45_4to5"))
    assert same_toric_poset(add_arc(Q45, 5, 4), fixtures.quiver("q45_5to4"))


def test_d4_recursion_tree():
    t = ltor_recursion_tree(D4)
    assert (t.kind, t.pair, t.pivot) == ("split", (2, 3), 1)
    assert [c.pair for c in t.children] == [(1, 4), (1, 4)]
    assert [str(w) for w in t.leaves()] == ["[(1,4,2,3)]", "[(1,2,3,4)]", "[(1,4,3,2)]", "[(1,3,2,4)]"]
    assert t.size() == 7


def test_disconnected_and_tiny():
    assert ltor_recursive(Q(1)).words() == [(1,)]
    assert ltor_recursive(Q(2)).words() == [(1, 2)]
    assert ltor_recursive(Q(3)).words() == [(1, 2, 3), (1, 3, 2)]
    assert ltor_recursion_tree(Q(3)).kind == "join"
    assert count_ltor(Q(4)) == 6


@pytest.mark.parametrize("method", ["brute", "partition", "recursive"])
def test_caps(method):
    with pytest.raises(ResourceError):
        ltor(Q(5, (1, 2), (2, 3), (3, 4), (4, 5)), method, cap=2)


def test_errors():
    with pytest.raises(InputError):
        ltor(D4, "magic")
    with pytest.raises(InputError):
        ltor_partition(D4, 9)
    with pytest.raises(InputError):
        add_arc(D4, 1, 2)
    with pytest.raises(PreconditionError):
        add_arc(Q(3, (1, 2), (2, 3)), 3, 1)


@settings(max_examples=40)
@given(quivers(max_n=6))
def test_enumerators_agree_with_naive(q):
    expected = naive_ltor(q)
    assert ltor_bruteforce(q).words() == expected
    assert ltor_recursive(q).words() == expected
    for v in range(1, q.n + 1):
        assert ltor_partition(q, v).words() == expected


@given(quivers())
def test_class_invariance(q):
    base = ltor_recursive(q)
    for m in list(flip_class(q))[:8]:
        assert ltor_recursive(m) == base


@given(quivers(max_n=6))
def test_recursion_tree_structure(q):
    t = ltor_recursion_tree(q)
    stack = [t]
    while stack:
        node = stack.pop()
        if node.kind == "leaf":
            assert node.closure.graph.is_complete() and not node.children
        else:
            assert len(node.children) == (2 if node.kind == "split" else 1)
            for c in node.children:
                assert len(c.closure.arcs) > len(node.closure.arcs)
        stack.extend(node.children)


def test_bounded_bijection_kk_counts():
    for k in range(4):
        for j in range(4):
            p, b, c, zero, one = kk_quiver(k, j)
            hasse = p
            if k + j:
                hasse = Q(p.n, *[a for a in p.arcs if a != (zero, one)])
            q, theta = bounded_bijection(hasse, zero, one)
            assert q == p
            assert len(theta) == comb(k + j, k) == count_ltor(q)


def test_bounded_bijection_random():
    rng = random.Random(3)
    for _ in range(15):
        bp = random_bounded_poset(rng.randint(3, 7), rng)
        q, theta = bounded_bijection(bp.hasse, bp.zero, bp.one)
        assert len(theta) == len(linear_extensions(bp.hasse)) == count_ltor(q)
        assert all(w[0] == bp.zero for w in linear_extensions(bp.hasse))


def test_bounded_bijection_rejects_unbounded():
    with pytest.raises(InputError):
        bounded_bijection(Q(3, (1, 2), (1, 3)), 1, 3)
