import random

import pytest

from conftest import Q
from toricposets import fixtures
from toricposets.errors import InputError, ResourceError
from toricposets.generate import random_hasse
from toricposets.greene import greene_strongly_planar, psi_poset
from toricposets.planar import (
    BoundedRegion,
    RotationSystem,
    augment,
    bounded_regions,
    cycle_extremes,
    face_cycle,
    faces,
    regions_from_report,
    search_strongly_planar,
    strongly_planar_check,
)
from toricposets.ratfun import rf_equal

DIAMOND = Q(4, (1, 2), (1, 3), (2, 4), (3, 4))
BOWTIE = Q(4, (1, 3), (1, 4), (2, 3), (2, 4))


def test_augment():
    aug, zero, one = augment(DIAMOND)
    assert (zero, one) == (5, 6)
    assert aug.arcs == DIAMOND.arcs | {(5, 1), (4, 6)}


def test_faces_of_a_square():
    square = Q(4, (1, 2), (2, 3), (3, 4), (1, 4)).graph
    rot = RotationSystem.from_lists([[2, 4], [1, 3], [2, 4], [1, 3]])
    walks = faces(square, rot)
    assert len(walks) == 2 and all(len(w) == 4 for w in walks)


def test_faces_reject_nonplanar_rotation():
    k4 = Q(4, (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)).graph
    good = RotationSystem.from_lists([[2, 3, 4], [1, 4, 3], [1, 2, 4], [1, 3, 2]])
    assert len(faces(k4, good)) == 4
    bad = RotationSystem.from_lists([[2, 3, 4], [1, 3, 4], [1, 2, 4], [1, 2, 3]])
    with pytest.raises(InputError):
        faces(k4, bad)
    with pytest.raises(InputError):
        faces(k4, RotationSystem.from_lists([[2, 3], [1, 3, 4], [1, 2, 4], [1, 2, 3]]))


def test_face_cycle_strips_bridges():
    assert face_cycle((1, 2, 3, 1, 4)) == (1, 2, 3)
    assert face_cycle((1, 2)) == ()
    with pytest.raises(InputError):
        face_cycle((1, 2, 3, 1, 4, 5))


def test_cycle_extremes():
    assert cycle_extremes(DIAMOND, (1, 2, 4, 3)) == ([1], [4])
    assert cycle_extremes(BOWTIE, (1, 3, 2, 4)) == ([1, 2], [3, 4])


def test_p2_region():
    doc = fixtures.load("p2")
    rep = strongly_planar_check(doc.quiver, doc.rotation.system, doc.rotation.outer)
    assert rep.passed
    regions = regions_from_report(rep)
    assert regions == [BoundedRegion(frozenset({1, 4, 5, 6}), 1, 6)]
    assert rf_equal(greene_strongly_planar(doc.quiver, regions), psi_poset(doc.quiver))
    # choosing the outer face automatically gives the same answer
    assert regions_from_report(strongly_planar_check(doc.quiver, doc.rotation.system)) == regions


def test_outer_face_must_hold_bottom_and_top():
    doc = fixtures.load("p2")
    aug, zero, one = augment(doc.quiver)
    walks = faces(aug.graph, doc.rotation.system)
    bad = next(f for f, w in enumerate(walks) if not (zero in w and one in w))
    assert not strongly_planar_check(doc.quiver, doc.rotation.system, bad).passed


def test_bounded_regions_of_the_diamond():
    aug, zero, one = augment(DIAMOND)
    found = search_strongly_planar(DIAMOND)
    assert found is not None
    rot, rep = found
    assert regions_from_report(rep) == [BoundedRegion(frozenset({1, 2, 3, 4}), 1, 4)]
    outer = rep.values["outer"]
    regs = bounded_regions(aug, rot, outer)
    assert BoundedRegion(frozenset({1, 2, 3, 4}), 1, 4) in regs


def test_bowtie_is_not_strongly_planar():
    assert search_strongly_planar(BOWTIE) is None
    assert search_strongly_planar(fixtures.quiver("bowtie")) is None


def test_search_cap():
    k = Q(7, *[(1, v) for v in range(2, 7)], *[(v, 7) for v in range(2, 7)])
    with pytest.raises(ResourceError):
        search_strongly_planar(k, cap=10)


def test_generated_fixtures():
    docs = fixtures.generated_planar()
    assert len(docs) == 20
    for doc in docs:
        rep = strongly_planar_check(doc.quiver, doc.rotation.system, doc.rotation.outer)
        assert rep.passed, doc.name
        regions = regions_from_report(rep)
        assert set(regions) == set(doc.regions)
        assert rf_equal(greene_strongly_planar(doc.quiver, regions), psi_poset(doc.quiver))


def test_random_strongly_planar_closed_form():
    rng = random.Random(21)
    tried = hits = 0
    while hits < 12 and tried < 200:
        tried += 1
        h = random_hasse(rng.randint(2, 6), rng, rng.choice([0.3, 0.5]))
        try:
            found = search_strongly_planar(h, cap=20_000)
        except ResourceError:
            continue
        if found is None:
            continue
        hits += 1
        regions = regions_from_report(found[1])
        assert rf_equal(greene_strongly_planar(h, regions), psi_poset(h))
    assert hits == 12
