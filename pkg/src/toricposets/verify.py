"""Batch drivers that run each property check over fixtures and generated families."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import fixtures
from .extensions import ltor_bruteforce, ltor_partition, ltor_recursive
from .generate import atlas_graphs, class_partition, labeled_graphs, random_quiver, toric_classes
from .greene import (
    greene_strongly_planar,
    psi_poset,
    verify_cut_vertex_vanishing,
    verify_denominator,
    verify_kk,
    verify_shuffle_vanishing,
)
from .planar import regions_from_report, search_strongly_planar, strongly_planar_check
from .quiver import Quiver
from .ratfun import rf_equal
from .report import Report, SuiteReport
from .toric import flip_class, orientation_space, phi, quivers_with_source, restricted_flip_component

SUITES = ("cut-vertex", "denominator", "kk", "shuffle-vanishing", "planar", "fixed-source", "oracle")


@dataclass
class SuiteConfig:
    max_n: int | None = None  # default depends on the suite
    max_k: int = 3
    max_j: int = 3
    max_total: int = 5
    count: int | None = None
    seed: int = 0
    method: str = "recursive"
    random_sizes: tuple = (6, 7)
    extra: dict = field(default_factory=dict)


def _qj(q: Quiver) -> dict:
    return {"n": q.n, "arcs": [list(a) for a in sorted(q.arcs)]}


def toric_family(max_n: int, min_n: int = 3) -> list[Quiver]:
    """Canonical representatives of every toric poset on every atlas graph with ``min_n..max_n`` vertices."""
    return [q for g in atlas_graphs(max_n, min_n) for q in toric_classes(g)]


def suite_cut_vertex(cfg: SuiteConfig) -> SuiteReport:
    max_n = cfg.max_n or 6
    rep = SuiteReport("cut-vertex", params={"max_n": max_n})
    for q in toric_family(max_n):
        rep.add(verify_cut_vertex_vanishing(q, cfg.method), keep=False)
    for name in ("cut_vertex_seven", "bowtie"):
        rep.add(verify_cut_vertex_vanishing(fixtures.quiver(name), cfg.method))
    r = verify_cut_vertex_vanishing(fixtures.quiver("non_sufficiency"), cfg.method)
    rep.add(Report("non-sufficiency", r.hypothesis is False and r.values["psi_tor"] == "0", r.hypothesis,
                   r.instance, r.values, "vanishes although the hypothesis fails"))
    r = verify_cut_vertex_vanishing(fixtures.quiver("d4"), cfg.method)
    rep.add(Report("d4-nonzero", r.hypothesis is False and r.values["psi_tor"] != "0", r.hypothesis,
                   r.instance, r.values))
    return rep


def suite_denominator(cfg: SuiteConfig) -> SuiteReport:
    max_n = cfg.max_n or 6
    rep = SuiteReport("denominator", params={"max_n": max_n})
    for q in toric_family(max_n):
        rep.add(verify_denominator(q, cfg.method), keep=False)
    rep.add(verify_denominator(fixtures.quiver("d4"), cfg.method))
    for name in ("kk_1_1", "kk_2_1", "kk_2_2"):
        doc = fixtures.load(name)
        r = verify_denominator(doc.quiver, cfg.method)
        pair = [min(doc.zero, doc.one), max(doc.zero, doc.one)]
        proper = pair in [list(e) for e in r.values["unused_edges"]]
        rep.add(Report(f"proper-containment:{name}", r.passed and proper, True, r.instance, r.values,
                       f"bottom-top factor {pair} absent from the reduced denominator"))
    return rep


def suite_kk(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("kk", params={"max_k": cfg.max_k, "max_j": cfg.max_j})
    for k in range(cfg.max_k + 1):
        for j in range(cfg.max_j + 1):
            n = k + j + 2
            b = tuple(range(2, k + 2))
            c = tuple(range(k + 2, k + j + 2))
            rep.add(verify_kk(b, c, 1, n))
    return rep


def suite_shuffle(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("shuffle-vanishing", params={"max_total": cfg.max_total})
    for total in range(2, cfg.max_total + 1):
        for m in range(1, total):
            a = tuple(range(2, m + 2))
            b = tuple(range(m + 2, total + 2))
            rep.add(verify_shuffle_vanishing(a, b, 1))
    return rep


def suite_planar(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("planar")
    docs = [fixtures.load("p2")] + fixtures.generated_planar()
    for doc in docs:
        check = strongly_planar_check(doc.quiver, doc.rotation.system, doc.rotation.outer)
        if not check.passed:
            rep.add(check)
            continue
        regions = regions_from_report(check)
        closed = greene_strongly_planar(doc.quiver, regions)
        direct = psi_poset(doc.quiver)
        ok = rf_equal(closed, direct)
        if doc.regions:
            ok = ok and set(doc.regions) == set(regions)
        rep.add(Report(f"greene:{doc.name}", ok, True, _qj(doc.quiver),
                       {"closed_form": str(closed), "psi": str(direct), "regions": check.values["regions"]}))
    bow = fixtures.quiver("bowtie")
    found = search_strongly_planar(bow)
    rep.add(Report("bowtie-rejected", found is None, None, _qj(bow), {},
                   "no rotation system of the augmented diagram passes"))
    return rep


def suite_fixed_source(cfg: SuiteConfig) -> SuiteReport:
    count = cfg.count or 100
    max_n = cfg.max_n or 7
    rng = random.Random(cfg.seed)
    rep = SuiteReport("fixed-source", params={"count": count, "max_n": max_n, "seed": cfg.seed})
    for _ in range(count):
        q = random_quiver(rng.randint(2, max_n), rng, rng.choice([0.3, 0.5, 0.7]))
        for v in range(1, q.n + 1):
            rep.add(fixed_source_check(q, v), keep=False)
    return rep


def fixed_source_check(q: Quiver, v: int) -> Report:
    members = quivers_with_source(q, v)
    forbidden = {v} | set(q.graph.adjacency[v])
    start = min(members, key=lambda x: x.key)
    reach = restricted_flip_component(start, forbidden)
    connected = members <= reach
    images = [phi(m, v) for m in members]
    injective = len(set(images)) == len(images)
    target = flip_class(images[0])
    onto = set(images) == target
    ok = bool(members) and connected and injective and onto
    return Report("fixed-source", ok, None, {**_qj(q), "v": v},
                  {"members": len(members), "connected": connected, "phi_injective": injective,
                   "phi_class": len(target), "phi_onto": onto})


def suite_oracle(cfg: SuiteConfig) -> SuiteReport:
    max_n = cfg.max_n or 5
    count = 200 if cfg.count is None else cfg.count
    rng = random.Random(cfg.seed)
    rep = SuiteReport("oracle", params={"max_n": max_n, "random": count, "sizes": list(cfg.random_sizes)})
    for n in range(1, max_n + 1):
        for g in labeled_graphs(n):
            for block in class_partition(g):
                for r in oracle_block(g, block):
                    rep.add(r, keep=False)
    for t in range(count):
        n = cfg.random_sizes[t % len(cfg.random_sizes)]
        q = random_quiver(n, rng, rng.choice([0.3, 0.5, 0.7]))
        rep.add(oracle_check(q), keep=False)
    return rep


def oracle_block(g, block) -> list[Report]:
    """Compare the enumerators on one flip class.

    The brute-force and partition enumerators depend only on the class, so they
    run once per class; the recursive enumerator runs from every member.
    """
    space = orientation_space(g)
    members = [space.decode(o) for o in sorted(block)]
    first = members[0]
    brute = ltor_bruteforce(first)
    parts = {v: ltor_partition(first, v) for v in range(1, g.n + 1)}
    part_ok = all(p == brute for p in parts.values())
    out = []
    for m in members:
        rec = ltor_recursive(m)
        ok = part_ok and rec == brute
        out.append(Report("oracle", ok, None, _qj(m), {} if ok else {
            "brute": brute.words(), "recursive": rec.words(),
            "partition_mismatch": [v for v, p in parts.items() if p != brute]}))
    return out


def oracle_check(q: Quiver) -> Report:
    brute = ltor_bruteforce(q)
    bad = [v for v in range(1, q.n + 1) if ltor_partition(q, v) != brute]
    rec = ltor_recursive(q)
    ok = not bad and rec == brute
    return Report("oracle", ok, None, _qj(q), {"size": len(brute)} if ok else {
        "brute": brute.words(), "recursive": rec.words(), "partition_mismatch": bad})


RUNNERS: dict[str, Callable[[SuiteConfig], SuiteReport]] = {
    "cut-vertex": suite_cut_vertex,
    "denominator": suite_denominator,
    "kk": suite_kk,
    "shuffle-vanishing": suite_shuffle,
    "planar": suite_planar,
    "fixed-source": suite_fixed_source,
    "oracle": suite_oracle,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> SuiteReport:
    return RUNNERS[name](cfg or SuiteConfig())


__all__ = ["RUNNERS", "SUITES", "SuiteConfig", "fixed_source_check", "oracle_block", "oracle_check", "run_suite",
           "toric_family"]
