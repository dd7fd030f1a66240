"""Print the worked examples shipped as fixtures, with the values computed for each."""

from toricposets import fixtures
from toricposets.extensions import ltor_recursion_tree, ltor_recursive
from toricposets.greene import psi_poset, psi_tor, psi_tor_bounded
from toricposets.planar import regions_from_report, search_strongly_planar
from toricposets.quiver import flip
from toricposets.toric import (
    build_v_incomparability_graph,
    flip_class,
    phi,
    toric_hasse,
    toric_transitive_closure,
)


def arcs(q) -> str:
    return " ".join(f"{a}->{b}" for a, b in sorted(q.arcs))


def show_tree(node, depth=0) -> None:
    pad = "  " * depth
    if node.kind == "leaf":
        print(f"{pad}leaf {node.leaf}")
        return
    extra = f" pivot {node.pivot}" if node.pivot else ""
    print(f"{pad}{node.kind} on {node.pair}{extra}: {arcs(node.closure)}")
    for c in node.children:
        show_tree(c, depth + 1)


def main() -> None:
    d4 = fixtures.quiver("d4")
    print("flip class of D4:")
    for m in sorted(flip_class(d4), key=lambda x: x.key):
        print("  ", arcs(m))
    print("D4 after flipping 4:", arcs(flip(d4, 4)))
    print("toric extensions of D4:", " ".join(map(str, ltor_recursive(d4))))
    print("recursion tree of D4:")
    show_tree(ltor_recursion_tree(d4), 1)
    print("toric Greene function of D4:", psi_tor(d4))

    q2 = fixtures.quiver("hasse_q2")
    print("toric Hasse diagram:", arcs(toric_hasse(q2)))
    print("toric transitive closure:", arcs(toric_transitive_closure(q2)))

    for name in ("q45", "q45_4to5", "q45_5to4", "q0"):
        ext = ltor_recursive(fixtures.quiver(name))
        print(f"{name}: {len(ext)} toric extensions:", " ".join(map(str, ext)))

    six = fixtures.quiver("phi_six")
    g, label = build_v_incomparability_graph(six, 1)
    print("incomparability graph at 1:", sorted(g.edges), "labels", label)
    print("image under phi:", arcs(phi(six, 1)))

    print("Greene function of P1:", psi_poset(fixtures.quiver("p1")))
    print("Greene function of P2:", psi_poset(fixtures.quiver("p2")))
    doc = fixtures.load("p2_bounded")
    print("bounded P2 toric value:", psi_tor_bounded(doc.quiver, doc.zero, doc.one))
    found = search_strongly_planar(fixtures.quiver("p2"))
    print("P2 regions:", [(sorted(r.delta), r.min_v, r.max_v) for r in regions_from_report(found[1])])
    print("bow-tie strongly planar:", search_strongly_planar(fixtures.quiver("bowtie")) is not None)
    print("non-sufficiency example value:", psi_tor(fixtures.quiver("non_sufficiency")))


if __name__ == "__main__":
    main()
