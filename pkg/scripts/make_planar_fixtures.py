"""Regenerate the strongly planar fixture set by random sampling plus rotation search."""

import argparse
import json
import random
from pathlib import Path

from toricposets.errors import ResourceError
from toricposets.generate import random_hasse
from toricposets.io import QuiverDocument, Rotation, to_json
from toricposets.planar import regions_from_report, search_strongly_planar

OUT = Path(__file__).resolve().parents[1] / "src" / "toricposets" / "fixtures" / "generated" / "planar.json"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    docs, seen = [], set()
    while len(docs) < args.count:
        q = random_hasse(rng.randint(4, 7), rng, p=rng.choice([0.4, 0.5, 0.6]))
        if not q.graph.is_connected() or q.key in seen:
            continue
        seen.add(q.key)
        try:
            found = search_strongly_planar(q)
        except ResourceError:
            continue
        if found is None:
            continue
        rot, report = found
        regions = regions_from_report(report)
        if not regions:
            continue
        doc = QuiverDocument(q, rotation=Rotation(rot, True, report.values["outer"]), regions=tuple(regions),
                             name=f"planar_{len(docs):02d}")
        docs.append(to_json(doc))
        print(doc.name, q, len(regions), "regions")
    args.out.write_text(json.dumps(docs, indent=1) + "\n")


if __name__ == "__main__":
    main()
