"""Regenerate tests/data/connected_upto7.g6.

Writes every connected graph on 1..7 vertices (one per isomorphism class,
996 in total) as one graph6 line each, encoded by networkx so the corpus
is independent of this package's own encoder. Requires networkx.
"""

from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "connected_upto7.g6"

EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def main() -> None:
    lines = []
    counts = {n: 0 for n in EXPECTED}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or not nx.is_connected(g):
            continue
        counts[n] += 1
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    assert counts == EXPECTED, counts
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {OUT}")


if __name__ == "__main__":
    main()
