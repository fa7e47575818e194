"""Building the prime instances behind the hardness of wtc.

Deciding wtc(G) >= k stays NP-complete on prime graphs, because the
maximum clique problem does: gluing one degree-2 vertex onto every
nonadjacent pair makes any graph prime without changing whether a clique
of size >= 3 exists.

Run:  python3 demos/hardness_reduction.py
"""

import wtoll as w
from wtoll.convexity import reduction_edge_list


def main():
    g = w.cycle_graph(4)
    print("source graph C4:", g.edges())
    print("prime?", w.is_prime(g), " max clique:", len(w.max_clique(g)))

    r = w.clique_reduction(g, 3)
    print(f"\nreduced instance: n={r.g_prime.n}, m={r.g_prime.m}, k'={r.k_prime}")
    for x, (u, v) in sorted(r.added.items()):
        print(f"  added vertex {x} glued onto nonadjacent pair ({u}, {v})")
    print("prime now?", w.is_prime(r.g_prime),
          " max clique:", len(w.max_clique(r.g_prime)))

    print("\non prime non-complete graphs every proper convex set is a clique,")
    print("so wtc equals the maximum clique size there:")
    res = w.wtc_exact(r.g_prime)
    print(f"  wtc = {res.value} [{res.case_tag}], witness {sorted(res.witness)}")

    print("\nserialized instance with its comment map:\n")
    print(reduction_edge_list(r))


if __name__ == "__main__":
    main()
