"""Graph generators shared by the test modules."""

from hypothesis import strategies as st

from discmatch.decomposition import TreeDecomposition
from discmatch.graph import Graph


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def disjoint_edges(k):
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_graph(rng, n, p):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected_graph(rng, n, p):
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return Graph.from_edges(n, edges)


def random_chordal(rng, n):
    """Each new vertex joins a clique grown greedily around a random earlier vertex."""
    adj = [set() for _ in range(n)]
    for v in range(1, n):
        if rng.random() >= 0.9:
            continue
        u = rng.randrange(v)
        clique = {u}
        for w in sorted(adj[u]):
            if w < v and rng.random() < 0.6 and all(w in adj[x] for x in clique):
                clique.add(w)
        for x in clique:
            adj[v].add(x)
            adj[x].add(v)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in adj[u] if u < v])


def partial_ktree(rng, n, k=3, keep=0.8):
    """Random partial k-tree with the decomposition it was built from."""
    bags = [frozenset(range(k + 1))]
    tree = []
    edges = {(a, b) for a in range(k + 1) for b in range(a + 1, k + 1)}
    for v in range(k + 1, n):
        host = rng.randrange(len(bags))
        nbrs = rng.sample(sorted(bags[host]), k)
        bags.append(frozenset(nbrs) | {v})
        tree.append((host, len(bags) - 1))
        edges |= {(u, v) for u in nbrs}
    kept = [e for e in sorted(edges) if rng.random() < keep]
    return Graph.from_edges(n, kept), TreeDecomposition.make(bags, tree)


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])
