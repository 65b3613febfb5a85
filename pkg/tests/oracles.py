"""Independent brute-force reference implementations used only by tests.

Everything here is deliberately naive and shares no code with the package:
itertools-based enumeration, rooted path DFS for cycle counting, and a
direct per-definition domination predicate over plain dicts of sets.
"""

from itertools import permutations


def brute_multiset_perms(k, ell):
    base = []
    for s in range(k):
        base.extend([s] * ell)
    return sorted(set(permutations(base)))


def adjacency_dict(g):
    return {v: set(g.neighbors(v)) for v in g.vertices}


def brute_count_six_cycles(adj):
    """Closed 6-walks with all distinct vertices, divided by 12."""
    count = 0
    for root in adj:
        stack = [(root, [root])]
        while stack:
            node, path = stack.pop()
            if len(path) == 6:
                if root in adj[node]:
                    count += 1
                continue
            for nxt in adj[node]:
                if nxt not in path:
                    stack.append((nxt, path + [nxt]))
    assert count % 12 == 0
    return count // 12


def brute_is_e_ell_set(adj, s, ell):
    """The efficient dominating-ell predicate straight from its definition."""
    s = set(s)
    for v in adj:
        if v in s:
            continue
        doms = adj[v] & s
        if len(doms) != ell:
            return False
        if ell > 1:
            spheres = [adj[u] for u in doms]
            common = set.intersection(*spheres)
            if common != {v}:
                return False
            for u in doms:
                if doms & adj[u]:
                    return False
    if ell == 1:
        for u in s:
            if adj[u] & s:
                return False
    return True


def brute_distance(adj, u, v):
    if u == v:
        return 0
    frontier = {u}
    seen = {u}
    d = 0
    while frontier:
        d += 1
        frontier = {y for x in frontier for y in adj[x] if y not in seen}
        if v in frontier:
            return d
        seen |= frontier
    return None
