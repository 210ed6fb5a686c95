"""Independent reference computations used to cross-check the engine.

These avoid the union-find module and the comprehension builder on
purpose: quotients are computed by breadth-first search over an explicit
relation, straight from the definitions.
"""

from __future__ import annotations

from collections import deque


def _classes(vertices, edges) -> list[frozenset]:
    adj = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, out = set(), []
    for v in vertices:
        if v in seen:
            continue
        comp, todo = set(), deque([v])
        seen.add(v)
        while todo:
            w = todo.popleft()
            comp.add(w)
            for n in adj[w]:
                if n not in seen:
                    seen.add(n)
                    todo.append(n)
        out.append(frozenset(comp))
    return out


def coend_classes(H) -> list[frozenset]:
    """The coequalizer of ``sum_l H(y, x) => sum_x H(x, x)``."""
    X = H.X
    verts = [(x, a) for x in X.objects for a in H.at(x, x)]
    edges = []
    for lam, (x, y) in X.arrows.items():
        left, right = H.lact(lam, x), H.ract(y, lam)
        for e in H.at(y, x):
            edges.append(((x, left[e]), (y, right[e])))
    return _classes(verts, edges)


def strong_coend_classes(H) -> list[frozenset]:
    """Components of the graph on ``(x, a)``, ``a`` in ``H(x, x)``, with an edge
    ``(x, a) - (y, b)`` whenever ``l: x -> y`` has ``H(x, l) a = H(l, y) b``."""
    X = H.X
    verts = [(x, a) for x in X.objects for a in H.at(x, x)]
    edges = []
    for lam, (x, y) in X.arrows.items():
        r, l = H.ract(x, lam), H.lact(lam, y)
        for a in H.at(x, x):
            for b in H.at(y, y):
                if r[a] == l[b]:
                    edges.append(((x, a), (y, b)))
    return _classes(verts, edges)


def mixed_tensor_classes(A, M) -> list[frozenset]:
    X = A.base
    verts = [(x, a, m) for x in X.objects for a in A(x) for m in M(x)]
    edges = []
    for u, (x, y) in X.arrows.items():
        for b in A(y):
            for m in M(x):
                edges.append(((x, A.maps[u][b], m), (y, b, M.maps[u][m])))
    return _classes(verts, edges)


def partition_of(fs) -> set[frozenset]:
    """Read a class payload ``label -> members`` as a partition."""
    return {frozenset(tuple(m) for m in fs.payload[lab]) for lab in fs.elements}
