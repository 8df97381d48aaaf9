"""Finite trees with structure-valued edge lengths and the induced metric.

Nodes are the points; the segment between two nodes is the unique tree
path, and the distance is the level-dominant sum of edge values along
it.  With every edge value nonzero ("full support") this is a metric
valued in the ordered structure; ``verify_metric`` checks the metric and
segment axioms directly instead of assuming them.
"""

from __future__ import annotations

from collections import deque

from .errors import DomainError
from .ops import _add, _cmp
from .values import Value, check_value, is_zero, zero


class LTree:
    def __init__(self, desc, nodes, edges):
        """edges: iterable of (node_a, node_b, value)."""
        self.desc = desc
        self.nodes = list(nodes)
        if len(set(self.nodes)) != len(self.nodes):
            raise DomainError("node identifiers must be distinct")
        node_set = set(self.nodes)
        self.adj = {n: {} for n in self.nodes}
        count = 0
        for a, b, v in edges:
            if a not in node_set or b not in node_set:
                raise DomainError(f"edge ({a!r},{b!r}) uses unknown nodes")
            if a == b or b in self.adj[a]:
                raise DomainError(f"bad edge ({a!r},{b!r})")
            check_value(desc, v)
            self.adj[a][b] = v
            self.adj[b][a] = v
            count += 1
        if count != len(self.nodes) - 1:
            raise DomainError("a tree has exactly |nodes| - 1 edges")
        # connectivity
        seen = {self.nodes[0]}
        work = deque(seen)
        while work:
            for nxt in self.adj[work.popleft()]:
                if nxt not in seen:
                    seen.add(nxt)
                    work.append(nxt)
        if len(seen) != len(self.nodes):
            raise DomainError("the edge set is not connected")

    def has_full_support(self) -> bool:
        done = set()
        for a, nbrs in self.adj.items():
            for b, v in nbrs.items():
                if (b, a) not in done:
                    done.add((a, b))
                    if is_zero(self.desc, v):
                        return False
        return True

    def _check_node(self, x):
        if x not in self.adj:
            raise DomainError(f"unknown node {x!r}")


def segment(t: LTree, x, y):
    """The ordered node path from x to y; [x] when x == y."""
    t._check_node(x)
    t._check_node(y)
    parent = {x: None}
    work = deque((x,))
    while work:
        cur = work.popleft()
        if cur == y:
            break
        for nxt in t.adj[cur]:
            if nxt not in parent:
                parent[nxt] = cur
                work.append(nxt)
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def meet(t: LTree, x, y, z):
    """The node w with [x,y] n [x,z] = [x,w] (the median of the triple)."""
    py = segment(t, x, y)
    pz = segment(t, x, z)
    w = x
    for a, b in zip(py, pz):
        if a != b:
            break
        w = a
    return w


def distance(t: LTree, x, y) -> Value:
    path = segment(t, x, y)
    acc = zero(t.desc)
    for a, b in zip(path, path[1:]):
        acc = _add(t.desc, acc, t.adj[a][b])
    return acc


def all_segments(t: LTree) -> dict:
    """Every ordered node pair's path, from one BFS per source."""
    paths = {}
    for src in t.nodes:
        parent = {src: None}
        order = [src]
        work = deque((src,))
        while work:
            cur = work.popleft()
            for nxt in t.adj[cur]:
                if nxt not in parent:
                    parent[nxt] = cur
                    order.append(nxt)
                    work.append(nxt)
        for dst in order:
            path = [dst]
            while path[-1] != src:
                path.append(parent[path[-1]])
            path.reverse()
            paths[(src, dst)] = path
    return paths


def verify_metric(t: LTree, triples=None) -> dict:
    """Check the metric and segment axioms; returns a report.

    ``triples`` defaults to all node triples (fine up to a dozen nodes);
    pass a sampled list for larger trees.
    """
    d = t.desc
    failures = []
    if not t.has_full_support():
        failures.append("an edge carries value zero (no full support)")
    nodes = t.nodes
    paths = all_segments(t)
    dist = {}
    for (x, y), path in paths.items():
        acc = zero(d)
        for a, b in zip(path, path[1:]):
            acc = _add(d, acc, t.adj[a][b])
        dist[(x, y)] = acc
    for x in nodes:
        if not is_zero(d, dist[(x, x)]):
            failures.append(f"d({x},{x}) != 0")
    for x in nodes:
        for y in nodes:
            if x >= y:
                continue
            dxy = dist[(x, y)]
            if is_zero(d, dxy):
                failures.append(f"d({x},{y}) = 0 with {x} != {y}")
            if dxy != dist[(y, x)]:
                failures.append(f"d({x},{y}) != d({y},{x})")
            if list(reversed(paths[(x, y)])) != paths[(y, x)]:
                failures.append(f"segment({x},{y}) does not reverse to segment({y},{x})")
    if triples is None:
        triples = [(x, y, z) for x in nodes for y in nodes for z in nodes]
    for x, y, z in triples:
        lhs = dist[(y, z)]
        rhs = _add(d, dist[(y, x)], dist[(x, z)])
        if _cmp(d, lhs, rhs) > 0:
            failures.append(f"triangle inequality fails at ({x},{y},{z})")
            break
    # segment additivity: points on the path split the distance exactly
    for x in nodes:
        for y in nodes:
            for w in paths[(x, y)]:
                if dist[(x, y)] != _add(d, dist[(x, w)], dist[(w, y)]):
                    failures.append(f"d({x},{y}) != d({x},{w}) + d({w},{y})")
                    break
    # concatenation: segments meeting at exactly one endpoint compose
    for x, y, z in triples:
        sxy, syz = paths[(x, y)], paths[(y, z)]
        if set(sxy) & set(syz) == {y}:
            if sxy[:-1] + syz != paths[(x, z)]:
                failures.append(f"segments [{x},{y}] and [{y},{z}] do not concatenate")
                break
    # meets lie on all three pairwise segments
    for x, y, z in triples:
        w = x
        for a, b in zip(paths[(x, y)], paths[(x, z)]):
            if a != b:
                break
            w = a
        if not (w in paths[(x, y)] and w in paths[(x, z)] and w in paths[(y, z)]):
            failures.append(f"meet({x},{y},{z}) is not a median")
            break
    return {"ok": not failures, "failures": failures}
