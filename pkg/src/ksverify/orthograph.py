"""Orthogonality graphs and their exact combinatorics.

Vertices are canonical rays in a fixed deterministic order; edges join
orthogonal pairs.  Everything downstream (complete bases, independence
number, automorphism group) is computed in-process so results stay
certified: no external graph tools are called.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rays import Basis, Ray, is_orthogonal


class OrthoGraph:
    """Immutable orthogonality graph over deduplicated canonical rays."""

    __slots__ = ("vertices", "adj", "n")

    def __init__(self, rays) -> None:
        vertices = tuple(sorted(set(rays), key=Ray.sort_key))
        n = len(vertices)
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if is_orthogonal(vertices[i], vertices[j]):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("OrthoGraph is immutable")

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            m = self.adj[i] >> (i + 1)
            j = i + 1
            while m:
                if m & 1:
                    out.append((i, j))
                m >>= 1
                j += 1
        return out

    def index_of(self, ray: Ray) -> int:
        return self.vertices.index(ray)

    def to_dimacs(self) -> str:
        """DIMACS-like edge list, 1-based vertex numbers."""
        edges = self.edges()
        lines = [f"p edge {self.n} {len(edges)}"]
        lines += [f"e {i + 1} {j + 1}" for i, j in edges]
        return "\n".join(lines) + "\n"


def build_graph(rays) -> OrthoGraph:
    rays = list(rays)
    if not rays:
        raise ValueError("cannot build a graph from an empty ray set")
    return OrthoGraph(rays)


def complete_bases(g: OrthoGraph) -> list[Basis]:
    """All triangles of the graph, as orthogonal bases, in index order."""
    out = []
    for i in range(g.n):
        above_i = g.adj[i] >> (i + 1) << (i + 1)
        mi = above_i
        while mi:
            j = (mi & -mi).bit_length() - 1
            mi &= mi - 1
            common = g.adj[i] & g.adj[j]
            common >>= j + 1
            k = j + 1
            while common:
                if common & 1:
                    out.append(Basis((g.vertices[i], g.vertices[j], g.vertices[k])))
                common >>= 1
                k += 1
    return out


def parse_dimacs_edges(text: str) -> list[int]:
    """Adjacency bitmasks from a DIMACS-like edge list ('p edge V E', 'e i j')."""
    adj: list[int] = []
    declared_edges = None
    seen = 0
    for raw in text.splitlines():
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"bad DIMACS header: {raw!r}")
            adj = [0] * int(parts[2])
            declared_edges = int(parts[3])
        elif parts[0] == "e":
            i, j = int(parts[1]) - 1, int(parts[2]) - 1
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            seen += 1
    if declared_edges is not None and seen != declared_edges:
        raise ValueError(f"edge count mismatch: header {declared_edges}, found {seen}")
    return adj


# -- maximum independent set -------------------------------------------------


def greedy_clique_cover(adj) -> list[int]:
    """Partition vertices into cliques greedily, in index order; returns masks."""
    classes: list[int] = []
    for v in range(len(adj)):
        bit = 1 << v
        for ci, cmask in enumerate(classes):
            if cmask & ~adj[v] == 0:  # v adjacent to every member
                classes[ci] = cmask | bit
                break
        else:
            classes.append(bit)
    return classes


def max_independent_set(adj) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set via branch and bound.

    The bound is the number of not-yet-processed cover cliques that still
    intersect the allowed set (each clique contributes at most one vertex).
    Branching order is fixed, so the returned witness is deterministic:
    the first optimum reached in that order.
    """
    n = len(adj)
    if n == 0:
        return 0, ()
    classes = greedy_clique_cover(adj)
    k = len(classes)
    # suffix class list for bound computation
    best_size = 0
    best_set: tuple[int, ...] = ()
    chosen: list[int] = []

    def dfs(ci: int, allowed: int) -> None:
        nonlocal best_size, best_set
        size = len(chosen)
        rem = 0
        for j in range(ci, k):
            if classes[j] & allowed:
                rem += 1
        if size + rem <= best_size:
            return
        if ci == k:
            best_size = size
            best_set = tuple(chosen)
            return
        cands = classes[ci] & allowed
        m = cands
        while m:
            lsb = m & -m
            v = lsb.bit_length() - 1
            m ^= lsb
            chosen.append(v)
            dfs(ci + 1, allowed & ~adj[v] & ~lsb)
            chosen.pop()
        dfs(ci + 1, allowed & ~classes[ci])

    dfs(0, (1 << n) - 1)
    return best_size, tuple(sorted(best_set))


def independence_number(g: OrthoGraph) -> tuple[int, tuple[int, ...]]:
    """(alpha, witness vertex indices); the witness is verified independent."""
    alpha, witness = max_independent_set(g.adj)
    for a in witness:
        for b in witness:
            if a != b and g.adj[a] >> b & 1:
                raise AssertionError("witness is not independent")
    return alpha, witness


# -- automorphism group --------------------------------------------------------


@dataclass(frozen=True)
class AutGroupReport:
    order: int
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[tuple[int, ...], ...]


def equitable_colors(adj) -> list[int]:
    """Stable vertex colors under iterated neighbor-color refinement."""
    n = len(adj)
    colors = [adj[v].bit_count() for v in range(n)]
    while True:
        signatures = []
        for v in range(n):
            neigh = []
            m = adj[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                neigh.append(colors[u])
            signatures.append((colors[v], tuple(sorted(neigh))))
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new_colors = [palette[sig] for sig in signatures]
        if new_colors == colors:
            return colors
        colors = new_colors


def enumerate_automorphisms(adj) -> list[tuple[int, ...]]:
    """All adjacency-preserving vertex permutations, in deterministic order.

    Backtracking over vertex images with equitable-partition candidates and
    forward-checking; intended for the catalog-scale graphs (tens of
    vertices, small groups), not for highly symmetric large graphs.
    """
    n = len(adj)
    colors = equitable_colors(adj)
    color_mask: dict[int, int] = {}
    for v, c in enumerate(colors):
        color_mask[c] = color_mask.get(c, 0) | (1 << v)
    base_cand = [color_mask[colors[v]] for v in range(n)]
    found: list[tuple[int, ...]] = []
    image = [-1] * n

    def dfs(cand: list[int], unmapped: list[int]) -> None:
        if not unmapped:
            found.append(tuple(image))
            return
        # most-constrained source vertex, lowest index on ties
        v = min(unmapped, key=lambda u: (cand[u].bit_count(), u))
        rest = [u for u in unmapped if u != v]
        m = cand[v]
        while m:
            tbit = m & -m
            t = tbit.bit_length() - 1
            m ^= tbit
            image[v] = t
            new_cand = list(cand)
            ok = True
            for u in rest:
                if adj[v] >> u & 1:
                    new_cand[u] &= adj[t]
                else:
                    new_cand[u] &= ~adj[t] & ~tbit
                if new_cand[u] == 0:
                    ok = False
                    break
            if ok:
                dfs(new_cand, rest)
            image[v] = -1

    dfs(base_cand, list(range(n)))
    return sorted(found)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[x] for x in q)


def close_under_products(
    gens, n: int
) -> set[tuple[int, ...]]:
    """The permutation group generated by `gens`, as an explicit element set."""
    identity = tuple(range(n))
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _compose(g, p)
                if q not in group:
                    group.add(q)
                    nxt.append(q)
        frontier = nxt
    return group


def orbits_of_group(elements, n: int) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in elements:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                parent[a] = b
    buckets: dict[int, list[int]] = {}
    for v in range(n):
        buckets.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(b)) for b in sorted(buckets.values()))


def automorphisms(g: OrthoGraph) -> AutGroupReport:
    """Exact automorphism group: order, a small generating set, vertex orbits."""
    all_perms = enumerate_automorphisms(g.adj)
    order = len(all_perms)
    gens: list[tuple[int, ...]] = []
    known = {tuple(range(g.n))}
    for p in all_perms:
        if p not in known:
            gens.append(p)
            known = close_under_products(gens, g.n)
            if len(known) == order:
                break
    if len(known) != order:
        raise AssertionError("generator closure does not reproduce the group")
    orbits = orbits_of_group(all_perms, g.n)
    return AutGroupReport(order=order, generators=tuple(gens), orbits=orbits)
