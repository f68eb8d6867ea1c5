"""Kochen-Specker colorability: exact search over 0/1 ray assignments.

An assignment gives each ray 0 or 1 subject to two constraint families:
orthogonal rays cannot both get 1 (every edge of the orthogonality graph,
whether or not it lies in a complete basis), and every complete basis must
contain exactly one ray assigned 1.  The search branches on which member
of each basis carries the 1, with unit propagation on both families, and
is exhaustive, so UNSAT answers are certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orthograph import build_graph, complete_bases
from .rays import Ray


class KSInstance:
    """A named ray set with its orthogonality graph and complete bases."""

    __slots__ = ("name", "graph", "bases", "basis_indices", "notes")

    def __init__(self, name: str, rays, notes=()) -> None:
        graph = build_graph(rays)
        bases = complete_bases(graph)
        index = {ray: i for i, ray in enumerate(graph.vertices)}
        basis_indices = tuple(
            tuple(index[r] for r in basis) for basis in bases
        )
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "bases", bases)
        object.__setattr__(self, "basis_indices", basis_indices)
        object.__setattr__(self, "notes", tuple(notes))

    def __setattr__(self, name, value):
        raise AttributeError("KSInstance is immutable")

    @property
    def rays(self) -> tuple[Ray, ...]:
        return self.graph.vertices

    def ray_set(self) -> frozenset[Ray]:
        return frozenset(self.graph.vertices)

    def __repr__(self) -> str:
        return (
            f"KSInstance({self.name!r}, {self.graph.n} rays, "
            f"{len(self.bases)} bases)"
        )


@dataclass(frozen=True)
class Assignment:
    """Total 0/1 valuation of an instance's rays."""

    values: dict

    def value(self, ray: Ray) -> int:
        return self.values[ray]

    def ones(self) -> tuple[Ray, ...]:
        return tuple(r for r, v in sorted(
            self.values.items(), key=lambda kv: kv[0].sort_key()) if v == 1)

    def __str__(self) -> str:
        parts = [f"{r}={v}" for r, v in sorted(
            self.values.items(), key=lambda kv: kv[0].sort_key())]
        return "{" + ", ".join(parts) + "}"


@dataclass(frozen=True)
class ColoringViolation:
    kind: str  # "edge" or "basis"
    detail: str


def verify_assignment(inst: KSInstance, f: Assignment) -> list[ColoringViolation]:
    """Empty list iff `f` satisfies both constraint families."""
    g = inst.graph
    vals = []
    for ray in g.vertices:
        if ray not in f.values:
            raise ValueError(f"assignment is not total: missing {ray}")
        v = f.values[ray]
        if v not in (0, 1):
            raise ValueError(f"assignment value for {ray} is {v}, not 0/1")
        vals.append(v)
    out = []
    for i, j in g.edges():
        if vals[i] + vals[j] > 1:
            out.append(ColoringViolation(
                "edge", f"orthogonal rays {g.vertices[i]} and {g.vertices[j]} both assigned 1"))
    for bi, triple in enumerate(inst.basis_indices):
        s = sum(vals[i] for i in triple)
        if s != 1:
            out.append(ColoringViolation(
                "basis", f"basis #{bi} {inst.bases[bi]} has assignment sum {s}, want 1"))
    return out


@dataclass(frozen=True)
class SearchResult:
    satisfiable: bool
    assignment: Assignment | None
    nodes: int


class _Propagator:
    """Shared unit-propagation state for the basis-branching searches."""

    def __init__(self, inst: KSInstance):
        self.adj = inst.graph.adj
        self.n = inst.graph.n
        self.bases = inst.basis_indices
        self.in_bases = [[] for _ in range(self.n)]
        for bi, triple in enumerate(self.bases):
            for v in triple:
                self.in_bases[v].append(bi)
        self.vals: list[int | None] = [None] * self.n

    def assign(self, v: int, value: int, trail: list[int]) -> bool:
        """Set v := value with propagation; False on conflict."""
        queue = [(v, value)]
        while queue:
            u, val = queue.pop()
            cur = self.vals[u]
            if cur is not None:
                if cur != val:
                    return False
                continue
            self.vals[u] = val
            trail.append(u)
            if val == 1:
                m = self.adj[u]
                while m:
                    w = (m & -m).bit_length() - 1
                    m &= m - 1
                    queue.append((w, 0))
            for bi in self.in_bases[u]:
                triple = self.bases[bi]
                vals = [self.vals[t] for t in triple]
                ones = sum(1 for x in vals if x == 1)
                zeros = sum(1 for x in vals if x == 0)
                if ones > 1 or (zeros == 3):
                    return False
                if ones == 1:
                    for t in triple:
                        if self.vals[t] is None:
                            queue.append((t, 0))
                elif zeros == 2:
                    for t in triple:
                        if self.vals[t] is None:
                            queue.append((t, 1))
        return True

    def undo(self, trail: list[int], mark: int) -> None:
        while len(trail) > mark:
            self.vals[trail.pop()] = None


def _as_assignment(inst: KSInstance, vals) -> Assignment:
    return Assignment({ray: vals[i] for i, ray in enumerate(inst.graph.vertices)})


def find_ks_assignment(inst: KSInstance) -> SearchResult:
    """First valid assignment in branching order, or exhaustive UNSAT."""
    prop = _Propagator(inst)
    nodes = 0
    trail: list[int] = []

    def next_open_basis() -> int | None:
        for bi, triple in enumerate(prop.bases):
            if not any(prop.vals[t] == 1 for t in triple):
                return bi
        return None

    def dfs() -> list[int] | None:
        nonlocal nodes
        bi = next_open_basis()
        if bi is None:
            # all bases carry a 1; free rays get 0 (edges stay satisfied)
            return [v if v is not None else 0 for v in prop.vals]
        for t in prop.bases[bi]:
            if prop.vals[t] == 0:
                continue
            nodes += 1
            mark = len(trail)
            if prop.assign(t, 1, trail):
                result = dfs()
                if result is not None:
                    return result
            prop.undo(trail, mark)
        return None

    vals = dfs()
    if vals is None:
        return SearchResult(False, None, nodes)
    f = _as_assignment(inst, vals)
    problems = verify_assignment(inst, f)
    if problems:
        raise AssertionError(f"search returned an invalid assignment: {problems}")
    return SearchResult(True, f, nodes)


@dataclass(frozen=True)
class EnumerationResult:
    assignments: list[Assignment]
    truncated: bool


def enumerate_ks_assignments(inst: KSInstance, cap: int = 100000) -> EnumerationResult:
    """All valid assignments in deterministic order, up to `cap`."""
    prop = _Propagator(inst)
    trail: list[int] = []
    out: list[Assignment] = []
    truncated = False

    def emit() -> bool:
        f = _as_assignment(inst, prop.vals)
        if verify_assignment(inst, f):
            raise AssertionError("enumeration produced an invalid assignment")
        out.append(f)
        return len(out) <= cap  # collect one extra to detect truncation

    def free_dfs(order: list[int], pos: int) -> bool:
        while pos < len(order) and prop.vals[order[pos]] is not None:
            pos += 1
        if pos == len(order):
            return emit()
        v = order[pos]
        for value in (0, 1):
            mark = len(trail)
            if prop.assign(v, value, trail):
                if not free_dfs(order, pos + 1):
                    prop.undo(trail, mark)
                    return False
            prop.undo(trail, mark)
        return True

    def basis_dfs() -> bool:
        bi = next(
            (i for i, triple in enumerate(prop.bases)
             if not any(prop.vals[t] == 1 for t in triple)),
            None,
        )
        if bi is None:
            return free_dfs(list(range(prop.n)), 0)
        for t in prop.bases[bi]:
            if prop.vals[t] == 0:
                continue
            mark = len(trail)
            if prop.assign(t, 1, trail):
                if not basis_dfs():
                    prop.undo(trail, mark)
                    return False
            prop.undo(trail, mark)
        return True

    basis_dfs()
    if len(out) > cap:
        truncated = True
        del out[cap:]
    return EnumerationResult(out, truncated)


def to_dimacs_cnf(inst: KSInstance) -> str:
    """CNF encoding: variable i+1 true iff ray i is assigned 1.

    Clauses: a negative pair per orthogonal edge, a positive triple per
    complete basis.  Satisfying assignments correspond exactly to valid
    KS assignments extended by 0 on free rays.
    """
    g = inst.graph
    lines = [f"c instance {inst.name}"]
    for i, ray in enumerate(g.vertices):
        lines.append(f"c var {i + 1} = {ray}")
    edges = g.edges()
    lines.append(f"p cnf {g.n} {len(edges) + len(inst.basis_indices)}")
    for i, j in edges:
        lines.append(f"-{i + 1} -{j + 1} 0")
    for triple in inst.basis_indices:
        lines.append(" ".join(str(t + 1) for t in triple) + " 0")
    return "\n".join(lines) + "\n"
