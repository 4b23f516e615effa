"""Abstract simplicial complexes stored by their facets.

A simplex is a tuple of vertex labels in strictly ascending order. A
:class:`SimplicialComplex` keeps only the inclusion-maximal simplices; every
other simplex is implied by downward closure and derived on demand.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import ComplexError, DisconnectedError, EmptyComplexError

Simplex = tuple  # tuple[int, ...], strictly ascending


def as_simplex(vertices: Iterable[int]) -> Simplex:
    s = tuple(sorted(set(vertices)))
    if not s:
        raise ComplexError("a simplex must be nonempty")
    return s


def maximal_sets(candidates: Iterable[Iterable[int]]) -> list[Simplex]:
    """Inclusion-maximal members of ``candidates``, deduplicated and sorted."""
    unique = {as_simplex(c) for c in candidates}
    # larger sets first so each candidate only needs checking against kept ones
    ordered = sorted(unique, key=lambda s: (-len(s), s))
    kept: list[Simplex] = []
    kept_sets: list[frozenset] = []
    for s in ordered:
        fs = frozenset(s)
        if not any(fs <= k for k in kept_sets if len(k) > len(fs)):
            kept.append(s)
            kept_sets.append(fs)
    return sorted(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[int, ...]
    facets: tuple[Simplex, ...]

    @classmethod
    def from_facets(cls, vertices: Iterable[int], candidate_facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        verts = tuple(sorted(set(vertices)))
        known = set(verts)
        cands = [as_simplex(c) for c in candidate_facets]
        for c in cands:
            missing = [v for v in c if v not in known]
            if missing:
                raise ComplexError(f"facet {c} references unknown vertices {missing}")
        covered = {v for c in cands for v in c}
        cands.extend((v,) for v in verts if v not in covered)
        return cls(verts, tuple(maximal_sets(cands)))

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls((), ())

    def __bool__(self):
        return bool(self.vertices)

    @property
    def dimension(self) -> int:
        """Largest simplex dimension; -1 for the empty complex."""
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def _facet_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(f) for f in self.facets)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        """Neighbours of each vertex in the 1-skeleton, ascending."""
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for f in self.facets:
            for v in f:
                nbrs[v].update(f)
        return {v: tuple(sorted(n - {v})) for v, n in nbrs.items()}

    def contains_simplex(self, simplex: Iterable[int]) -> bool:
        s = frozenset(simplex)
        if not s:
            return False
        return any(s <= f for f in self._facet_sets)

    def has_edge(self, a: int, b: int) -> bool:
        return a != b and b in self.adjacency.get(a, ())

    def simplices(self, k: int) -> list[Simplex]:
        """All k-dimensional simplices in lexicographic order."""
        if k < 0:
            raise ValueError("dimension must be >= 0")
        out = set()
        for f in self.facets:
            if len(f) > k:
                out.update(combinations(f, k + 1))
        return sorted(out)

    def all_simplices(self) -> list[Simplex]:
        out = []
        for k in range(self.dimension + 1):
            out.extend(self.simplices(k))
        return out

    def skeleton(self, k: int) -> "SimplicialComplex":
        if k < 0:
            raise ValueError("dimension must be >= 0")
        cands = []
        for f in self.facets:
            if len(f) <= k + 1:
                cands.append(f)
            else:
                cands.extend(combinations(f, k + 1))
        return SimplicialComplex.from_facets(self.vertices, cands)

    def induced(self, vertices: Iterable[int]) -> "SimplicialComplex":
        """Full subcomplex on ``vertices`` (which must belong to the complex)."""
        keep = set(vertices)
        unknown = keep.difference(self.vertices)
        if unknown:
            raise ComplexError(f"unknown vertices {sorted(unknown)}")
        cands = [[v for v in f if v in keep] for f in self.facets]
        return SimplicialComplex.from_facets(keep, [c for c in cands if c])

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of the connected components, ordered by smallest vertex."""
        seen: set[int] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = bfs_order(self, v)
            seen.update(comp)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        if not self.vertices:
            raise EmptyComplexError("connectivity undefined on empty complex")
        return len(bfs_order(self, self.vertices[0])) == len(self.vertices)


def bfs_order(K: SimplicialComplex, root: int) -> list[int]:
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in K.adjacency[v]:
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def spanning_tree(K: SimplicialComplex, root: int | None = None) -> dict[int, int | None]:
    """BFS spanning tree as a parent map; neighbours are visited in ascending order.

    The root defaults to the smallest vertex and maps to ``None``.
    """
    if not K.vertices:
        raise EmptyComplexError("spanning tree of empty complex")
    if root is None:
        root = K.vertices[0]
    parent: dict[int, int | None] = {root: None}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in K.adjacency[v]:
            if w not in parent:
                parent[w] = v
                queue.append(w)
    if len(parent) != len(K.vertices):
        raise DisconnectedError("complex is disconnected; compute per component")
    return parent


def tree_edges(parent: dict[int, int | None]) -> set[tuple[int, int]]:
    return {(min(v, p), max(v, p)) for v, p in parent.items() if p is not None}


def path_to_root(parent: dict[int, int | None], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path
