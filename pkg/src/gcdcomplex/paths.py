"""Edge paths, simple-equivalence moves and the induced maps eta_* and its inverse.

An edge path is a sequence of vertices in which consecutive entries span an
edge of the carrier complex. Consecutive repeats are collapsed on
construction, so a constant loop at ``b`` is the one-vertex path ``(b,)``.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from typing import Literal

from .arith import factorize
from .divisor import as_integer_set
from .errors import InvalidMoveError, InvalidPathError
from .simplicial import SimplicialComplex, path_to_root


def collapse(seq: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for v in seq:
        if not out or out[-1] != v:
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class EdgePath:
    vertices: tuple[int, ...]

    @property
    def is_loop(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    @property
    def is_constant(self) -> bool:
        return len(self.vertices) == 1

    @property
    def basepoint(self) -> int:
        return self.vertices[0]

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __str__(self):
        return "[" + ",".join(map(str, self.vertices)) + "]"


def validate_path(K: SimplicialComplex, seq: Sequence[int]) -> EdgePath:
    verts = collapse(seq)
    if not verts:
        raise InvalidPathError("empty vertex sequence")
    for v in verts:
        if v not in K.adjacency:
            raise InvalidPathError(f"{v} is not a vertex of the complex")
    for a, b in zip(verts, verts[1:]):
        if not K.has_edge(a, b):
            raise InvalidPathError(f"no edge between {a} and {b}")
    return EdgePath(verts)


@dataclass(frozen=True)
class SimpleEquivalenceMove:
    """Insert (``expand``) or delete (``contract``) ``witness`` at ``position``.

    For a contraction ``position`` indexes the vertex removed; for an
    expansion the witness is inserted so it ends up at ``position``.
    """

    position: int
    direction: Literal["expand", "contract"]
    witness: int


def _normalize_loop(verts: tuple[int, ...]) -> tuple[int, ...]:
    # (b, b) is the constant loop
    return verts[:1] if len(verts) == 2 and verts[0] == verts[1] else verts


def apply_move(K: SimplicialComplex, path: EdgePath, move: SimpleEquivalenceMove) -> EdgePath:
    verts = path.vertices
    i, w = move.position, move.witness
    if move.direction == "contract":
        if not 0 < i < len(verts) - 1:
            raise InvalidMoveError(f"cannot contract at position {i}")
        if verts[i] != w:
            raise InvalidMoveError(f"vertex at position {i} is {verts[i]}, not {w}")
        a, c = verts[i - 1], verts[i + 1]
        if not K.contains_simplex((a, w, c)):
            raise InvalidMoveError("no simplex contains the three vertices")
        new = collapse(verts[:i] + verts[i + 1 :])
    elif move.direction == "expand":
        if len(verts) == 1 and i == 1:
            a = c = verts[0]
            base = verts + verts
        elif 0 < i < len(verts):
            a, c = verts[i - 1], verts[i]
            base = verts
        else:
            raise InvalidMoveError(f"cannot expand at position {i}")
        if w not in K.adjacency:
            raise InvalidMoveError(f"{w} is not a vertex of the complex")
        if not K.contains_simplex((a, w, c)):
            raise InvalidMoveError("no simplex contains the three vertices")
        new = collapse(base[:i] + (w,) + base[i:])
    else:
        raise InvalidMoveError(f"unknown move direction {move.direction!r}")
    if path.is_loop:
        new = _normalize_loop(new)
    return EdgePath(new)


PrimeChooser = Callable[[Sequence[int]], int]


def eta_star(X, path: EdgePath | Sequence[int], choose: PrimeChooser = min) -> EdgePath:
    """Image in D(X) of an edge path of G(X).

    Each edge contributes a prime dividing both endpoints, and the last vertex
    a prime dividing it; ``choose`` picks among the candidates (smallest by
    default). A loop's final choice repeats its first one.
    """
    X = as_integer_set(X)
    verts = _checked_common_path(X, path)
    n = len(verts)
    if n == 1:
        return EdgePath((choose(factorize(verts[0])),))
    omegas = [choose(factorize(math.gcd(a, b))) for a, b in zip(verts, verts[1:])]
    if verts[0] == verts[-1]:
        omegas.append(omegas[0])
    else:
        omegas.append(choose(factorize(verts[-1])))
    return EdgePath(_normalize_loop(collapse(omegas)) if verts[0] == verts[-1] else collapse(omegas))


def eta_star_inverse(X, path: EdgePath | Sequence[int], choose: PrimeChooser = min) -> EdgePath:
    """Image in G(X) of an edge path of D(X).

    Each edge ``(p, q)`` contributes a member of X* divisible by both primes,
    and the first vertex a multiple of ``p_1``; ``choose`` picks among the
    candidates. For a loop the first point is taken equal to the point of the
    closing edge, so the image closes up without dropping that edge.
    """
    X = as_integer_set(X)
    primes = _checked_prime_path(X, path)

    def multiples(*ps):
        return [v for v in X.star if all(v % p == 0 for p in ps)]

    if len(primes) == 1:
        return EdgePath((choose(multiples(primes[0])),))
    alphas = [choose(multiples(p, q)) for p, q in zip(primes, primes[1:])]
    if primes[0] == primes[-1]:
        seq = [alphas[-1]] + alphas
        return EdgePath(_normalize_loop(collapse(seq)))
    return EdgePath(collapse([choose(multiples(primes[0]))] + alphas))


def _checked_common_path(X, path) -> tuple[int, ...]:
    verts = collapse(path)
    if not verts:
        raise InvalidPathError("empty vertex sequence")
    members = set(X.star)
    for v in verts:
        if v not in members:
            raise InvalidPathError(f"{v} is not a vertex of the common divisor complex")
    for a, b in zip(verts, verts[1:]):
        if math.gcd(a, b) == 1:
            raise InvalidPathError(f"no edge between {a} and {b}")
    return verts


def _checked_prime_path(X, path) -> tuple[int, ...]:
    primes = collapse(path)
    if not primes:
        raise InvalidPathError("empty vertex sequence")
    known = set(X.primes)
    for p in primes:
        if p not in known:
            raise InvalidPathError(f"{p} is not a vertex of the prime divisor complex")
    for p, q in zip(primes, primes[1:]):
        if not any(v % (p * q) == 0 for v in X.star):
            raise InvalidPathError(f"no edge between {p} and {q}")
    return primes


def fundamental_loop(parent: dict, edge: tuple[int, int]) -> EdgePath:
    """Root -> a -> b -> root through the spanning tree given by ``parent``."""
    a, b = edge
    up = path_to_root(parent, a)[::-1]
    down = path_to_root(parent, b)
    return EdgePath(_normalize_loop(collapse(up + down)))


def concatenate(*paths: EdgePath) -> EdgePath:
    verts: list[int] = []
    for p in paths:
        if verts and verts[-1] != p.vertices[0]:
            raise InvalidPathError(f"paths do not meet: {verts[-1]} vs {p.vertices[0]}")
        verts.extend(p.vertices)
    return EdgePath(collapse(verts))


def shortest_path(K: SimplicialComplex, start: int, goal: int) -> EdgePath:
    prev = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == goal:
            break
        for w in K.adjacency[v]:
            if w not in prev:
                prev[w] = v
                queue.append(w)
    if goal not in prev:
        raise InvalidPathError(f"{goal} is not reachable from {start}")
    out = [goal]
    while prev[out[-1]] is not None:
        out.append(prev[out[-1]])
    return EdgePath(tuple(reversed(out)))


def rebase_loop(K: SimplicialComplex, loop: EdgePath, base: int) -> EdgePath:
    """Conjugate ``loop`` by a shortest path so that it is based at ``base``."""
    if loop.basepoint == base:
        return loop
    there = shortest_path(K, base, loop.basepoint)
    back = EdgePath(there.vertices[::-1])
    return EdgePath(_normalize_loop(concatenate(there, loop, back).vertices))


def random_loop(K: SimplicialComplex, rng, steps: int, base: int | None = None) -> EdgePath:
    """Random walk of ``steps`` edges closed by a shortest path home."""
    if base is None:
        base = rng.choice(K.vertices)
    walk = [base]
    for _ in range(steps):
        nbrs = K.adjacency[walk[-1]]
        if not nbrs:
            break
        walk.append(rng.choice(nbrs))
    home = shortest_path(K, walk[-1], base)
    return EdgePath(_normalize_loop(collapse(walk + list(home.vertices[1:]))))


@dataclass(frozen=True)
class SearchResult:
    verdict: Literal["homotopic", "not_found"]
    expansions: int

    @property
    def homotopic(self) -> bool:
        return self.verdict == "homotopic"


def neighbouring_loops(K: SimplicialComplex, loop: tuple[int, ...]):
    """All loops one simple equivalence away, basepoint fixed."""
    n = len(loop)
    for i in range(1, n - 1):
        a, w, c = loop[i - 1], loop[i], loop[i + 1]
        if a == c or K.contains_simplex((a, w, c)):
            yield _normalize_loop(collapse(loop[:i] + loop[i + 1 :]))
    if n == 1:
        b = loop[0]
        for w in K.adjacency[b]:
            yield (b, w, b)
        return
    for i in range(1, n):
        a, c = loop[i - 1], loop[i]
        common = set(K.adjacency[a]).intersection(K.adjacency[c])
        for w in sorted(common):
            if K.contains_simplex((a, w, c)):
                yield loop[:i] + (w,) + loop[i:]


def homotopic_bounded(
    K: SimplicialComplex,
    first: EdgePath,
    second: EdgePath,
    max_len: int = 12,
    max_steps: int = 100_000,
) -> SearchResult:
    """Breadth-first search for a chain of simple equivalences.

    Loops longer than ``max_len`` vertices are pruned and at most
    ``max_steps`` loops are expanded. ``not_found`` is inconclusive.
    """
    if not (first.is_loop and second.is_loop):
        raise InvalidPathError("both paths must be loops")
    if first.basepoint != second.basepoint:
        raise InvalidPathError(
            f"basepoint mismatch: {first.basepoint} vs {second.basepoint}"
        )
    start = _normalize_loop(first.vertices)
    goal = _normalize_loop(second.vertices)
    if start == goal:
        return SearchResult("homotopic", 0)
    seen = {start}
    queue = deque([start])
    steps = 0
    while queue and steps < max_steps:
        loop = queue.popleft()
        steps += 1
        for nxt in neighbouring_loops(K, loop):
            if nxt == goal:
                return SearchResult("homotopic", steps)
            if len(nxt) <= max_len and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return SearchResult("not_found", steps)
