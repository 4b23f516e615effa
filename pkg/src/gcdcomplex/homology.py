"""First integer homology of the 2-skeleton and the map induced on it by eta_*."""

from __future__ import annotations

from dataclasses import dataclass, field

from .divisor import as_integer_set, build_common, build_prime
from .errors import DisconnectedError, EmptyComplexError
from .paths import EdgePath, eta_star, fundamental_loop
from .simplicial import SimplicialComplex, spanning_tree, tree_edges
from .smith import IntMatrix, cokernel, smith_normal_form

Chain = dict  # {(a, b): coefficient} with a < b


@dataclass
class H1Summary:
    """H1 = Z^betti1 + sum of Z/t for t in torsion.

    ``generator_cycles`` holds one integer 1-cycle per summand, in the same
    order (torsion summands first). It is ignored by ``==``, which compares
    the isomorphism type only.
    """

    betti1: int
    torsion: list[int]
    generator_cycles: list[Chain] = field(default_factory=list, compare=False)

    @property
    def is_trivial(self) -> bool:
        return self.betti1 == 0 and not self.torsion


def boundary_matrices(K: SimplicialComplex) -> tuple[IntMatrix, IntMatrix]:
    """Boundary maps d1: C1 -> C0 and d2: C2 -> C1 of the 2-skeleton.

    Simplices are oriented by ascending label; rows and columns follow the
    lexicographic simplex order of :meth:`SimplicialComplex.simplices`.
    """
    if not K:
        raise EmptyComplexError("boundary matrices of an empty complex")
    verts = K.simplices(0)
    edges = K.simplices(1)
    tris = K.simplices(2)
    vi = {v[0]: i for i, v in enumerate(verts)}
    ei = {e: i for i, e in enumerate(edges)}
    d1 = IntMatrix.zeros(len(verts), len(edges))
    for j, (a, b) in enumerate(edges):
        d1.data[vi[a]][j] = -1
        d1.data[vi[b]][j] = 1
    d2 = IntMatrix.zeros(len(edges), len(tris))
    for j, (a, b, c) in enumerate(tris):
        d2.data[ei[(b, c)]][j] = 1
        d2.data[ei[(a, c)]][j] = -1
        d2.data[ei[(a, b)]][j] = 1
    return d1, d2


def loop_chain(path: EdgePath) -> Chain:
    """The 1-chain traced by an edge path, edges oriented by ascending label."""
    chain: Chain = {}
    for a, b in path.edges():
        key, sign = ((a, b), 1) if a < b else ((b, a), -1)
        chain[key] = chain.get(key, 0) + sign
    return {e: c for e, c in sorted(chain.items()) if c}


class H1Basis:
    """Coordinates on H1 of a connected complex.

    The cycle space is the kernel of d1, read off the column transform of its
    Smith form. d2 factors through that kernel, and the cokernel of the
    factored map is H1.
    """

    def __init__(self, K: SimplicialComplex):
        if not K:
            raise EmptyComplexError("homology of an empty complex")
        if not K.is_connected():
            raise DisconnectedError("complex is disconnected; compute per component")
        self.complex = K
        self.edges = K.simplices(1)
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        self.d1, self.d2 = boundary_matrices(K)
        snf1 = smith_normal_form(self.d1)
        r1 = snf1.rank
        n_e = len(self.edges)
        self._kernel = [snf1.V.column(j) for j in range(r1, n_e)]
        self._Vi = snf1.V_inv
        self._r1 = r1
        # coordinates of each triangle boundary in the kernel basis
        full = snf1.V_inv @ self.d2
        if any(full.data[i][j] for i in range(r1) for j in range(full.cols)):
            raise AssertionError("triangle boundary outside the cycle space")
        relations = IntMatrix(full.data[r1:], n_e - r1, full.cols)
        torsion, betti, basis, coords = cokernel(relations)
        self._coords = coords
        cycles = []
        for b in basis:
            vec = [sum(k[i] * c for k, c in zip(self._kernel, b)) for i in range(n_e)]
            cycles.append(self.vector_to_chain(vec))
        self.summary = H1Summary(betti, torsion, cycles)

    def chain_to_vector(self, chain: Chain) -> list[int]:
        vec = [0] * len(self.edges)
        for e, c in chain.items():
            key = tuple(sorted(e))
            sign = 1 if tuple(e) == key else -1
            if key not in self.edge_index:
                raise ValueError(f"{key} is not an edge of the complex")
            vec[self.edge_index[key]] += sign * c
        return vec

    def vector_to_chain(self, vec) -> Chain:
        return {e: c for e, c in zip(self.edges, vec) if c}

    def class_of(self, chain: Chain) -> tuple[int, ...]:
        """H1 class of a 1-cycle: torsion residues first, then free coordinates."""
        vec = self.chain_to_vector(chain)
        if any(self.d1.apply(vec)):
            raise ValueError("chain is not a cycle")
        y = self._Vi.apply(vec)[self._r1 :]
        return self._coords(y)

    def class_of_loop(self, loop: EdgePath) -> tuple[int, ...]:
        if not loop.is_loop:
            raise ValueError("path is not closed")
        return self.class_of(loop_chain(loop))


def h1(K: SimplicialComplex) -> H1Summary:
    return H1Basis(K).summary


@dataclass
class InducedMapReport:
    """Matrix of eta_* on H1: column j is the image of source generator j."""

    matrix: IntMatrix
    source: H1Summary
    target: H1Summary
    surjective: bool
    isomorphism: bool


def _is_surjective(matrix: IntMatrix, target: H1Summary) -> bool:
    rows = matrix.rows
    if rows == 0:
        return True
    cols = [matrix.column(j) for j in range(matrix.cols)]
    for i, t in enumerate(target.torsion):
        rel = [0] * rows
        rel[i] = t
        cols.append(rel)
    snf = smith_normal_form(IntMatrix.from_columns(cols, rows))
    return snf.rank == rows and all(d == 1 for d in snf.invariant_factors)


def induced_h1_map(X) -> InducedMapReport:
    """Express eta_* of each H1(G(X)) generator in H1(D(X)) coordinates.

    Each source generator is an integer combination of fundamental cycles of a
    spanning tree (the coefficient on a non-tree edge is the combination
    coefficient), and eta_* is applied to the corresponding fundamental loops.
    """
    X = as_integer_set(X)
    G, D = build_common(X), build_prime(X)
    src, dst = H1Basis(G), H1Basis(D)
    parent = spanning_tree(G)
    in_tree = tree_edges(parent)
    image_class = {}
    fundamental = {}
    for e in G.simplices(1):
        if e not in in_tree:
            loop = fundamental_loop(parent, e)
            fundamental[e] = loop_chain(loop)
            image_class[e] = dst.class_of_loop(eta_star(X, loop))
    moduli = dst.summary.torsion + [0] * dst.summary.betti1
    columns = []
    for gen in src.summary.generator_cycles:
        total = {}
        col = [0] * len(moduli)
        for e, c in gen.items():
            if e in in_tree:
                continue
            for edge, k in fundamental[e].items():
                total[edge] = total.get(edge, 0) + c * k
            col = [x + c * y for x, y in zip(col, image_class[e])]
        if {e: c for e, c in total.items() if c} != gen:
            raise AssertionError("generator is not the sum of its fundamental cycles")
        columns.append([x % m if m else x for x, m in zip(col, moduli)])
    matrix = IntMatrix.from_columns(columns, len(moduli))
    surjective = _is_surjective(matrix, dst.summary)
    return InducedMapReport(
        matrix,
        src.summary,
        dst.summary,
        surjective,
        surjective and src.summary == dst.summary,
    )
