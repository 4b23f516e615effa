"""Edge-path group presentations of connected complexes.

Generators are the edges outside a BFS spanning tree rooted at the smallest
vertex; each triangle of the 2-skeleton contributes the word read along its
boundary with tree edges deleted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DisconnectedError, EmptyComplexError
from .homology import H1Summary, loop_chain
from .paths import fundamental_loop
from .simplicial import SimplicialComplex, spanning_tree, tree_edges
from .smith import IntMatrix, smith_normal_form

Word = tuple  # tuple of (generator index, +1 | -1)


def free_reduce(word) -> Word:
    out: list[tuple[int, int]] = []
    for g, e in word:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def generator_name(edge: tuple[int, int]) -> str:
    return f"e_{{{edge[0]},{edge[1]}}}"


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[tuple[int, int], ...]
    relators: tuple[Word, ...]
    basepoint: int
    spanning_tree: tuple[tuple[int, int], ...]
    parent: tuple[tuple[int, int | None], ...]

    def word_to_text(self, word: Word) -> str:
        if not word:
            return "1"
        return " ".join(
            generator_name(self.generators[g]) + ("^-1" if e < 0 else "") for g, e in word
        )

    def to_text(self) -> str:
        lines = [f"base {self.basepoint}"]
        lines += [f"gen {generator_name(g)}" for g in self.generators]
        lines += [f"rel {self.word_to_text(r)}" for r in self.relators]
        return "\n".join(lines)

    def simplified(self) -> "GroupPresentation":
        """Drop empty relators and generators killed by a length-1 relator."""
        killed = {r[0][0] for r in self.relators if len(r) == 1}
        keep = [i for i in range(len(self.generators)) if i not in killed]
        remap = {old: new for new, old in enumerate(keep)}
        relators = []
        for r in self.relators:
            word = free_reduce((remap[g], e) for g, e in r if g not in killed)
            if word:
                relators.append(word)
        return GroupPresentation(
            tuple(self.generators[i] for i in keep),
            tuple(relators),
            self.basepoint,
            self.spanning_tree,
            self.parent,
        )


def edge_path_group(K: SimplicialComplex) -> GroupPresentation:
    if not K:
        raise EmptyComplexError("presentation of an empty complex")
    if not K.is_connected():
        raise DisconnectedError("complex is disconnected; compute per component")
    parent = spanning_tree(K)
    tree = tree_edges(parent)
    gens = tuple(e for e in K.simplices(1) if e not in tree)
    index = {e: i for i, e in enumerate(gens)}
    relators = []
    for a, b, c in K.simplices(2):
        word = []
        for edge, sign in (((a, b), 1), ((b, c), 1), ((a, c), -1)):
            if edge in index:
                word.append((index[edge], sign))
        relators.append(free_reduce(word))
    return GroupPresentation(
        gens,
        tuple(relators),
        K.vertices[0],
        tuple(sorted(tree)),
        tuple(sorted(parent.items())),
    )


def exponent_matrix(P: GroupPresentation) -> IntMatrix:
    """Relators x generators matrix of exponent sums."""
    m = IntMatrix.zeros(len(P.relators), len(P.generators))
    for i, word in enumerate(P.relators):
        for g, e in word:
            m.data[i][g] += e
    return m


def abelianized_invariants(P: GroupPresentation) -> H1Summary:
    """Abelianization of the presented group, with generators as 1-cycles.

    With ``U R V = D`` for the exponent matrix ``R``, the rows of ``V^-1``
    give the new generators; the one in slot i has order ``D[i, i]``.
    """
    R = exponent_matrix(P)
    snf = smith_normal_form(R)
    factors = snf.invariant_factors
    n = len(P.generators)
    kept = [i for i, d in enumerate(factors) if d > 1] + list(range(len(factors), n))
    torsion = [factors[i] for i in kept if i < len(factors)]
    parent = dict(P.parent)
    fundamental = [loop_chain(fundamental_loop(parent, g)) for g in P.generators]
    cycles = []
    for i in kept:
        chain: dict = {}
        for coeff, fc in zip(snf.V_inv.data[i], fundamental):
            for e, c in fc.items():
                chain[e] = chain.get(e, 0) + coeff * c
        cycles.append({e: c for e, c in sorted(chain.items()) if c})
    return H1Summary(len(kept) - len(torsion), torsion, cycles)
