"""Character-degree layer: property P_k, the rank bound and the p-group case.

Degree sets cd(G) are taken as plain data; nothing here looks at groups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import prime_power_base
from .divisor import IntegerSet, as_integer_set, build_common, build_prime, prime_classes
from .errors import DisconnectedError, EmptyComplexError
from .homology import h1


@dataclass(frozen=True)
class DegreeSet:
    degrees: IntegerSet
    source_label: str = ""

    @classmethod
    def of(cls, values, source_label: str = "") -> "DegreeSet":
        return cls(IntegerSet.of(values), source_label)


def property_pk(X) -> int:
    """Smallest k such that every k distinct members of X* have gcd 1.

    A k-subset shares a prime exactly when some prime divides at least k
    members, so k is one more than the largest such count.
    """
    X = as_integer_set(getattr(X, "degrees", X))
    if not X.star:
        raise EmptyComplexError("X* is empty")
    return max(len(vs) for vs in prime_classes(X).values()) + 1


@dataclass(frozen=True)
class RankBoundReport:
    k: int
    dimension: int
    bound: int
    betti1: int
    identity_holds: bool
    applicable: bool
    satisfied: bool | None

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return "not applicable (k < 3)"
        if self.satisfied:
            return "bound satisfied"
        return (
            "bound violated: not the degree set of any finite solvable group "
            "with connected complex"
        )


def rank_bound_report(X) -> RankBoundReport:
    X = as_integer_set(getattr(X, "degrees", X))
    k = property_pk(X)
    G = build_common(X)
    if not G.is_connected():
        raise DisconnectedError("common divisor complex is disconnected")
    n = G.dimension
    bound = k * k - 3 * k + 1
    betti = h1(G).betti1
    applicable = k >= 3
    return RankBoundReport(
        k=k,
        dimension=n,
        bound=bound,
        betti1=betti,
        identity_holds=(k == n + 2),
        applicable=applicable,
        satisfied=(betti <= bound) if applicable else None,
    )


@dataclass(frozen=True)
class PGroupVerdict:
    applies: bool
    prime: int | None = None


def p_group_shortcut(X) -> PGroupVerdict:
    """Applies when every member of X* is a power of one prime p.

    Then G(X) is a single solid simplex and D(X) the single vertex p, so both
    fundamental groups are trivial; this is checked, not assumed.
    """
    X = as_integer_set(getattr(X, "degrees", X))
    if not X.star:
        raise EmptyComplexError("X* is empty")
    bases = {prime_power_base(v) for v in X.star}
    if len(bases) != 1 or None in bases:
        return PGroupVerdict(False)
    (p,) = bases
    G, D = build_common(X), build_prime(X)
    if G.facets != (X.star,) or D.facets != ((p,),):
        raise AssertionError(f"prime-power set {X.star} did not give a simplex and a point")
    return PGroupVerdict(True, p)
