"""The common-divisor complex G(X), the prime-divisor complex D(X) and the
simplex map eta between them.

G(X) has the elements of X* = X minus {1} as vertices, and a set of them is a
simplex when its gcd exceeds 1. That happens exactly when one prime divides
all of them, so the facets of G(X) are the maximal sets
``S_p = {v in X* : p | v}``.

D(X) has the primes dividing members of X* as vertices, and a set of primes
is a simplex when some member of X is divisible by all of them. Its facets
are the maximal prime supports ``pi(v)``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .arith import check_positive, factorize, gcd_set, pi_of_set
from .errors import EmptyComplexError, EnumerationLimitError, NotASimplexError
from .simplicial import Simplex, SimplicialComplex, as_simplex


@dataclass(frozen=True)
class IntegerSet:
    """An ingested set X: ``raw`` keeps the input as given, ``star`` is X*."""

    raw: tuple[int, ...]
    star: tuple[int, ...]

    @classmethod
    def of(cls, values: Iterable[int]) -> "IntegerSet":
        raw = tuple(check_positive(v) for v in values)
        return cls(raw, tuple(sorted(set(raw) - {1})))

    @property
    def ones_removed(self) -> int:
        return self.raw.count(1)

    @property
    def duplicates_removed(self) -> int:
        return sum(c - 1 for v, c in Counter(self.raw).items() if v != 1)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted({p for v in self.star for p in factorize(v)}))

    def __len__(self):
        return len(self.star)


def as_integer_set(X) -> IntegerSet:
    return X if isinstance(X, IntegerSet) else IntegerSet.of(X)


@dataclass(frozen=True)
class EtaImage:
    source: Simplex
    image: Simplex

    @property
    def dimension(self) -> int:
        return len(self.image) - 1


def prime_classes(X) -> dict[int, tuple[int, ...]]:
    """Map each prime p to S_p, the members of X* divisible by p."""
    X = as_integer_set(X)
    classes: dict[int, list[int]] = {}
    for v in X.star:
        for p in factorize(v):
            classes.setdefault(p, []).append(v)
    return {p: tuple(vs) for p, vs in sorted(classes.items())}


def build_common(X) -> SimplicialComplex:
    X = as_integer_set(X)
    return SimplicialComplex.from_facets(X.star, prime_classes(X).values())


def build_prime(X) -> SimplicialComplex:
    X = as_integer_set(X)
    return SimplicialComplex.from_facets(X.primes, [factorize(v) for v in X.star])


def eta(X, simplex: Iterable[int]) -> EtaImage:
    X = as_integer_set(X)
    sigma = as_simplex(simplex)
    known = set(X.star)
    if not all(v in known for v in sigma) or gcd_set(sigma) == 1:
        raise NotASimplexError(f"{sigma} is not a simplex of the common divisor complex")
    return EtaImage(sigma, pi_of_set(sigma))


def common_simplices(X, limit: int = 50_000) -> list[Simplex]:
    """Every simplex of G(X), enumerated from the facets."""
    K = build_common(X)
    total = sum(2 ** len(f) - 1 for f in K.facets)
    if total > limit:
        raise EnumerationLimitError(total, limit)
    out = set()
    for f in K.facets:
        for k in range(1, len(f) + 1):
            out.update(combinations(f, k))
    return sorted(out, key=lambda s: (len(s), s))


def check_subset_reversal(X, limit: int = 50_000) -> bool:
    """For all simplices s1 <= s2 of G(X), eta(s2) is a face of eta(s1)."""
    X = as_integer_set(X)
    simplices = common_simplices(X, limit)
    pairs = sum(2 ** len(s) for s in simplices)
    if pairs > limit * 8:
        raise EnumerationLimitError(pairs, limit * 8)
    images = {s: set(eta(X, s).image) for s in simplices}
    for big in simplices:
        big_image = images[big]
        for k in range(1, len(big)):
            for small in combinations(big, k):
                if not big_image <= images[small]:
                    return False
    return True


def check_near_surjectivity(X) -> bool:
    """Every facet of D(X), hence every vertex, lies inside eta of a vertex of G(X)."""
    X = as_integer_set(X)
    vertex_images = [set(eta(X, (v,)).image) for v in X.star]
    D = build_prime(X)
    return all(any(set(f) <= img for img in vertex_images) for f in D.facets)


def check_connectivity_theorem(X) -> bool:
    X = as_integer_set(X)
    if not X.star:
        raise EmptyComplexError("X* is empty")
    return build_common(X).is_connected() == build_prime(X).is_connected()
