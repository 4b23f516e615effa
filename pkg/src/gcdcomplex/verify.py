"""Randomized checks of the correspondence between G(X) and D(X)."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .applications import property_pk
from .divisor import (
    IntegerSet,
    build_common,
    build_prime,
    check_connectivity_theorem,
    check_near_surjectivity,
    check_subset_reversal,
)
from .homology import H1Basis, induced_h1_map
from .paths import eta_star, eta_star_inverse, random_loop
from .presentation import abelianized_invariants, edge_path_group


def trial_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"gcdcomplex-fuzz:{seed}:{index}")


def random_instance(rng: random.Random, max_elems: int, max_value: int) -> IntegerSet:
    size = rng.randint(1, max_elems)
    return IntegerSet.of(rng.randint(1, max_value) for _ in range(size))


def round_trip_failures(X: IntegerSet, rng: random.Random, loops: int = 2, steps: int = 6) -> list[str]:
    """Compare H1 classes of random loops with their round-trip images."""
    G, D = build_common(X), build_prime(X)
    hg, hd = H1Basis(G), H1Basis(D)
    failures = []
    for _ in range(loops):
        L = random_loop(G, rng, rng.randint(1, steps))
        back = eta_star_inverse(X, eta_star(X, L))
        if hg.class_of_loop(L) != hg.class_of_loop(back):
            failures.append(f"round trip in G changes the class of {L}")
        M = random_loop(D, rng, rng.randint(1, steps))
        back = eta_star(X, eta_star_inverse(X, M))
        if hd.class_of_loop(M) != hd.class_of_loop(back):
            failures.append(f"round trip in D changes the class of {M}")
    return failures


@dataclass
class TrialResult:
    index: int
    values: tuple[int, ...]
    empty: bool = False
    connected: bool = False
    failures: list[str] = field(default_factory=list)


def check_instance(X: IntegerSet, rng: random.Random, index: int = 0) -> TrialResult:
    result = TrialResult(index, X.raw)
    if not X.star:
        result.empty = True
        return result
    fail = result.failures
    if not check_subset_reversal(X):
        fail.append("subset reversal")
    if not check_connectivity_theorem(X):
        fail.append("connectivity equivalence")
    if not check_near_surjectivity(X):
        fail.append("near surjectivity")
    G = build_common(X)
    if property_pk(X) != G.dimension + 2:
        fail.append("k = n + 2")
    result.connected = G.is_connected()
    if not result.connected:
        return result
    D = build_prime(X)
    report = induced_h1_map(X)
    if report.source != report.target:
        fail.append(f"H1 mismatch {report.source} vs {report.target}")
    if not report.isomorphism:
        fail.append("induced map is not an isomorphism")
    for name, K, summary in (("G", G, report.source), ("D", D, report.target)):
        if abelianized_invariants(edge_path_group(K)) != summary:
            fail.append(f"presentation disagrees with homology on {name}")
    fail.extend(round_trip_failures(X, rng))
    return result


def run_trial(args) -> TrialResult:
    index, seed, max_elems, max_value = args
    rng = trial_rng(seed, index)
    X = random_instance(rng, max_elems, max_value)
    try:
        return check_instance(X, rng, index)
    except Exception as exc:  # any crash on a valid instance is a failure
        return TrialResult(index, X.raw, failures=[f"{type(exc).__name__}: {exc}"])


@dataclass
class FuzzSummary:
    trials: int
    empty: int
    connected: int
    disconnected: int
    failed: list[TrialResult]

    @property
    def ok(self) -> bool:
        return not self.failed


def run_fuzz(trials: int, max_elems: int, max_value: int, seed: int, workers: int = 1) -> FuzzSummary:
    jobs = [(i, seed, max_elems, max_value) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_trial, jobs, chunksize=16))
    else:
        results = [run_trial(j) for j in jobs]
    results.sort(key=lambda r: r.index)
    empty = sum(r.empty for r in results)
    connected = sum(r.connected for r in results)
    return FuzzSummary(
        trials=trials,
        empty=empty,
        connected=connected,
        disconnected=trials - empty - connected,
        failed=[r for r in results if r.failures],
    )
