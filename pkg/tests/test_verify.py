from gcdcomplex import verify
from gcdcomplex.paths import EdgePath, collapse
from gcdcomplex.verify import random_instance, run_fuzz, trial_rng


def test_instances_are_reproducible():
    a = random_instance(trial_rng(7, 3), 7, 1000)
    b = random_instance(trial_rng(7, 3), 7, 1000)
    assert a == b
    assert random_instance(trial_rng(7, 4), 7, 1000) != a


def test_fuzz_passes():
    summary = run_fuzz(trials=80, max_elems=6, max_value=500, seed=1)
    assert summary.ok
    assert summary.connected + summary.disconnected + summary.empty == 80


def _close_at_first_multiple(X, path, choose=min):
    # inverse map whose loop closes at the first prime's smallest multiple
    ps = collapse(path)
    mult = lambda *qs: choose([v for v in X.star if all(v % q == 0 for q in qs)])  # noqa: E731
    if len(ps) == 1:
        return EdgePath((mult(ps[0]),))
    alphas = [mult(ps[0])] + [mult(p, q) for p, q in zip(ps, ps[1:])]
    alphas[-1] = alphas[0]
    out = collapse(alphas)
    return EdgePath(out[:1] if len(out) == 2 else out)


def test_fuzz_detects_broken_inverse(monkeypatch):
    monkeypatch.setattr(verify, "eta_star_inverse", _close_at_first_multiple)
    summary = run_fuzz(trials=200, max_elems=7, max_value=1000, seed=7)
    assert not summary.ok
    assert any("round trip" in f or "Error" in f for r in summary.failed for f in r.failures)
