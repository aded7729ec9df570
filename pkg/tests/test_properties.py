"""Seeded property suites at reduced trial counts (full counts run in
test_acceptance.py and via the CLI `verify` subcommand)."""

import random

import pytest

from troplane import verify

TRIALS = 60

_EXPECTED_FALSE = {
    # Equating origin-in-soma with literal normality fails: the soma depends
    # only on the columns as projective points, so reordering or rescaling
    # columns of a normal matrix keeps the origin in the soma while breaking
    # normality.  See suite docstring.
    "origin-vs-normality",
}


def _mark(name, fn):
    if name in _EXPECTED_FALSE:
        return pytest.param(
            name, fn,
            marks=pytest.mark.xfail(
                reason="origin-in-soma is invariant under column monomial "
                       "transforms; literal normality is not",
                strict=False))
    return pytest.param(name, fn)


@pytest.mark.parametrize(
    "name,fn", [_mark(name, fn) for name, fn in verify.SUITES])
def test_suite(name, fn):
    rng = random.Random(f"properties:{name}")
    failures = fn(rng, TRIALS)
    assert failures == [], f"{name}: {len(failures)} failures; first: " \
        f"{failures[0] if failures else ''}"


def test_run_all_is_seed_deterministic():
    first = verify.run_all(123, 5)
    second = verify.run_all(123, 5)
    assert first == second


def test_counterexample_suite_reports_failures():
    # mutation self-check: a corrupted canonical matrix must be caught
    rng = random.Random("mutation")
    from troplane.normalform import make_L
    from troplane.matrices import power

    l = make_L(2, (1, 1, 1))
    rows = [[e.value for e in row] for row in l.rows]
    rows[0][1] = 1  # corrupt one entry: positive slot breaks idempotency
    from troplane.matrices import TropMatrix3

    corrupted = TropMatrix3.of(rows)
    assert power(corrupted, 2) != corrupted
