import random

from poissonkit.randomized import (DEFAULT_TABLE, SUITES, random_element,
                                   random_polynomial, random_scalar,
                                   run_suites)


def test_run_suites_is_deterministic():
    first = run_suites(123, cases=20)
    second = run_suites(123, cases=20)
    assert first == second
    assert [name for name, _, _ in first] == [name for name, _ in SUITES]
    assert all(cases == 20 and failures == 0 for _, cases, failures in first)


def test_generator_bounds():
    rng = random.Random(9)
    for _ in range(200):
        s = random_scalar(rng, bound=4)
        assert not s.is_zero()
    for _ in range(50):
        p = random_polynomial(rng, DEFAULT_TABLE, max_terms=2, max_degree=2)
        assert all(sum(m) <= 2 for m in p.terms)
        a = random_element(rng, DEFAULT_TABLE, 2)
        assert a.degree == 2
        assert all(len(idx) == 2 for idx in a.terms)
