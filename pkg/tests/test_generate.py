import numpy as np
import pytest

from lpbisect import find_feasible_point, generate_random_instance


def test_same_seed_same_instance():
    a = generate_random_instance(2, 2, 123)
    b = generate_random_instance(2, 2, 123)
    assert a.same_as(b)
    assert not a.same_as(generate_random_instance(2, 2, 124))


@pytest.mark.parametrize("seed", range(25))
def test_ranges_and_origin(seed):
    lp = generate_random_instance(5, 4, seed)
    assert np.all(np.abs(lp.A) <= 10) and np.all(np.abs(lp.c) <= 10)
    assert np.all((lp.b >= 1) & (lp.b <= 10))
    assert np.any(lp.c)
    r = find_feasible_point(lp)
    assert r.phase1_objective == 0.0 and not np.any(r.witness)


def test_negative_b_option_reaches_phase_one():
    bs = np.concatenate([generate_random_instance(3, 4, s, allow_negative_b=True).b
                         for s in range(20)])
    assert bs.min() < 0 and bs.max() <= 10 and bs.min() >= -10


def test_rejects_empty_dimensions():
    with pytest.raises(ValueError):
        generate_random_instance(0, 2, 1)
    with pytest.raises(ValueError):
        generate_random_instance(2, 0, 1)
