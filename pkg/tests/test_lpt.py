from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lpbisect import (DimensionError, LinearProgram, LPTSyntaxError, generate_random_instance,
                      parse_lp_text, render_lp_text)

DATA = Path(__file__).parent / "data"


def test_parse_max():
    lp = parse_lp_text("max\nobj 1 1\nrow 1 2 <= 4\nrow 3 1 <= 6\n")
    assert (lp.n, lp.m) == (2, 2)
    np.testing.assert_array_equal(lp.c, [1, 1])
    np.testing.assert_array_equal(lp.A, [[1, 2], [3, 1]])
    np.testing.assert_array_equal(lp.b, [4, 6])
    assert not lp.minimize


def test_parse_min_negates_objective():
    lp = parse_lp_text("min\nobj 1\nrow 1 <= 1\n")
    np.testing.assert_array_equal(lp.c, [-1])
    assert lp.minimize


def test_parse_equality_splits_into_two_rows():
    lp = parse_lp_text("max\nobj 1\nrow 1 = 1\n")
    np.testing.assert_array_equal(lp.A, [[1], [-1]])
    np.testing.assert_array_equal(lp.b, [1, -1])


def test_parse_ge_row_is_negated():
    lp = parse_lp_text("max\nobj 1 2\nrow 1 1 >= 2\n")
    np.testing.assert_array_equal(lp.A, [[-1, -1]])
    np.testing.assert_array_equal(lp.b, [-2])


def test_comments_blank_lines_and_bytes():
    text = b"# header\n\nmax   # sense\nobj 2.5 -1e-3\n\n  row 1 0 <= 3  # first\n"
    lp = parse_lp_text(text)
    np.testing.assert_array_equal(lp.c, [2.5, -1e-3])
    assert lp.m == 1


def test_no_rows():
    lp = parse_lp_text("max\nobj 1 2\n")
    assert lp.m == 0 and lp.A.shape == (0, 2)


@pytest.mark.parametrize("text, line, column", [
    ("", 1, 1),
    ("maximize\nobj 1\n", 1, 1),
    ("max\nrow 1 <= 1\n", 2, 1),
    ("max\nobj 1\nrow 1 < 1\n", 3, 7),
    ("max\nobj 1\nrow x <= 1\n", 3, 5),
    ("max\nobj 1\nrow 1 <= 1\nfoo 1 <= 1\n", 4, 1),
    ("max\nobj\n", 2, 1),
    ("max\n", 2, 1),
    ("max\nobj 1_0\n", 2, 5),
])
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(LPTSyntaxError) as info:
        parse_lp_text(text)
    assert (info.value.line, info.value.column) == (line, column)


@pytest.mark.parametrize("literal", ["inf", "-Infinity", "nan", "1e999"])
def test_non_finite_literals(literal):
    with pytest.raises(LPTSyntaxError, match="non-finite|overflows"):
        parse_lp_text(f"max\nobj 1\nrow {literal} <= 1\n")


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        parse_lp_text("max\nobj 1 1\nrow 1 <= 1\n")


def test_non_utf8():
    with pytest.raises(LPTSyntaxError):
        parse_lp_text(b"max\nobj \xff\n")


def test_render_min_problem():
    lp = parse_lp_text("min\nobj 3 -1\nrow 1 1 >= 1\n")
    assert render_lp_text(lp) == "min\nobj 3.0 -1.0\nrow -1.0 -1.0 <= -1.0\n"


@settings(max_examples=200, deadline=None)
@given(n=st.integers(1, 6), m=st.integers(0, 6), seed=st.integers(0, 10**6),
       minimize=st.booleans())
def test_roundtrip(n, m, seed, minimize):
    rng = np.random.default_rng(seed)
    lp = LinearProgram(rng.normal(size=n) * 10.0 ** rng.integers(-8, 8),
                       rng.normal(size=(m, n)), rng.normal(size=m), minimize=minimize)
    back = parse_lp_text(render_lp_text(lp, comment="roundtrip"))
    assert back.same_as(lp)


@pytest.mark.parametrize("path, args", [
    ("random_n1_m1_seed7.lpt", (1, 1, 7, False)),
    ("random_n3_m4_seed2024_negb.lpt", (3, 4, 2024, True)),
])
def test_generator_golden_files(path, args):
    golden = parse_lp_text((DATA / path).read_bytes())
    assert generate_random_instance(*args).A.tobytes() == golden.A.tobytes()
    assert generate_random_instance(*args).b.tobytes() == golden.b.tobytes()
    assert generate_random_instance(*args).c.tobytes() == golden.c.tobytes()
