import random

import pytest

from bottcalc.weights import (
    add,
    add_constant,
    concat,
    negate_reverse,
    parse_weight,
    render_weight,
    sort_with_inversions,
    staircase,
    tilde,
)


def test_staircase():
    assert staircase(4) == (3, 2, 1, 0)
    assert staircase(1) == (0,)
    assert staircase(6) == (5, 4, 3, 2, 1, 0)
    with pytest.raises(ValueError):
        staircase(0)


def test_sort_with_inversions_examples():
    assert sort_with_inversions((2, 0, 1, -1)) == ((2, 1, 0, -1), 1, False)
    assert sort_with_inversions((3, 2, 1, 0)) == ((3, 2, 1, 0), 0, False)
    assert sort_with_inversions((4, 2, 1, 1, -1)).has_repeats


def _bubble_swaps(w):
    # swaps needed to reach non-increasing order, never swapping equals
    w = list(w)
    count = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] < w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                count += 1
                changed = True
    return count, tuple(w)


def test_sort_with_inversions_matches_bubble_sort():
    rng = random.Random(20240814)
    for _ in range(400):
        length = rng.randint(1, 10)
        w = tuple(rng.randint(-12, 12) for _ in range(length))
        res = sort_with_inversions(w)
        swaps, srt = _bubble_swaps(w)
        assert res.sorted == srt
        assert sorted(res.sorted) == sorted(w)
        if not res.has_repeats:
            assert res.swaps == swaps


def test_tilde():
    assert tilde((-1, -2, 0, -1), 4) == (-1, -1, -1, -1)
    assert tilde((3, 2, 1, 0), 4) == (3, 2, 1, 0)
    assert tilde((0, -1, -1, 0, -1), 5) is None
    with pytest.raises(ValueError):
        tilde((1, 0), 3)


def test_tilde_dominant_when_regular():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 7)
        w = tuple(rng.randint(-8, 8) for _ in range(n))
        out = tilde(w, n)
        if out is not None:
            assert all(a >= b for a, b in zip(out, out[1:]))


def test_arithmetic():
    assert negate_reverse((2, 1, 0)) == (0, -1, -2)
    assert negate_reverse(negate_reverse((5, -2, 3))) == (5, -2, 3)
    assert concat((3,), (0, -1)) == (3, 0, -1)
    assert add_constant((1, 0), -1) == (0, -1)
    assert add((1, 2), (3, -1)) == (4, 1)
    with pytest.raises(ValueError):
        add((1,), (1, 2))


def test_exponent_notation_round_trip():
    for w in [(2, 1, 1, 1, 0, 0), (0,), (-3, -3, 4), (5,), (1, 1)]:
        assert parse_weight(render_weight(w)) == w
    assert parse_weight(" 2 , 1^3 , 0^2 ") == (2, 1, 1, 1, 0, 0)
    assert parse_weight("-2^2,-3") == (-2, -2, -3)
    assert render_weight((1, 0, 0), trim_trailing_zeros=True) == "1"
    with pytest.raises(ValueError):
        parse_weight("")
    with pytest.raises(ValueError):
        parse_weight("1,,2")
