import math
import threading
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from equalfigures.exact import (
    ConstructionError,
    DomainError,
    ExactNumber,
    arith,
    as_exact,
    from_rational,
    general_path_only,
    parse,
    sign,
    sqrt,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
nonneg = st.fractions(min_value=0, max_value=50, max_denominator=12)


def q(n, d=1):
    return from_rational(n, d)


# -- construction ---------------------------------------------------------


@pytest.mark.parametrize(
    "num, den, expected",
    [(1, 3, Fraction(1, 3)), (-2, -4, Fraction(1, 2)), (0, 7, Fraction(0))],
)
def test_from_rational_is_canonical(num, den, expected):
    x = from_rational(num, den)
    assert x.is_rational()
    assert x.as_fraction() == expected
    assert x.to_literal() == (str(expected.numerator) if expected.denominator == 1 else f"{expected.numerator}/{expected.denominator}")


def test_zero_denominator_is_a_construction_error():
    with pytest.raises(ConstructionError):
        from_rational(1, 0)


def test_rational_arithmetic():
    assert (q(1, 3) + q(1, 6)).as_fraction() == Fraction(1, 2)
    assert arith(q(1, 3), q(1, 6), "add").as_fraction() == Fraction(1, 2)
    assert sign(q(1, 3) - q(33, 100)) == 1


def test_sqrt_identities():
    r2 = sqrt(2)
    assert sign(r2 * r2 - 2) == 0
    assert sign((1 / r2) * (1 / r2) - q(1, 2)) == 0
    assert sign(sqrt(4) - 2) == 0
    assert sqrt(0).sign() == 0


def test_sqrt2_beats_eight_decimals():
    # twelve correct digits from integer square root, independent of the kernel
    digits = math.isqrt(2 * 10**24)
    assert digits * digits <= 2 * 10**24
    lower = Fraction(digits, 10**12)
    assert lower > Fraction(141421356, 10**8)
    assert sqrt(2) > q(141421356, 10**8)
    assert sqrt(2) >= as_exact(lower)


def test_domain_errors():
    with pytest.raises(DomainError):
        sqrt(-1)
    with pytest.raises(DomainError):
        q(1) / (sqrt(2) * sqrt(2) - 2)
    with pytest.raises(DomainError):
        q(3) / 0
    with pytest.raises(ValueError):
        arith(q(1), q(2), "pow")


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        as_exact(0.5)
    with pytest.raises(TypeError):
        as_exact(True)


# -- nested radical corpus --------------------------------------------------


def _corpus():
    r2, r3, r5, r6 = sqrt(2), sqrt(3), sqrt(5), sqrt(6)
    phi = (r5 + 1) / 2
    # each entry is an exact zero; the comment is the squaring that proves it
    return {
        "sqrt2+sqrt3-sqrt(5+2sqrt6)": r2 + r3 - sqrt(5 + 2 * r6),  # (r2+r3)^2 = 5+2r6
        "sqrt2*sqrt3-sqrt6": r2 * r3 - r6,
        "sqrt(3+2sqrt2)": sqrt(3 + 2 * r2) - (1 + r2),  # (1+r2)^2
        "sqrt(3-2sqrt2)": sqrt(3 - 2 * r2) - (r2 - 1),  # (r2-1)^2
        "sqrt(7+4sqrt3)": sqrt(7 + 4 * r3) - (2 + r3),  # 4+4r3+3
        "sqrt(4+2sqrt3)": sqrt(4 + 2 * r3) - (1 + r3),  # 1+2r3+3
        "sqrt(6+2sqrt5)": sqrt(6 + 2 * r5) - (1 + r5),  # 1+2r5+5
        "sqrt(11+6sqrt2)": sqrt(11 + 6 * r2) - (3 + r2),  # 9+6r2+2
        "difference of denestings": sqrt(5 + 2 * r6) - sqrt(5 - 2 * r6) - 2 * r2,  # (r3+r2)-(r3-r2)
        "sqrt(sqrt2*sqrt8)": sqrt(r2 * sqrt(8)) - 2,  # sqrt(4)
        "sqrt(2+sqrt3)": sqrt(2 + r3) - (r6 + r2) / 2,  # ((r6+r2)/2)^2 = (8+4r3)/4
        "sqrt(2-sqrt3)": sqrt(2 - r3) - (r6 - r2) / 2,
        "1/(sqrt2+1)": 1 / (r2 + 1) - (r2 - 1),  # conjugate
        "1/(sqrt3+sqrt2)": 1 / (r3 + r2) - (r3 - r2),  # 3-2 = 1
        "fourth root of 2 squared": sqrt(r2) * sqrt(r2) - r2,
        "(sqrt2+sqrt3)^2": (r2 + r3) * (r2 + r3) - (5 + 2 * r6),
        "sqrt12": sqrt(12) - 2 * r3,
        "sqrt(1/2)": sqrt(q(1, 2)) - r2 / 2,
        "sqrt(10+2sqrt21)": sqrt(10 + 2 * sqrt(21)) - (r3 + sqrt(7)),  # 3+7+2r21
        "sqrt(sqrt5+2)*sqrt(sqrt5-2)": sqrt(r5 + 2) * sqrt(r5 - 2) - 1,  # 5-4
        "sqrt(8+2sqrt15)": sqrt(8 + 2 * sqrt(15)) - r3 - r5,  # 3+5+2r15
        "sqrt(sqrt2+1)*sqrt(sqrt2-1)": sqrt(r2 + 1) * sqrt(r2 - 1) - 1,  # 2-1
        "golden ratio": phi * phi - (phi + 1),
        "sqrt(9+4sqrt5)": sqrt(9 + 4 * r5) - (2 + r5),  # 4+4r5+5
        "sqrt(2+sqrt2)*sqrt(2-sqrt2)": sqrt(2 + r2) * sqrt(2 - r2) - r2,  # 4-2
        "sqrt(sqrt3+sqrt2)*sqrt(sqrt3-sqrt2)": sqrt(r3 + r2) * sqrt(r3 - r2) - 1,  # 3-2
        "nested denesting": sqrt(1 + sqrt(3 + 2 * r2)) - sqrt(2 + r2),  # 1+(1+r2)
    }


CORPUS_NAMES = sorted(_corpus())
EPSILON = q(1, 10**9)


def test_corpus_is_large_enough():
    assert len(CORPUS_NAMES) >= 20


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_corpus_identity_is_exactly_zero(name):
    zero = _corpus()[name]
    assert zero.sign() == 0
    assert (zero + EPSILON).sign() == 1
    assert (zero - EPSILON).sign() == -1


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_corpus_on_general_path(name):
    with general_path_only():
        zero = _corpus()[name]
        assert zero.sign() == 0
        assert (zero + EPSILON).sign() == 1
        assert (zero - EPSILON).sign() == -1


# -- field laws -------------------------------------------------------------


def _quadratic(a, b, s):
    return as_exact(a) + as_exact(b) * sqrt(s)


@given(rationals, rationals, rationals)
def test_associativity_and_distributivity(a, b, c):
    x, y, z = as_exact(a), as_exact(b), as_exact(c)
    assert sign((x + y) + z - (x + (y + z))) == 0
    assert sign(x * (y + z) - (x * y + x * z)) == 0


@settings(max_examples=60)
@given(rationals, rationals, rationals, rationals, st.sampled_from([2, 3, 5, 6, 7]), st.sampled_from([2, 3, 10]))
def test_field_laws_with_radicals(a, b, c, d, s, t):
    x = _quadratic(a, b, s)
    y = _quadratic(c, d, t)
    z = _quadratic(b, c, s * t)
    assert sign((x + y) + z - (x + (y + z))) == 0
    assert sign(x * (y + z) - (x * y + x * z)) == 0
    if y.sign() != 0:
        assert sign((x / y) * y - x) == 0


@given(nonneg)
def test_sqrt_squares_back(a):
    assert sign(sqrt(a) * sqrt(a) - as_exact(a)) == 0


@given(nonneg, nonneg)
def test_sqrt_is_multiplicative(a, b):
    assert sign(sqrt(as_exact(a) * as_exact(b)) - sqrt(a) * sqrt(b)) == 0


@given(rationals, rationals, rationals)
def test_rational_fast_path_matches_general_path(a, b, c):
    def build():
        x, y, z = as_exact(a), as_exact(b), as_exact(c)
        e = x * y - z + x / (z * z + 1)
        return e - (x * y - z) - x / (z * z + 1) + y

    fast = build()
    assert fast.is_rational()
    with general_path_only():
        slow = build()
        assert not slow.is_rational() or slow.as_fraction() == fast.as_fraction()
        assert slow.sign() == fast.sign()


OPS = ("add", "sub", "mul", "div", "sqrt")


@st.composite
def programs(draw):
    leaves = draw(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=2, max_size=4))
    steps = draw(st.lists(st.tuples(st.sampled_from(OPS), st.integers(0, 20), st.integers(0, 20)), max_size=7))
    return leaves, steps


def _run(program):
    leaves, steps = program
    values = [as_exact(v) for v in leaves]
    for op, i, j in steps:
        a, b = values[i % len(values)], values[j % len(values)]
        try:
            values.append(sqrt(abs(a)) if op == "sqrt" else arith(a, b, op))
        except DomainError:
            continue
    return values[-1]


@settings(max_examples=60, deadline=None)
@given(programs())
def test_fast_paths_agree_with_interval_refinement(program):
    fast = _run(program)
    with general_path_only():
        slow = _run(program)
        assert slow.sign() == fast.sign()
        assert sign(slow - fast) == 0


@settings(max_examples=60, deadline=None)
@given(programs())
def test_literal_round_trip(program):
    x = _run(program)
    text = x.to_literal()
    y = parse(text)
    assert y.to_literal() == text
    assert sign(y - x) == 0


def test_literal_examples():
    assert sqrt(2).to_literal() == "(sqrt 2)"
    assert (1 / sqrt(2)).to_literal() == "(mul 1/2 (sqrt 2))"
    assert parse("(div 1 (sqrt 2))").to_literal() == "(mul 1/2 (sqrt 2))"
    assert sqrt(18).to_literal() == "(mul 3 (sqrt 2))"
    assert ((1 + sqrt(2)) / (1 - sqrt(2))).to_literal() == "(add -3 (mul -2 (sqrt 2)))"
    nested = sqrt(5 + 2 * sqrt(6))
    assert parse(nested.to_literal()).to_literal() == nested.to_literal()


@pytest.mark.parametrize("text", ["", "(sqrt 2", "(sqrt 1 2)", "(pow 2 3)", "1.5", "(add 1)", "2)", "(div 1 0)", "(sqrt -1)"])
def test_bad_literals(text):
    with pytest.raises((ConstructionError, DomainError)):
        parse(text)


# -- interval cache -----------------------------------------------------------


def test_cached_interval_only_narrows():
    with general_path_only():
        x = sqrt(2) + sqrt(3)
        y = sqrt(5 + 2 * sqrt(6))
        assert x.cached_width() is None
        assert (x - 3).sign() == 1
        widths = [x.cached_width()]
        for k in (10, 30, 60, 120):
            assert (x - y + q(1, 10**k)).sign() == 1
            widths.append(x.cached_width())
        (x - y).sign()
        widths.append(x.cached_width())
    assert all(w is not None for w in widths)
    assert all(later <= earlier for earlier, later in zip(widths, widths[1:]))
    lo, hi = x.interval(200)
    assert lo <= hi
    # integer square roots give sqrt2 + sqrt3 to 20 digits from below
    below = Fraction(math.isqrt(2 * 10**40) + math.isqrt(3 * 10**40), 10**20)
    assert lo <= below + Fraction(2, 10**20)
    assert hi >= below


def test_interval_encloses_value():
    x = sqrt(2)
    lo, hi = x.interval(100)
    assert lo * lo <= 2 <= hi * hi
    assert hi - lo <= Fraction(1, 2**99)


def test_concurrent_sign_calls_agree():
    with general_path_only():
        shared = [sqrt(k) + sqrt(k + 1) - sqrt(2 * k + 1 + 2 * sqrt(k * (k + 1))) for k in range(2, 12)]
    barrier = threading.Barrier(4)

    def work(offset):
        barrier.wait()
        return [shared[(i + offset) % len(shared)].sign() for i in range(len(shared))]

    with ThreadPoolExecutor(4) as pool:
        results = list(pool.map(work, range(4)))
    assert all(v == 0 for r in results for v in r)


def test_values_are_unhashable_and_compare_exactly():
    assert isinstance(sqrt(2), ExactNumber)
    with pytest.raises(TypeError):
        hash(sqrt(2))
    assert sqrt(8) == 2 * sqrt(2)
    assert sqrt(2) < sqrt(3) < 2
