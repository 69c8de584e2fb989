"""Randomized exact verification of the equal-figures axioms and lemmas.

Every statement is a triple of functions over an *assignment* (a dict from
variable names to :class:`~equalfigures.plane.Point` or
:class:`~equalfigures.exact.ExactNumber`):

``generate(rng, trial)``
    builds an assignment on which the hypotheses hold.  Equalities such as
    ``ET(B,C,D,b,c,d)`` have measure zero, so they are constructed rather
    than sampled: a triangle with a prescribed doubled area ``K`` on base
    ``ab`` is ``c = a + t(b - a) + (K / |ab|^2) perp(b - a)``, a convex
    quadrilateral with doubled area ``K`` is two such triangles on opposite
    sides of a diagonal whose apexes are joined through an interior point
    of that diagonal, and so on.  The recipe for each statement is in its
    generator's docstring.
``hypotheses(asg)``
    re-checks every hypothesis with the defined predicates.
``conclusion(asg)``
    evaluates the conclusion with the defined relations (never the
    shoelace oracle, except where a statement is *about* the oracle).

Coordinates are rationals ``n/d`` with ``n`` in [-12, 12] and ``d`` in
[1, 4]; constructions and occasional irrational rigid motions bring in
square roots.  Each trial has its own RNG, derived from
``(seed, statement, trial)`` with SHA-256, so a single trial can be
replayed in isolation and reports do not depend on execution order.
"""

from __future__ import annotations

import hashlib
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exact import DomainError, ExactNumber, as_exact, sqrt
from .figures import (
    RectWH,
    Triangle,
    area,
    area_sum,
    circumscribed_rectangle_points,
    circumscribed_rectangles,
    classify_quadrilateral,
    Convex,
    equal_figures,
    equal_rectangles,
    equal_triangles,
    halves,
    oracle_area,
    ReallyTriangle,
    rect_of_points,
)
from .plane import (
    Point,
    Segment,
    angles_equal,
    between,
    collinear,
    concyclic,
    cross,
    dot,
    line_intersection,
    on_altitude,
    orthocenter,
    parallel,
    point,
    right_angle,
    same_side,
    sqdist,
    triangle_congruent,
)
from .proportion import (
    check_fundamental,
    check_interchange,
    cyclic_quad_check,
    fourth_proportional,
    pascal_kupffer_check,
    proportion_holds,
    segment_of_length,
)

__all__ = [
    "APPENDIX_AXIOMS",
    "STATEMENTS",
    "Statement",
    "TrialReport",
    "SuiteReport",
    "HOLDS",
    "UNCONSTRUCTIBLE",
    "VIOLATED",
    "statement_ids",
    "trial_rng",
    "generate_case",
    "run_trial",
    "verify",
    "verify_all",
    "recheck",
    "encode_assignment",
    "decode_assignment",
]

HOLDS = "holds"
UNCONSTRUCTIBLE = "hypothesis_unconstructible"
VIOLATED = "VIOLATED"

# The axiom names of the appendix listing, in listing order.
APPENDIX_AXIOMS = (
    "congruentequal",
    "ETpermutation",
    "ETsymmetric",
    "EFpermutation",
    "halvesofequals",
    "EFsymmetric",
    "EFtransitive",
    "ETtransitive",
    "cutoff1",
    "cutoff2",
    "paste1",
    "deZolt1",
    "deZolt2",
    "paste2",
    "paste3",
    "paste4",
)

MAX_ATTEMPTS = 50


class _Retry(Exception):
    """A random draw was degenerate; draw again."""


# -- relations in appendix notation -------------------------------------


def ET(a, b, c, d, e, f):
    return equal_triangles(Triangle(a, b, c), Triangle(d, e, f))


def EF(a, b, c, d, p, q, r, s):
    return equal_figures((a, b, c, d), (p, q, r, s))


def OS(p, a, b, q):
    """p and q lie on opposite sides of line ab."""
    return not same_side(p, q, a, b)


# -- sampling helpers ---------------------------------------------------


def _rat(rng):
    return Fraction(rng.randint(-12, 12), rng.randint(1, 4))


def _pos(rng):
    return Fraction(rng.randint(1, 12), rng.randint(1, 4))


def _unit(rng):
    """A rational strictly between 0 and 1."""
    d = rng.randint(2, 9)
    return Fraction(rng.randint(1, d - 1), d)


def _pt(rng):
    return point(_rat(rng), _rat(rng))


def _pt_off(rng, a, b):
    """A random point not on line ab."""
    for _ in range(MAX_ATTEMPTS):
        c = _pt(rng)
        if not collinear(a, b, c):
            return c
    raise _Retry


def _two_points(rng):
    a = _pt(rng)
    b = _pt(rng)
    if a == b:
        raise _Retry
    return a, b


def _triangle(rng):
    a, b = _two_points(rng)
    return a, b, _pt_off(rng, a, b)


def _length(rng):
    """A positive length, irrational about half the time."""
    if rng.random() < 0.5:
        return as_exact(_pos(rng))
    return sqrt(as_exact(_pos(rng)))


def _lerp(a, b, t):
    return a + (b - a).scale(t)


def _twice_area(a, b, c):
    return abs(cross(b - a, c - a))


def _apex(rng, a, b, k, sign=None):
    """A point c with cross(b - a, c - a) = +-k, foot anywhere near ab."""
    if sign is None:
        sign = rng.choice((1, -1))
    d = b - a
    t = Fraction(rng.randint(-8, 16), 8)
    return a + d.scale(t) + d.perp().scale(as_exact(k) * sign / dot(d, d))


def _triangle_with_area(rng, k):
    a, b = _two_points(rng)
    return a, b, _apex(rng, a, b, k)


def _rotation(rng):
    """(cos, sin) of a rotation; Pythagorean or with an irrational cosine."""
    m, n = rng.randint(1, 6), rng.randint(0, 6)
    if rng.random() < 0.7:
        r = m * m + n * n
        return as_exact(Fraction(m * m - n * n, r)), as_exact(Fraction(2 * m * n, r))
    r = sqrt(as_exact(m * m + n * n))
    return as_exact(m) / r, as_exact(n) / r


def _rigid_motion(rng):
    """A random isometry of the plane, sometimes a reflection."""
    c, s = _rotation(rng)
    flip = rng.random() < 0.5
    shift = _pt(rng)

    def move(p):
        y = -p.y if flip else p.y
        return Point(p.x * c - y * s, p.x * s + y * c) + shift

    return move


def _shuffle_cyclic(rng, pts):
    """A random cyclic shift of a boundary, possibly reversed."""
    k = rng.randrange(len(pts))
    pts = pts[k:] + pts[:k]
    if rng.random() < 0.5:
        pts = pts[::-1]
    return pts


def _convex_quad(rng, k=None, shuffle=True):
    """Convex ABCD with doubled area k (random if None).

    Diagonal AC, an interior point O of it, and B, D on a line through O on
    opposite sides of AC.
    """
    a, c = _two_points(rng)
    o = _lerp(a, c, _unit(rng))
    v = _pt(rng)
    h = cross(c - a, v)
    if h.sign() == 0:
        raise _Retry
    if k is None:
        lam, mu = _pos(rng), _pos(rng)
    else:
        total = as_exact(k) / abs(h)
        lam = total * _unit(rng)
        mu = total - lam
    pts = (a, o + v.scale(lam), c, o - v.scale(mu))
    return _shuffle_cyclic(rng, pts) if shuffle else pts


def _really_triangle_quad(rng, k=None, shuffle=True):
    """A quadrilateral with one straight vertex; doubled area k."""
    if k is None:
        x, y, z = _triangle(rng)
    else:
        x, y, z = _triangle_with_area(rng, k)
    pts = (x, _lerp(x, y, _unit(rng)), y, z)
    return _shuffle_cyclic(rng, pts) if shuffle else pts


def _quad(rng, k=None, kind=None):
    if kind is None:
        kind = rng.choice(("convex", "really"))
    if kind == "convex":
        return _convex_quad(rng, k)
    return _really_triangle_quad(rng, k)


def _doubled_area(rng):
    return Fraction(rng.randint(1, 96), rng.randint(1, 4))


def _names(prefix, pts):
    return {f"{prefix}{i}": p for i, p in enumerate(pts)}


def _pick(asg, prefix, n):
    return tuple(asg[f"{prefix}{i}"] for i in range(n))


def _maybe_move(rng, pts, p=0.5):
    if rng.random() < p:
        move = _rigid_motion(rng)
        return tuple(move(q) for q in pts)
    return pts


PERMS3 = ((0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (1, 0, 2), (2, 1, 0))

# vertex orders listed by the EFpermutation axiom (besides the identity)
PERMS4 = ((1, 2, 3, 0), (3, 2, 1, 0), (2, 3, 0, 1), (1, 0, 3, 2), (3, 0, 1, 2), (2, 1, 0, 3), (0, 3, 2, 1))


def _perm(pts, order):
    return tuple(pts[i] for i in order)


# -- statement registry -------------------------------------------------


@dataclass(frozen=True)
class Statement:
    name: str
    kind: str  # "axiom" or "lemma"
    generate: Callable
    hypotheses: Callable
    conclusion: Callable
    summary: str = ""


STATEMENTS: dict[str, Statement] = {}


def _statement(name, kind, summary):
    """Register a statement from a class holding generate/hypotheses/conclusion."""

    def register(cls):
        STATEMENTS[name] = Statement(
            name,
            kind,
            cls.generate,
            cls.hypotheses,
            cls.conclusion,
            summary,
        )
        return cls

    return register


def _true(asg):
    return True


# -- appendix axioms ----------------------------------------------------


@_statement("congruentequal", "axiom", "TC(A,B,C,a,b,c) ==> ET(A,B,C,a,b,c)")
class _CongruentEqual:
    def generate(rng, trial):
        """ABC random; abc its image under a random isometry."""
        tri = _triangle(rng)
        move = _rigid_motion(rng)
        return {**_names("A", tri), **_names("a", [move(p) for p in tri])}

    def hypotheses(asg):
        return triangle_congruent(*_pick(asg, "A", 3), *_pick(asg, "a", 3))

    def conclusion(asg):
        return ET(*_pick(asg, "A", 3), *_pick(asg, "a", 3))


def _et_pair(rng):
    """Two triangles with equal doubled area |cross|."""
    tri = _triangle(rng)
    k = _twice_area(*tri)
    other = _maybe_move(rng, _triangle_with_area(rng, k), 0.3)
    return tri, other


@_statement("ETpermutation", "axiom", "ET(A,B,C,a,b,c) ==> ET(A,B,C,x,y,z) for every order xyz of abc")
class _ETPermutation:
    def generate(rng, trial):
        """abc gets the doubled area of ABC on a random base."""
        t1, t2 = _et_pair(rng)
        return {**_names("A", t1), **_names("a", t2)}

    def hypotheses(asg):
        return ET(*_pick(asg, "A", 3), *_pick(asg, "a", 3))

    def conclusion(asg):
        big, small = _pick(asg, "A", 3), _pick(asg, "a", 3)
        return all(ET(*big, *_perm(small, o)) for o in PERMS3[1:])


@_statement("ETsymmetric", "axiom", "ET(A,B,C,a,b,c) ==> ET(a,b,c,A,B,C)")
class _ETSymmetric:
    generate = _ETPermutation.generate
    hypotheses = _ETPermutation.hypotheses

    def conclusion(asg):
        return ET(*_pick(asg, "a", 3), *_pick(asg, "A", 3))


@_statement("ETtransitive", "axiom", "ET(A,B,C,a,b,c) /\\ ET(a,b,c,P,Q,R) ==> ET(A,B,C,P,Q,R)")
class _ETTransitive:
    def generate(rng, trial):
        t1, t2 = _et_pair(rng)
        t3 = _maybe_move(rng, _triangle_with_area(rng, _twice_area(*t1)), 0.3)
        return {**_names("A", t1), **_names("a", t2), **_names("P", t3)}

    def hypotheses(asg):
        return ET(*_pick(asg, "A", 3), *_pick(asg, "a", 3)) and ET(*_pick(asg, "a", 3), *_pick(asg, "P", 3))

    def conclusion(asg):
        return ET(*_pick(asg, "A", 3), *_pick(asg, "P", 3))


def _ef_pair(rng):
    k = _doubled_area(rng)
    q1 = _quad(rng, k)
    q2 = _maybe_move(rng, _quad(rng, k), 0.25)
    return q1, q2


@_statement("EFpermutation", "axiom", "EF(A,B,C,D,a,b,c,d) ==> EF under the seven listed reorderings of abcd")
class _EFPermutation:
    def generate(rng, trial):
        """Two quadrilaterals (convex or really a triangle) of equal doubled area."""
        q1, q2 = _ef_pair(rng)
        return {**_names("A", q1), **_names("a", q2)}

    def hypotheses(asg):
        return EF(*_pick(asg, "A", 4), *_pick(asg, "a", 4))

    def conclusion(asg):
        big, small = _pick(asg, "A", 4), _pick(asg, "a", 4)
        return all(EF(*big, *_perm(small, o)) for o in PERMS4)


@_statement("EFsymmetric", "axiom", "EF(A,B,C,D,a,b,c,d) ==> EF(a,b,c,d,A,B,C,D)")
class _EFSymmetric:
    generate = _EFPermutation.generate
    hypotheses = _EFPermutation.hypotheses

    def conclusion(asg):
        return EF(*_pick(asg, "a", 4), *_pick(asg, "A", 4))


@_statement("EFtransitive", "axiom", "EF(A..D,a..d) /\\ EF(a..d,P,Q,R,S) ==> EF(A..D,P,Q,R,S)")
class _EFTransitive:
    def generate(rng, trial):
        k = _doubled_area(rng)
        qs = [_maybe_move(rng, _quad(rng, k), 0.25) for _ in range(3)]
        return {**_names("A", qs[0]), **_names("a", qs[1]), **_names("P", qs[2])}

    def hypotheses(asg):
        return EF(*_pick(asg, "A", 4), *_pick(asg, "a", 4)) and EF(*_pick(asg, "a", 4), *_pick(asg, "P", 4))

    def conclusion(asg):
        return EF(*_pick(asg, "A", 4), *_pick(asg, "P", 4))


def _kite_half(rng, k=None):
    """ABC with doubled area k, and D = 2O - A for O inside BC."""
    if k is None:
        a, b, c = _triangle(rng)
    else:
        a, b, c = _triangle_with_area(rng, k)
    o = _lerp(b, c, _unit(rng))
    d = o.scale(2) - a
    return a, b, c, d


@_statement(
    "halvesofequals",
    "axiom",
    "ET(A,B,C,B,C,D) /\\ OS(A,B,C,D) /\\ ET(a,b,c,b,c,d) /\\ OS(a,b,c,d) /\\ EF(A,B,D,C,a,b,d,c) ==> ET(A,B,C,a,b,c)",
)
class _HalvesOfEquals:
    def generate(rng, trial):
        """D is A reflected through an interior point of BC; abcd likewise with the same area."""
        big = _kite_half(rng)
        small = _maybe_move(rng, _kite_half(rng, _twice_area(*big[:3])), 0.25)
        return {**dict(zip("ABCD", big)), **dict(zip("abcd", small))}

    def hypotheses(asg):
        A, B, C, D = (asg[n] for n in "ABCD")
        a, b, c, d = (asg[n] for n in "abcd")
        return (
            ET(A, B, C, B, C, D)
            and OS(A, B, C, D)
            and ET(a, b, c, b, c, d)
            and OS(a, b, c, d)
            and EF(A, B, D, C, a, b, d, c)
        )

    def conclusion(asg):
        return ET(*(asg[n] for n in "ABC"), *(asg[n] for n in "abc"))


def _cut_corner(rng, k, p):
    """Triangle ACE of doubled area k, B on AC, D on EC, (1-l)(1-m) = p."""
    a, c, e = _triangle_with_area(rng, k)
    one_minus_l = p + (1 - p) * _unit(rng)
    one_minus_m = p / one_minus_l
    b = _lerp(a, c, 1 - one_minus_l)
    d = _lerp(e, c, 1 - one_minus_m)
    return {"A": a, "B": b, "C": c, "D": d, "E": e}


def _cutoff1_case(rng):
    """Both corners cut from triangles of equal area, keeping equal pieces."""
    k = _doubled_area(rng)
    p = _unit(rng)
    upper = _cut_corner(rng, k, p)
    lower = _cut_corner(rng, k, p)
    lower = dict(zip(lower, _maybe_move(rng, tuple(lower.values()), 0.25)))
    return {**upper, **{n.lower(): v for n, v in lower.items()}}


def _abcde(asg):
    return tuple(asg[n] for n in "ABCDE"), tuple(asg[n] for n in "abcde")


@_statement(
    "cutoff1",
    "axiom",
    "BE(A,B,C) /\\ BE(a,b,c) /\\ BE(E,D,C) /\\ BE(e,d,c) /\\ ET(B,C,D,b,c,d) /\\ ET(A,C,E,a,c,e) ==> EF(A,B,D,E,a,b,d,e)",
)
class _Cutoff1:
    def generate(rng, trial):
        """ACE and ace share doubled area k; B, D (and b, d) cut corners of equal area."""
        return _cutoff1_case(rng)

    def hypotheses(asg):
        (A, B, C, D, E), (a, b, c, d, e) = _abcde(asg)
        return (
            between(A, B, C)
            and between(a, b, c)
            and between(E, D, C)
            and between(e, d, c)
            and ET(B, C, D, b, c, d)
            and ET(A, C, E, a, c, e)
        )

    def conclusion(asg):
        (A, B, C, D, E), (a, b, c, d, e) = _abcde(asg)
        return EF(A, B, D, E, a, b, d, e)


@_statement(
    "paste1",
    "axiom",
    "BE(A,B,C) /\\ BE(a,b,c) /\\ BE(E,D,C) /\\ BE(e,d,c) /\\ ET(B,C,D,b,c,d) /\\ EF(A,B,D,E,a,b,d,e) ==> ET(A,C,E,a,c,e)",
)
class _Paste1:
    def generate(rng, trial):
        """Same construction as cutoff1: equal corners plus equal remainders force equal wholes."""
        return _cutoff1_case(rng)

    def hypotheses(asg):
        (A, B, C, D, E), (a, b, c, d, e) = _abcde(asg)
        return (
            between(A, B, C)
            and between(a, b, c)
            and between(E, D, C)
            and between(e, d, c)
            and ET(B, C, D, b, c, d)
            and EF(A, B, D, E, a, b, d, e)
        )

    def conclusion(asg):
        (A, B, C, D, E), (a, b, c, d, e) = _abcde(asg)
        return ET(A, C, E, a, c, e)


def _convex_from_triangle(rng, b, d, e, k):
    """A such that ABDE is convex with doubled area k (k > area of BDE)."""
    x = _twice_area(b, d, e)
    o = _lerp(b, e, _unit(rng))
    kappa = (as_exact(k) - x) / x
    return o + (o - d).scale(kappa)


def _cutoff2_half(rng, k, t):
    """Convex ABDE of doubled area k, C on BD with doubled area(CDE) = t."""
    x = t + (as_exact(k) - t) * _unit(rng)
    b, d, e = _triangle_with_area(rng, x)
    a = _convex_from_triangle(rng, b, d, e, k)
    c = _lerp(b, d, 1 - t / x)
    pts = dict(zip("ABCDE", (a, b, c, d, e)))
    pts["M"] = line_intersection(a, d, b, e)
    return pts


def _cutoff2_case(rng):
    """Both quadrilaterals ABDE have doubled area k and lose corners of doubled area t."""
    k = as_exact(_doubled_area(rng))
    t = k * _unit(rng)
    upper = _cutoff2_half(rng, k, t)
    lower = _cutoff2_half(rng, k, t)
    lower = dict(zip(lower, _maybe_move(rng, tuple(lower.values()), 0.25)))
    return {**upper, **{n.lower(): v for n, v in lower.items()}}


@_statement(
    "cutoff2",
    "axiom",
    "BE(B,C,D) /\\ BE(b,c,d) /\\ ET(C,D,E,c,d,e) /\\ EF(A,B,D,E,a,b,d,e) ==> EF(A,B,C,E,a,b,c,e)",
)
class _Cutoff2:
    def generate(rng, trial):
        """BDE gets a random share x of the total; A completes a convex ABDE; C on BD cuts area t."""
        return _cutoff2_case(rng)

    def hypotheses(asg):
        (A, B, C, D, E), (a, b, c, d, e) = _abcde(asg)
        return between(B, C, D) and between(b, c, d) and ET(C, D, E, c, d, e) and EF(A, B, D, E, a, b, d, e)

    def conclusion(asg):
        (A, B, C, D, E), (a, b, c, d, e) = _abcde(asg)
        return EF(A, B, C, E, a, b, c, e)


@_statement(
    "paste2",
    "axiom",
    "BE(B,C,D) /\\ BE(b,c,d) /\\ ET(C,D,E,c,d,e) /\\ EF(A,B,C,E,a,b,c,e) /\\ BE(A,M,D) /\\ BE(B,M,E) "
    "/\\ BE(a,m,d) /\\ BE(b,m,e) ==> EF(A,B,D,E,a,b,d,e)",
)
class _Paste2:
    def generate(rng, trial):
        """As for cutoff2; M is where the diagonals of ABDE cross."""
        return _cutoff2_case(rng)

    def hypotheses(asg):
        (A, B, C, D, E), (a, b, c, d, e) = _abcde(asg)
        M, m = asg["M"], asg["m"]
        return (
            between(B, C, D)
            and between(b, c, d)
            and ET(C, D, E, c, d, e)
            and EF(A, B, C, E, a, b, c, e)
            and between(A, M, D)
            and between(B, M, E)
            and between(a, m, d)
            and between(b, m, e)
        )

    def conclusion(asg):
        (A, B, C, D, E), (a, b, c, d, e) = _abcde(asg)
        return EF(A, B, D, E, a, b, d, e)


def _paste3_half(rng, k, kappa, sign=None):
    """A, B, C with doubled area k; M on AB (endpoints with probability 1/8 each); D beyond M."""
    a, b = _two_points(rng)
    c = _apex(rng, a, b, k, sign)
    r = rng.random()
    if r < 0.125:
        m = a
    elif r < 0.25:
        m = b
    else:
        m = _lerp(a, b, _unit(rng))
    d = m + (m - c).scale(kappa)
    return {"A": a, "B": b, "C": c, "D": d, "M": m}


def _paste3_case(rng, kappa=None):
    k = _doubled_area(rng)
    if kappa is None:
        kappa = _pos(rng) / 4
    upper = _paste3_half(rng, k, kappa)
    lower = _paste3_half(rng, k, kappa)
    lower = dict(zip(lower, _maybe_move(rng, tuple(lower.values()), 0.25)))
    return {**upper, **{n.lower(): v for n, v in lower.items()}}


def _seg_or_end(a, m, b):
    return between(a, m, b) or a == m or m == b


@_statement(
    "paste3",
    "axiom",
    "ET(A,B,C,a,b,c) /\\ ET(A,B,D,a,b,d) /\\ BE(C,M,D) /\\ (BE(A,M,B) \\/ EQ(A,M) \\/ EQ(M,B)) "
    "/\\ BE(c,m,d) /\\ (BE(a,m,b) \\/ EQ(a,m) \\/ EQ(m,b)) ==> EF(A,C,B,D,a,c,b,d)",
)
class _Paste3:
    def generate(rng, trial):
        """ABC and abc share doubled area k; D = M + kappa (M - C) with the same kappa below."""
        return _paste3_case(rng)

    def hypotheses(asg):
        A, B, C, D, M = (asg[n] for n in "ABCDM")
        a, b, c, d, m = (asg[n] for n in "abcdm")
        return (
            ET(A, B, C, a, b, c)
            and ET(A, B, D, a, b, d)
            and between(C, M, D)
            and _seg_or_end(A, M, B)
            and between(c, m, d)
            and _seg_or_end(a, m, b)
        )

    def conclusion(asg):
        A, B, C, D = (asg[n] for n in "ABCD")
        a, b, c, d = (asg[n] for n in "abcd")
        return EF(A, C, B, D, a, c, b, d)


def _split_convex(rng, quad, share):
    """G on FL and H on KM with doubled area(FKHG) = share (FKML convex)."""
    f, k, m, l = quad
    whole = cross(k - f, m - f) + cross(m - f, l - f)
    target = share if whole.sign() > 0 else -share

    def signed(g, h):
        return cross(k - f, h - f) + cross(h - f, g - f)

    for _ in range(MAX_ATTEMPTS):
        g = _lerp(f, l, _unit(rng))
        s0, s1 = signed(g, k), signed(g, m)
        if s0 == s1:
            continue
        beta = (target - s0) / (s1 - s0)
        if 0 < beta < 1:
            return g, _lerp(k, m, beta)
    raise _Retry


@_statement(
    "paste4",
    "axiom",
    "EF(A,B,m,D,F,K,H,G) /\\ EF(D,B,e,C,G,H,M,L) /\\ BE(A,P,C) /\\ BE(B,P,D) /\\ BE(K,H,M) /\\ BE(F,G,L) "
    "/\\ BE(B,m,D) /\\ BE(B,e,C) /\\ BE(F,J,M) /\\ BE(K,J,L) ==> EF(A,B,C,D,F,K,M,L)",
)
class _Paste4:
    def generate(rng, trial):
        """ABCD convex; m on BD and e on BC make ABmD, DBeC triangles in disguise.

        FKML is a convex quadrilateral with the doubled area of ABCD, split
        by GH (G on FL, H on KM) so that FKHG has the doubled area of ABD;
        for a fixed G that area is linear in the position of H.
        """
        a, b, c, d = _convex_quad(rng, shuffle=False)
        x1 = _twice_area(a, b, d)
        x2 = _twice_area(d, b, c)
        fkml = _maybe_move(rng, _convex_quad(rng, x1 + x2, shuffle=False), 0.25)
        g, h = _split_convex(rng, fkml, x1)
        f, k, mm, l = fkml
        return {
            "A": a,
            "B": b,
            "C": c,
            "D": d,
            "P": line_intersection(a, c, b, d),
            "m": _lerp(b, d, _unit(rng)),
            "e": _lerp(b, c, _unit(rng)),
            "F": f,
            "K": k,
            "M": mm,
            "L": l,
            "G": g,
            "H": h,
            "J": line_intersection(f, mm, k, l),
        }

    def hypotheses(asg):
        A, B, C, D, P, m, e = (asg[n] for n in ("A", "B", "C", "D", "P", "m", "e"))
        F, G, H, J, K, L, M = (asg[n] for n in "FGHJKLM")
        return (
            EF(A, B, m, D, F, K, H, G)
            and EF(D, B, e, C, G, H, M, L)
            and between(A, P, C)
            and between(B, P, D)
            and between(K, H, M)
            and between(F, G, L)
            and between(B, m, D)
            and between(B, e, C)
            and between(F, J, M)
            and between(K, J, L)
        )

    def conclusion(asg):
        return EF(*(asg[n] for n in "ABCD"), *(asg[n] for n in "FKML"))


@_statement("deZolt1", "axiom", "BE(B,E,D) ==> ~ET(D,B,C,E,B,C)")
class _DeZolt1:
    def generate(rng, trial):
        """E strictly inside BD; C off the line."""
        b, d = _two_points(rng)
        return {"B": b, "D": d, "E": _lerp(b, d, _unit(rng)), "C": _pt_off(rng, b, d)}

    def hypotheses(asg):
        B, C, D, E = (asg[n] for n in "BCDE")
        return between(B, E, D) and not collinear(B, D, C)

    def conclusion(asg):
        B, C, D, E = (asg[n] for n in "BCDE")
        return not ET(D, B, C, E, B, C)


@_statement("deZolt2", "axiom", "TR(A,B,C) /\\ BE(B,E,A) /\\ BE(B,F,C) ==> ~ET(A,B,C,E,B,F)")
class _DeZolt2:
    def generate(rng, trial):
        """E inside BA and F inside BC."""
        a, b, c = _maybe_move(rng, _triangle(rng), 0.25)
        return {"A": a, "B": b, "C": c, "E": _lerp(b, a, _unit(rng)), "F": _lerp(b, c, _unit(rng))}

    def hypotheses(asg):
        A, B, C, E, F = (asg[n] for n in "ABCEF")
        return not collinear(A, B, C) and between(B, E, A) and between(B, F, C)

    def conclusion(asg):
        A, B, C, E, F = (asg[n] for n in "ABCEF")
        return not ET(A, B, C, E, B, F)


# -- rectangles ---------------------------------------------------------


def _rect(asg, w, h):
    return RectWH(asg[w], asg[h])


def _seg(length):
    return segment_of_length(length)


@_statement("ERproportion", "lemma", "ER((b,a),(c,d)) <=> b:c = d:a <=> b:d = c:a")
class _ERProportion:
    def generate(rng, trial):
        """Random sides; half the time d = ab/c so the rectangles are equal."""
        a, b, c = _length(rng), _length(rng), _length(rng)
        d = a * b / c if rng.random() < 0.5 else _length(rng)
        return {"a": a, "b": b, "c": c, "d": d}

    hypotheses = _true

    def conclusion(asg):
        a, b, c, d = (asg[n] for n in "abcd")
        er = equal_rectangles(RectWH(b, a), RectWH(c, d))
        p1 = proportion_holds(_seg(b), _seg(c), _seg(d), _seg(a))
        p2 = proportion_holds(_seg(b), _seg(d), _seg(c), _seg(a))
        return er == p1 == p2


@_statement("ERequivalence", "lemma", "equal rectangles are reflexive, symmetric and transitive")
class _ERequivalence:
    def generate(rng, trial):
        """Three rectangles; the second and third equal to the first or not, independently."""
        w1, h1 = _length(rng), _length(rng)
        out = {"w1": w1, "h1": h1}
        for i in (2, 3):
            h = _length(rng)
            out[f"h{i}"] = h
            out[f"w{i}"] = w1 * h1 / h if rng.random() < 0.7 else _length(rng)
        return out

    hypotheses = _true

    def conclusion(asg):
        r = [_rect(asg, f"w{i}", f"h{i}") for i in (1, 2, 3)]
        if not all(equal_rectangles(x, x) for x in r):
            return False
        for x in r:
            for y in r:
                if equal_rectangles(x, y) != equal_rectangles(y, x):
                    return False
                for z in r:
                    if equal_rectangles(x, y) and equal_rectangles(y, z) and not equal_rectangles(x, z):
                        return False
        return True


@_statement("ER1", "lemma", "ER((w,h),(h,w))")
class _ER1:
    def generate(rng, trial):
        return {"w": _length(rng), "h": _length(rng)}

    hypotheses = _true

    def conclusion(asg):
        r = _rect(asg, "w", "h")
        return equal_rectangles(r, r.transposed())


@_statement("ER2", "lemma", "ER((w1,h),(w2,h)) <=> w1 = w2")
class _ER2:
    def generate(rng, trial):
        w1 = _length(rng)
        w2 = w1 if rng.random() < 0.5 else _length(rng)
        return {"w1": w1, "w2": w2, "h": _length(rng)}

    hypotheses = _true

    def conclusion(asg):
        return equal_rectangles(_rect(asg, "w1", "h"), _rect(asg, "w2", "h")) == (asg["w1"] == asg["w2"])


@_statement("ER3", "lemma", "w1 < w2 /\\ h1 < h2 ==> ~ER((w1,h1),(w2,h2))")
class _ER3:
    def generate(rng, trial):
        w1, h1 = _length(rng), _length(rng)
        return {"w1": w1, "h1": h1, "w2": w1 + _length(rng), "h2": h1 + _length(rng)}

    def hypotheses(asg):
        return asg["w1"] < asg["w2"] and asg["h1"] < asg["h2"]

    def conclusion(asg):
        return not equal_rectangles(_rect(asg, "w1", "h1"), _rect(asg, "w2", "h2"))


def _er_cut_case(rng, trial=0):
    """Equal (w1,h1), (w2,h2) and equal pieces (c1,h1), (c2,h2) with ci < wi."""
    w1, h1, h2 = _length(rng), _length(rng), _length(rng)
    c1 = w1 * _unit(rng)
    return {"w1": w1, "h1": h1, "h2": h2, "w2": w1 * h1 / h2, "c1": c1, "c2": c1 * h1 / h2}


def _er_cut_hypotheses(asg):
    return (
        asg["c1"] < asg["w1"]
        and asg["c2"] < asg["w2"]
        and equal_rectangles(_rect(asg, "w1", "h1"), _rect(asg, "w2", "h2"))
        and equal_rectangles(_rect(asg, "c1", "h1"), _rect(asg, "c2", "h2"))
    )


@_statement("ER4", "lemma", "equal rectangles cut off from equal rectangles leave equal remainders")
class _ER4:
    generate = staticmethod(_er_cut_case)
    hypotheses = staticmethod(_er_cut_hypotheses)

    def conclusion(asg):
        w1, w2, c1, c2 = (asg[n] for n in ("w1", "w2", "c1", "c2"))
        return equal_rectangles(RectWH(w1 - c1, asg["h1"]), RectWH(w2 - c2, asg["h2"]))


@_statement("ER5", "lemma", "equal rectangles pasted onto equal rectangles give equal wholes")
class _ER5:
    generate = staticmethod(_er_cut_case)
    hypotheses = staticmethod(_er_cut_hypotheses)

    def conclusion(asg):
        w1, w2, c1, c2 = (asg[n] for n in ("w1", "w2", "c1", "c2"))
        return equal_rectangles(RectWH(w1 + c1, asg["h1"]), RectWH(w2 + c2, asg["h2"]))


# -- triangles ----------------------------------------------------------


@_statement("ETforward", "lemma", "ET(A,B,C,B,C,A)")
class _ETForward:
    def generate(rng, trial):
        return _names("A", _maybe_move(rng, _triangle(rng), 0.25))

    hypotheses = _true

    def conclusion(asg):
        a, b, c = _pick(asg, "A", 3)
        return ET(a, b, c, b, c, a)


@_statement("ETsixpermutations", "lemma", "ET(A,B,C,X,Y,Z) for all six orders XYZ of ABC")
class _ETSixPermutations:
    generate = _ETForward.generate
    hypotheses = _true

    def conclusion(asg):
        tri = _pick(asg, "A", 3)
        return all(ET(*tri, *_perm(tri, o)) for o in PERMS3)


@_statement("I.37", "lemma", "AD || BC ==> ET(A,B,C,D,B,C)")
class _I37:
    def generate(rng, trial):
        """D = A + t(C - B) for a nonzero rational t."""
        a, b, c = _triangle(rng)
        t = _rat(rng)
        if t == 0:
            raise _Retry
        return {"A": a, "B": b, "C": c, "D": a + (c - b).scale(t)}

    def hypotheses(asg):
        A, B, C, D = (asg[n] for n in "ABCD")
        return not collinear(A, B, C) and parallel(A, D, B, C, allow_coincident=False)

    def conclusion(asg):
        A, B, C, D = (asg[n] for n in "ABCD")
        return ET(A, B, C, D, B, C)


# -- quadrilaterals -----------------------------------------------------


def _realize(rng, w, h):
    """Corner points of a w-by-h rectangle in a random position.

    Only Pythagorean rotations are used, so coordinates stay in the field
    of the side lengths.
    """
    c, s = _rotation(rng)
    while not c.is_rational():
        c, s = _rotation(rng)
    flip = rng.random() < 0.5
    shift = _pt(rng)
    zero = as_exact(0)
    out = []
    for x, y in ((zero, zero), (w, zero), (w, h), (zero, h)):
        y = -y if flip else y
        out.append(Point(x * c - y * s, x * s + y * c) + shift)
    return tuple(out)


def _field_length(rng, root):
    """A positive length in Q(sqrt(root)): rational or a rational multiple of sqrt(root)."""
    q = as_exact(_pos(rng))
    return q if rng.random() < 0.5 else q * sqrt(as_exact(root))


def _equal_rect_pair(rng):
    root = rng.choice((2, 3, 5))
    w1, h1, h2 = (_field_length(rng, root) for _ in range(3))
    return _realize(rng, w1, h1), _realize(rng, w1 * h1 / h2, h2)


def _rect_hypothesis(asg):
    r1 = rect_of_points(*_pick(asg, "R", 4))
    r2 = rect_of_points(*_pick(asg, "S", 4))
    return equal_rectangles(r1, r2)


@_statement("halvesofrectangles", "lemma", "halves of equal rectangles are equal")
class _HalvesOfRectangles:
    def generate(rng, trial):
        r, s = _equal_rect_pair(rng)
        return {**_names("R", r), **_names("S", s)}

    hypotheses = staticmethod(_rect_hypothesis)

    def conclusion(asg):
        h1 = halves(_pick(asg, "R", 4))
        h2 = halves(_pick(asg, "S", 4))
        return all(equal_figures(x, y) for x in h1 for y in h2)


@_statement("equalrectanglesequalfigures", "lemma", "equal rectangles are equal quadrilaterals")
class _EqualRectanglesEqualFigures:
    generate = _HalvesOfRectangles.generate
    hypotheses = staticmethod(_rect_hypothesis)

    def conclusion(asg):
        return equal_figures(_pick(asg, "R", 4), _pick(asg, "S", 4))


@_statement("halveshelper", "lemma", "SPTQ cut by PQ into equal triangles cuts its rectangle into congruent halves")
class _HalvesHelper:
    def generate(rng, trial):
        """T is S reflected through an interior point of PQ."""
        s, p, q, t = _kite_half(rng)
        return {"S": s, "P": p, "T": t, "Q": q}

    def hypotheses(asg):
        S, P, T, Q = (asg[n] for n in "SPTQ")
        return isinstance(classify_quadrilateral((S, P, T, Q)), Convex) and ET(S, P, Q, T, P, Q)

    def conclusion(asg):
        S, P, T, Q = (asg[n] for n in "SPTQ")
        # the circumscribed rectangle whose long sides are parallel to PQ
        corners = circumscribed_rectangle_points((S, P, T, Q))[0]
        p1, p2, p3, p4 = corners
        r1 = rect_of_points(p1, p2, Q, P)
        r2 = rect_of_points(P, Q, p3, p4)
        return equal_rectangles(r1, r2) and r1.width == r2.width and r1.height == r2.height


@_statement("I.42-doubles", "lemma", "ACBD, acbd halved by AB, ab into equal triangles, ET(ABC,abc) ==> EF")
class _Doubles:
    def generate(rng, trial):
        """Like paste3 with kappa = 1, so each diagonal halves its quadrilateral."""
        return _paste3_case(rng, kappa=1)

    def hypotheses(asg):
        A, B, C, D, M = (asg[n] for n in "ABCDM")
        a, b, c, d, m = (asg[n] for n in "abcdm")
        return (
            ET(A, B, C, A, B, D)
            and ET(a, b, c, a, b, d)
            and ET(A, B, C, a, b, c)
            and between(C, M, D)
            and _seg_or_end(A, M, B)
            and between(c, m, d)
            and _seg_or_end(a, m, b)
        )

    conclusion = _Paste3.conclusion


@_statement("I.35", "lemma", "parallelograms on the same base and in the same parallels are equal")
class _I35:
    def generate(rng, trial):
        """ABCD and EBCF with AD, EF on one parallel to BC."""
        a, b, c = _triangle(rng)
        v = c - b
        e = a + v.scale(_rat(rng))
        return {"A": a, "B": b, "C": c, "D": a + v, "E": e, "F": e + v}

    def hypotheses(asg):
        A, B, C, D, E, F = (asg[n] for n in "ABCDEF")
        return (
            parallel(A, D, B, C, allow_coincident=False)
            and parallel(A, B, D, C, allow_coincident=False)
            and parallel(E, B, F, C, allow_coincident=False)
            and collinear(A, D, E)
            and collinear(A, D, F)
        )

    def conclusion(asg):
        return EF(*(asg[n] for n in "ABCD"), *(asg[n] for n in "EBCF"))


@_statement("I.43", "lemma", "the complements about the diameter of a parallelogram are equal")
class _I43:
    def generate(rng, trial):
        """K = A + t(C - A); the parallels through K cut the sides at E, G, H, F."""
        a, b, d = _maybe_move(rng, _triangle(rng), 0.25)
        u, v = b - a, d - a
        t = _unit(rng)
        return {
            "A": a,
            "B": b,
            "C": a + u + v,
            "D": d,
            "K": a + (u + v).scale(t),
            "E": a + u.scale(t),
            "G": b + v.scale(t),
            "H": a + v.scale(t),
            "F": d + u.scale(t),
        }

    def hypotheses(asg):
        A, B, C, D, E, F, G, H, K = (asg[n] for n in "ABCDEFGHK")
        return (
            parallel(A, B, D, C, allow_coincident=False)
            and parallel(A, D, B, C, allow_coincident=False)
            and between(A, K, C)
            and between(A, E, B)
            and between(B, G, C)
            and between(A, H, D)
            and between(D, F, C)
            and parallel(E, F, A, D)
            and collinear(E, K, F)
            and parallel(H, G, A, B)
            and collinear(H, K, G)
        )

    def conclusion(asg):
        return EF(*(asg[n] for n in "EBGK"), *(asg[n] for n in "HKFD"))


@_statement("paste5helper", "lemma", "every figure is equal to half its circumscribed rectangle")
class _Paste5Helper:
    def generate(rng, trial):
        r = rng.random()
        if r < 0.25:
            return _names("V", _triangle(rng))
        return _names("V", _quad(rng, kind="convex" if r < 0.65 else "really"))

    def hypotheses(asg):
        return True

    def conclusion(asg):
        fig = tuple(v for _, v in sorted(asg.items()))
        if len(fig) == 3:
            fig = Triangle(*fig)
        corners = circumscribed_rectangle_points(fig)[0]
        return all(equal_figures(fig, half) for half in halves(corners))


@_statement("addequals", "lemma", "ADB = FGHK and CBD = GLMH ==> ABCD = FLMK (Euclid I.45)")
class _AddEquals:
    def generate(rng, trial):
        """FLMK a parallelogram of the right total area; GH parallel to FK at the right fraction.

        The triangles ADB and CBD are written as the quadrilaterals ADEB and
        CBED with E strictly inside BD.
        """
        a, b, c, d = _convex_quad(rng, shuffle=False)
        x1, x2 = _twice_area(a, d, b), _twice_area(c, b, d)
        f = _pt(rng)
        u, w = _pt(rng), _pt(rng)
        h = cross(u, w)
        if h.sign() == 0:
            raise _Retry
        # doubled area of a parallelogram is twice |cross|
        w = w.scale((x1 + x2) / (2 * abs(h)))
        alpha = x1 / (x1 + x2)
        out = {"A": a, "B": b, "C": c, "D": d, "E": _lerp(b, d, _unit(rng))}
        out.update({"F": f, "L": f + u, "M": f + u + w, "K": f + w, "G": f + u.scale(alpha), "H": f + w + u.scale(alpha)})
        return out

    def hypotheses(asg):
        A, B, C, D, E, F, G, H, K, L, M = (asg[n] for n in "ABCDEFGHKLM")
        return (
            isinstance(classify_quadrilateral((A, B, C, D)), Convex)
            and between(B, E, D)
            and parallel(F, L, K, M, allow_coincident=False)
            and parallel(F, K, L, M, allow_coincident=False)
            and between(F, G, L)
            and between(K, H, M)
            and parallel(G, H, F, K)
            and EF(A, D, E, B, F, G, H, K)
            and EF(C, B, E, D, G, L, M, H)
        )

    def conclusion(asg):
        return EF(*(asg[n] for n in "ABCD"), *(asg[n] for n in "FLMK"))


@_statement("parallelpasch", "lemma", "A beyond B on EB of parallelogram EBGF ==> AF meets BG")
class _ParallelPasch:
    def generate(rng, trial):
        e, b, f = _triangle(rng)
        g = b + (f - e)
        a = b + (b - e).scale(_pos(rng))
        return {"A": a, "B": b, "E": e, "F": f, "G": g}

    def hypotheses(asg):
        A, B, E, F, G = (asg[n] for n in "ABEFG")
        return (
            parallel(E, B, F, G, allow_coincident=False)
            and parallel(B, G, E, F, allow_coincident=False)
            and between(E, B, A)
        )

    def conclusion(asg):
        A, B, F, G = (asg[n] for n in "ABFG")
        x = line_intersection(A, F, B, G)
        return between(A, x, F) and between(B, x, G)


# -- area ---------------------------------------------------------------


_KINDS = ("convex", "really")


def _unit_segment(rng):
    u, v = _two_points(rng)
    return {"U": u, "V": v}


@_statement("area_completeness", "lemma", "EF(Q1,Q2) <=> equal area widths <=> equal shoelace areas")
class _AreaCompleteness:
    def generate(rng, trial):
        """Kind pair cycles with the trial index; equal area half the time."""
        k1, k2 = _KINDS[trial % 2], _KINDS[(trial // 2) % 2]
        a1 = _doubled_area(rng)
        a2 = a1 if rng.random() < 0.5 else _doubled_area(rng)
        q1 = _quad(rng, a1, k1)
        q2 = _maybe_move(rng, _quad(rng, a2, k2), 0.25)
        return {**_names("P", q1), **_names("Q", q2), **_unit_segment(rng)}

    def hypotheses(asg):
        valid = (Convex, ReallyTriangle)
        return (
            isinstance(classify_quadrilateral(_pick(asg, "P", 4)), valid)
            and isinstance(classify_quadrilateral(_pick(asg, "Q", 4)), valid)
            and asg["U"] != asg["V"]
        )

    def conclusion(asg):
        q1, q2 = _pick(asg, "P", 4), _pick(asg, "Q", 4)
        unit = (asg["U"], asg["V"])
        ef = equal_figures(q1, q2)
        widths = area(q1, unit).width == area(q2, unit).width
        shoelace = oracle_area(q1) == oracle_area(q2)
        return ef == widths == shoelace


_ADDITIVITY_CASES = ("triangle+triangle", "triangle+quadrilateral", "quadrilateral+triangle", "quadrilateral+quadrilateral")


def _additivity_case(rng, case):
    """(whole, first part, second part) as vertex tuples."""
    if case == 0:
        if rng.random() < 0.5:
            a, b, c, d = _convex_quad(rng, shuffle=False)
        else:
            # B is the straight vertex, so both parts are genuine triangles
            a, b, c, d = _really_triangle_quad(rng, shuffle=False)
        return (a, b, c, d), (a, b, d), (b, c, d)
    if case in (1, 2):
        a, b, d, e = _convex_quad(rng, shuffle=False)
        c = _lerp(b, d, _unit(rng))
        tri, quad = (a, b, c), (a, c, d, e)
        return ((a, b, d, e), tri, quad) if case == 1 else ((a, b, d, e), quad, tri)
    a, c, d, f = _convex_quad(rng, shuffle=False)
    b = _lerp(a, c, _unit(rng))
    e = _lerp(d, f, _unit(rng))
    return (a, c, d, f), (a, b, e, f), (b, c, d, e)


@_statement("area_additivity", "lemma", "area(whole) = area(part1) + area(part2) for the four ways to compose")
class _AreaAdditivity:
    def generate(rng, trial):
        """The composition case cycles with the trial index."""
        case = trial % 4
        whole, g, d = _additivity_case(rng, case)
        return {
            "case": as_exact(case),
            **_names("X", whole),
            **_names("G", g),
            **_names("D", d),
            **_unit_segment(rng),
        }

    def hypotheses(asg):
        whole = _pick(asg, "X", 4)
        g = _pick(asg, "G", 4 if "G3" in asg else 3)
        d = _pick(asg, "D", 4 if "D3" in asg else 3)
        kind = classify_quadrilateral(whole)
        if not isinstance(kind, (Convex, ReallyTriangle)):
            return False
        for part in (g, d):
            if len(part) == 3 and collinear(*part):
                return False
            if len(part) == 4 and not isinstance(classify_quadrilateral(part), (Convex, ReallyTriangle)):
                return False
        # the parts share an edge and their vertices are vertices or side points of the whole
        shared = [p for p in g if any(p == q for q in d)]
        return len(shared) == 2

    def conclusion(asg):
        unit = (asg["U"], asg["V"])
        whole = _pick(asg, "X", 4)
        g = _pick(asg, "G", 4 if "G3" in asg else 3)
        d = _pick(asg, "D", 4 if "D3" in asg else 3)
        g = Triangle(*g) if len(g) == 3 else g
        d = Triangle(*d) if len(d) == 3 else d
        return area(whole, unit).width == area_sum(area(g, unit), area(d, unit)).width


# -- proportion and the Kupffer configuration ---------------------------


def _random_segment(rng):
    p, q = _two_points(rng)
    return Segment(p, q)


def _segment_with_length(rng, length):
    """A segment from a random point in a random direction with the given length."""
    p = _pt(rng)
    d = _pt(rng)
    if d.x.sign() == 0 and d.y.sign() == 0:
        raise _Retry
    return Segment(p, p + d.scale(length / sqrt(dot(d, d))))


def _proportional_four(rng):
    """Segments a, b, p, q with a:b = p:q."""
    a, b, p = (_random_segment(rng) for _ in range(3))
    q = _segment_with_length(rng, b.length() * p.length() / a.length())
    return a, b, p, q


def _segs(asg, *names):
    return tuple(Segment(asg[n + "0"], asg[n + "1"]) for n in names)


def _seg_names(**segs):
    out = {}
    for name, s in segs.items():
        out[name + "0"] = s.p
        out[name + "1"] = s.q
    return out


@_statement("interchange", "lemma", "a:b = p:q ==> a:p = b:q")
class _Interchange:
    def generate(rng, trial):
        a, b, p, q = _proportional_four(rng)
        return _seg_names(a=a, b=b, p=p, q=q)

    def hypotheses(asg):
        return proportion_holds(*_segs(asg, "a", "b", "p", "q"))

    def conclusion(asg):
        return check_interchange(*_segs(asg, "a", "b", "p", "q"))


@_statement("proportion_flip", "lemma", "pq:rs = PQ:RS <=> rs:pq = RS:PQ")
class _ProportionFlip:
    def generate(rng, trial):
        """Proportional half the time, four random segments otherwise."""
        if rng.random() < 0.5:
            a, b, p, q = _proportional_four(rng)
        else:
            a, b, p, q = (_random_segment(rng) for _ in range(4))
        return _seg_names(a=a, b=b, p=p, q=q)

    hypotheses = _true

    def conclusion(asg):
        a, b, p, q = _segs(asg, "a", "b", "p", "q")
        return proportion_holds(a, b, p, q) == proportion_holds(b, a, q, p)


@_statement("proportion_symmetric", "lemma", "a:b = c:d ==> c:d = a:b")
class _ProportionSymmetric:
    generate = _Interchange.generate
    hypotheses = _Interchange.hypotheses

    def conclusion(asg):
        a, b, p, q = _segs(asg, "a", "b", "p", "q")
        return proportion_holds(p, q, a, b)


@_statement("proportion_transitive", "lemma", "a:b = c:d /\\ c:d = e:f ==> a:b = e:f")
class _ProportionTransitive:
    def generate(rng, trial):
        a, b, c, d = _proportional_four(rng)
        e = _random_segment(rng)
        f = _segment_with_length(rng, e.length() * d.length() / c.length())
        return _seg_names(a=a, b=b, c=c, d=d, e=e, f=f)

    def hypotheses(asg):
        a, b, c, d, e, f = _segs(asg, *"abcdef")
        return proportion_holds(a, b, c, d) and proportion_holds(c, d, e, f)

    def conclusion(asg):
        a, b, c, d, e, f = _segs(asg, *"abcdef")
        return proportion_holds(a, b, e, f)


@_statement("fourth_proportional_unique", "lemma", "a:b = c:d /\\ a:b = c:x ==> |x| = |d|")
class _FourthUnique:
    def generate(rng, trial):
        """d built by arithmetic; x is the constructed fourth proportional."""
        a, b, c, d = _proportional_four(rng)
        return _seg_names(a=a, b=b, c=c, d=d)

    def hypotheses(asg):
        return proportion_holds(*_segs(asg, "a", "b", "c", "d"))

    def conclusion(asg):
        a, b, c, d = _segs(asg, "a", "b", "c", "d")
        x = fourth_proportional(a, b, c)
        return proportion_holds(a, b, c, segment_of_length(x)) and x * x == d.squared_length()


@_statement("fundamental", "lemma", "parallels bc, b'c' across the angle at A ==> AB:Ab' = AC:Ac'")
class _Fundamental:
    def generate(rng, trial):
        """b' = A + k(B - A), c' = A + k(C - A) for a positive rational k != 1."""
        a, b, c = _triangle(rng)
        k = _pos(rng)
        if k == 1:
            raise _Retry
        return {"A": a, "B": b, "C": c, "b": _lerp(a, b, k), "c": _lerp(a, c, k)}

    def hypotheses(asg):
        A, B, C, b, c = (asg[n] for n in ("A", "B", "C", "b", "c"))
        return (
            not collinear(A, B, C)
            and collinear(A, B, b)
            and collinear(A, C, c)
            and dot(b - A, B - A).sign() > 0
            and dot(c - A, C - A).sign() > 0
            and parallel(B, C, b, c)
        )

    def conclusion(asg):
        return check_fundamental(*(asg[n] for n in ("A", "B", "C", "b", "c")))


@_statement("pascal_kupffer", "lemma", "right-angle Pascal: AB' || BA' /\\ BC' || CB' ==> AC' || CA'")
class _PascalKupffer:
    def generate(rng, trial):
        """A = O + a u, A' = O + a' u^perp with a a' = b b' = c c' = constant."""
        o = _pt(rng)
        if rng.random() < 0.3:
            u = Point(as_exact(1), sqrt(as_exact(rng.choice((2, 3, 5)))))
        else:
            u = _pt(rng)
        if u.x.sign() == 0 and u.y.sign() == 0:
            raise _Retry
        w = u.perp()
        sign = rng.choice((1, -1))
        coeffs = set()
        while len(coeffs) < 3:
            coeffs.add(sign * _pos(rng))
        prod = sign * _pos(rng)
        names = {}
        for (n1, n2), t in zip((("A", "A'"), ("B", "B'"), ("C", "C'")), sorted(coeffs)):
            names[n1] = o + u.scale(t)
            names[n2] = o + w.scale(prod / t)
        return {"O": o, **names}

    def hypotheses(asg):
        A, B, C, A2, B2, C2, O = (asg[n] for n in ("A", "B", "C", "A'", "B'", "C'", "O"))
        return (
            collinear(O, A, B)
            and collinear(O, A, C)
            and collinear(O, A2, B2)
            and collinear(O, A2, C2)
            and right_angle(A, O, A2)
            and parallel(A, B2, B, A2)
            and parallel(B, C2, C, B2)
        )

    def conclusion(asg):
        return pascal_kupffer_check(*(asg[n] for n in ("O", "A", "B", "C", "A'", "B'", "C'")))


@_statement("cyclic_quad", "lemma", "convex ABCD, diagonals at O, angle OAB = angle ODC ==> concyclic")
class _CyclicQuad:
    def generate(rng, trial):
        """O inside AC, B random, D on ray BO beyond O at |OD| = |OA| |OC| / |OB|."""
        a, c = _two_points(rng)
        t = _unit(rng)
        o = _lerp(a, c, t)
        b = _pt_off(rng, a, c)
        s = t * (1 - t) * sqdist(a, c) / sqdist(o, b)
        return {"A": a, "B": b, "C": c, "D": o + (o - b).scale(s)}

    def hypotheses(asg):
        A, B, C, D = (asg[n] for n in "ABCD")
        o = line_intersection(A, C, B, D)
        return between(A, o, C) and between(B, o, D) and angles_equal(o, A, B, o, D, C)

    def conclusion(asg):
        return cyclic_quad_check(*(asg[n] for n in "ABCD"))


@_statement("orthocenter_concurrence", "lemma", "the three altitudes meet at the orthocenter")
class _Orthocenter:
    def generate(rng, trial):
        return dict(zip("ABC", _maybe_move(rng, _triangle(rng), 0.25)))

    def hypotheses(asg):
        return not collinear(*(asg[n] for n in "ABC"))

    def conclusion(asg):
        A, B, C = (asg[n] for n in "ABC")
        h = orthocenter(A, B, C)
        return on_altitude(h, A, B, C) and on_altitude(h, B, C, A) and on_altitude(h, C, A, B)


def _right_triangle(rng):
    """(A, B, C) with the right angle at B."""
    b, a = _two_points(rng)
    c = b + (a - b).perp().scale(_rat(rng))
    if c == b:
        raise _Retry
    return a, b, c


def _scaled_copy(rng, tri):
    """A similar copy: random isometry after scaling by a possibly irrational factor."""
    k = _length(rng)
    move = _rigid_motion(rng)
    o = tri[1]
    return tuple(move(o + (p - o).scale(k)) for p in tri)


@_statement("proportional_legs", "lemma", "right triangles with proportional legs have equal angles")
class _ProportionalLegs:
    def generate(rng, trial):
        t1 = _right_triangle(rng)
        return {**dict(zip("ABC", t1)), **dict(zip("abc", _scaled_copy(rng, t1)))}

    def hypotheses(asg):
        A, B, C, a, b, c = (asg[n] for n in "ABCabc")
        return (
            right_angle(A, B, C)
            and right_angle(a, b, c)
            and proportion_holds(Segment(A, B), Segment(B, C), Segment(a, b), Segment(b, c))
        )

    def conclusion(asg):
        A, B, C, a, b, c = (asg[n] for n in "ABCabc")
        return angles_equal(B, A, C, b, a, c) and angles_equal(B, C, A, b, c, a)


@_statement("hypotenuse_leg", "lemma", "right triangles with hypotenuse and a leg proportional have equal angles")
class _HypotenuseLeg:
    generate = _ProportionalLegs.generate

    def hypotheses(asg):
        A, B, C, a, b, c = (asg[n] for n in "ABCabc")
        return (
            right_angle(A, B, C)
            and right_angle(a, b, c)
            and proportion_holds(Segment(A, C), Segment(A, B), Segment(a, c), Segment(a, b))
        )

    conclusion = _ProportionalLegs.conclusion


# -- running ------------------------------------------------------------


def statement_ids():
    return list(STATEMENTS)


def trial_rng(seed, name, trial):
    digest = hashlib.sha256(f"{seed}:{name}:{trial}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _checked(fn, asg):
    try:
        return bool(fn(asg))
    except DomainError:
        return False


def generate_case(name, seed, trial):
    """A hypothesis-satisfying assignment, or None after MAX_ATTEMPTS draws."""
    st = STATEMENTS[name]
    rng = trial_rng(seed, name, trial)
    for _ in range(MAX_ATTEMPTS):
        try:
            asg = st.generate(rng, trial)
        except (_Retry, DomainError, ZeroDivisionError):
            continue
        if _checked(st.hypotheses, asg):
            return asg
    return None


@dataclass
class TrialReport:
    statement: str
    seed: int
    trial: int
    verdict: str
    witness: dict | None = None

    def to_json(self):
        rec = {"statement": self.statement, "seed": self.seed, "trial": self.trial, "verdict": self.verdict}
        if self.witness is not None:
            rec["witness"] = self.witness
        return json.dumps(rec, sort_keys=True)

    @classmethod
    def from_json(cls, line):
        rec = json.loads(line)
        return cls(rec["statement"], rec["seed"], rec["trial"], rec["verdict"], rec.get("witness"))


def encode_assignment(asg):
    out = {}
    for name, v in asg.items():
        if isinstance(v, Point):
            out[name] = [v.x.to_literal(), v.y.to_literal()]
        else:
            out[name] = as_exact(v).to_literal()
    return out


def decode_assignment(data):
    out = {}
    for name, v in data.items():
        if isinstance(v, list):
            out[name] = Point(as_exact(v[0]), as_exact(v[1]))
        else:
            out[name] = as_exact(v)
    return out


def run_trial(name, seed, trial):
    asg = generate_case(name, seed, trial)
    if asg is None:
        return TrialReport(name, seed, trial, UNCONSTRUCTIBLE)
    if _checked(STATEMENTS[name].conclusion, asg):
        return TrialReport(name, seed, trial, HOLDS)
    return TrialReport(name, seed, trial, VIOLATED, encode_assignment(asg))


def recheck(report):
    """Re-evaluate a serialized VIOLATED witness; True if it is still a counterexample."""
    if isinstance(report, str):
        report = TrialReport.from_json(report)
    st = STATEMENTS[report.statement]
    asg = decode_assignment(report.witness)
    return _checked(st.hypotheses, asg) and not _checked(st.conclusion, asg)


def _run_chunk(args):
    name, seed, trials = args
    return [run_trial(name, seed, t) for t in trials]


def verify(name, trials, seed, workers=1):
    """Reports for trials 0..trials-1, ordered by trial index."""
    if name not in STATEMENTS:
        raise KeyError(f"unknown statement {name!r}")
    if trials < 1:
        raise ValueError("trials must be positive")
    if workers <= 1:
        return [run_trial(name, seed, t) for t in range(trials)]
    chunks = [(name, seed, range(i, trials, workers)) for i in range(workers)]
    with ProcessPoolExecutor(workers) as pool:
        parts = list(pool.map(_run_chunk, chunks))
    return sorted((r for part in parts for r in part), key=lambda r: r.trial)


@dataclass
class SuiteReport:
    seed: int
    trials: int
    reports: dict = field(default_factory=dict)

    def counts(self, name):
        out = {HOLDS: 0, UNCONSTRUCTIBLE: 0, VIOLATED: 0}
        for r in self.reports[name]:
            out[r.verdict] += 1
        return out

    @property
    def violations(self):
        return [r for rs in self.reports.values() for r in rs if r.verdict == VIOLATED]

    @property
    def ok(self):
        return not self.violations

    def lines(self):
        for rs in self.reports.values():
            for r in rs:
                yield r.to_json()

    def summary(self):
        width = max(len(n) for n in self.reports)
        rows = []
        for name in self.reports:
            c = self.counts(name)
            rows.append(f"{name:<{width}}  holds {c[HOLDS]:>6}  unconstructible {c[UNCONSTRUCTIBLE]:>4}  violated {c[VIOLATED]:>4}")
        rows.append(f"{len(self.violations)} violation(s)")
        return "\n".join(rows)


def verify_all(trials_per_statement, seed, statements=None, workers=1):
    names = list(STATEMENTS) if statements is None else list(statements)
    for n in names:
        if n not in STATEMENTS:
            raise KeyError(f"unknown statement {n!r}")
    suite = SuiteReport(seed, trials_per_statement)
    for n in names:
        suite.reports[n] = verify(n, trials_per_statement, seed, workers)
    return suite
