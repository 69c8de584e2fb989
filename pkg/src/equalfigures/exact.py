"""Exact constructible numbers.

An :class:`ExactNumber` is a node in a directed acyclic expression graph over
rational leaves and the operations add, sub, mul, div and sqrt.  Signs are
decided exactly:

* values that are rational are kept as rationals (``gmpy2.mpq``) and compared
  directly;
* values of the form ``a + b*sqrt(s)`` (``a``, ``b`` rational, ``s`` a
  non-square positive integer) are kept in that closed form.  Such values
  form a field for each ``s``, so field operations within one ``s`` stay
  closed, and their signs follow from comparing ``a^2`` with ``b^2 s``.
  Sums of two terms ``r1*sqrt(s1) + r2*sqrt(s2)`` are signed the same way;
* everything else is signed by interval refinement: the DAG is evaluated with
  dyadic fixed-point intervals at 64 fractional bits, doubling each round,
  until the interval excludes zero or shrinks below a BFMSS root separation
  bound, in which case the value is exactly zero.

Values are observationally immutable.  The interval cache is only ever
replaced by a narrower certified interval, under a module lock, so sharing
values across threads is safe.
"""

from __future__ import annotations

import contextlib
import contextvars
import re
import threading
import weakref
from fractions import Fraction

import gmpy2
from gmpy2 import mpq, mpz

__all__ = [
    "ExactNumber",
    "ConstructionError",
    "DomainError",
    "from_rational",
    "sqrt",
    "sign",
    "arith",
    "as_exact",
    "parse",
    "general_path_only",
    "START_PRECISION",
]

START_PRECISION = 64


class ConstructionError(ValueError):
    """Raised when a value cannot be constructed (e.g. zero denominator)."""


class DomainError(ValueError):
    """Raised when an operation is applied outside its domain."""


_MPQ = type(mpq(0))
_MPZ = type(mpz(0))

_fast_paths = contextvars.ContextVar("equalfigures_fast_paths", default=True)
_cache_lock = threading.Lock()


@contextlib.contextmanager
def general_path_only():
    """Build values without the rational/quadratic collapse.

    Inside the block, every operation produces a structural node and signs
    go through interval refinement.  Used to cross-check the fast paths.
    """
    token = _fast_paths.set(False)
    try:
        yield
    finally:
        _fast_paths.reset(token)


class ExactNumber:
    __slots__ = (
        "_op",
        "_args",
        "_rat",
        "_quad",
        "_sign",
        "_approx",
        "_sep",
        "__weakref__",
    )

    def __init__(self, op, args, rat=None, quad=None):
        self._op = op
        self._args = args
        self._rat = rat
        self._quad = quad
        self._sign = None
        self._approx = None
        self._sep = None

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        return _add(self, as_exact(other))

    def __radd__(self, other):
        return _add(as_exact(other), self)

    def __sub__(self, other):
        return _sub(self, as_exact(other))

    def __rsub__(self, other):
        return _sub(as_exact(other), self)

    def __mul__(self, other):
        return _mul(self, as_exact(other))

    def __rmul__(self, other):
        return _mul(as_exact(other), self)

    def __truediv__(self, other):
        return _div(self, as_exact(other))

    def __rtruediv__(self, other):
        return _div(as_exact(other), self)

    def __neg__(self):
        return _neg(self)

    def __pos__(self):
        return self

    def __abs__(self):
        return _neg(self) if self.sign() < 0 else self

    # -- comparison -----------------------------------------------------

    def _cmp(self, other):
        other = as_exact(other)
        if self is other:
            return 0
        if self._rat is not None and other._rat is not None:
            return _sgn(self._rat - other._rat)
        return _sub(self, other).sign()

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __ne__(self, other):
        try:
            return self._cmp(other) != 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    __hash__ = None

    def __bool__(self):
        return self.sign() != 0

    # -- inspection -----------------------------------------------------

    def sign(self):
        """Exact sign of the value: -1, 0 or +1."""
        s = self._sign
        if s is None:
            s = _compute_sign(self)
            self._sign = s
        return s

    def is_rational(self):
        return self._rat is not None

    def as_fraction(self):
        """The value as a :class:`fractions.Fraction`; only for rational values."""
        if self._rat is None:
            raise DomainError("value is not known to be rational")
        return Fraction(int(self._rat.numerator), int(self._rat.denominator))

    def interval(self, precision=START_PRECISION):
        """A certified enclosure ``(lo, hi)`` as Fractions."""
        iv = _interval(self, precision)
        if iv is None:
            raise DomainError("interval evaluation failed at this precision")
        lo, hi = iv
        return Fraction(int(lo), 1 << precision), Fraction(int(hi), 1 << precision)

    def cached_width(self):
        """Width of the cached certified interval, or None if nothing is cached."""
        a = self._approx
        if a is None:
            return None
        p, lo, hi = a
        return Fraction(int(hi - lo), 1 << p)

    def __float__(self):
        if self._rat is not None:
            return float(self._rat)
        lo, hi = self.interval(START_PRECISION)
        return float((lo + hi) / 2)

    def approx(self, digits=6):
        """Decimal string of the interval midpoint.  Display only."""
        if self._rat is not None:
            mid = Fraction(int(self._rat.numerator), int(self._rat.denominator))
        else:
            lo, hi = self.interval(max(START_PRECISION, 4 * digits + 16))
            mid = (lo + hi) / 2
        return f"{float(mid):.{digits}f}"

    def to_literal(self):
        """Prefix-term text form, e.g. ``(div 1 (sqrt 2))``."""
        return _to_literal(self)

    def __str__(self):
        return self.to_literal()

    def __repr__(self):
        return f"ExactNumber({self.to_literal()})"

    def __reduce__(self):
        return (parse, (self.to_literal(),))


# ---------------------------------------------------------------------------
# construction


def _sgn(q):
    return (q > 0) - (q < 0)


def _leaf(q):
    return ExactNumber("rat", (), rat=q)


_ZERO = _leaf(mpq(0))
_ONE = _leaf(mpq(1))
_sqrt_intern = weakref.WeakValueDictionary()


def as_exact(value):
    """Coerce int / Fraction / mpq / ExactNumber into an ExactNumber."""
    if isinstance(value, ExactNumber):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, int):
        return _leaf(mpq(value))
    if isinstance(value, Fraction):
        return _leaf(mpq(value.numerator, value.denominator))
    if isinstance(value, (_MPQ, _MPZ)):
        return _leaf(mpq(value))
    if isinstance(value, str):
        return parse(value)
    raise TypeError(f"cannot make an exact number from {type(value).__name__}")


def from_rational(numerator, denominator=1):
    """The exact rational ``numerator/denominator`` in lowest terms."""
    if int(denominator) == 0:
        raise ConstructionError("zero denominator")
    return _leaf(mpq(int(numerator), int(denominator)))


def _radical(s):
    """The node sqrt(s) for a positive non-square integer s (interned)."""
    node = _sqrt_intern.get(("r", s))
    if node is None:
        node = ExactNumber("sqrt", (_leaf(mpq(s)),), quad=(mpq(0), mpq(1), s))
        _sqrt_intern[("r", s)] = node
    return node


_SMALL_SQUARES = [p * p for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)]


def _make_quad(a, b, s):
    """Canonical node for a + b*sqrt(s); s >= 1 integer."""
    if b == 0 or s == 1:
        return _leaf(a + b)
    if gmpy2.is_square(s):
        return _leaf(a + b * gmpy2.isqrt(s))
    s = mpz(s)
    for sq in _SMALL_SQUARES:
        while s % sq == 0:
            s //= sq
            b *= gmpy2.isqrt(sq)
    if s == 1:
        return _leaf(a + b)
    rad = _radical(s)
    mono = rad if b == 1 else ExactNumber("mul", (_leaf(b), rad), quad=(mpq(0), b, s))
    if a == 0:
        return mono
    return ExactNumber("add", (_leaf(a), mono), quad=(a, b, s))


def _closed(x):
    """(a, b, s) with value a + b*sqrt(s), or None for general nodes."""
    if x._rat is not None:
        return (x._rat, mpq(0), 1)
    return x._quad


def _align(ca, cb):
    """Rewrite two closed forms over a common radicand, or None."""
    (a1, b1, s1), (a2, b2, s2) = ca, cb
    if s1 == s2:
        return s1, ca, cb
    if b2 == 0:
        return s1, ca, (a2, b2, s1)
    if b1 == 0:
        return s2, (a1, b1, s2), cb
    prod = s1 * s2
    if gmpy2.is_square(prod):
        # sqrt(s2) = (sqrt(s1 s2) / s1) sqrt(s1)
        return s1, ca, (a2, b2 * gmpy2.isqrt(prod) / s1, s1)
    return None


def _is_monomial(c):
    return c is not None and c[0] == 0


def _add(a, b):
    if _fast_paths.get():
        if a._rat is not None and b._rat is not None:
            return _leaf(a._rat + b._rat)
        ca, cb = _closed(a), _closed(b)
        if ca is not None and cb is not None:
            al = _align(ca, cb)
            if al is not None:
                s, (a1, b1, _), (a2, b2, _) = al
                return _make_quad(a1 + a2, b1 + b2, s)
    return ExactNumber("add", (a, b))


def _neg(a):
    if _fast_paths.get():
        c = _closed(a)
        if c is not None:
            return _make_quad(-c[0], -c[1], c[2])
    return _mul(_leaf(mpq(-1)), a)


def _sub(a, b):
    if _fast_paths.get():
        if a._rat is not None and b._rat is not None:
            return _leaf(a._rat - b._rat)
        ca, cb = _closed(a), _closed(b)
        if ca is not None and cb is not None and _align(ca, cb) is not None:
            return _add(a, _neg(b))
    return ExactNumber("sub", (a, b))


def _mul(a, b):
    if _fast_paths.get():
        if a._rat is not None and b._rat is not None:
            return _leaf(a._rat * b._rat)
        ca, cb = _closed(a), _closed(b)
        if ca is not None and cb is not None:
            al = _align(ca, cb)
            if al is not None:
                s, (a1, b1, _), (a2, b2, _) = al
                return _make_quad(a1 * a2 + b1 * b2 * s, a1 * b2 + a2 * b1, s)
            if ca[0] == 0 and cb[0] == 0:
                (_, r1, s1), (_, r2, s2) = ca, cb
                g = gmpy2.gcd(s1, s2)
                return _make_quad(mpq(0), r1 * r2 * g, (s1 // g) * (s2 // g))
        if (ca is not None and ca[0] == 0 and ca[1] == 0) or (cb is not None and cb[0] == 0 and cb[1] == 0):
            return _ZERO
    return ExactNumber("mul", (a, b))


def _div(a, b):
    if b.sign() == 0:
        raise DomainError("division by zero")
    if _fast_paths.get():
        if a._rat is not None and b._rat is not None:
            return _leaf(a._rat / b._rat)
        ca, cb = _closed(a), _closed(b)
        if ca is not None and cb is not None:
            al = _align(ca, cb)
            if al is not None:
                # multiply through by the conjugate of the divisor
                s, (a1, b1, _), (a2, b2, _) = al
                n = a2 * a2 - b2 * b2 * s
                return _make_quad((a1 * a2 - b1 * b2 * s) / n, (b1 * a2 - a1 * b2) / n, s)
            if ca[0] == 0 and cb[0] == 0:
                (_, r1, s1), (_, r2, s2) = ca, cb
                # r1 sqrt(s1) / (r2 sqrt(s2)) = (r1 / (r2 s2)) sqrt(s1 s2)
                g = gmpy2.gcd(s1, s2)
                return _make_quad(mpq(0), r1 * g / (r2 * s2), (s1 // g) * (s2 // g))
    return ExactNumber("div", (a, b))


def sqrt(a):
    """Exact nonnegative square root; negative operands are a domain error."""
    a = as_exact(a)
    sg = a.sign()
    if sg < 0:
        raise DomainError("square root of a negative number")
    if sg == 0:
        return _ZERO
    if _fast_paths.get() and a._rat is not None:
        q = a._rat
        n, d = mpz(q.numerator), mpz(q.denominator)
        # sqrt(n/d) = sqrt(n*d)/d
        return _make_quad(mpq(0), mpq(1, d), n * d)
    key = ("e", id(a))
    node = _sqrt_intern.get(key)
    if node is None or node._args[0] is not a:
        node = ExactNumber("sqrt", (a,))
        _sqrt_intern[key] = node
    return node


def arith(a, b, op):
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two values."""
    a, b = as_exact(a), as_exact(b)
    try:
        fn = {"add": _add, "sub": _sub, "mul": _mul, "div": _div}[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def sign(a):
    return as_exact(a).sign()


# ---------------------------------------------------------------------------
# sign determination


def _compute_sign(x):
    if x._rat is not None:
        return _sgn(x._rat)
    if x._quad is not None:
        a, b, s = x._quad
        return _two_term_sign((a, 1), (b, s))
    if x._op in ("add", "sub"):
        ca, cb = _closed(x._args[0]), _closed(x._args[1])
        if _is_monomial(ca) and _is_monomial(cb):
            r2 = -cb[1] if x._op == "sub" else cb[1]
            return _two_term_sign((ca[1], ca[2]), (r2, cb[2]))
    return _refine_sign(x)


def _two_term_sign(a, b):
    """Sign of r1*sqrt(s1) + r2*sqrt(s2), exactly."""
    (r1, s1), (r2, s2) = a, b
    sa, sb = _sgn(r1), _sgn(r2)
    if sa == 0 or sa == sb:
        return sb if sa == 0 else sa
    if sb == 0:
        return sa
    d = r1 * r1 * s1 - r2 * r2 * s2
    if d > 0:
        return sa
    if d < 0:
        return sb
    return 0


def separation_exponent(x):
    """An integer e with: x != 0 implies |x| >= 2**-e (BFMSS bound)."""
    lu, ll = _sep_bits(x)
    k = _count_radicals(x)
    degree = 1 << k
    return (degree - 1) * lu + ll


def _sep_bits(x):
    if x._sep is not None:
        return x._sep
    for node in _postorder(x):
        if node._sep is not None:
            continue
        op = node._op
        if op == "rat":
            q = node._rat
            res = (int(gmpy2.bit_length(abs(mpz(q.numerator)))), int(gmpy2.bit_length(mpz(q.denominator))))
        elif op == "sqrt":
            lu, ll = node._args[0]._sep
            half = (lu + ll + 1) // 2
            res = (half, ll) if lu >= ll else (lu, half)
        else:
            (u1, l1), (u2, l2) = node._args[0]._sep, node._args[1]._sep
            if op in ("add", "sub"):
                res = (max(u1 + l2, l1 + u2) + 1, l1 + l2)
            elif op == "mul":
                res = (u1 + u2, l1 + l2)
            else:  # div
                res = (u1 + l2, l1 + u2)
        node._sep = res
    return x._sep


def _count_radicals(x):
    return sum(1 for node in _postorder(x) if node._op == "sqrt")


def _postorder(root):
    """Distinct nodes of the DAG, children before parents."""
    out = []
    seen = set()
    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            out.append(node)
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        for child in node._args:
            if id(child) not in seen:
                stack.append((child, False))
    return out


def _refine_sign(x):
    e = separation_exponent(x)
    p = START_PRECISION
    while True:
        iv = _interval(x, p)
        if iv is not None:
            lo, hi = iv
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            if p > e and max(-lo, hi) < (mpz(1) << (p - e)):
                return 0
        p *= 2


def _cdiv(a, b):
    return -((-a) // b)


def _interval(x, p):
    """Certified (lo, hi) with lo*2^-p <= x <= hi*2^-p, or None."""
    memo = {}
    for node in _postorder(x):
        cached = node._approx
        if cached is not None and cached[0] >= p:
            cp, clo, chi = cached
            shift = cp - p
            memo[id(node)] = (clo >> shift, -((-chi) >> shift))
            continue
        op = node._op
        if op == "rat":
            q = node._rat
            num = mpz(q.numerator) << p
            den = mpz(q.denominator)
            iv = (num // den, _cdiv(num, den))
        else:
            args = [memo.get(id(c)) for c in node._args]
            if any(a is None for a in args):
                memo[id(node)] = None
                continue
            iv = _apply_interval(op, args, p)
        memo[id(node)] = iv
        if iv is not None:
            _store(node, p, iv)
    return memo[id(x)]


def _store(node, p, iv):
    lo, hi = iv
    with _cache_lock:
        old = node._approx
        if old is not None:
            op_, olo, ohi = old
            if op_ <= p:
                shift = p - op_
                olo, ohi = olo << shift, ohi << shift
                lo, hi = max(lo, olo), min(hi, ohi)
            else:
                # finer cache already present; keep whichever is narrower
                shift = op_ - p
                if (ohi - olo) <= ((hi - lo) << shift):
                    return
        node._approx = (p, lo, hi)


def _apply_interval(op, args, p):
    if op == "add":
        (a, b), (c, d) = args
        return (a + c, b + d)
    if op == "sub":
        (a, b), (c, d) = args
        return (a - d, b - c)
    if op == "mul":
        (a, b), (c, d) = args
        prods = (a * c, a * d, b * c, b * d)
        return (min(prods) >> p, -((-max(prods)) >> p))
    if op == "div":
        (a, b), (c, d) = args
        if c <= 0 <= d:
            return None
        a, b = a << p, b << p
        quots_lo = (a // c, a // d, b // c, b // d)
        quots_hi = (_cdiv(a, c), _cdiv(a, d), _cdiv(b, c), _cdiv(b, d))
        return (min(quots_lo), max(quots_hi))
    if op == "sqrt":
        ((a, b),) = args
        lo = gmpy2.isqrt(max(a, 0) << p)
        hb = max(b, 0) << p
        hi = gmpy2.isqrt(hb)
        if hi * hi < hb:
            hi += 1
        return (lo, hi)
    raise AssertionError(op)


# ---------------------------------------------------------------------------
# textual form


def _rat_literal(q):
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _to_literal(x):
    if x._rat is not None:
        return _rat_literal(x._rat)
    if x._quad is not None:
        a, b, s = x._quad
        mono = f"(sqrt {s})" if b == 1 else f"(mul {_rat_literal(b)} (sqrt {s}))"
        return mono if a == 0 else f"(add {_rat_literal(a)} {mono})"
    parts = " ".join(_to_literal(a) for a in x._args)
    return f"({x._op} {parts})"


_TOKEN = re.compile(r"\s*(\(|\)|[^\s()]+)")
_RAT = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def parse(text):
    """Inverse of :meth:`ExactNumber.to_literal`."""
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise ConstructionError("empty literal")
    pos = 0

    def term():
        nonlocal pos
        if pos >= len(tokens):
            raise ConstructionError(f"unexpected end of literal {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            if pos >= len(tokens):
                raise ConstructionError(f"unexpected end of literal {text!r}")
            op = tokens[pos]
            pos += 1
            args = []
            while pos < len(tokens) and tokens[pos] != ")":
                args.append(term())
            if pos >= len(tokens):
                raise ConstructionError(f"unbalanced parentheses in {text!r}")
            pos += 1
            if op == "sqrt":
                if len(args) != 1:
                    raise ConstructionError("sqrt takes one argument")
                return sqrt(args[0])
            if op in ("add", "sub", "mul", "div"):
                if len(args) != 2:
                    raise ConstructionError(f"{op} takes two arguments")
                try:
                    return arith(args[0], args[1], op)
                except DomainError as exc:
                    raise ConstructionError(str(exc)) from exc
            raise ConstructionError(f"unknown operator {op!r}")
        if tok == ")":
            raise ConstructionError(f"unexpected ')' in {text!r}")
        if not _RAT.match(tok):
            raise ConstructionError(f"not an exact literal: {tok!r}")
        num, _, den = tok.partition("/")
        return from_rational(int(num), int(den) if den else 1)

    value = term()
    if pos != len(tokens):
        raise ConstructionError(f"trailing input in {text!r}")
    return value
