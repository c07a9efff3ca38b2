"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`CycNumber` stores an element of Q(zeta_N) in the power basis
``1, z, ..., z^(phi(N)-1)`` reduced modulo the N-th cyclotomic
polynomial.  Internally the coordinates are kept as integer numerators
over one positive common denominator, which is what the compiled kernels
operate on; :attr:`CycNumber.coeffs` exposes them as ``Fraction``.

Results of arithmetic live at the lcm of the operand conductors and are
never minimized automatically.  Use :meth:`CycNumber.minimal` (or the
subfield predicates) when the smallest conductor is wanted.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from . import elim
from . import kernels
from .errors import (
    ConductorNotMultiple,
    ConductorOverflow,
    DivisionByZero,
    NotCoprime,
    ParseError,
)

Rational = Fraction

_max_conductor = 10_000


def set_max_conductor(n: int) -> None:
    """Largest conductor any computation may create (default 10**4)."""
    global _max_conductor
    if n < 1:
        raise ValueError("maximum conductor must be positive")
    _max_conductor = n


def get_max_conductor() -> int:
    return _max_conductor


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


_phi_cache: dict[int, tuple[int, ...]] = {}
_phi_lock = threading.Lock()


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # den monic
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for i in range(dd + 1):
                num[k - dd + i] -= c * den[i]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return q


def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (lowest first) of the n-th cyclotomic polynomial.

    Computed as (x^n - 1) divided by all Phi_d with d | n, d < n.
    Memoized in a write-once table guarded by a lock.
    """
    cached = _phi_cache.get(n)
    if cached is not None:
        return cached
    if n < 1:
        raise ValueError("conductor must be positive")
    if n > _max_conductor:
        raise ConductorOverflow(f"conductor {n} exceeds maximum {_max_conductor}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _polydiv_exact(poly, list(cyclotomic_poly(d)))
    result = tuple(poly)
    with _phi_lock:
        return _phi_cache.setdefault(n, result)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-x for x in num]
        den = -den
    g = math.gcd(den, *num)
    if g > 1:
        num = [x // g for x in num]
        den //= g
    if not any(num):
        den = 1
    return tuple(num), den


def _lcm(a: int, b: int) -> int:
    return a if a == b else a * b // math.gcd(a, b)


def _scatter_reduce(num, n_from, m, step):
    """Send coordinate j to exponent (j * step) mod m, then reduce mod Phi_m."""
    out = [0] * m
    for j, c in enumerate(num):
        if c:
            out[(j * step) % m] += c
    return kernels.poly_reduce(out, cyclotomic_poly(m))


class CycNumber:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("_n", "_num", "_den", "_hash", "_min")

    def __init__(self, conductor: int, coeffs):
        phi = cyclotomic_poly(conductor)
        fr = [Fraction(c) for c in coeffs]
        if len(fr) != len(phi) - 1:
            raise ValueError(
                f"conductor {conductor} needs {len(phi) - 1} coefficients, got {len(fr)}"
            )
        den = 1
        for f in fr:
            den = _lcm(den, f.denominator)
        num = [f.numerator * (den // f.denominator) for f in fr]
        self._set(conductor, *_normalize(num, den))

    def _set(self, n, num, den):
        self._n = n
        self._num = num
        self._den = den
        self._hash = None
        self._min = None

    @classmethod
    def _raw(cls, n: int, num, den: int = 1) -> "CycNumber":
        obj = object.__new__(cls)
        obj._set(n, *_normalize(list(num), den))
        return obj

    @classmethod
    def rational(cls, q) -> "CycNumber":
        q = Fraction(q)
        return cls._raw(1, (q.numerator,), q.denominator)

    # -- accessors ---------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # -- conversion between conductors ------------------------------------

    def embed(self, m: int) -> "CycNumber":
        """Same element written at conductor ``m`` (zeta_N -> zeta_m^(m/N))."""
        n = self._n
        if m == n:
            return self
        if m % n:
            raise ConductorNotMultiple(f"conductor {n} does not divide {m}")
        if m > _max_conductor:
            raise ConductorOverflow(f"conductor {m} exceeds maximum {_max_conductor}")
        if self.is_rational():
            d = euler_phi(m)
            return CycNumber._raw(m, (self._num[0],) + (0,) * (d - 1), self._den)
        return CycNumber._raw(m, _scatter_reduce(self._num, n, m, m // n), self._den)

    def galois(self, k: int) -> "CycNumber":
        """Apply sigma_k : zeta_N -> zeta_N^k."""
        n = self._n
        if math.gcd(k, n) != 1:
            raise NotCoprime(f"{k} is not coprime to conductor {n}")
        if self.is_rational():
            return self
        return CycNumber._raw(n, _scatter_reduce(self._num, n, n, k % n), self._den)

    def in_subfield(self, d: int) -> bool:
        """True iff this element lies in Q(zeta_d)."""
        m = _lcm(self._n, d)
        a = self.embed(m)
        for k in range(1, m + 1, d):
            if math.gcd(k, m) == 1 and a.galois(k) != a:
                return False
        return True

    def coords_in(self, d: int) -> tuple[Fraction, ...]:
        """Power-basis coordinates in Q(zeta_d); requires membership."""
        if not self.in_subfield(d):
            raise ValueError(f"{self} is not in Q(zeta_{d})")
        m = _lcm(self._n, d)
        a = self.embed(m)
        fd = euler_phi(d)
        cols = [zeta(d, j).embed(m).numerators for j in range(fd)]
        rows = [[Fraction(cols[j][i]) for j in range(fd)] for i in range(len(a._num))]
        rhs = [Fraction(x, a._den) for x in a._num]
        return tuple(elim.solve(rows, rhs, Fraction(0)))

    def minimal(self) -> "CycNumber":
        """Equal element at the smallest conductor that contains it."""
        if self._min is None:
            if self.is_rational():
                self._min = CycNumber._raw(1, self._num[:1], self._den)
            else:
                for d in divisors(self._n):
                    if self.in_subfield(d):
                        self._min = CycNumber(d, self.coords_in(d))
                        break
        return self._min

    def is_algebraic_integer_in(self, d: int) -> bool:
        """True iff this element lies in Z[zeta_d]."""
        if not self.in_subfield(d):
            return False
        return all(c.denominator == 1 for c in self.coords_in(d))

    # -- arithmetic --------------------------------------------------------

    def _common(self, other):
        if self._n == other._n:
            return self, other
        m = _lcm(self._n, other._n)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        if a._den == b._den:
            return CycNumber._raw(a._n, [x + y for x, y in zip(a._num, b._num)], a._den)
        den = _lcm(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        return CycNumber._raw(
            a._n, [x * fa + y * fb for x, y in zip(a._num, b._num)], den
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._raw(self._n, [-x for x in self._num], self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other._n == 1 or self._n == 1:
            s, o = (self, other) if other._n == 1 else (other, self)
            q = o._num[0]
            return CycNumber._raw(s._n, [x * q for x in s._num], s._den * o._den)
        a, b = self._common(other)
        prod = kernels.poly_mulmod(list(a._num), list(b._num), cyclotomic_poly(a._n))
        return CycNumber._raw(a._n, prod, a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        """Multiplicative inverse via an exact linear solve in the power basis."""
        if not any(self._num):
            raise DivisionByZero("division by zero in Q(zeta_N)")
        n = self._n
        if self.is_rational():
            return CycNumber._raw(n, (self._den,) + (0,) * (len(self._num) - 1), self._num[0])
        phi = cyclotomic_poly(n)
        d = len(phi) - 1
        # column j = self * z^j
        cols = [kernels.poly_reduce([0] * j + list(self._num), phi) for j in range(d)]
        rows = [[Fraction(cols[j][i], self._den) for j in range(d)] for i in range(d)]
        rhs = [Fraction(1)] + [Fraction(0)] * (d - 1)
        x = elim.solve(rows, rhs, Fraction(0))
        return CycNumber(n, x)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = CycNumber._raw(self._n, (1,) + (0,) * (len(self._num) - 1))
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison --------------------------------------------------------

    def __bool__(self):
        return any(self._num)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._n == other._n:
            return self._den == other._den and self._num == other._num
        a, b = self._common(other)
        return a._den == b._den and a._num == b._num

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                m = self.minimal()
                self._hash = hash((m._n, m._num, m._den))
        return self._hash

    def __repr__(self):
        return f"CycNumber({format_cyc(self)!r})"

    def __str__(self):
        return format_cyc(self)


def _coerce(x):
    if isinstance(x, CycNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNumber.rational(x)
    return NotImplemented


def cyc(x) -> CycNumber:
    """Coerce an int, Fraction, literal string or CycNumber."""
    if isinstance(x, str):
        return parse_cyc(x)
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to CycNumber")
    return c


def zeta(n: int, k: int = 1) -> CycNumber:
    """The root of unity zeta_n^k, at conductor n."""
    phi = cyclotomic_poly(n)
    out = [0] * n
    out[k % n] = 1
    return CycNumber._raw(n, kernels.poly_reduce(out, phi))


ZERO = CycNumber.rational(0)
ONE = CycNumber.rational(1)
I = zeta(4)


# -- function forms --------------------------------------------------------


def arith(a: CycNumber, b: CycNumber, op: str) -> CycNumber:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def embed(a: CycNumber, m: int) -> CycNumber:
    return a.embed(m)


def galois(a: CycNumber, k: int) -> CycNumber:
    return a.galois(k)


def in_subfield(a: CycNumber, d: int) -> bool:
    return a.in_subfield(d)


def is_algebraic_integer_in(a: CycNumber, d: int) -> bool:
    return a.is_algebraic_integer_in(d)


# -- literal grammar --------------------------------------------------------
#
# expr   := ['+'|'-'] term (('+'|'-') term)*
# term   := factor ('*'? factor)*
# factor := atom ('^' int)?
# atom   := rational | 'i' | 'z' '(' uint ')' | '(' expr ')'


def _root_name(n: int, j: int) -> str:
    if n == 4 and j == 1:
        return "i"
    return f"z({n})" if j == 1 else f"z({n})^{j}"


def format_cyc(a: CycNumber) -> str:
    """Render ``a`` in the literal grammar, ascending powers of zeta."""
    parts = []
    for j, c in enumerate(a.coeffs):
        if not c:
            continue
        if j == 0:
            parts.append(str(c))
            continue
        root = _root_name(a.conductor, j)
        if c == 1:
            parts.append(root)
        elif c == -1:
            parts.append("-" + root)
        else:
            parts.append(f"{c}*{root}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = self._lex(text)
        self.i = 0

    @staticmethod
    def _lex(text):
        toks = []
        pos = 0
        while pos < len(text):
            ch = text[pos]
            if ch.isspace():
                pos += 1
            elif ch.isdigit():
                start = pos
                while pos < len(text) and text[pos].isdigit():
                    pos += 1
                toks.append(("num", int(text[start:pos]), start))
            elif ch in "+-*/^()iz":
                toks.append((ch, ch, pos))
                pos += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", pos)
        toks.append(("end", None, len(text)))
        return toks

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind):
        tok = self.toks[self.i]
        if tok[0] != kind:
            want = "number" if kind == "num" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(self.text[tok[2]])
            raise ParseError(f"expected {want}, got {got}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek() == "end":
            raise ParseError("empty literal", 0)
        value = self.expr()
        self.take("end")
        return value

    def expr(self):
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.take(self.peek())[0] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while True:
            k = self.peek()
            if k == "*":
                self.take("*")
                value = value * self.factor(signed=True)
            elif k in ("num", "i", "z", "("):
                value = value * self.factor()
            else:
                return value

    def signed_int(self):
        neg = False
        if self.peek() == "-":
            self.take("-")
            neg = True
        n = self.take("num")[1]
        return -n if neg else n

    def factor(self, signed=False):
        k = self.peek()
        if signed and k == "-":
            self.take("-")
            return -self.factor()
        if k == "num":
            num = self.take("num")[1]
            if self.peek() == "/":
                tok = self.take("/")
                den = self.take("num")[1]
                if den == 0:
                    raise ParseError("zero denominator", tok[2])
                value = CycNumber.rational(Fraction(num, den))
            else:
                value = CycNumber.rational(num)
        elif k == "i":
            self.take("i")
            value = I
        elif k == "z":
            self.take("z")
            self.take("(")
            tok = self.take("num")
            if tok[1] == 0:
                raise ParseError("root order must be positive", tok[2])
            try:
                value = zeta(tok[1])
            except ConductorOverflow as exc:
                raise ParseError(str(exc), tok[2]) from exc
            self.take(")")
        elif k == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
        else:
            tok = self.toks[self.i]
            got = "end of input" if k == "end" else repr(self.text[tok[2]])
            raise ParseError(f"expected a number, 'i', 'z(n)' or '(', got {got}", tok[2])
        if self.peek() == "^":
            tok = self.take("^")
            e = self.signed_int()
            if e < 0 and not value:
                raise ParseError("negative power of zero", tok[2])
            value = value ** e
        return value


def parse_cyc(text: str) -> CycNumber:
    """Parse a cyclotomic literal such as ``"z(8)^3 - 1/2"`` or ``"-i"``."""
    return _Parser(text).parse()
