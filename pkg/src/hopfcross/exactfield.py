"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_n).

Rationals are plain :class:`fractions.Fraction` values.  A cyclotomic element
stores its coordinates in the power basis ``1, z, ..., z^(phi(n)-1)`` and is
always reduced modulo the n-th cyclotomic polynomial, so equality is
coefficient equality.

A computation lives in a single field.  Mixing elements of Q(zeta_n) and
Q(zeta_m) with n != m raises :class:`FieldMismatch` unless one of the two is
actually rational.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Union

__all__ = [
    "Cyclo",
    "Field",
    "FieldMismatch",
    "ParseError",
    "ZeroDenominator",
    "Scalar",
    "cyclotomic_poly",
    "euler_phi",
    "field_arith",
    "field_of",
    "parse_scalar",
    "render",
    "zeta",
]


class FieldMismatch(ValueError):
    pass


class ParseError(ValueError):
    pass


class ZeroDenominator(ParseError, ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# cyclotomic polynomials


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


def _poly_divmod_int(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials (coefficients ascending), den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "non-exact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending, via x^n - 1 = prod_{d | n} Phi_d."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divmod_int(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row k holds z^k reduced mod Phi_n, for 0 <= k < max(n, 2*phi(n)-1)."""
    phi = euler_phi(n)
    mod = cyclotomic_poly(n)
    rows: list[list[Fraction]] = []
    cur = [Fraction(0)] * phi
    cur[0] = Fraction(1)
    for _ in range(max(n, 2 * phi - 1)):
        rows.append(list(cur))
        # multiply by z, then fold the z^phi term using the monic relation
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * mod[j]
    return tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# cyclotomic elements

_ZERO = Fraction(0)
_ScalarLike = Union[int, Fraction, "Cyclo"]


class Cyclo:
    """An element of Q(zeta_n) in canonical reduced form."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs) -> None:
        phi = euler_phi(order)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > phi:
            cs = _reduce(order, cs)
        elif len(cs) < phi:
            cs = cs + [Fraction(0)] * (phi - len(cs))
        self.order = order
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def _make(cls, order: int, coeffs) -> "Cyclo":
        # trusted path: coeffs are already reduced Fractions of length phi(order)
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = tuple(coeffs)
        obj._hash = None
        return obj

    # -- helpers -----------------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_part(self) -> Fraction:
        return self.coeffs[0]

    def _coerce(self, other) -> "Cyclo | None":
        if isinstance(other, Cyclo):
            if other.order == self.order:
                return other
            if other.is_rational():
                return Cyclo._make(self.order, [other.coeffs[0]] + [_ZERO] * (len(self.coeffs) - 1))
            if self.is_rational():
                return None  # handled by swapping roles in the caller
            raise FieldMismatch(
                f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
            )
        if isinstance(other, Fraction):
            return Cyclo._make(self.order, [other] + [_ZERO] * (len(self.coeffs) - 1))
        if isinstance(other, int) or isinstance(other, _RationalABC):
            return Cyclo(self.order, [Fraction(other)])
        return NotImplemented  # type: ignore[return-value]

    def _lift_pair(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented, NotImplemented
        if o is None:
            # self is rational, other lives in a genuine extension
            return Cyclo(other.order, [self.coeffs[0]]), other
        return self, o

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        a, b = self._lift_pair(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyclo._make(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._make(self.order, [-x for x in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        a, b = self._lift_pair(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyclo._make(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Cyclo(self.order, ())
            if other == 1:
                return self
            return Cyclo._make(self.order, [x * other for x in self.coeffs])
        a, b = self._lift_pair(other)
        if a is NotImplemented:
            return NotImplemented
        if b.is_rational():
            return a * b.coeffs[0]
        if a.is_rational():
            return b * a.coeffs[0]
        return Cyclo._make(a.order, _mul_reduced(a.order, a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if not any(self.coeffs):
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.order)
        return Cyclo(self.order, _inverse_mod(self.order, self.coeffs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclo(self.order, [x / other for x in self.coeffs])
        a, b = self._lift_pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclo(self.order, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Cyclo):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.is_rational() else hash((self.order, self.coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"Cyclo({self.order}, {render(self)!r})"

    __str__ = lambda self: render(self)  # noqa: E731


def _reduce(n: int, cs: list[Fraction]) -> list[Fraction]:
    phi = euler_phi(n)
    table = _reduction_table(n)
    out = list(cs[:phi]) + [Fraction(0)] * max(0, phi - len(cs))
    for k in range(phi, len(cs)):
        c = cs[k]
        if c:
            row = table[k] if k < len(table) else table[k % n]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return out


def _power_row(n: int, k: int) -> tuple[Fraction, ...]:
    return _reduction_table(n)[k % n]


def _mul_reduced(n: int, a, b) -> list[Fraction]:
    phi = len(a)
    prod = [Fraction(0)] * (2 * phi - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    return _reduce(n, prod)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not a or len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while a and len(a) >= len(b):
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for j, d in enumerate(b):
            a[shift + j] -= c * d
        _poly_trim(a)
    return q, a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return _poly_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _inverse_mod(n: int, coeffs) -> list[Fraction]:
    # extended Euclid in Q[x]: s*a + t*Phi_n = 1
    mod = [Fraction(c) for c in cyclotomic_poly(n)]
    r0, r1 = mod, _poly_trim(list(coeffs))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    # r0 is a nonzero constant since Phi_n is irreducible
    c = r0[0]
    inv = [x / c for x in s0]
    return _reduce(n, inv) if len(inv) > euler_phi(n) else inv


Scalar = Union[Fraction, Cyclo]


# ---------------------------------------------------------------------------
# public operations


def zeta(n: int, power: int = 1) -> Cyclo:
    """Canonical form of zeta_n ** power."""
    if n < 1:
        raise ValueError("n must be positive")
    return Cyclo(n, _power_row(n, power % n))


def field_arith(x, y, op: str):
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y == 0:
            raise ZeroDivisionError("division by zero")
        if isinstance(x, Cyclo) or isinstance(y, Cyclo):
            return x / y
        return Fraction(x) / Fraction(y)
    raise ValueError(f"unknown op {op!r}")


def field_of(x) -> int:
    """Cyclotomic order of a scalar, 1 for rationals."""
    if isinstance(x, Cyclo) and not x.is_rational():
        return x.order
    return 1


def _render_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(x) -> str:
    """Canonical text: lowest terms, ascending powers of ``z``."""
    if isinstance(x, Cyclo):
        coeffs = x.coeffs
    else:
        coeffs = (Fraction(x),)
    parts: list[str] = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = _render_rational(mag)
        else:
            mon = "z" if k == 1 else f"z^{k}"
            body = mon if mag == 1 else f"{_render_rational(mag)}*{mon}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|([^\W\d]\w*)|(\^)|([-+*/()]))")


class _Parser:
    def __init__(self, text: str, order: int, variables=None):
        self.text = text.replace("−", "-")
        self.order = order
        self.variables = dict(variables or {})
        self.tokens: list[tuple[str, str]] = []
        pos = 0
        s = self.text
        while pos < len(s):
            if s[pos:].strip() == "":
                break
            m = _TOKEN.match(s, pos)
            if not m:
                raise ParseError(f"unexpected character at {pos} in {text!r}")
            num, zz, caret, op = m.groups()
            if num is not None:
                self.tokens.append(("num", num))
            elif zz is not None:
                self.tokens.append(("name", zz))
            elif caret is not None:
                self.tokens.append(("^", caret))
            else:
                self.tokens.append((op, op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind=None):
        if self.i >= len(self.tokens):
            raise ParseError(f"unexpected end of input in {self.text!r}")
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, got {tok[1]!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty scalar")
        val = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                if rhs == 0:
                    raise ZeroDenominator(f"zero denominator in {self.text!r}")
                val = val / rhs
        return val

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            e = int(self.take("num")[1])
            if neg:
                if base == 0:
                    raise ZeroDenominator(f"zero to a negative power in {self.text!r}")
                e = -e
            base = base ** e
        return base

    def atom(self):
        kind = self.peek()
        if kind == "num":
            return Fraction(int(self.take()[1]))
        if kind == "name":
            name = self.take()[1]
            if name in self.variables:
                return self.variables[name]
            if name != "z":
                raise ParseError(f"unknown name {name!r} in {self.text!r}")
            if self.order <= 1:
                raise ParseError("'z' is only meaningful in a cyclotomic field")
            return zeta(self.order, 1)
        if kind == "(":
            self.take()
            val = self.expr()
            self.take(")")
            return val
        raise ParseError(f"unexpected token in {self.text!r}")


def parse_scalar(text, field_order: int = 1, variables=None):
    """Parse a rational or a polynomial in ``z`` (standing for zeta_n).

    ``variables`` maps extra names to scalars, e.g. ``{"alpha": 2}``.
    Returns a ``Fraction`` when ``field_order <= 1`` and a :class:`Cyclo`
    otherwise.
    """
    if isinstance(text, (int, Fraction)):
        val = Fraction(text)
    else:
        val = _Parser(str(text), field_order, variables).parse()
    if field_order > 1:
        return val if isinstance(val, Cyclo) else Cyclo(field_order, [val])
    if isinstance(val, Cyclo):
        val = val.rational_part()
    return Fraction(val)


# ---------------------------------------------------------------------------
# session field


class Field:
    """The single scalar field of a computation: Q, or Q(zeta_n) for n > 2."""

    def __init__(self, order: int = 1):
        if order < 1:
            raise ValueError("field order must be positive")
        # Q(zeta_1) = Q(zeta_2) = Q
        self.order = order if euler_phi(order) > 1 else 1

    @classmethod
    def rational(cls) -> "Field":
        return cls(1)

    @classmethod
    def cyclotomic(cls, n: int) -> "Field":
        return cls(n)

    @property
    def is_rational(self) -> bool:
        return self.order == 1

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction, string or Cyclo into this field."""
        if isinstance(x, str):
            return parse_scalar(x, self.order)
        if isinstance(x, Cyclo):
            if self.is_rational:
                if not x.is_rational():
                    raise FieldMismatch(f"{x!r} is not rational")
                return x.rational_part()
            if x.order == self.order:
                return x
            if x.is_rational():
                return Cyclo(self.order, [x.rational_part()])
            raise FieldMismatch(f"{x!r} does not lie in Q(zeta_{self.order})")
        if self.is_rational:
            return Fraction(x)
        return Cyclo(self.order, [Fraction(x)])

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def zeta(self, power: int = 1) -> Scalar:
        if self.is_rational:
            raise FieldMismatch("Q has no primitive root of unity of order > 2")
        return zeta(self.order, power)

    def render(self, x) -> str:
        return render(self(x))

    def parse(self, text: str, variables=None) -> Scalar:
        return parse_scalar(text, self.order, variables)

    def to_json(self) -> dict:
        if self.is_rational:
            return {"type": "rational"}
        return {"type": "cyclotomic", "n": self.order}

    @classmethod
    def from_json(cls, doc) -> "Field":
        if doc is None:
            return cls(1)
        kind = doc.get("type")
        if kind == "rational":
            return cls(1)
        if kind == "cyclotomic":
            return cls(int(doc["n"]))
        raise ParseError(f"unknown field type {kind!r}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.order == self.order

    def __hash__(self) -> int:
        return hash(("Field", self.order))

    def __repr__(self) -> str:
        return "Field(Q)" if self.is_rational else f"Field(Q(zeta_{self.order}))"

    def join(self, other: "Field") -> "Field":
        if self.is_rational:
            return other
        if other.is_rational or other.order == self.order:
            return self
        raise FieldMismatch(f"{self!r} and {other!r} differ")
