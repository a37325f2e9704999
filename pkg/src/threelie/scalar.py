"""Exact coefficients: sparse multivariate polynomials over the rationals.

A :class:`Scalar` maps monomials to nonzero :class:`fractions.Fraction`
coefficients.  A monomial is a tuple of ``(name, exponent)`` pairs sorted by
name; the empty tuple is the constant monomial.  Scalars are immutable.

>>> a = Scalar.symbol("a_1_2")
>>> str(2 * a * a - 1)
'-1 + 2*a_1_2^2'
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

Monomial = tuple  # tuple[tuple[str, int], ...]


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        n1, e1 = m1[i]
        n2, e2 = m2[j]
        if n1 == n2:
            out.append((n1, e1 + e2))
            i += 1
            j += 1
        elif n1 < n2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


class Scalar:
    """Polynomial in named parameters with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        # callers outside this module go through the constructors below;
        # ``terms`` must already be normalized (no zero coefficients)
        self._terms = terms if terms is not None else {}
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, value) -> Scalar:
        value = Fraction(value)
        if value == 0:
            return ZERO
        return cls({(): value})

    @classmethod
    def symbol(cls, name: str) -> Scalar:
        if not _NAME_RE.fullmatch(name):
            raise ValueError(f"invalid parameter name {name!r}")
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def from_terms(cls, pairs) -> Scalar:
        """Build from an iterable of ``(monomial, coefficient)``; normalizes."""
        acc: dict = {}
        for mono, c in pairs:
            mono = _canonical_monomial(mono)
            acc[mono] = acc.get(mono, 0) + Fraction(c)
        return cls({m: c for m, c in acc.items() if c != 0})

    @classmethod
    def coerce(cls, value) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        if isinstance(value, str):
            return parse(value)
        if isinstance(value, list):
            return from_json(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical monomial order."""
        return sorted(self._terms.items(), key=lambda t: t[0])

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((), Fraction(0))

    def variables(self) -> set:
        return {name for mono in self._terms for name, _ in mono}

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self._terms), default=0)

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the first term in canonical order."""
        if not self._terms:
            return Fraction(0)
        return self.items()[0][1]

    def monic(self) -> Scalar:
        if not self._terms:
            return self
        return self * Scalar.const(1 / self.leading_coefficient())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s += c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m)
                out[m] = c1 * c2 if s is None else s + c1 * c2
        return Scalar({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        return to_text(self)


_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def _canonical_monomial(mono) -> Monomial:
    acc: dict = {}
    for name, e in mono:
        if e:
            acc[name] = acc.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in acc.items() if e))


def _coerce_or_none(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar.const(value)
    return None


ZERO = Scalar({})
ONE = Scalar({(): Fraction(1)})


# -- the module-level operation surface -------------------------------------

def add(x: Scalar, y: Scalar) -> Scalar:
    return Scalar.coerce(x) + Scalar.coerce(y)


def mul(x: Scalar, y: Scalar) -> Scalar:
    return Scalar.coerce(x) * Scalar.coerce(y)


def is_zero(x: Scalar) -> bool:
    return Scalar.coerce(x).is_zero()


def substitute(x: Scalar, bindings: dict) -> Scalar:
    """Replace bound parameters by values; unbound names stay symbolic.

    Values are normally rationals, but any Scalar is accepted.
    """
    x = Scalar.coerce(x)
    if not bindings:
        return x
    values = {k: Scalar.coerce(v) for k, v in bindings.items()}
    acc = ZERO
    for mono, c in x._terms.items():
        term = Scalar({(): c})
        rest = []
        for name, e in mono:
            v = values.get(name)
            if v is None:
                rest.append((name, e))
            else:
                term = term * v ** e
        if rest:
            term = term * Scalar({tuple(rest): Fraction(1)})
        acc = acc + term
    return acc


def content(x: Scalar) -> Scalar:
    """Rational content times the monomial gcd of ``x`` (a Scalar factor)."""
    return common_factor([x])


def common_factor(values) -> Scalar:
    """Largest rational-times-monomial factor dividing every value.

    The rational part is positive: gcd of numerators over lcm of
    denominators.  Zero entries are ignored; all-zero input gives 1.
    """
    num = 0
    den = 1
    mins = None
    for v in values:
        for mono, c in v._terms.items():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
            exps = dict(mono)
            if mins is None:
                mins = exps
            else:
                mins = {n: min(e, exps[n]) for n, e in mins.items() if n in exps}
    if mins is None:
        return ONE
    mono = tuple(sorted((n, e) for n, e in mins.items() if e))
    return Scalar({mono: Fraction(num, den)})


def divide_term(x: Scalar, factor: Scalar) -> Scalar:
    """Exact division by a single-term Scalar (rational times monomial)."""
    if len(factor._terms) != 1:
        raise ValueError("divisor must be a single term")
    (fm, fc), = factor._terms.items()
    fexp = dict(fm)
    out = {}
    for mono, c in x._terms.items():
        exps = dict(mono)
        for n, e in fexp.items():
            if exps.get(n, 0) < e:
                raise ValueError(f"{factor} does not divide {x}")
            exps[n] -= e
        out[tuple(sorted((n, e) for n, e in exps.items() if e))] = c / fc
    return Scalar(out)


def factor_display(x: Scalar) -> str:
    """Text with a common monomial factor pulled out, e.g. ``a_2_3*(...)``."""
    x = Scalar.coerce(x)
    f = common_factor([x])
    mono = next(iter(f._terms))
    if not x._terms or not mono or len(x._terms) == 1:
        return to_text(x)
    g = Scalar({mono: Fraction(1)})
    return f"{to_text(g)}*({to_text(divide_term(x, g))})"


# -- text and JSON forms ----------------------------------------------------

def _mono_text(mono: Monomial) -> str:
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono)


def _coeff_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_text(x: Scalar) -> str:
    """Canonical text, e.g. ``2*a_1_2*a_3_4 - 1*a_1_3*a_2_4``."""
    items = x.items()
    if not items:
        return "0"
    parts = []
    for k, (mono, c) in enumerate(items):
        body = _coeff_text(abs(c))
        if mono:
            body += "*" + _mono_text(mono)
        if k == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM_RE = re.compile(r"[+-]?[^+-]+")
_NUM_RE = re.compile(r"\d+(/\d+)?")


def parse(text: str) -> Scalar:
    """Inverse of :func:`to_text`; also accepts ``k``, ``-1/2``, ``a*b^2``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    if "".join(_TERM_RE.findall(s)) != s:
        raise ValueError(f"cannot parse scalar {text!r}")
    pairs = []
    for term in _TERM_RE.findall(s):
        sign = -1 if term[0] == "-" else 1
        body = term.lstrip("+-")
        if not body:
            raise ValueError(f"cannot parse scalar {text!r}")
        coeff = Fraction(sign)
        mono = []
        for factor in body.split("*"):
            if _NUM_RE.fullmatch(factor):
                coeff *= Fraction(factor)
                continue
            name, caret, exp = factor.partition("^")
            if not _NAME_RE.fullmatch(name) or (caret and not exp.isdigit()):
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            mono.append((name, int(exp) if exp else 1))
        pairs.append((mono, coeff))
    return Scalar.from_terms(pairs)


def to_json(x: Scalar) -> list:
    return [
        {"coeff": f"{c.numerator}/{c.denominator}", "monomial": [[n, e] for n, e in mono]}
        for mono, c in x.items()
    ]


def from_json(data) -> Scalar:
    if isinstance(data, str):
        return parse(data)
    if isinstance(data, (int, Fraction)):
        return Scalar.const(data)
    pairs = []
    for term in data:
        mono = [(str(n), int(e)) for n, e in term["monomial"]]
        pairs.append((mono, Fraction(term["coeff"])))
    return Scalar.from_terms(pairs)


def symbols(*names: str):
    return tuple(Scalar.symbol(n) for n in names)
