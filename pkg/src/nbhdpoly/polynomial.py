"""Exact univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored densely in ascending degree order. Every instance is
kept in canonical form: no trailing zeros, and the zero polynomial is ``(0,)``.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence, Union

Coercible = Union["Polynomial", int]


class Polynomial:
    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = (0,)):
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        self._coeffs = tuple(cs)
        self._hash = None

    # construction helpers

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Polynomial:
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * degree + [coeff])

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial((other,))
        return NotImplemented

    # basic accessors

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        if self.is_zero():
            return -1
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return self._coeffs == (0,)

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError("negative degree")
        return self._coeffs[k] if k < len(self._coeffs) else 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    # ring arithmetic

    def __add__(self, other: Coercible) -> Polynomial:
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, q._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other: Coercible) -> Polynomial:
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: Coercible) -> Polynomial:
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return q - self

    def __mul__(self, other: Coercible) -> Polynomial:
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, q._coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int = 1) -> Polynomial:
        """Multiply by x**k."""
        if self.is_zero() or k == 0:
            return self
        return Polynomial([0] * k + list(self._coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._coeffs)
        return self._hash

    def evaluate(self, t: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    __call__ = evaluate

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._coeffs)

    def dominates(self, other: Polynomial) -> bool:
        """True if every coefficient of self is >= the matching one of other."""
        n = max(len(self), len(other))
        return all(self[k] >= other[k] for k in range(n))

    # text and JSON forms

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, obj) -> Polynomial:
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            raw = obj["coeffs"]
        except (TypeError, KeyError):
            raise ValueError("polynomial JSON must be an object with a 'coeffs' list")
        return cls(int(c) for c in raw)

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        return parse_poly(text)


ZERO = Polynomial((0,))
ONE = Polynomial((1,))
X = Polynomial((0, 1))


@lru_cache(maxsize=256)
def binomial_power(k: int) -> Polynomial:
    """Return (1+x)**k."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    return Polynomial(comb(k, i) for i in range(k + 1))


def from_counts(counts: Sequence[int]) -> Polynomial:
    return Polynomial(counts)


def format_poly(p: Polynomial) -> str:
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = "x" if k == 1 else f"x^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


_TERM = re.compile(r"^(?:(\d+)(?:\*?(x)(?:\^(\d+))?)?|(x)(?:\^(\d+))?)$")


def parse_poly(text: str) -> Polynomial:
    """Parse the canonical string form, e.g. ``1 + 4*x + 2*x^2``.

    Terms may repeat or appear in any order; ``x``, ``1*x`` and ``x^1`` are
    all accepted.
    """
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial string")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"([+-])([^+-]+)", s)
    if "".join(sign + body for sign, body in pieces) != s:
        raise ValueError(f"cannot parse polynomial: {text!r}")
    acc: dict[int, int] = {}
    for sign, body in pieces:
        m = _TERM.match(body)
        if not m:
            raise ValueError(f"cannot parse term {body!r} in {text!r}")
        if m.group(1) is not None:
            c = int(m.group(1))
            if m.group(2):
                k = int(m.group(3)) if m.group(3) else 1
            else:
                k = 0
        else:
            c = 1
            k = int(m.group(5)) if m.group(5) else 1
        acc[k] = acc.get(k, 0) + (c if sign == "+" else -c)
    top = max(acc)
    return Polynomial(acc.get(k, 0) for k in range(top + 1))
