"""Exact sparse polynomials over the rationals in a fixed eight-letter alphabet.

The alphabet is ``x, y, a, b, alpha, beta, q, z``.  A monomial is a tuple of
eight non-negative exponents in that order; a polynomial maps monomials to
nonzero ``int`` or ``Fraction`` coefficients.  Integral coefficients are kept
as plain ints so the common case never pays for ``Fraction`` arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Coeff = Union[int, Fraction]
Monomial = tuple  # tuple[int, ...] of length 8

VAR_NAMES = ("x", "y", "a", "b", "alpha", "beta", "q", "z")
NVARS = len(VAR_NAMES)
ONE = (0,) * NVARS


class Var(IntEnum):
    X = 0
    Y = 1
    A = 2
    B = 3
    ALPHA = 4
    BETA = 5
    Q = 6
    Z = 7

    @classmethod
    def parse(cls, name: "str | int | Var") -> "Var":
        if isinstance(name, str):
            try:
                return cls(VAR_NAMES.index(name))
            except ValueError:
                raise KeyError(f"unknown variable {name!r}") from None
        return cls(name)


class NotDivisible(ArithmeticError):
    pass


class NotSymmetric(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


def _norm(c) -> Coeff:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


def mono(**exps: int) -> Monomial:
    """Build a monomial from keyword exponents, e.g. ``mono(x=2, beta=1)``."""
    out = [0] * NVARS
    for name, e in exps.items():
        if e < 0:
            raise ValueError("exponents must be non-negative")
        out[Var.parse(name)] = e
    return tuple(out)


def _madd(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(i + j for i, j in zip(m1, m2))


class Poly:
    """Immutable polynomial in canonical sparse form (no zero coefficients)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: "Mapping[Monomial, Coeff] | Iterable[tuple[Monomial, Coeff]] | None" = None):
        d: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for m, c in items:
                m = tuple(m)
                if len(m) != NVARS or any(e < 0 for e in m):
                    raise ValueError(f"bad monomial {m!r}")
                d[m] = d.get(m, 0) + _norm(c)
        self._terms = {m: _norm(c) for m, c in d.items() if c != 0}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "Poly":
        # terms must already be canonical
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def _from_acc(cls, acc: dict) -> "Poly":
        return cls._wrap({m: _norm(c) for m, c in acc.items() if c != 0})

    @classmethod
    def const(cls, c: Coeff) -> "Poly":
        c = _norm(c)
        return cls._wrap({ONE: c} if c else {})

    @classmethod
    def var(cls, v: "str | int | Var") -> "Poly":
        m = [0] * NVARS
        m[Var.parse(v)] = 1
        return cls._wrap({tuple(m): 1})

    @classmethod
    def monomial(cls, m: Monomial, c: Coeff = 1) -> "Poly":
        return cls({tuple(m): c})

    @classmethod
    def from_exponent_counts(cls, counts: Mapping[Monomial, int]) -> "Poly":
        return cls._from_acc(dict(counts))

    # -- access --------------------------------------------------------------

    def items(self) -> Iterator[tuple[Monomial, Coeff]]:
        """Terms in canonical order (lexicographically descending exponents)."""
        for m in sorted(self._terms, reverse=True):
            yield m, self._terms[m]

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: Monomial) -> Coeff:
        return self._terms.get(tuple(m), 0)

    def constant_value(self) -> Coeff:
        """The value of a constant polynomial; raises if any variable occurs."""
        if any(m != ONE for m in self._terms):
            raise ValueError("polynomial is not constant")
        return self._terms.get(ONE, 0)

    def degree_in(self, vars: Iterable["str | int | Var"]) -> set[int]:
        idx = [Var.parse(v) for v in vars]
        return {sum(m[i] for i in idx) for m in self._terms}

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return Poly._from_acc(acc)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        acc: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _madd(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Poly._from_acc(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / other)
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: Coeff) -> "Poly":
        c = _norm(c)
        if c == 0:
            return Poly()
        return Poly._from_acc({m: v * c for m, v in self._terms.items()})

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __getstate__(self):
        return self._terms

    def __setstate__(self, state):
        self._terms = state
        self._hash = None

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- serialization -------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.items()):
            neg = c < 0
            body = _term_text(m, -c if neg else c)
            if i == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def to_json(self) -> dict:
        terms = []
        for m, c in self.items():
            c = Fraction(c)
            terms.append({"coeff": {"num": str(c.numerator), "den": str(c.denominator)},
                          "exp": list(m)})
        return {"terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "Poly":
        terms = []
        for t in data["terms"]:
            c = Fraction(int(t["coeff"]["num"]), int(t["coeff"]["den"]))
            terms.append((tuple(t["exp"]), c))
        return cls(terms)

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return _Parser(text).parse()


def _term_text(m: Monomial, c: Coeff) -> str:
    factors = []
    for name, e in zip(VAR_NAMES, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return str(c)
    if c == 1:
        return "*".join(factors)
    return str(c) + "*" + "*".join(factors)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


class _Parser:
    """Recursive descent over ``+ - * / ^ ( )``, integers and alphabet names."""

    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if mt is None:
                raise ValueError(f"cannot tokenize {text[pos:]!r}")
            num, name, op = mt.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif name is not None:
                self.tokens.append(("var", name))
            else:
                self.tokens.append(("op", op))
            pos = mt.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Poly:
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            q = self.factor()
            if op == "*":
                p = p * q
            else:
                p = p / Fraction(q.constant_value())
        return p

    def factor(self) -> Poly:
        kind, val = self.peek()
        if (kind, val) == ("op", "-"):
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ValueError("exponent must be an integer literal")
            base = base ** e
        return base

    def atom(self) -> Poly:
        kind, val = self.take()
        if kind == "num":
            return Poly.const(val)
        if kind == "var":
            return Poly.var(val)
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return p
        raise ValueError(f"unexpected token {val!r}")


# Named generators, handy for building polynomials by hand.
x, y, a, b, alpha, beta, q, z = (Poly.var(n) for n in VAR_NAMES)


def partial_derivative(p: Poly, v: "str | int | Var") -> Poly:
    i = Var.parse(v)
    acc = {}
    for m, c in p._terms.items():
        e = m[i]
        if e:
            acc[m[:i] + (e - 1,) + m[i + 1:]] = c * e
    return Poly._wrap(acc)


def substitute(p: Poly, bindings: Mapping["str | int | Var", "Poly | Coeff"]) -> Poly:
    """Simultaneous substitution; variables without a binding are left alone."""
    binds = {}
    for k, v in bindings.items():
        binds[Var.parse(k)] = v if isinstance(v, Poly) else Poly.const(v)
    powers: dict = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = binds[i] ** e
        return powers[key]

    acc: dict = {}
    for m, c in p._terms.items():
        kept = tuple(0 if i in binds else e for i, e in enumerate(m))
        piece = Poly._wrap({kept: c})
        for i, e in enumerate(m):
            if e and i in binds:
                piece = piece * power(i, e)
        for mm, cc in piece._terms.items():
            acc[mm] = acc.get(mm, 0) + cc
    return Poly._from_acc(acc)


def swap_vars(p: Poly, *pairs: tuple[str, str]) -> Poly:
    """Exchange variables pairwise, e.g. ``swap_vars(p, ("x", "y"))``."""
    perm = list(range(NVARS))
    for u, v in pairs:
        i, j = Var.parse(u), Var.parse(v)
        perm[i], perm[j] = j, i
    return Poly._wrap({tuple(m[perm[k]] for k in range(NVARS)): c for m, c in p._terms.items()})


def coefficient_of(p: Poly, m: Monomial) -> Coeff:
    return p.coefficient(m)


def divide_exact_by_monomial(p: Poly, m: Monomial) -> Poly:
    out = {}
    for t, c in p._terms.items():
        q = tuple(i - j for i, j in zip(t, m))
        if any(e < 0 for e in q):
            raise NotDivisible(f"term {_term_text(t, c)} is not divisible by {_term_text(m, 1)}")
        out[q] = c
    return Poly._wrap(out)


@dataclass(frozen=True)
class GammaExpansion:
    """Coefficients in the basis ``(xy)^j (x+y)^(d-2j)``, one vector per block.

    A block is keyed by ``(rest, d)``: ``rest`` is the monomial left after
    deleting x and y, and ``d`` the common (x, y)-degree of its terms.
    """

    blocks: dict

    def reconstruct(self) -> Poly:
        total = Poly()
        s, p = x + y, x * y
        for (rest, d), gammas in self.blocks.items():
            r = Poly.monomial(rest)
            for j, g in enumerate(gammas):
                if g:
                    total = total + r * (p ** j) * (s ** (d - 2 * j)) * g
        return total

    def is_nonnegative(self) -> bool:
        return all(g >= 0 for gs in self.blocks.values() for g in gs)

    def to_text(self) -> str:
        lines = []
        for (rest, d) in sorted(self.blocks, reverse=True):
            gs = self.blocks[(rest, d)]
            label = _term_text(rest, 1)
            lines.append(f"[{label}] d={d}: " + " ".join(str(g) for g in gs))
        return "\n".join(lines)


def gamma_expand(p: Poly) -> GammaExpansion:
    groups: dict = {}
    for m, c in p._terms.items():
        rest = (0, 0) + m[2:]
        groups.setdefault(rest, {})[(m[0], m[1])] = c
    blocks = {}
    for rest, xy in groups.items():
        degrees = {i + j for i, j in xy}
        if len(degrees) != 1:
            raise NotHomogeneous(f"block {_term_text(rest, 1)} mixes (x,y)-degrees {sorted(degrees)}")
        (d,) = degrees
        for (i, j), c in xy.items():
            if xy.get((j, i), 0) != c:
                raise NotSymmetric(f"block {_term_text(rest, 1)} is not symmetric in x and y")
        remainder = dict(xy)
        gammas = []
        for j in range(d // 2 + 1):
            g = remainder.get((d - j, j), 0)
            gammas.append(g)
            if g:
                # subtract g * (xy)^j (x+y)^(d-2j)
                k = d - 2 * j
                binom = 1
                for i in range(k + 1):
                    key = (j + k - i, j + i)
                    remainder[key] = remainder.get(key, 0) - g * binom
                    binom = binom * (k - i) // (i + 1)
        if any(v != 0 for v in remainder.values()):
            raise NotSymmetric(f"block {_term_text(rest, 1)} has no gamma expansion")
        blocks[(rest, d)] = tuple(_norm(g) for g in gammas)
    return GammaExpansion(blocks)
