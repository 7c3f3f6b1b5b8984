"""Exact Laurent polynomials, rational pairs, and min-plus tropicalization.

Variables are positions of the active reduced word (0-based internally).  The
:class:`Flattening` object translates between positions and the double index
``(s, j)`` = (s-th occurrence, letter j), which is also how the text format
names variables: ``3*c[2,1]^2*c[1,3]^-1 + c[1,1]``.  Without a flattening the
text format uses flat 1-based names ``c[4]``.
"""

from __future__ import annotations

import heapq
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInput, NotDivisible

Exp = tuple[int, ...]

_BITS = 24
_OFF = 1 << (_BITS - 2)
_MASK = (1 << _BITS) - 1
_OFFSETS: dict[int, int] = {}


def _offset(nv: int) -> int:
    o = _OFFSETS.get(nv)
    if o is None:
        o = _OFFSETS[nv] = sum(_OFF << (_BITS * k) for k in range(nv))
    return o


def _pack(e: Exp) -> int:
    """Exponent vector as one integer; lexicographic order is preserved."""
    k = 0
    for x in e:
        k = (k << _BITS) | (x + _OFF)
    return k


def _unpack(k: int, nv: int) -> Exp:
    out = [0] * nv
    for j in range(nv - 1, -1, -1):
        out[j] = (k & _MASK) - _OFF
        k >>= _BITS
    return tuple(out)


class LaurentPoly:
    """Integer-coefficient Laurent polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exp, int] | None = None):
        self.nvars = nvars
        clean: dict[Exp, int] = {}
        if terms:
            for e, v in terms.items():
                if v:
                    if len(e) != nvars:
                        raise InvalidInput("exponent length does not match variable count")
                    clean[tuple(e)] = int(v)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.nvars, obj.terms, obj._hash = nvars, terms, None
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, nvars: int, v: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: v})

    @classmethod
    def var(cls, nvars: int, k: int, power: int = 1) -> "LaurentPoly":
        e = [0] * nvars
        e[k] = power
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls(len(exps), {tuple(exps): coeff})

    # basic protocol -----------------------------------------------------
    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()})"

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise InvalidInput("variable count mismatch")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.nvars, other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    # ring operations ----------------------------------------------------
    def __add__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, v in other.terms.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -v for e, v in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.nvars, {e: v * other for e, v in self.terms.items()})
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        nv = self.nvars
        off = _offset(nv)
        right = [(_pack(e) - off, v) for e, v in other.terms.items()]
        out: dict[int, int] = {}
        get = out.get
        for e1, v1 in self.terms.items():
            k1 = _pack(e1)
            for k2, v2 in right:
                k = k1 + k2
                out[k] = get(k, 0) + v1 * v2
        return LaurentPoly._raw(nv, {_unpack(k, nv): v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self.terms.values()))) != 1:
                raise InvalidInput("negative powers only for unit monomials")
            (e, v), = self.terms.items()
            return LaurentPoly(self.nvars, {tuple(x * n for x in e): v if n % 2 else 1})
        out = LaurentPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # queries -------------------------------------------------------------
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_subtraction_free(self) -> bool:
        return all(v > 0 for v in self.terms.values())

    def sorted_terms(self) -> list[tuple[Exp, int]]:
        return sorted(self.terms.items(), reverse=True)

    def leading(self) -> tuple[Exp, int]:
        return max(self.terms.items())

    def trailing(self) -> tuple[Exp, int]:
        return min(self.terms.items())

    def content_monomial(self) -> Exp:
        """Componentwise minimum exponent (the monomial gcd)."""
        return tuple(min(col) for col in zip(*self.terms)) if self.terms else (0,) * self.nvars

    def shift(self, e: Exp, sign: int = 1) -> "LaurentPoly":
        """Multiply by the monomial c^(sign*e)."""
        return LaurentPoly(self.nvars, {tuple(a + sign * b for a, b in zip(k, e)): v
                                        for k, v in self.terms.items()})

    def int_content(self) -> int:
        g = 0
        for v in self.terms.values():
            g = math.gcd(g, v)
        return g

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        pt = [Fraction(p) for p in point]
        for e, v in self.terms.items():
            term = Fraction(v)
            for p, k in zip(pt, e):
                if k:
                    term *= p ** k
            total += term
        return total

    def div_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division in the Laurent ring; raises :class:`NotDivisible` otherwise.

        Long division under lexicographic order.  A true quotient has, in each
        variable, degrees between ``min(self) - min(other)`` and
        ``max(self) - max(other)``; leaving that box proves non-divisibility
        and guarantees termination.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly(self.nvars)
        nv = self.nvars
        lead_e, lead_v = other.leading()
        lo = [a - b for a, b in zip(self.content_monomial(), other.content_monomial())]
        hi = [max(c1) - max(c2) for c1, c2 in zip(zip(*self.terms), zip(*other.terms))]
        off = _offset(nv)
        lead_k = _pack(lead_e) - off
        div = [(_pack(e) - off, v) for e, v in other.terms.items()]
        rem = {_pack(e): v for e, v in self.terms.items()}
        heap = [-k for k in rem]
        heapq.heapify(heap)
        quot: dict[Exp, int] = {}
        while rem:
            k = -heapq.heappop(heap)
            v = rem.get(k)
            if not v:
                continue
            qk = k - lead_k
            qe = _unpack(qk, nv)
            if v % lead_v or any(not l <= q <= h for l, q, h in zip(lo, qe, hi)):
                raise NotDivisible("divisor does not divide dividend",
                                   remainder=LaurentPoly(nv, {_unpack(x, nv): y for x, y in rem.items()}))
            qv = v // lead_v
            quot[qe] = qv
            for ok, ov in div:
                t = qk + ok
                nv2 = rem.get(t, 0) - qv * ov
                if nv2:
                    if t not in rem:
                        heapq.heappush(heap, -t)
                    rem[t] = nv2
                else:
                    rem.pop(t, None)
        return LaurentPoly._raw(nv, quot)

    def extend(self, nvars: int, positions: Sequence[int] | None = None) -> "LaurentPoly":
        """Re-embed into ``nvars`` variables; variable k goes to ``positions[k]``."""
        positions = positions if positions is not None else list(range(self.nvars))
        out = {}
        for e, v in self.terms.items():
            ne = [0] * nvars
            for k, x in enumerate(e):
                ne[positions[k]] += x
            out[tuple(ne)] = out.get(tuple(ne), 0) + v
        return LaurentPoly(nvars, out)

    # text ------------------------------------------------------------------
    def to_text(self, flat: "Flattening | None" = None) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, v in self.sorted_terms():
            factors = []
            for k, x in enumerate(e):
                if x:
                    name = flat.name(k) if flat else f"c[{k + 1}]"
                    factors.append(name if x == 1 else f"{name}^{x}")
            body = "*".join(factors)
            mag = abs(v)
            if not body:
                term = str(mag)
            elif mag == 1:
                term = body
            else:
                term = f"{mag}*{body}"
            pieces.append(("-" if v < 0 else "+", term))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, term in pieces[1:]:
            text += f" {sign} {term}"
        return text

    @classmethod
    def parse(cls, text: str, nvars: int | None = None, flat: "Flattening | None" = None) -> "LaurentPoly":
        if flat is not None:
            nvars = len(flat.word)
        if nvars is None:
            raise InvalidInput("need nvars or a flattening to parse")
        src = text.replace(" ", "")
        if not src or src == "0":
            return cls(nvars)
        if src[0] not in "+-":
            src = "+" + src
        out: dict[Exp, int] = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", _protect(src)):
            body = body.replace("~", "-")
            coeff = 1
            e = [0] * nvars
            for factor in body.split("*"):
                m = re.fullmatch(r"c\[(\d+)(?:,(\d+))?\](?:\^(-?\d+))?", factor)
                if m:
                    if m.group(2) is not None:
                        if flat is None:
                            raise InvalidInput("double-index variable needs a flattening")
                        k = flat.position(int(m.group(1)), int(m.group(2)))
                    else:
                        k = int(m.group(1)) - 1
                    if not 0 <= k < nvars:
                        raise InvalidInput(f"variable out of range in {factor!r}")
                    e[k] += int(m.group(3) or 1)
                elif re.fullmatch(r"\d+", factor):
                    coeff *= int(factor)
                else:
                    raise InvalidInput(f"cannot parse factor {factor!r}")
            key = tuple(e)
            out[key] = out.get(key, 0) + (coeff if sign == "+" else -coeff)
        return cls(nvars, out)


def _protect(src: str) -> str:
    # Exponent minus signs must not split terms.
    return re.sub(r"\^-", "^~", src)


class Flattening:
    """Maps positions of a word to the double index (occurrence s, letter j)."""

    def __init__(self, word: Sequence[int]):
        self.word = tuple(word)
        self._pos: dict[tuple[int, int], int] = {}
        self._idx: list[tuple[int, int]] = []
        count: dict[int, int] = {}
        for k, j in enumerate(self.word):
            count[j] = count.get(j, 0) + 1
            self._pos[(count[j], j)] = k
            self._idx.append((count[j], j))

    def position(self, s: int, j: int) -> int:
        try:
            return self._pos[(s, j)]
        except KeyError:
            raise InvalidInput(f"word has no occurrence {s} of letter {j}") from None

    def has(self, s: int, j: int) -> bool:
        return (s, j) in self._pos

    def index(self, k: int) -> tuple[int, int]:
        return self._idx[k]

    def name(self, k: int) -> str:
        s, j = self._idx[k]
        return f"c[{s},{j}]"

    def var(self, s: int, j: int) -> LaurentPoly:
        return LaurentPoly.var(len(self.word), self.position(s, j))


class RationalPair:
    """num/den with monomial content and integer content stripped."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.const(num.nvars, 1)
        if not den:
            raise ZeroDivisionError("zero denominator")
        content = den.content_monomial()
        num = num.shift(content, -1)
        den = den.shift(content, -1)
        if num:
            g = math.gcd(num.int_content(), den.int_content())
        else:
            g = den.int_content()
            num = LaurentPoly(den.nvars)
        if den.leading()[1] < 0:
            g = -g
        if g not in (0, 1):
            num = LaurentPoly(num.nvars, {e: v // g for e, v in num.terms.items()})
            den = LaurentPoly(den.nvars, {e: v // g for e, v in den.terms.items()})
        if den.is_monomial() and next(iter(den.terms.values())) == 1:
            (e, _), = den.terms.items()
            num = num.shift(e, -1)
            den = LaurentPoly.const(den.nvars, 1)
        self.num = num
        self.den = den

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def __repr__(self) -> str:
        return f"RationalPair(({self.num.to_text()}) / ({self.den.to_text()}))"

    def _lift(self, other) -> "RationalPair":
        if isinstance(other, RationalPair):
            return other
        if isinstance(other, LaurentPoly):
            return RationalPair(other)
        if isinstance(other, int):
            return RationalPair(LaurentPoly.const(self.nvars, other))
        raise TypeError

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RationalPair(self.num + o.num, self.den)
        return RationalPair(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalPair(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        o = self._lift(other)
        return RationalPair(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalPair":
        return RationalPair(self.den, self.num)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return RationalPair(self.den ** (-n), self.num ** (-n))
        return RationalPair(self.num ** n, self.den ** n)

    def __eq__(self, other) -> bool:
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def is_subtraction_free(self) -> bool:
        return self.num.is_subtraction_free() and self.den.is_subtraction_free()

    def is_laurent(self) -> bool:
        return self.den == LaurentPoly.const(self.nvars, 1)

    def evaluate(self, point: Sequence) -> Fraction:
        return self.num.evaluate(point) / self.den.evaluate(point)

    def term_count(self) -> int:
        return len(self.num) + len(self.den)


def poly_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def poly_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def poly_div_exact(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f.div_exact(g)


def is_subtraction_free(expr: LaurentPoly | RationalPair) -> bool:
    return expr.is_subtraction_free()


@dataclass(frozen=True)
class TropForm:
    """Minimum of integer linear forms; duplicates removed, redundancy kept."""

    forms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.forms:
            raise InvalidInput("a tropical form needs at least one linear form")
        object.__setattr__(self, "forms", tuple(sorted(set(tuple(f) for f in self.forms))))

    @property
    def nvars(self) -> int:
        return len(self.forms[0])

    def __call__(self, x: Sequence[int]) -> int:
        return trop_eval(self, x)

    def __add__(self, other: "TropForm") -> "TropForm":
        return TropForm(tuple(tuple(a + b for a, b in zip(f, g))
                              for f in self.forms for g in other.forms))

    def union(self, other: "TropForm") -> "TropForm":
        return TropForm(self.forms + other.forms)

    def without(self, form: Sequence[int]) -> "TropForm":
        return TropForm(tuple(f for f in self.forms if f != tuple(form)))

    def to_json(self) -> dict:
        return {"forms": [list(f) for f in self.forms]}

    @classmethod
    def from_json(cls, data: dict) -> "TropForm":
        return cls(tuple(tuple(f) for f in data["forms"]))


def tropicalize(f: LaurentPoly) -> TropForm:
    if not f:
        raise InvalidInput("the zero polynomial has no tropicalization")
    if not f.is_subtraction_free():
        raise InvalidInput("tropicalization needs a subtraction-free polynomial")
    return TropForm(tuple(f.terms))


def trop_eval(t: TropForm, x: Sequence[int]) -> int:
    if len(x) != t.nvars:
        raise InvalidInput("dimension mismatch in tropical evaluation")
    return min(sum(a * b for a, b in zip(f, x)) for f in t.forms)


@dataclass(frozen=True)
class TropRatio:
    """Tropicalization of num/den: ``min(num forms) - min(den forms)``."""

    num: TropForm
    den: TropForm

    def __call__(self, x: Sequence[int]) -> int:
        return trop_eval(self.num, x) - trop_eval(self.den, x)

    def to_json(self) -> dict:
        return {"num": self.num.to_json()["forms"], "den": self.den.to_json()["forms"]}

    @classmethod
    def from_json(cls, data: dict) -> "TropRatio":
        return cls(TropForm(tuple(map(tuple, data["num"]))), TropForm(tuple(map(tuple, data["den"]))))


def tropicalize_ratio(r: RationalPair) -> TropRatio:
    return TropRatio(tropicalize(r.num), tropicalize(r.den))


def eval_positive(expr: LaurentPoly | RationalPair, point: Sequence) -> Fraction:
    pt = [Fraction(p) for p in point]
    if any(p <= 0 for p in pt):
        raise InvalidInput("evaluation point must be positive")
    return expr.evaluate(pt)


def monomial_exps(terms: Iterable[Exp]) -> list[Exp]:
    return sorted(terms)
