"""The Block Lie algebra and its degree extension.

Basis vectors L(m) are indexed by m in Z^2; the bracket of basis vectors
is

    [L(m), L(n)] = (n1*(m2 + q) - m1*(n2 + q)) * L(m + n)

for a fixed nonzero rational parameter q.  The extended algebra adds the
degree derivation D2 with [D2, L(m)] = m2 * L(m).  The other degree
derivation is redundant when q != 0 because ad L(0,0) acts as q times
it, so it is not a stored generator; the element syntax accepts "D1" and
normalizes it to (1/q) * L(0,0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import IndexPair, ParseError, _Parser


@dataclass(frozen=True)
class AlgebraContext:
    """Fixes the structure parameter q; q = 0 is rejected."""

    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q == 0:
            raise ValueError("q must be nonzero")


@dataclass(frozen=True)
class BasisL:
    m: IndexPair

    def __str__(self) -> str:
        return f"L{self.m}"


class _Derivation:
    """The degree derivation generator, a singleton."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "D2"

    def __str__(self) -> str:
        return "D2"


D2 = _Derivation()


def _generator_sort_key(gen):
    # L terms closest to the origin first, positive indices preferred; D2 last
    if gen is D2:
        return (1, 0, 0, 0, 0)
    m = gen.m
    return (0, abs(m.m1) + abs(m.m2), abs(m.m1), -m.m1, -m.m2)


class AlgebraElement:
    """Finite rational linear combination of L(m) generators and D2."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for gen, coeff in items:
                c = Fraction(coeff)
                if c:
                    acc = data.get(gen, Fraction(0)) + c
                    if acc:
                        data[gen] = acc
                    elif gen in data:
                        del data[gen]
        self._terms = data

    @classmethod
    def basis(cls, m: IndexPair) -> "AlgebraElement":
        return cls({BasisL(m): 1})

    @classmethod
    def derivation(cls) -> "AlgebraElement":
        return cls({D2: 1})

    def terms(self) -> dict:
        return dict(self._terms)

    def items_sorted(self):
        return sorted(self._terms.items(), key=lambda kv: _generator_sort_key(kv[0]))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "AlgebraElement":
        out = AlgebraElement()
        out._terms = {g: -c for g, c in self._terms.items()}
        return out

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        data = dict(self._terms)
        for g, c in other._terms.items():
            acc = data.get(g, Fraction(0)) + c
            if acc:
                data[g] = acc
            elif g in data:
                del data[g]
        out = AlgebraElement()
        out._terms = data
        return out

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __rmul__(self, scalar) -> "AlgebraElement":
        c = Fraction(scalar)
        out = AlgebraElement()
        if c:
            out._terms = {g: coeff * c for g, coeff in self._terms.items()}
        return out

    __mul__ = __rmul__

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({format_element(self)})"


def format_element(x: AlgebraElement) -> str:
    if not x:
        return "0"
    pieces = []
    for position, (gen, coeff) in enumerate(x.items_sorted()):
        sign = "-" if coeff < 0 else "+"
        magnitude = -coeff if coeff < 0 else coeff
        body = str(gen) if magnitude == 1 else f"{magnitude}*{gen}"
        if position == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


# the structure constant splits as (n1*m2 - m1*n2) + q*(n1 - m1); both the
# interned generators and the small set of coefficient values recur heavily
# in axiom sweeps, so both are cached
@lru_cache(maxsize=None)
def _basis_gen(m1: int, m2: int) -> BasisL:
    return BasisL(IndexPair(m1, m2))


@lru_cache(maxsize=None)
def _struct_coeff(q: Fraction, cross: int, diff: int) -> Fraction:
    return cross + q * diff


def bracket_basis(m: IndexPair, n: IndexPair, ctx: AlgebraContext) -> AlgebraElement:
    """Bracket of two basis vectors; a single term on L(m + n), possibly zero."""
    coeff = _struct_coeff(ctx.q, n.m1 * m.m2 - m.m1 * n.m2, n.m1 - m.m1)
    if not coeff:
        return AlgebraElement()
    return AlgebraElement({_basis_gen(m.m1 + n.m1, m.m2 + n.m2): coeff})


def bracket(x: AlgebraElement, y: AlgebraElement, ctx: AlgebraContext) -> AlgebraElement:
    """Bilinear bracket on the extended algebra."""
    q = ctx.q
    data: dict = {}
    for gx, cx in x._terms.items():
        x_is_basis = type(gx) is BasisL
        if x_is_basis:
            mx1, mx2 = gx.m.m1, gx.m.m2
        for gy, cy in y._terms.items():
            if x_is_basis and type(gy) is BasisL:
                my = gy.m
                coeff = _struct_coeff(q, my.m1 * mx2 - mx1 * my.m2, my.m1 - mx1)
                if coeff:
                    gen = _basis_gen(mx1 + my.m1, mx2 + my.m2)
                    c = cx * cy * coeff
                else:
                    continue
            elif not x_is_basis and type(gy) is BasisL:
                if not gy.m.m2:
                    continue
                gen, c = gy, cx * cy * gy.m.m2
            elif x_is_basis and gy is D2:
                if not mx2:
                    continue
                gen, c = gx, -cx * cy * mx2
            else:
                continue            # [D2, D2] = 0
            acc = data.get(gen)
            acc = c if acc is None else acc + c
            if acc:
                data[gen] = acc
            elif gen in data:
                del data[gen]
    out = AlgebraElement()
    out._terms = data
    return out


def jacobi_defect(x: AlgebraElement, y: AlgebraElement, z: AlgebraElement,
                  ctx: AlgebraContext) -> AlgebraElement:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]]; must vanish for a Lie algebra."""
    return (bracket(x, bracket(y, z, ctx), ctx)
            + bracket(y, bracket(z, x, ctx), ctx)
            + bracket(z, bracket(x, y, ctx), ctx))


# --- element syntax ----------------------------------------------------------

class _ElementParser(_Parser):
    """Grammar: sum of rational multiples of L(m1,m2), D1 or D2."""

    def __init__(self, text: str, ctx: AlgebraContext):
        super().__init__(text)
        self.ctx = ctx

    def parse(self) -> AlgebraElement:
        if not self.tokens:
            raise ParseError("empty expression", self.text, 0)
        total = AlgebraElement()
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        total = total + self.term(sign)
        while self.peek()[0] != "end":
            kind, text, at = self.take()
            if text == "+":
                total = total + self.term(1)
            elif text == "-":
                total = total + self.term(-1)
            else:
                raise ParseError(f"unexpected {text!r}", self.text, at)
        return total

    def term(self, sign: int) -> AlgebraElement:
        coeff = Fraction(sign)
        kind, text, at = self.peek()
        if kind == "int":
            self.take()
            value = Fraction(int(text))
            if self.peek()[1] == "/":
                self.take()
                dkind, dtext, dat = self.take()
                if dkind != "int":
                    raise ParseError("denominator must be an integer", self.text, dat)
                if int(dtext) == 0:
                    raise ParseError("zero denominator", self.text, dat)
                value = Fraction(int(text), int(dtext))
            coeff *= value
            self.expect("*")
        return coeff * self.generator()

    def generator(self) -> AlgebraElement:
        kind, text, at = self.take()
        if kind != "name":
            raise ParseError("expected a generator (L, D1 or D2)", self.text, at)
        if text == "D2":
            return AlgebraElement.derivation()
        if text == "D1":
            # ad L(0,0) = q * D1, so D1 normalizes to (1/q) L(0,0)
            return (1 / self.ctx.q) * AlgebraElement.basis(IndexPair(0, 0))
        if text == "L":
            self.expect("(")
            m1 = self.integer()
            self.expect(",")
            m2 = self.integer()
            self.expect(")")
            return AlgebraElement.basis(IndexPair(m1, m2))
        raise ParseError(f"unknown generator {text!r}", self.text, at)

    def integer(self) -> int:
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        kind, text, at = self.take()
        if kind != "int":
            raise ParseError("expected an integer", self.text, at)
        return sign * int(text)


def parse_element(text: str, ctx: AlgebraContext) -> AlgebraElement:
    """Parse element syntax such as ``3/2*L(1,0) - D2``."""
    return _ElementParser(text, ctx).parse()
