"""Rank-1 polynomial modules over the Block algebra, and their Witt shadows.

For a parameter set (q, lambda1, lambda2, alpha) the carrier is the
polynomial ring in d1, d2, with d1 and d2 acting by multiplication and
the basis generator L(m) acting through

    L(m) . f  =  f(d - m) * g_m(d),
    g_m(d)    =  lambda1^m1 * lambda2^m2 * ((m2 + q)*d1 - m1*(d2 + q*alpha)).

Every L(m) image vanishes at the point (0, -q*alpha), so the polynomials
vanishing there form the distinguished codimension-1 submodule; its
membership test is a single exact evaluation.

A second, rejected placement of the q and alpha factors,

    (q*alpha + m2)*d1 - m1*(d2 + alpha),

is kept as :func:`action_on_one_alt`.  It fails the module axioms for
generic parameters (any alpha != 1 admits a witness pair) and is used as
a negative control by the verification suites.

Restricting to the line Z*m with m1 != 0 gives a copy of the Witt
algebra; modulo the cross form X_m = m2*d1 - m1*d2, the action collapses
to the one-variable Witt module with parameters (lambda1^m1*lambda2^m2,
alpha), which this module also implements directly for cross checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import blockalg, poly
from .blockalg import AlgebraContext, AlgebraElement
from .exactnum import rat_pow
from .poly import IndexPair, Poly1, Poly2


@dataclass(frozen=True)
class ParamSet:
    """Exact parameters selecting one rank-1 module; q, lambda1, lambda2 nonzero."""

    q: Fraction
    lambda1: Fraction
    lambda2: Fraction
    alpha: Fraction

    def __post_init__(self):
        for name in ("q", "lambda1", "lambda2", "alpha"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.q == 0:
            raise ValueError("q must be nonzero")
        if self.lambda1 == 0 or self.lambda2 == 0:
            raise ValueError("lambda1 and lambda2 must be nonzero")

    def context(self) -> AlgebraContext:
        return AlgebraContext(self.q)

    def lam_pow(self, m: IndexPair) -> Fraction:
        """lambda1^m1 * lambda2^m2, negative exponents included."""
        return rat_pow(self.lambda1, m.m1) * rat_pow(self.lambda2, m.m2)

    def vanishing_point(self) -> tuple[Fraction, Fraction]:
        """The point (0, -q*alpha) cutting out the proper submodule."""
        return (Fraction(0), -self.q * self.alpha)

    def describe(self) -> str:
        return (f"q={self.q}, lambda=({self.lambda1},{self.lambda2}), "
                f"alpha={self.alpha}")


@dataclass(frozen=True)
class WittParams:
    """Parameters (lambda, alpha) of a rank-1 Witt module; lambda nonzero."""

    lam: Fraction
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.lam == 0:
            raise ValueError("lambda must be nonzero")


def cross_form(m: IndexPair) -> Poly2:
    """The linear form X_m = m2*d1 - m1*d2, vanishing on the line through m."""
    return Poly2({(1, 0): m.m2, (0, 1): -m.m1})


def action_on_one(m: IndexPair, p: ParamSet) -> Poly2:
    """Image of the constant 1 under the generator L(m)."""
    scale = p.lam_pow(m)
    return Poly2({
        (1, 0): scale * (m.m2 + p.q),
        (0, 1): scale * -m.m1,
        (0, 0): scale * -m.m1 * p.q * p.alpha,
    })


def action_on_one_alt(m: IndexPair, p: ParamSet) -> Poly2:
    """Rejected variant placement of q and alpha; negative control only."""
    scale = p.lam_pow(m)
    return Poly2({
        (1, 0): scale * (p.q * p.alpha + m.m2),
        (0, 1): scale * -m.m1,
        (0, 0): scale * -m.m1 * p.alpha,
    })


def act(x: AlgebraElement, f: Poly2, p: ParamSet, image=action_on_one) -> Poly2:
    """Module action of an algebra element on a carrier polynomial.

    L(m) sends f to f(d - m) * g_m(d); the degree derivation acts by
    multiplication with d2.  ``image`` swaps in an alternative generator
    image (used only by the negative-control suites).
    """
    out = Poly2()
    for gen, c in x.terms().items():
        if gen is blockalg.D2:
            out = out + c * (poly.D2 * f)
        else:
            out = out + c * (f.shifted(gen.m) * image(gen.m, p))
    return out


def module_axiom_defect(x: AlgebraElement, y: AlgebraElement, f: Poly2,
                        p: ParamSet, image=action_on_one) -> Poly2:
    """act([x,y], f) - act(x, act(y, f)) + act(y, act(x, f)); contract: zero."""
    ctx = p.context()
    return (act(blockalg.bracket(x, y, ctx), f, p, image)
            - act(x, act(y, f, p, image), p, image)
            + act(y, act(x, f, p, image), p, image))


def in_proper_submodule(f: Poly2, p: ParamSet) -> bool:
    """Membership in the unique proper submodule.

    That submodule is d1*M + (q*alpha + d2)*M, the vanishing ideal of
    the point (0, -q*alpha), so membership is one exact evaluation.
    """
    x1, x2 = p.vanishing_point()
    return f.eval_at(x1, x2) == 0


def witt_act(i: int, f: Poly1, w: WittParams) -> Poly1:
    """One-variable Witt module action: lambda^i * (t - i*alpha) * f(t - i)."""
    return rat_pow(w.lam, i) * (poly.T - i * w.alpha) * f.shifted(i)


def witt_restrict(m: IndexPair, i_lo: int, i_hi: int,
                  p: ParamSet) -> tuple[WittParams, list[int]]:
    """Witt-line parameters for the line through m, with verification.

    Returns (lambda_m, alpha_m) = (lambda1^m1*lambda2^m2, alpha) and the
    list of i in [i_lo, i_hi] for which the reduction of the L(i*m)
    image modulo the cross form (substitute d2 -> (m2/m1)*d1) fails to
    equal q * lambda_m^i * (d1 - i*m1*alpha).  Empty list means every
    reduction matched exactly.
    """
    if m.m1 == 0:
        raise ValueError("Witt restriction needs m1 != 0")
    params = WittParams(lam=p.lam_pow(m), alpha=p.alpha)
    ratio = Fraction(m.m2, m.m1)
    failures = []
    for i in range(i_lo, i_hi + 1):
        g = action_on_one(i * m, p)
        reduced = poly.compose2(g, poly.D1, ratio * poly.D1)
        expected = p.q * rat_pow(params.lam, i) * (poly.D1 - i * m.m1 * params.alpha)
        if reduced != expected:
            failures.append(i)
    return params, failures


def _witness_scan(radius: int):
    """Box indices ordered closest-to-origin first, positive side preferred."""
    box = [IndexPair(a, b)
           for a in range(-radius, radius + 1)
           for b in range(-radius, radius + 1)]
    box.sort(key=lambda m: (abs(m.m1) + abs(m.m2), abs(m.m1), -m.m1, -m.m2))
    return box


def iso_check(left: ParamSet, right: ParamSet,
              box_radius: int = 2) -> tuple[bool, IndexPair | None]:
    """Decide whether two parameter sets give isomorphic modules.

    Modules over the same algebra are isomorphic exactly when the
    parameters coincide: any isomorphism fixes 1 up to a nonzero scalar,
    and the generator images are degree-1 polynomials, so the scalar
    cancels and the images themselves must agree.  When the answer is
    no, also returns a witness index m whose generator images differ;
    a witness always exists within radius 1.
    """
    if left.q != right.q:
        raise ValueError("parameter sets live over different algebras (q mismatch)")
    if box_radius < 1:
        raise ValueError("box_radius must be at least 1")
    if left == right:
        return True, None
    for m in _witness_scan(box_radius):
        if action_on_one(m, left) != action_on_one(m, right):
            return False, m
    raise AssertionError("distinct parameters admit a witness within radius 1")
