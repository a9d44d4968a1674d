"""Two-parameter reparameterization of a power difference.

On a triple with A**X = C**Z - B**Y, the root A can be rewritten as
(C+B)*alpha - C*B*beta.  Fixing either parameter determines the other
exactly; the canonical choice pairs
    alpha = (C**(Z-X) - B**(Y-X))**(1/X)
    beta  = (C**(Z-2X) - B**(Y-2X))**(1/X)
and needs one scaling factor M to reconcile both at once:
    C**Z - B**Y = [(C+B)*M*alpha - C*B*M*beta]**X.
The CA plane swaps the roles of the bases, parameterizing B**Y from
(A, C) with degree Y.

Rationality of the canonical pair is the interesting output: on a genuine
solution triple, a rational canonical alpha or beta goes hand in hand with
gcd(A,B,C) > 1, and that linkage is asserted by the test suite over every
search hit rather than assumed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction

from mpmath import mp

from . import intervals
from .errors import DegenerateBeta, ZeroDenominator
from .exact_arith import Radical
from .intervals import DEFAULT_PRECISION_BITS, GUARD_BITS, IntervalValue
from .triples import BealTriple


class Plane(enum.Enum):
    CB = "cb"
    CA = "ca"


@dataclass(frozen=True)
class ReparamPair:
    """Canonical (alpha, beta) radicals for one plane, plus optional scaling."""

    alpha: Radical
    beta: Radical
    plane: Plane
    scalar_m: Fraction | IntervalValue | None = None

    def with_scalar(self, m: Fraction | IntervalValue) -> "ReparamPair":
        return replace(self, scalar_m=m)


def _plane_params(triple: BealTriple, plane: Plane) -> tuple[int, int, int, int]:
    """(first_base, second_base, degree, co_exponent) feeding the formulas."""
    if plane is Plane.CB:
        return triple.B, triple.C, triple.X, triple.Y
    return triple.A, triple.C, triple.Y, triple.X


def canonical_alpha_beta(triple: BealTriple, plane: Plane = Plane.CB) -> ReparamPair:
    """Build the canonical radical pair for the chosen plane.

    For plane CB: alpha**X = C**(Z-X) - B**(Y-X) and
    beta**X = C**(Z-2X) - B**(Y-2X), each kept as a signed exact rational
    radicand and classified lazily.  Plane CA swaps in (A, C, Y).
    """
    base, c, degree, co = _plane_params(triple, plane)
    z = triple.Z
    cf, bf = Fraction(c), Fraction(base)
    alpha = Radical.of(cf ** (z - degree) - bf ** (co - degree), degree)
    beta = Radical.of(cf ** (z - 2 * degree) - bf ** (co - 2 * degree), degree)
    return ReparamPair(alpha=alpha, beta=beta, plane=plane)


def solve_beta_given_alpha(B: int, C: int, X: int, rootA: Fraction, alpha: Fraction) -> Fraction:
    """Derive beta from a chosen alpha so (C+B)*alpha - C*B*beta = rootA.

    rootA is the caller-certified exact value of (C**Z - B**Y)**(1/X); on a
    solution triple that is just A.  Raises DegenerateBeta when the derived
    value is 0, which callers report rather than silently accept.
    """
    del X  # degree context only; the linear relation is degree-free
    beta = (Fraction(rootA) - (C + B) * Fraction(alpha)) / (-C * B)
    if beta == 0:
        raise DegenerateBeta(beta)
    return beta


def solve_alpha_given_beta(B: int, C: int, X: int, rootA: Fraction, beta: Fraction) -> Fraction:
    """Derive alpha from a chosen beta so (C+B)*alpha - C*B*beta = rootA."""
    del X
    return (Fraction(rootA) + C * B * Fraction(beta)) / (C + B)


def _exact_operand(value) -> Fraction | None:
    """Exact rational content of an operand, or None if it is irrational."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Radical):
        return value.exact_value
    return None


_MAX_ESCALATIONS = 5


def scalar_m(triple: BealTriple, pair: ReparamPair,
             precision_bits: int = DEFAULT_PRECISION_BITS) -> Fraction | IntervalValue:
    """The unique scaling factor M = root / ((C+B)*alpha - C*B*beta).

    root is the degree-th root of the plane's power difference (exactly A for
    plane CB on a solution triple, B for plane CA).  Returns an exact
    Fraction when the pair and the root are all rational; otherwise an
    interval certified to relative error <= 2**(1 - precision_bits),
    escalating the working precision as needed.  Raises ZeroDenominator when
    the denominator encloses 0 at the maximum escalated precision.
    """
    base, c, degree, co = _plane_params(triple, pair.plane)
    diff = Fraction(c) ** triple.Z - Fraction(base) ** co
    root = Radical.of(diff, degree)
    s, prod = c + base, c * base

    exact_root = root.exact_value
    exact_alpha = _exact_operand(pair.alpha)
    exact_beta = _exact_operand(pair.beta)
    if exact_alpha is not None and exact_beta is not None:
        denominator = s * exact_alpha - prod * exact_beta
        if denominator == 0:
            raise ZeroDenominator("exact denominator (C+B)*alpha - C*B*beta is 0")
        if exact_root is not None:
            return exact_root / denominator

    bits = precision_bits
    zero_enclosed = False
    for _ in range(_MAX_ESCALATIONS):
        with intervals.workprec(bits + GUARD_BITS):
            num = intervals.to_ivmpf(root)
            den = intervals.to_ivmpf(s) * intervals.to_ivmpf(pair.alpha) \
                - intervals.to_ivmpf(prod) * intervals.to_ivmpf(pair.beta)
            zero_enclosed = 0 in den
            if zero_enclosed:
                bits *= 2
                continue
            m = num / den
        result = intervals.from_ivmpf(m, precision_bits)
        with mp.workprec(bits + GUARD_BITS):
            if abs(result.width) <= abs(result.mid) * mp.mpf(2) ** (1 - precision_bits):
                return result
        bits *= 2
    if zero_enclosed:
        raise ZeroDenominator(
            f"denominator still encloses 0 at {bits} bits for {triple} ({pair.plane.value})")
    raise RuntimeError(
        f"could not certify relative error 2**{1 - precision_bits} at {bits} bits")


def reconstruct(B: int, C: int, X: int, alpha, beta, M=None,
                precision_bits: int = DEFAULT_PRECISION_BITS) -> Fraction | IntervalValue:
    """Evaluate [(C+B)*M*alpha - C*B*M*beta]**X (M defaults to 1).

    alpha, beta and M may each be exact (int/Fraction/rational Radical) or
    interval-valued (irrational Radical/IntervalValue).  The result is an
    exact Fraction whenever every operand is exact.
    """
    if M is None:
        M = Fraction(1)
    operands = [_exact_operand(v) for v in (alpha, beta, M)]
    if all(v is not None for v in operands):
        a, b, m = operands
        return ((C + B) * m * a - C * B * m * b) ** X
    return intervals.evaluate(
        lambda: (intervals.to_ivmpf(C + B) * intervals.to_ivmpf(M) * intervals.to_ivmpf(alpha)
                 - intervals.to_ivmpf(C * B) * intervals.to_ivmpf(M) * intervals.to_ivmpf(beta)) ** X,
        precision_bits)
