"""Riemann-Roch dimensions for divisors supported on {Q0, Qinf}.

dim_l counts lattice points of the tau map instead of doing any function
field arithmetic; the basis is the corresponding monomial exponent list.
dim_code corrects dim_l by the dimension of the subspace vanishing on
the whole evaluation set, which by the divisor of z*f is again a
two-point Riemann-Roch space.
"""

from __future__ import annotations

from typing import NamedTuple

from .curve import CurveParams
from .semigroup import PoleTriple, decompose, tau


class TwoPointDivisor(NamedTuple):
    """Coefficients of a1*Q0 + a2*Qinf; either may be negative."""

    a1: int
    a2: int

    @property
    def degree(self) -> int:
        return self.a1 + self.a2


def dim_l(d: TwoPointDivisor, params: CurveParams) -> int:
    """Dimension of the Riemann-Roch space of a1*Q0 + a2*Qinf.

    Counts i in [-a2, a1] with tau(i) <= a2.  The lower cutoff is valid
    because tau(i) >= -i, so no i below -a2 can qualify.
    """
    a1, a2 = d
    if a1 + a2 < 0:
        return 0
    return sum(1 for i in range(-a2, a1 + 1) if tau(i, params) <= a2)


def basis_exponents(d: TwoPointDivisor, params: CurveParams) -> list[PoleTriple]:
    """Monomial exponents spanning L(d), in increasing pole order at Q0."""
    a1, a2 = d
    if a1 + a2 < 0:
        return []
    return [
        decompose(i, params)
        for i in range(-a2, a1 + 1)
        if tau(i, params) <= a2
    ]


def dim_code(d: TwoPointDivisor, params: CurveParams) -> int:
    """Dimension of the evaluation code of L(d) on the n-point set.

    Subtracts the functions vanishing on all of D, which form
    L(d + Q0 - w_deg*Qinf).  Below degree n the correction is zero and
    this reduces to dim_l.
    """
    a1, a2 = d
    return dim_l(TwoPointDivisor(a1, a2), params) - dim_l(
        TwoPointDivisor(a1 + 1, a2 - params.w_deg), params
    )


def codes_equal_after_adding(
    d: TwoPointDivisor, at_q0: bool, params: CurveParams
) -> bool:
    """True iff enlarging d by one at the chosen place leaves the code equal."""
    a1, a2 = d
    bigger = TwoPointDivisor(a1 + 1, a2) if at_q0 else TwoPointDivisor(a1, a2 + 1)
    return dim_code(bigger, params) == dim_code(TwoPointDivisor(a1, a2), params)
