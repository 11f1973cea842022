"""Growth functions of the torus link groups <x, y, z | x^p = y^q = z>.

Three ways to build A(t):

* ``main_growth_function``: the closed two-term formula valid for all p, q.
* ``components_even_odd`` / ``components_even_even``: sums over the classes
  of minimal normal words, one rational function per class.
* ``growth_odd_odd`` / ``growth_generalized_odd``: the amalgamated product
  rule 1/A = 1/B + 1/C - 1/D, applied once or repeatedly.

All of them must agree exactly after normalization.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .polyring import ONE, T, ZERO, Polynomial, RationalFunction


@dataclass(frozen=True)
class TorusParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValueError(f"need p, q >= 2, got ({self.p}, {self.q})")

    @property
    def n(self) -> int:
        return self.p // 2

    @property
    def m(self) -> int:
        return self.q // 2

    def swapped(self) -> "TorusParams":
        return TorusParams(self.q, self.p)


def _params(params) -> TorusParams:
    if isinstance(params, TorusParams):
        return params
    return TorusParams(*params)


def cyclic_growth_poly(n: int) -> Polynomial:
    """Growth polynomial C_n of the cyclic group of order n on one generator."""
    if n < 2:
        raise ValueError(f"cyclic order must be >= 2, got {n}")
    coeffs = [1] + [2] * ((n - 1) // 2)
    if n % 2 == 0:
        coeffs.append(1)
    return Polynomial(tuple(coeffs))


def infinite_cyclic_growth() -> RationalFunction:
    return RationalFunction.make(Polynomial((1, 1)), Polynomial((1, -1)))


def half_power(r: int) -> Polynomial:
    """t^(r/2) for even r, zero for odd r."""
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    return Polynomial.monomial(r // 2) if r % 2 == 0 else ZERO


def denominator_g(params) -> Polynomial:
    pr = _params(params)
    return (cyclic_growth_poly(pr.p) - 1) * (cyclic_growth_poly(pr.q) - 1) - 1


def amalgam_denominator(params) -> Polynomial:
    """C_p + C_q - C_p C_q, equal to -g."""
    pr = _params(params)
    cp, cq = cyclic_growth_poly(pr.p), cyclic_growth_poly(pr.q)
    return cp + cq - cp * cq


def main_growth_function(params) -> RationalFunction:
    pr = _params(params)
    cp, cq = cyclic_growth_poly(pr.p), cyclic_growth_poly(pr.q)
    s = cp + cq - cp * cq
    first = infinite_cyclic_growth() * RationalFunction.make(cp * cq, s)
    second = RationalFunction.make(
        half_power(pr.q) * cp * cp + half_power(pr.p) * cq * cq, s * s
    )
    return first + second


def fpa_combine(
    B: RationalFunction, C: RationalFunction, D: RationalFunction
) -> RationalFunction:
    """Growth of H *_L K from those of H, K, L: 1/A = 1/B + 1/C - 1/D."""
    if B.is_zero() or C.is_zero() or D.is_zero():
        raise ZeroDivisionError("growth functions must be nonzero")
    denom = C * D + B * D - B * C
    if denom.is_zero():
        raise ZeroDivisionError("1/B + 1/C - 1/D vanishes identically")
    return B * C * D / denom


def growth_odd_odd(params) -> RationalFunction:
    pr = _params(params)
    if pr.p % 2 == 0 or pr.q % 2 == 0:
        raise ValueError(f"odd-odd route needs both exponents odd, got ({pr.p}, {pr.q})")
    c_inf = infinite_cyclic_growth()
    B = c_inf * cyclic_growth_poly(pr.p)
    C = c_inf * cyclic_growth_poly(pr.q)
    return fpa_combine(B, C, c_inf)


def growth_generalized_odd(orders: Sequence[int]) -> RationalFunction:
    """Growth of <x_1, ..., x_r, z | x_1^p_1 = ... = x_r^p_r = z>, all p_i odd,
    by gluing one factor at a time along <z>."""
    orders = list(orders)
    if not orders:
        raise ValueError("need at least one exponent")
    for p in orders:
        if p < 3 or p % 2 == 0:
            raise ValueError(f"exponents must be odd and >= 3, got {p}")
    c_inf = infinite_cyclic_growth()
    acc = c_inf * cyclic_growth_poly(orders[0])
    for p in orders[1:]:
        acc = fpa_combine(acc, c_inf * cyclic_growth_poly(p), c_inf)
    return acc


def DE_polys(p: int) -> tuple[Polynomial, Polynomial]:
    """Split C_p - 1 for even p = 2n into D_p = 2t + ... + 2t^(n-1) and E_p = t^n.

    E_p marks the syllable x^n, the only one with two shortest spellings.
    """
    if p < 2 or p % 2:
        raise ValueError(f"p must be even and >= 2, got {p}")
    n = p // 2
    D = Polynomial((0,) + (2,) * (n - 1))
    return D, Polynomial.monomial(n)


def F_direct(p: int, r: int) -> Polynomial:
    D, E = DE_polys(p)
    total = ZERO
    for k in range(r + 1):
        total = total + (k + 1) * comb(r, k) * D ** (r - k) * E**k
    return total


def F_closed(p: int, r: int) -> Polynomial:
    _, E = DE_polys(p)
    if r == 0:
        return ONE
    c1 = cyclic_growth_poly(p) - 1
    return c1**r + r * E * c1 ** (r - 1)


def _geometric_parts(params: TorusParams):
    cp, cq = cyclic_growth_poly(params.p), cyclic_growth_poly(params.q)
    s = 1 - (cp - 1) * (cq - 1)
    return cp, cq, s


def components_even_odd(params):
    """(A1, A2, A3, A4) for p even, q odd.

    A1/A2: z-exponent positive/negative. A3/A4: z-exponent zero with the
    word starting in x (A3) or in y (A4).
    """
    pr = _params(params)
    if pr.p % 2 or pr.q % 2 == 0:
        raise ValueError(f"even-odd route needs p even and q odd, got ({pr.p}, {pr.q})")
    cp, cq, s = _geometric_parts(pr)
    _, E = DE_polys(pr.p)
    t_over = RationalFunction.make(T, Polynomial((1, -1)))
    A1 = t_over * RationalFunction.make(cp * cq, s)
    A2 = A1
    A3 = RationalFunction.make((cp - 1) * cq, s) + RationalFunction.make(E * cq, s * s)
    A4 = RationalFunction.make(cq, s) + RationalFunction.make(E * cq * (cq - 1), s * s)
    return A1, A2, A3, A4


def components_even_even(params):
    """(A1, A2, A_alpha, A_beta, A_gamma) for p, q both even."""
    pr = _params(params)
    if pr.p % 2 or pr.q % 2:
        raise ValueError(f"even-even route needs p, q even, got ({pr.p}, {pr.q})")
    cp, cq, s = _geometric_parts(pr)
    _, Ep = DE_polys(pr.p)
    _, Eq = DE_polys(pr.q)
    t_over = RationalFunction.make(T, Polynomial((1, -1)))
    A1 = t_over * RationalFunction.make(cp * cq, s)
    A2 = A1
    A_gamma = RationalFunction.make(cp * cq, s)
    A_alpha = A_gamma + RationalFunction.make(Ep * cq * cq, s * s)
    A_beta = A_gamma + RationalFunction.make(Eq * cp * cp, s * s)
    return A1, A2, A_alpha, A_beta, A_gamma


def growth_by_components(params) -> RationalFunction:
    """Assemble A(t) from the parity-appropriate case analysis."""
    pr = _params(params)
    if pr.p % 2 and pr.q % 2:
        return growth_odd_odd(pr)
    if pr.p % 2 == 0 and pr.q % 2 == 0:
        A1, A2, Aa, Ab, Ag = components_even_even(pr)
        return A1 + A2 + Aa + Ab - Ag
    if pr.p % 2:
        # odd-even: the group is symmetric in the two factors
        pr = pr.swapped()
    A1, A2, A3, A4 = components_even_odd(pr)
    return A1 + A2 + A3 + A4
