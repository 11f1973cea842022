"""Growth rate and Perron-type dominance for the torus link groups.

The poles of A(t) other than t = 1 are zeros of g = (C_p - 1)(C_q - 1) - 1.
Its smallest positive zero r0 is the radius of convergence, so the growth
rate is 1/r0, a zero of the reciprocal polynomial g* of -g. Dominance is
checked against the other zeros of g* (not against the minimal polynomial
of the growth rate).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from math import gcd

import mpmath

from .formulas import TorusParams, _params, denominator_g
from .group import SphereCounts
from .polyring import Polynomial, poly_divmod_exact, poly_gcd, reciprocal_polynomial

CERT_RADIUS = 1e-9


class Verdict(str, Enum):
    PERRON_DOMINANT = "PERRON_DOMINANT"
    EQUAL_MODULUS_DETECTED = "EQUAL_MODULUS_DETECTED"
    NOT_APPLICABLE_2_2 = "NOT_APPLICABLE_2_2"


class RootFindingError(ArithmeticError):
    pass


@dataclass(frozen=True)
class RootEstimate:
    re: float
    im: float
    radius: float

    @property
    def modulus(self) -> float:
        return abs(complex(self.re, self.im))

    def contains(self, z: complex, slack: float = 0.0) -> bool:
        return abs(complex(self.re, self.im) - z) <= self.radius + slack


def support_gcd(a: Polynomial) -> int:
    support = [k for k, c in enumerate(a.coeffs) if k > 0 and c != 0]
    if not support:
        raise ValueError("polynomial has no positive-degree terms")
    return reduce(gcd, support)


def smallest_positive_root(g: Polynomial, tol: float = 1e-12) -> float:
    """Bisection on [0, 1] for g with g(0) < 0 < g(1)."""
    if not g(0) < 0 < g(1):
        raise ValueError(f"need g(0) < 0 < g(1); got g(0) = {g(0)}, g(1) = {g(1)}")
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        v = g(mid)
        if v == 0:
            return mid
        if v < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def growth_rate(params, tol: float = 1e-12) -> float:
    pr = _params(params)
    if (pr.p, pr.q) == (2, 2):
        return 1.0
    return 1.0 / smallest_positive_root(denominator_g(pr), tol)


def derivative(a: Polynomial) -> Polynomial:
    return Polynomial(tuple(k * c for k, c in enumerate(a.coeffs))[1:])


def squarefree_parts(a: Polynomial) -> list[tuple[Polynomial, int]]:
    """[(e_k, k)] with a = const * prod e_k^k and each e_k squarefree."""
    levels = []
    s = a
    while s.degree > 0:
        g = poly_gcd(s, derivative(s))
        levels.append(poly_divmod_exact(s.primitive(), g))
        s = g
    parts = []
    for k, lev in enumerate(levels, start=1):
        nxt = levels[k] if k < len(levels) else Polynomial((1,))
        e = poly_divmod_exact(lev.primitive(), nxt.primitive())
        if e.degree > 0:
            parts.append((e, k))
    return parts


def all_roots(
    a: Polynomial, max_radius: float = CERT_RADIUS, max_iter: int = 1000, dps: int = 50
) -> list[RootEstimate]:
    """All complex zeros of a, repeated by multiplicity, each inside a
    certified disk. The squarefree factors are solved separately."""
    if a.degree < 1:
        raise ValueError("need degree >= 1")
    out = []
    for e, k in squarefree_parts(a):
        out.extend(_simple_roots(e, max_radius, max_iter, dps) * k)
    return out


def _simple_roots(a: Polynomial, max_radius: float, max_iter: int, dps: int) -> list[RootEstimate]:
    # Durand-Kerner in extended precision. With Weierstrass corrections W_i,
    # the disks |z - z_i| <= deg * |W_i| cover every zero and a disk disjoint
    # from the others holds exactly one.
    n = a.degree
    with mpmath.workdps(dps):
        lc = mpmath.mpf(a.lead)
        coeffs = [mpmath.mpf(c) / lc for c in a.coeffs]

        def f(z):
            acc = mpmath.mpc(0)
            for c in reversed(coeffs):
                acc = acc * z + c
            return acc

        bound = 1 + max(abs(c) for c in coeffs[:-1])
        seed = mpmath.mpc("0.4", "0.9")
        z = [bound * seed**k for k in range(n)]
        tight = mpmath.mpf(10) ** (10 - dps)
        best = None
        for _ in range(max_iter):
            w = []
            for i in range(n):
                prod = mpmath.mpc(1)
                for j in range(n):
                    if j != i:
                        prod *= z[i] - z[j]
                w.append(f(z[i]) / prod)
            radii = [n * abs(wi) for wi in w]
            if _certified(z, radii, max_radius):
                best = (list(z), radii)
                if _certified(z, radii, tight):
                    break
            z = [zi - wi for zi, wi in zip(z, w)]
        if best is None:
            raise RootFindingError(f"roots of {a} not certified after {max_iter} iterations")
        z, radii = best
        out = []
        for zi, r in zip(z, radii):
            re, im = float(zi.real), float(zi.imag)
            # the disk must also absorb rounding of its centre to floats
            rad = r + abs(zi - mpmath.mpc(re, im))
            out.append(RootEstimate(re, im, float(rad) * (1 + 1e-12) + 1e-300))
        return out


def _certified(z, radii, max_radius) -> bool:
    if any(r >= max_radius for r in radii):
        return False
    for i in range(len(z)):
        for j in range(i + 1, len(z)):
            if abs(z[i] - z[j]) <= radii[i] + radii[j]:
                return False
    return True


@dataclass
class PerronReport:
    p: int
    q: int
    r0: float
    omega: float
    lemma_gcd: int
    dominance_margin: float | None
    verdict: Verdict
    roots: list[RootEstimate] = field(default_factory=list, compare=False)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "r0": _round12(self.r0),
            "omega": _round12(self.omega),
            "lemma_gcd": self.lemma_gcd,
            "dominance_margin": _round12(self.dominance_margin),
            "verdict": self.verdict.value,
        }


def _round12(x):
    return None if x is None else float(f"{x:.12g}")


def perron_check(params, margin: float = 1e-7) -> PerronReport:
    """Compare the growth rate with every other zero of g*.

    PERRON_DOMINANT when every other zero, widened by its certification
    radius, has modulus below omega - margin; otherwise
    EQUAL_MODULUS_DETECTED, with the signed gap in dominance_margin.
    """
    pr = _params(params)
    g = denominator_g(pr)
    lemma_gcd = support_gcd(g)
    if (pr.p, pr.q) == (2, 2):
        return PerronReport(2, 2, 1.0, 1.0, lemma_gcd, None, Verdict.NOT_APPLICABLE_2_2)
    r0 = smallest_positive_root(g)
    omega = 1.0 / r0
    gstar = reciprocal_polynomial(-g)
    roots = all_roots(gstar)
    top = min(range(len(roots)), key=lambda i: abs(complex(roots[i].re, roots[i].im) - omega))
    others = [r for i, r in enumerate(roots) if i != top]
    worst = max(r.modulus + r.radius for r in others)
    dom = omega - max(r.modulus for r in others)
    if worst + roots[top].radius < omega - margin:
        verdict = Verdict.PERRON_DOMINANT
    else:
        verdict = Verdict.EQUAL_MODULUS_DETECTED
    return PerronReport(pr.p, pr.q, r0, omega, lemma_gcd, dom, verdict, roots)


def perron_scan(max_pq: int, margin: float = 1e-7) -> list[PerronReport]:
    return [
        perron_check(TorusParams(p, q), margin)
        for p in range(2, max_pq + 1)
        for q in range(p, max_pq + 1)
    ]


def reports_to_json(reports: list[PerronReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)


def empirical_rate(counts: SphereCounts | list[int]) -> float:
    """a_N^(1/N): a convergence diagnostic, not a certificate."""
    c = counts.counts if isinstance(counts, SphereCounts) else list(counts)
    N = len(c) - 1
    if N < 4:
        raise ValueError("need at least five terms")
    return float(c[N]) ** (1.0 / N)
