"""Element arithmetic and sphere-counting oracles for
<x_1, ..., x_r, z | x_1^p_1 = ... = x_r^p_r = z>.

The torus link group is the case r = 2. Every element is written uniquely
as z^i times a reduced word in the free product Z_p1 * ... * Z_pr, whose
syllables carry exponents in [1, p_l - 1]. Overflowing a syllable past p_l
pushes one factor of z (central) into i.

Two independent counters of the spheres a_n:

* ``sphere_counts_bfs`` walks the Cayley graph and dedupes on canonical forms.
* ``sphere_counts_grammar`` counts minimal normal words z^i u directly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

LETTERS = "xyabcdefgh"


class ResourceLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CanonicalElement:
    z_exp: int = 0
    syllables: tuple[tuple[int, int], ...] = ()  # (letter index, exponent)

    def is_identity(self) -> bool:
        return self.z_exp == 0 and not self.syllables

    def __str__(self) -> str:
        parts = [f"z^{self.z_exp}"] if self.z_exp else []
        parts += [f"{LETTERS[l]}^{e}" for l, e in self.syllables]
        return " ".join(parts) or "1"


def _orders(params) -> tuple[int, ...]:
    """Accept TorusParams, a (p, q) pair or any sequence of exponents."""
    if hasattr(params, "p") and hasattr(params, "q"):
        orders = (params.p, params.q)
    else:
        orders = tuple(int(x) for x in params)
    if not orders or any(p < 2 for p in orders):
        raise ValueError(f"exponents must all be >= 2, got {orders}")
    return orders


def identity() -> CanonicalElement:
    return CanonicalElement()


def check_canonical(a: CanonicalElement, params) -> None:
    orders = _orders(params)
    prev = None
    for l, e in a.syllables:
        if not 0 <= l < len(orders):
            raise ValueError(f"unknown letter {l}")
        if not 1 <= e < orders[l]:
            raise ValueError(f"exponent {e} out of range for letter {LETTERS[l]}")
        if l == prev:
            raise ValueError("adjacent syllables share a letter")
        prev = l


def multiply(a: CanonicalElement, b: CanonicalElement, params) -> CanonicalElement:
    orders = _orders(params)
    left = list(a.syllables)
    z = a.z_exp + b.z_exp
    right = b.syllables
    i = 0
    while left and i < len(right) and left[-1][0] == right[i][0]:
        l = right[i][0]
        carry, e = divmod(left[-1][1] + right[i][1], orders[l])
        z += carry
        left.pop()
        i += 1
        if e:
            left.append((l, e))
            break
    left.extend(right[i:])
    return CanonicalElement(z, tuple(left))


def inverse(a: CanonicalElement, params) -> CanonicalElement:
    # x^-e = z^-1 x^(p-e)
    orders = _orders(params)
    syl = tuple((l, orders[l] - e) for l, e in reversed(a.syllables))
    return CanonicalElement(-a.z_exp - len(syl), syl)


def generators(params) -> list[CanonicalElement]:
    """x_1, x_1^-1, ..., x_r, x_r^-1, z, z^-1 (six elements for the torus group)."""
    orders = _orders(params)
    gens = []
    for l, p in enumerate(orders):
        gens.append(CanonicalElement(0, ((l, 1),)))
        gens.append(CanonicalElement(-1, ((l, p - 1),)))
    gens.append(CanonicalElement(1, ()))
    gens.append(CanonicalElement(-1, ()))
    return gens


def word_to_element(word: Sequence[tuple[int, int]], z_exp: int, params) -> CanonicalElement:
    """Evaluate z^z_exp * prod letter^exponent (exponents may be negative)."""
    orders = _orders(params)
    g = CanonicalElement(z_exp, ())
    for l, e in word:
        carry, r = divmod(e, orders[l])
        g = multiply(g, CanonicalElement(carry, ((l, r),) if r else ()), orders)
    return g


@dataclass(frozen=True)
class SphereCounts:
    counts: tuple[int, ...]
    orders: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.counts) - 1

    @property
    def p(self) -> int:
        return self.orders[0]

    @property
    def q(self) -> int:
        return self.orders[1]

    def to_json(self) -> dict:
        out = {}
        if len(self.orders) == 2:
            out["p"], out["q"] = self.orders
        else:
            out["orders"] = list(self.orders)
        out["counts"] = [str(c) for c in self.counts]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SphereCounts":
        orders = tuple(data["orders"]) if "orders" in data else (data["p"], data["q"])
        return cls(tuple(int(c) for c in data["counts"]), orders)


def sphere_counts_to_json(sc: SphereCounts) -> str:
    return json.dumps(sc.to_json())


class _Encoder:
    """Packs a canonical element into one int: syllable codes are base-B digits
    (last syllable lowest), and the z-exponent rides in a fixed-width slot."""

    def __init__(self, orders: tuple[int, ...], zbound: int):
        self.orders = orders
        self.offsets = []
        off = 0
        for p in orders:
            self.offsets.append(off)
            off += p - 1
        self.B = off + 1
        self.letter_of = [None] * self.B
        self.exp_of = [0] * self.B
        for l, p in enumerate(orders):
            for e in range(1, p):
                c = self.offsets[l] + e
                self.letter_of[c] = l
                self.exp_of[c] = e
        self.zbound = zbound
        self.zspan = 2 * zbound + 1

    def code(self, l: int, e: int) -> int:
        return self.offsets[l] + e

    def encode(self, g: CanonicalElement) -> int:
        if abs(g.z_exp) > self.zbound:
            raise OverflowError(f"|z exponent| {abs(g.z_exp)} exceeds bound {self.zbound}")
        w = 0
        for l, e in g.syllables:
            w = w * self.B + self.code(l, e)
        return w * self.zspan + g.z_exp + self.zbound

    def decode(self, key: int) -> CanonicalElement:
        w, zz = divmod(key, self.zspan)
        syl = []
        while w:
            w, c = divmod(w, self.B)
            syl.append((self.letter_of[c], self.exp_of[c]))
        return CanonicalElement(zz - self.zbound, tuple(reversed(syl)))

    def step_table(self):
        """For every (last syllable code, generator) the edit to apply:
        (pop last?, code to push or 0, z carry)."""
        table = []
        for last in range(self.B):
            row = []
            for l, p in enumerate(self.orders):
                for delta in (1, -1):
                    if last and self.letter_of[last] == l:
                        e = self.exp_of[last] + delta
                        if e == 0:
                            row.append((True, 0, 0))
                        elif e == p:
                            row.append((True, 0, 1))
                        else:
                            row.append((True, self.code(l, e), 0))
                    elif delta == 1:
                        row.append((False, self.code(l, 1), 0))
                    else:
                        row.append((False, self.code(l, p - 1), -1))
            row.append((False, 0, 1))
            row.append((False, 0, -1))
            table.append(row)
        return table


def _bfs(orders: tuple[int, ...], N: int, max_elements: int | None) -> list[int]:
    enc = _Encoder(orders, N)
    B, zspan, zb = enc.B, enc.zspan, enc.zbound
    table = enc.step_table()
    counts = [1]
    prev: set[int] = set()
    cur = {zb}  # identity
    for n in range(1, N + 1):
        nxt = set()
        for key in cur:
            w, zz = divmod(key, zspan)
            last = w % B
            for pop, push, carry in table[last]:
                nz = zz + carry
                if not 0 <= nz < zspan:
                    raise OverflowError("z exponent left the encoded range")
                nw = w // B if pop else w
                if push:
                    nw = nw * B + push
                k = nw * zspan + nz
                if k not in cur and k not in prev:
                    nxt.add(k)
        if max_elements is not None and len(nxt) + len(cur) > max_elements:
            raise ResourceLimitExceeded(
                f"sphere {n} needs more than {max_elements} stored elements"
            )
        counts.append(len(nxt))
        prev, cur = cur, nxt
    return counts


def sphere_counts_bfs(params, N: int, max_elements: int | None = None) -> SphereCounts:
    """Sphere sizes of the Cayley graph on x^{+-1}, y^{+-1}, z^{+-1}.

    Generators are closed under inversion, so layer n+1 only touches layers
    n and n-1; two layers are kept in memory.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    orders = _orders(params)
    return SphereCounts(tuple(_bfs(orders, N, max_elements)), orders)


def sphere_counts_bfs_slow(params, N: int) -> SphereCounts:
    """Same as sphere_counts_bfs but through ``multiply`` on CanonicalElement."""
    orders = _orders(params)
    gens = generators(orders)
    seen = {identity()}
    layer = [identity()]
    counts = [1]
    for _ in range(N):
        nxt = []
        for g in layer:
            for s in gens:
                h = multiply(g, s, orders)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        counts.append(len(nxt))
        layer = nxt
    return SphereCounts(tuple(counts), orders)


def quotient_sphere_counts(params, N: int) -> SphereCounts:
    """Sphere sizes of the free product of cyclic groups Z_p1 * ... * Z_pr on
    the images of the generators (z maps to the identity)."""
    orders = _orders(params)
    gens = [(l, d) for l in range(len(orders)) for d in (1, -1)]
    seen = {()}
    layer = [()]
    counts = [1]
    for _ in range(N):
        nxt = []
        for w in layer:
            for l, d in gens:
                if w and w[-1][0] == l:
                    e = (w[-1][1] + d) % orders[l]
                    h = w[:-1] + (((l, e),) if e else ())
                else:
                    h = w + ((l, d % orders[l]),)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        counts.append(len(nxt))
        layer = nxt
    return SphereCounts(tuple(counts), orders)


# ---------------------------------------------------------------------------
# minimal normal words
#
# A word is z^i u with u an alternating product of syllables letter^j,
# 1 <= |j| <= p_l // 2. For even p_l = 2n both x^n and x^-n appear ("big"
# syllables; they differ by a factor z). Side conditions:
#   i > 0: no negative big syllable;  i < 0: no positive big syllable;
#   i = 0: type alpha (first even letter: positives before negatives, every
#          big syllable of the second even letter negative) or type beta
#          (first even letter all positive, second even letter positives
#          before negatives). With only one even letter this reduces to
#          "positives before negatives".
# Beyond two letters only odd exponents are supported.
# ---------------------------------------------------------------------------

def _check_grammar_orders(orders: tuple[int, ...]) -> None:
    if len(orders) > 2 and any(p % 2 == 0 for p in orders):
        raise ValueError("normal words for more than two factors need odd exponents")


def _syllable_choices(orders: tuple[int, ...]):
    """Per letter: list of (exponent, length, big sign or 0)."""
    out = []
    for p in orders:
        h = p // 2
        ch = []
        for j in range(1, h + 1):
            big = p % 2 == 0 and j == h
            ch.append((j, j, 1 if big else 0))
            ch.append((-j, j, -1 if big else 0))
        out.append(ch)
    return out


# zero-exponent state: (alpha_ok, beta_ok, neg_seen_first, neg_seen_second)
_START0 = (True, True, False, False)


def _advance_zero(state, letter: int, sign: int):
    alpha, beta, neg0, neg1 = state
    if sign == 0:
        return state
    if letter == 0:
        if sign > 0:
            alpha = alpha and not neg0
        else:
            beta = False
            neg0 = True
    else:
        if sign > 0:
            alpha = False
            beta = beta and not neg1
        else:
            neg1 = True
    if not (alpha or beta):
        return None
    return (alpha, beta, neg0, neg1)


def _advance(state, zsign: int, letter: int, sign: int):
    if zsign == 0:
        return _advance_zero(state, letter, sign)
    if sign and sign != zsign:
        return None
    return state


def minimal_normal_words(params, N: int) -> Iterator[tuple[int, tuple[tuple[int, int], ...]]]:
    """Yield every minimal normal word (i, u) of length <= N, u as a tuple of
    (letter, signed exponent)."""
    orders = _orders(params)
    _check_grammar_orders(orders)
    choices = _syllable_choices(orders)

    def rec(zsign, state, last, budget, word):
        yield word
        for l, ch in enumerate(choices):
            if l == last:
                continue
            for j, ln, sign in ch:
                if ln > budget:
                    continue
                st = _advance(state, zsign, l, sign)
                if st is None:
                    continue
                yield from rec(zsign, st, l, budget - ln, word + ((l, j),))

    for i in range(-N, N + 1):
        zsign = (i > 0) - (i < 0)
        for u in rec(zsign, _START0, None, N - abs(i), ()):
            yield i, u


def word_length(i: int, u: Sequence[tuple[int, int]]) -> int:
    return abs(i) + sum(abs(j) for _, j in u)


def sphere_counts_grammar(params, N: int) -> SphereCounts:
    """Count minimal normal words by length.

    Same grammar as ``minimal_normal_words``, explored depth first with a
    remaining-length budget; subtrees are memoized on (state, budget).
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    orders = _orders(params)
    _check_grammar_orders(orders)
    choices = _syllable_choices(orders)

    @lru_cache(maxsize=None)
    def exact(zsign, state, last, budget) -> int:
        # words continuing from here whose remaining length is exactly budget
        total = 1 if budget == 0 else 0
        for l, ch in enumerate(choices):
            if l == last:
                continue
            for _, ln, sign in ch:
                if ln > budget:
                    continue
                st = _advance(state, zsign, l, sign)
                if st is not None:
                    total += exact(zsign, st, l, budget - ln)
        return total

    counts = []
    for n in range(N + 1):
        a = exact(0, _START0, None, n)
        for k in range(1, n + 1):
            a += exact(1, _START0, None, n - k) + exact(-1, _START0, None, n - k)
        counts.append(a)
    return SphereCounts(tuple(counts), orders)
