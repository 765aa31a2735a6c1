"""
Affine Weyl group arithmetic in the presentation ``t_mu v`` with ``mu`` in the
coroot lattice and ``v`` in the finite Weyl group.

Affine real roots are pairs ``(beta, k)`` standing for ``beta + k delta`` with
``beta`` a finite root in weight coordinates.  ``t_mu v`` sends ``(beta, k)`` to
``(v beta, k - <mu, v beta>)``.  The affine simple root ``alpha_0`` is
``(-theta, 1)`` and ``s_0 = t_{theta^vee} s_theta``.

>>> from affschub.cartan import build_root_system
>>> G = build_root_system("A", 1).affine
>>> x = G.s(0) * G.s(1)
>>> x.mu, x.fin.is_identity, x.word
((1,), True, (0, 1))
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .cartan import BudgetExceeded, FiniteWeylElement, RootSystem, Vector, pair


class MixedRootSystems(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AffineWeylElement:
    mu: Vector
    fin: FiniteWeylElement
    group: "AffineWeylGroup" = field(repr=False)

    def __eq__(self, other):
        return (isinstance(other, AffineWeylElement) and self.mu == other.mu
                and self.fin.mat == other.fin.mat)

    def __hash__(self):
        return hash((self.mu, self.fin.mat))

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        return compose(self, other)

    def __lt__(self, other):
        # sort key only: length, then lex word
        return (self.length, self.word) < (other.length, other.word)

    def inverse(self) -> "AffineWeylElement":
        vi = self.fin.inverse
        return AffineWeylElement(tuple(-c for c in vi.coact(self.mu)), vi, self.group)

    def act_root(self, beta: Vector, k: int) -> tuple[Vector, int]:
        vb = self.fin.act(beta)
        return vb, k - pair(self.mu, vb)

    def act_weight(self, lam: Sequence[int]) -> Vector:
        """Level-zero action: translations act trivially."""
        return self.fin.act(lam)

    @property
    def word(self) -> tuple[int, ...]:
        return self.group.reduced_word(self)

    @property
    def length(self) -> int:
        return len(self.group.reduced_word(self))

    @property
    def is_finite(self) -> bool:
        return not any(self.mu)

    @property
    def translation(self) -> "AffineWeylElement":
        return self.group.translation(self.mu)

    def __repr__(self):
        w = self.word
        return "e" if not w else "s" + "s".join(str(i) for i in w)


class AffineWeylGroup:
    """The affine Weyl group of a root system, with per-group caches."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.W = rs.weyl
        zero = (0,) * rs.rank
        self.identity = AffineWeylElement(zero, self.W.identity, self)
        s_theta = self.W.reflection(rs.highest_root)
        self._simple = {0: AffineWeylElement(rs.highest_coroot, s_theta, self)}
        for i in range(1, rs.rank + 1):
            self._simple[i] = AffineWeylElement(zero, self.W.simple(i), self)
        self._affine_simple_roots = {0: (rs.classical_root(0), 1)}
        for i in range(1, rs.rank + 1):
            self._affine_simple_roots[i] = (rs.simple_root_weight(i), 0)
        self._word_cache: dict[AffineWeylElement, tuple[int, ...]] = {self.identity: ()}
        self._leq_cache: dict[tuple[AffineWeylElement, AffineWeylElement], bool] = {}
        self._ball_cache: dict[int, list[AffineWeylElement]] = {}
        self._interval_cache: dict[AffineWeylElement, frozenset] = {}

    @property
    def nodes(self) -> range:
        return range(self.rs.rank + 1)

    @property
    def finite_nodes(self) -> range:
        return range(1, self.rs.rank + 1)

    def s(self, i: int) -> AffineWeylElement:
        if i not in self._simple:
            raise IndexError(f"affine node {i} out of range 0..{self.rs.rank}")
        return self._simple[i]

    def from_word(self, word: Iterable[int]) -> AffineWeylElement:
        x = self.identity
        for i in word:
            x = compose(x, self.s(i))
        return x

    def translation(self, mu: Sequence[int]) -> AffineWeylElement:
        return AffineWeylElement(tuple(mu), self.W.identity, self)

    def finite(self, v: FiniteWeylElement) -> AffineWeylElement:
        return AffineWeylElement((0,) * self.rs.rank, v, self)

    def is_positive(self, beta: Vector, k: int) -> bool:
        return k > 0 or (k == 0 and self.rs.is_positive_weight_root(beta))

    def is_left_descent(self, x: AffineWeylElement, i: int) -> bool:
        beta, k = self._affine_simple_roots[i]
        return not self.is_positive(*x.inverse().act_root(beta, k))

    def is_right_descent(self, x: AffineWeylElement, i: int) -> bool:
        beta, k = self._affine_simple_roots[i]
        return not self.is_positive(*x.act_root(beta, k))

    def reduced_word(self, x: AffineWeylElement) -> tuple[int, ...]:
        """Descent walk: peel off the lex-least left descent until the identity."""
        cache = self._word_cache
        if x in cache:
            return cache[x]
        stack = []
        y = x
        while y not in cache:
            i = next(i for i in self.nodes if self.is_left_descent(y, i))
            stack.append((y, i))
            y = compose(self._simple[i], y)
        w = cache[y]
        for y, i in reversed(stack):
            w = (i,) + w
            cache[y] = w
        return cache[x]

    def inversion_count(self, x: AffineWeylElement) -> int:
        """Closed-form count of positive affine roots made negative by ``x``."""
        rs = self.rs
        total = 0
        for beta in rs.positive_roots_weight:
            vb = x.fin.act(beta)
            m = pair(x.mu, vb)
            vb_pos = rs.is_positive_weight_root(vb)
            # roots beta + k delta, k >= 0
            total += max(0, m) + (1 if (m >= 0 and not vb_pos) else 0)
            # roots -beta + k delta, k >= 1
            total += max(0, -m - 1) + (1 if (-m >= 1 and vb_pos) else 0)
        return total

    def right_descents(self, x: AffineWeylElement) -> list[int]:
        return [i for i in self.nodes if self.is_right_descent(x, i)]

    def left_descents(self, x: AffineWeylElement) -> list[int]:
        return [i for i in self.nodes if self.is_left_descent(x, i)]

    def ball(self, radius: int) -> list[AffineWeylElement]:
        """All elements of length at most ``radius``, sorted by (length, word)."""
        if radius < 0:
            return []
        if radius in self._ball_cache:
            return self._ball_cache[radius]
        cap = self.rs.cap
        layer = [self.identity]
        out = [self.identity]
        for ell in range(1, radius + 1):
            nxt = set()
            for x in layer:
                for i in self.nodes:
                    if not self.is_right_descent(x, i):
                        nxt.add(compose(x, self._simple[i]))
            layer = sorted(nxt, key=lambda y: y.word)
            out.extend(layer)
            if len(out) > cap:
                raise BudgetExceeded(f"ball of radius {radius} exceeds cap {cap}")
        self._ball_cache[radius] = out
        return out

    def lower_interval(self, w: AffineWeylElement) -> frozenset:
        """{v : v <= w} via the subword property."""
        if w in self._interval_cache:
            return self._interval_cache[w]
        word = w.word
        if not word:
            res = frozenset([self.identity])
        else:
            # v <= w iff v <= s_i w' or v = s_i v' with v' <= w' (w = s_i w' reduced)
            rest = self.lower_interval(compose(self._simple[word[0]], w))
            s = self._simple[word[0]]
            res = frozenset(rest | {compose(s, v) for v in rest})
        self._interval_cache[w] = res
        return res

    def bruhat_leq(self, v: AffineWeylElement, w: AffineWeylElement) -> bool:
        key = (v, w)
        cache = self._leq_cache
        if key in cache:
            return cache[key]
        if w == self.identity:
            res = v == self.identity
        elif v.length > w.length:
            res = False
        else:
            i = w.word[0]
            si = self._simple[i]
            sw = compose(si, w)
            if self.is_left_descent(v, i):
                res = self.bruhat_leq(compose(si, v), sw)
            else:
                res = self.bruhat_leq(v, sw)
        cache[key] = res
        return res

    def demazure_product(self, x: AffineWeylElement, y: AffineWeylElement) -> AffineWeylElement:
        z = x
        for i in y.word:
            if not self.is_right_descent(z, i):
                z = compose(z, self._simple[i])
        return z

    def demazure_word(self, word: Iterable[int]) -> AffineWeylElement:
        z = self.identity
        for i in word:
            if not self.is_right_descent(z, i):
                z = compose(z, self._simple[i])
        return z

    def min_coset_rep(self, x: AffineWeylElement) -> AffineWeylElement:
        y = x
        while True:
            for i in self.finite_nodes:
                if self.is_right_descent(y, i):
                    y = compose(y, self._simple[i])
                    break
            else:
                return y

    def is_grassmannian(self, x: AffineWeylElement) -> bool:
        return not any(self.is_right_descent(x, i) for i in self.finite_nodes)

    def factorizations(self, w: AffineWeylElement, mode: str = "length_additive",
                       right_factor_finite: bool = True) -> list[tuple[AffineWeylElement, AffineWeylElement, int]]:
        """Pairs ``(w1, w2, sign)`` with ``w = w1 w2`` length-additively, or ``w1 * w2 = w``.

        The sign is ``(-1)^(l(w1) + l(w2) - l(w))`` in Demazure mode and ``+1`` otherwise.
        """
        below = self.lower_interval(w)
        rights = [v for v in below if v.is_finite] if right_factor_finite else list(below)
        lw = w.length
        out = []
        if mode == "length_additive":
            for w2 in rights:
                w1 = compose(w, w2.inverse())
                if w1.length + w2.length == lw:
                    out.append((w1, w2, 1))
        elif mode == "demazure":
            for w2 in rights:
                for w1 in below:
                    if self.demazure_product(w1, w2) == w:
                        out.append((w1, w2, (-1) ** ((w1.length + w2.length - lw) % 2)))
        else:
            raise ValueError(f"unknown factorization mode {mode!r}")
        out.sort(key=lambda t: (-t[0].length, t[0].word, t[1].length, t[1].word))
        return out

    def coset_data(self, x: AffineWeylElement):
        """``(t_mu, v, is_grassmannian, min_coset_rep)`` for ``x = t_mu v``."""
        return (self.translation(x.mu), self.finite(x.fin), self.is_grassmannian(x),
                self.min_coset_rep(x))

    def finite_elements(self) -> list[AffineWeylElement]:
        return [self.finite(v) for v in self.W.elements]

    def element_from_json(self, doc: dict) -> AffineWeylElement:
        """``{"word": [...], "mu": [...]}``; the word is authoritative, mu is checked."""
        x = self.from_word(doc["word"])
        if "mu" in doc and tuple(doc["mu"]) != x.mu:
            raise ValueError(f"mu {doc['mu']} disagrees with word {doc['word']} (expected {list(x.mu)})")
        return x

    def translations_upto(self, radius: int) -> list[AffineWeylElement]:
        """Translations ``t_mu`` with ``l(t_mu) <= radius``."""
        return [x for x in self.ball(radius) if x.fin.is_identity]


def element_to_json(x: AffineWeylElement) -> dict:
    return {"mu": list(x.mu), "word": list(x.word)}


def compose(x: AffineWeylElement, y: AffineWeylElement) -> AffineWeylElement:
    """``(mu, w)(nu, v) = (mu + w nu, w v)``."""
    if x.group is not y.group:
        raise MixedRootSystems("cannot multiply elements of different affine Weyl groups")
    wn = x.fin.coact(y.mu)
    return AffineWeylElement(tuple(a + b for a, b in zip(x.mu, wn)), x.fin * y.fin, x.group)


def bruhat_leq_subword(v: AffineWeylElement, w: AffineWeylElement) -> bool:
    """Brute-force subword oracle on the stored reduced word of ``w``."""
    G = w.group
    word = w.word
    for mask in product((0, 1), repeat=len(word)):
        if G.from_word(a for a, m in zip(word, mask) if m) == v:
            return True
    return False


def reduced_words(x: AffineWeylElement) -> list[tuple[int, ...]]:
    """All reduced words of ``x``, lex-sorted."""
    G = x.group
    if x == G.identity:
        return [()]
    return sorted((i,) + rest for i in G.left_descents(x) for rest in reduced_words(compose(G.s(i), x)))
