"""
Localized classes on the affine flag variety.

A class is a function ``Ŵ -> coefficient`` together with a radius ``L``: values
are guaranteed for every ``x`` with ``l(x) <= L``.  Classes built from first
principles (Schubert classes, line bundles, constants) are *extendable*: they
can be evaluated exactly at any point.  Everything derived from a
non-extendable class inherits its radius bookkeeping, and reading past the
radius raises :class:`TruncationError` instead of returning a silent zero.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Mapping

from ..affweyl import AffineWeylElement, compose, element_to_json
from ..coeffring import Theory, _Sparse, exact_divide
from ..nilhecke import GROUP, NilHeckeElement, expand_group_element, identity, lmul_generator


class TruncationError(LookupError):
    """A class was read outside its validity radius."""


class TheoryMismatch(ValueError):
    pass


class LocalizedClass:
    """Function on the affine Weyl group with explicit validity radius."""

    __slots__ = ("theory", "radius", "extendable", "_fn", "_cache", "label")

    def __init__(self, theory: Theory, radius: int, fn: Callable[[AffineWeylElement], _Sparse],
                 extendable: bool = False, label: str = ""):
        self.theory = theory
        self.radius = radius
        self.extendable = extendable
        self._fn = fn
        self._cache: dict = {}
        self.label = label

    def __call__(self, x: AffineWeylElement) -> _Sparse:
        c = self._cache.get(x)
        if c is not None:
            return c
        if not self.extendable and x.length > self.radius:
            raise TruncationError(f"{self.label or 'class'} read at {x!r} (length {x.length}) beyond radius {self.radius}")
        c = self._fn(x)
        self._cache[x] = c
        return c

    def values(self, radius: int | None = None) -> dict[AffineWeylElement, _Sparse]:
        """Materialize the nonzero values on ``ball(radius)``."""
        r = self.radius if radius is None else radius
        out = {}
        for x in self.theory.rs.affine.ball(r):
            v = self(x)
            if not v.is_zero():
                out[x] = v
        return out

    def agrees(self, other: "LocalizedClass", points: Iterable[AffineWeylElement]):
        """First point where the two classes differ, or None."""
        for x in points:
            if self(x) != other(x):
                return x
        return None

    def common_points(self, other: "LocalizedClass") -> list[AffineWeylElement]:
        return self.theory.rs.affine.ball(min(self.radius, other.radius))

    def __add__(self, other: "LocalizedClass") -> "LocalizedClass":
        _same(self, other)
        return LocalizedClass(self.theory, min(self.radius, other.radius), lambda x: self(x) + other(x),
                              self.extendable and other.extendable)

    def __sub__(self, other: "LocalizedClass") -> "LocalizedClass":
        _same(self, other)
        return LocalizedClass(self.theory, min(self.radius, other.radius), lambda x: self(x) - other(x),
                              self.extendable and other.extendable)

    def __neg__(self) -> "LocalizedClass":
        return LocalizedClass(self.theory, self.radius, lambda x: -self(x), self.extendable)

    def scale(self, q: _Sparse | int) -> "LocalizedClass":
        """Plain scalar multiplication (the ``q .`` action)."""
        return LocalizedClass(self.theory, self.radius, lambda x: self(x) * q, self.extendable)

    def to_json(self) -> dict:
        vals = self.values()
        return {"theory": self.theory.name, "radius": self.radius,
                "values": [{"element": element_to_json(x), "coeff": vals[x].to_json()} for x in sorted(vals)]}

    def __repr__(self):
        return f"LocalizedClass({self.label or '?'}, {self.theory.name}, radius={self.radius})"


def _same(a: LocalizedClass, b: LocalizedClass):
    if a.theory != b.theory:
        raise TheoryMismatch(f"{a.theory.name} vs {b.theory.name}")


def from_values(theory: Theory, radius: int, values: Mapping[AffineWeylElement, _Sparse],
                label: str = "") -> LocalizedClass:
    """Class known exactly on ``ball(radius)``; missing points in the ball are zero."""
    vals = dict(values)
    zero = theory.zero
    return LocalizedClass(theory, radius, lambda x: vals.get(x, zero), False, label)


def class_from_json(theory: Theory, doc: Mapping) -> LocalizedClass:
    if doc.get("theory", theory.name) != theory.name:
        raise TheoryMismatch(f"document theory {doc['theory']} != {theory.name}")
    G = theory.rs.affine
    vals = {G.element_from_json(v["element"]): theory.coeff_from_json(v["coeff"]) for v in doc["values"]}
    return from_values(theory, int(doc["radius"]), vals)


def constant_class(theory: Theory, q: _Sparse, radius: int = 0) -> LocalizedClass:
    return LocalizedClass(theory, radius, lambda x: q, True, "const")


# ------------------------------------------------------------ Schubert data

@lru_cache(maxsize=None)
def _restricted(theory: Theory, root: AffineWeylElement, x: AffineWeylElement) -> NilHeckeElement:
    """``x`` expanded in the X-basis, keeping only terms indexed by ``[e, root]``."""
    G = theory.rs.affine
    if x == G.identity:
        return identity(theory)
    ideal = G.lower_interval(root)
    i = x.word[0]
    rest = _restricted(theory, root, compose(G.s(i), x))
    step = rest + lmul_generator(i, rest).scale(theory.root_factor(i))
    return NilHeckeElement(theory, {w: c for w, c in step.terms.items() if w in ideal})


def localize_interval(theory: Theory, root: AffineWeylElement, x: AffineWeylElement) -> NilHeckeElement:
    """``sum_{u <= root} psi^u(x) X_u``."""
    return _restricted(theory, root, x)


def schubert_value(theory: Theory, v: AffineWeylElement, x: AffineWeylElement,
                   root: AffineWeylElement | None = None) -> _Sparse:
    if not theory.rs.affine.bruhat_leq(v, x):
        return theory.zero
    return _restricted(theory, root or v, x).coeff(v)


def schubert_class(theory: Theory, v: AffineWeylElement, radius: int,
                   root: AffineWeylElement | None = None) -> LocalizedClass:
    """``psi^v`` (K) or ``xi^v`` (H)."""
    return LocalizedClass(theory, radius, lambda x: schubert_value(theory, v, x, root), True, f"psi^{v!r}")


class SchubertTable:
    """Triangular array ``c[v][w] = psi^v(w)`` over ``ball(radius)``."""

    def __init__(self, theory: Theory, radius: int):
        self.theory = theory
        self.radius = radius
        self.points = theory.rs.affine.ball(radius)
        self.c: dict[AffineWeylElement, dict[AffineWeylElement, _Sparse]] = {}
        for w in self.points:
            for v, coef in expand_group_element(theory, w).terms.items():
                self.c.setdefault(v, {})[w] = coef

    def value(self, v: AffineWeylElement, w: AffineWeylElement) -> _Sparse:
        if w.length > self.radius:
            raise TruncationError(f"table of radius {self.radius} has no column entry at {w!r}")
        return self.c.get(v, {}).get(w, self.theory.zero)

    def column(self, v: AffineWeylElement) -> LocalizedClass:
        return from_values(self.theory, self.radius, self.c.get(v, {}), f"psi^{v!r}")

    def to_json(self) -> dict:
        return {"theory": self.theory.name, "radius": self.radius,
                "entries": [{"v": element_to_json(v), "w": element_to_json(w), "coeff": col[w].to_json()}
                            for v in sorted(self.c) for col in [self.c[v]] for w in sorted(col)]}


def schubert_table(theory: Theory, radius: int) -> SchubertTable:
    return SchubertTable(theory, radius)


def line_bundle_class(theory: Theory, lam, radius: int) -> LocalizedClass:
    """``[L_lam]`` (K) or ``c_1(L_lam)`` (H): value at ``t_mu v`` is ``e^{v lam}`` or ``v lam``."""
    lam = tuple(lam)
    return LocalizedClass(theory, radius, lambda x: theory.weight(x.fin.act(lam)), True, f"L{lam}")


def ideal_sheaf_value(theory: Theory, v: AffineWeylElement, x: AffineWeylElement) -> _Sparse:
    """``psibar^v(x) = sum_{v <= u <= x} (-1)^{l(u)-l(v)} psi^u(x)``, the basis dual to ``y_w``."""
    G = theory.rs.affine
    if not G.bruhat_leq(v, x):
        return theory.zero
    lv = v.length
    acc = theory.zero
    for u, c in expand_group_element(theory, x).terms.items():
        if G.bruhat_leq(v, u):
            acc = acc + (c if (u.length - lv) % 2 == 0 else -c)
    return acc


def ideal_sheaf_class(theory: Theory, v: AffineWeylElement, radius: int) -> LocalizedClass:
    """``psibar^v``: alternating sum of ``psi^u`` over the upper interval ``u >= v``.

    The sum is infinite but pointwise finite, since ``psi^u(x) = 0`` unless ``u <= x``.
    """
    return LocalizedClass(theory, radius, lambda x: ideal_sheaf_value(theory, v, x), True, f"psibar^{v!r}")


def cup(a: LocalizedClass, b: LocalizedClass) -> LocalizedClass:
    _same(a, b)
    return LocalizedClass(a.theory, min(a.radius, b.radius), lambda x: a(x) * b(x),
                          a.extendable and b.extendable)


# ------------------------------------------------------------------ actions

def _derived(psi: LocalizedClass, shrink: int, fn, label: str) -> LocalizedClass:
    return LocalizedClass(psi.theory, psi.radius - shrink, fn, psi.extendable, label)


def bullet_generator(i: int, psi: LocalizedClass) -> LocalizedClass:
    """``(X_i . psi)(w) = (psi(w s_i) - psi(w)) / c(w alpha_i)``."""
    th = psi.theory
    G = th.rs.affine
    si = G.s(i)
    beta = th.rs.classical_root(i)

    def fn(w):
        return exact_divide(psi(compose(w, si)) - psi(w), th.factor(w.fin.act(beta)))

    return _derived(psi, 1, fn, f"X{i}*{psi.label}")


def dot_generator(i: int, psi: LocalizedClass) -> LocalizedClass:
    """``(X_i . psi)(b) = X_i(psi(s_i b)) + (psi(s_i b) - psi(b)) / c(alpha_i)``."""
    from ..coeffring import demazure_operator
    th = psi.theory
    si = th.rs.affine.s(i)
    c = th.root_factor(i)

    def fn(b):
        p = psi(compose(si, b))
        return demazure_operator(th, i, p) + exact_divide(p - psi(b), c)

    return _derived(psi, 1, fn, f"X{i}.{psi.label}")


def bullet_coeff(q: _Sparse, psi: LocalizedClass) -> LocalizedClass:
    """``(q * psi)(w) = (w q) psi(w)``: cup with the line bundle class."""
    return _derived(psi, 0, lambda w: q.act(w.fin.mat) * psi(w), f"q*{psi.label}")


def dot_coeff(q: _Sparse, psi: LocalizedClass) -> LocalizedClass:
    return _derived(psi, 0, lambda w: q * psi(w), f"q.{psi.label}")


def bullet_group(v: AffineWeylElement, psi: LocalizedClass) -> LocalizedClass:
    """``(v * psi)(b) = psi(b v)``."""
    return _derived(psi, v.length, lambda b: psi(compose(b, v)), f"{v!r}*{psi.label}")


def dot_group(v: AffineWeylElement, psi: LocalizedClass) -> LocalizedClass:
    """``(v . psi)(b) = v(psi(v^{-1} b))``."""
    vi = v.inverse()
    mat = v.fin.mat
    return _derived(psi, v.length, lambda b: psi(compose(vi, b)).act(mat), f"{v!r}.{psi.label}")


def act(side: str, a, psi: LocalizedClass) -> LocalizedClass:
    """Dot or bullet action of a nilHecke element, a simple index, a group element or a coefficient."""
    if side not in ("dot", "bullet"):
        raise ValueError(f"side must be 'dot' or 'bullet', not {side!r}")
    dot = side == "dot"
    if isinstance(a, int):
        return dot_generator(a, psi) if dot else bullet_generator(a, psi)
    if isinstance(a, AffineWeylElement):
        return dot_group(a, psi) if dot else bullet_group(a, psi)
    if isinstance(a, _Sparse):
        return dot_coeff(a, psi) if dot else bullet_coeff(a, psi)
    if isinstance(a, NilHeckeElement):
        if a.theory != psi.theory:
            raise TheoryMismatch("nilHecke element and class live in different theories")
        parts = []
        for w, q in a.terms.items():
            if a.basis == GROUP:
                res = dot_group(w, psi) if dot else bullet_group(w, psi)
            else:
                res = psi
                for i in reversed(w.word):
                    res = dot_generator(i, res) if dot else bullet_generator(i, res)
            parts.append(dot_coeff(q, res) if dot else bullet_coeff(q, res))
        radius = min((p.radius for p in parts), default=psi.radius)
        th = psi.theory

        def fn(x):
            acc = th.zero
            for p in parts:
                acc = acc + p(x)
            return acc

        return LocalizedClass(th, radius, fn, psi.extendable, f"a.{psi.label}")
    raise TypeError(f"cannot act by {type(a).__name__}")


def act_tensor(side: str, t, psi1: LocalizedClass, psi2: LocalizedClass) -> LocalizedClass:
    """``sum (a_(1) psi1) cup (a_(2) psi2)`` for a coproduct tensor ``t``."""
    th = psi1.theory
    parts = []
    for (u, v), q in t.terms.items():
        left = act(side, NilHeckeElement(th, {u: q}), psi1)
        right = act(side, NilHeckeElement(th, {v: th.one}), psi2)
        parts.append(cup(left, right))
    radius = min((p.radius for p in parts), default=min(psi1.radius, psi2.radius))

    def fn(x):
        acc = th.zero
        for p in parts:
            acc = acc + p(x)
        return acc

    return LocalizedClass(th, radius, fn, psi1.extendable and psi2.extendable)


# ------------------------------------------------------------ endomorphisms

def endo(which: str, psi: LocalizedClass) -> LocalizedClass:
    """``theta``: ``x -> psi(t_mu)``; ``eta``: ``x -> psi(v)``; ``kappa``: ``x -> psi(id)``."""
    th = psi.theory
    G = th.rs.affine
    if which == "theta":
        w0 = th.rs.weyl.longest.length
        return _derived(psi, w0, lambda x: psi(G.translation(x.mu)), f"theta({psi.label})")
    if which == "eta":
        return _derived(psi, 0, lambda x: psi(G.finite(x.fin)), f"eta({psi.label})")
    if which == "kappa":
        e = G.identity
        return _derived(psi, 0, lambda x: psi(e), f"kappa({psi.label})")
    raise ValueError(f"unknown endomorphism {which!r}")
