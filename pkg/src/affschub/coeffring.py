"""
Exact coefficient rings.

``Laurent`` realizes the representation ring ``Z[P]`` (monomials ``e^lam`` with
``lam`` in fundamental-weight coordinates, exponents may be negative); ``Poly``
realizes ``S = Sym(P)`` (polynomials in the fundamental weights).  Neither ring
is ever localized: every division the theory needs goes through
:func:`exact_divide`, which raises :class:`InexactDivision` when the quotient
does not exist.

A ``Theory`` bundles the choice K/H with a root system and provides the pieces
that differ between the two settings.  Both settings share the shape

    s_i = 1 + c(alpha_i) X_i,        X_i^2 = -eps X_i,

with ``c(beta) = 1 - e^beta`` and ``eps = 1`` for K (``X_i = T_i``), and
``c(beta) = -beta`` and ``eps = 0`` for H (``X_i = A_i``).

>>> from affschub.cartan import build_root_system
>>> K = Theory("K", build_root_system("A", 1))
>>> a = K.weight((2,))
>>> exact_divide(K.one - a * a, K.one - a) == K.one + a
True
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .cartan import Matrix, RootSystem, Vector


class InexactDivision(ArithmeticError):
    """The divisor does not divide the dividend in the coefficient ring."""


def _add_into(acc: dict, terms: Mapping, scale: int = 1) -> None:
    for k, v in terms.items():
        c = acc.get(k, 0) + scale * v
        if c:
            acc[k] = c
        else:
            acc.pop(k, None)


class _Sparse:
    """Finite map from exponent vectors to nonzero integers."""

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Vector, int] | None = None, nvars: int = 0):
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.nvars = nvars
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int, nvars: int):
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self).constant(other, self.nvars)
        if type(other) is not type(self):
            return NotImplemented
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        _add_into(acc, other.terms)
        return type(self)._raw(acc, self.nvars)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        _add_into(acc, other.terms, -1)
        return type(self)._raw(acc, self.nvars)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return type(self)._raw({k: -v for k, v in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return type(self)._raw({}, self.nvars)
            return type(self)._raw({k: v * other for k, v in self.terms.items()}, self.nvars)
        if type(other) is not type(self):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict = {}
        for kb, vb in b.items():
            for ka, va in a.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                c = acc.get(k, 0) + va * vb
                if c:
                    acc[k] = c
                else:
                    del acc[k]
        return type(self)._raw(acc, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = type(self).constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0,) * self.nvars: other} if other else {})
        return type(other) is type(self) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def leading(self) -> tuple[Vector, int]:
        k = max(self.terms, key=_grlex_key)
        return k, self.terms[k]

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def to_json(self) -> dict[str, int]:
        return {",".join(map(str, k)): v for k, v in sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)}

    @classmethod
    def from_json(cls, doc: Mapping[str, int], nvars: int):
        return cls({tuple(int(x) for x in k.split(",")) if k else (): int(v) for k, v in doc.items()}, nvars)


def _grlex_key(exp: Vector):
    return (sum(exp), exp)


class Laurent(_Sparse):
    """Element of Z[P]; ``terms`` maps ``lam`` to the coefficient of ``e^lam``."""

    __slots__ = ()

    @classmethod
    def monomial(cls, lam: Sequence[int], c: int = 1) -> "Laurent":
        return cls._raw({tuple(lam): c} if c else {}, len(lam))

    def act(self, mat: Matrix) -> "Laurent":
        return _laurent_act(self, mat)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0])):
            mono = "" if not any(k) else "e(" + ",".join(map(str, k)) + ")"
            parts.append(_fmt_term(v, mono))
        return _join(parts)


class Poly(_Sparse):
    """Element of S = Sym(P); ``terms`` maps exponent vectors over the omega_i."""

    __slots__ = ()

    @classmethod
    def linear(cls, lam: Sequence[int]) -> "Poly":
        n = len(lam)
        return cls._raw({tuple(int(i == j) for j in range(n)): c for i, c in enumerate(lam) if c}, n)

    @property
    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def act(self, mat: Matrix) -> "Poly":
        return _poly_act(self, mat)

    def at_zero(self) -> int:
        return self.constant_term()

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True):
            mono = "*".join(f"w{i+1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(k) if e)
            parts.append(_fmt_term(v, mono))
        return _join(parts)


def _fmt_term(c: int, mono: str) -> str:
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _join(parts: list[str]) -> str:
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


@lru_cache(maxsize=200_000)
def _laurent_act(f: Laurent, mat: Matrix) -> Laurent:
    return Laurent._raw({tuple(sum(r * x for r, x in zip(row, k)) for row in mat): v
                         for k, v in f.terms.items()}, f.nvars)


@lru_cache(maxsize=200_000)
def _poly_act(f: Poly, mat: Matrix) -> Poly:
    n = f.nvars
    images = [Poly.linear([mat[r][j] for r in range(n)]) for j in range(n)]
    acc: dict = {}
    for k, v in f.terms.items():
        term = Poly.constant(v, n)
        for j, e in enumerate(k):
            if e:
                term = term * _linear_power(images[j], e)
        _add_into(acc, term.terms)
    return Poly._raw(acc, n)


@lru_cache(maxsize=10_000)
def _linear_power(lin: Poly, e: int) -> Poly:
    return lin ** e


def _poly_divide(f: _Sparse, g: _Sparse) -> _Sparse:
    """Leading-term elimination; exact for a single divisor (principal ideal)."""
    cls = type(f)
    if g.is_zero():
        raise ZeroDivisionError("division by zero coefficient")
    gk, gc = g.leading()
    rem = dict(f.terms)
    quot: dict = {}
    while rem:
        rk = max(rem, key=_grlex_key)
        rc = rem[rk]
        shift = tuple(a - b for a, b in zip(rk, gk))
        if any(s < 0 for s in shift) or rc % gc:
            raise InexactDivision(f"{g!r} does not divide {f!r}")
        q = rc // gc
        quot[shift] = q
        for k, v in g.terms.items():
            kk = tuple(a + b for a, b in zip(k, shift))
            c = rem.get(kk, 0) - q * v
            if c:
                rem[kk] = c
            else:
                rem.pop(kk, None)
    return cls._raw(quot, f.nvars)


def exact_divide(f: _Sparse, g: _Sparse) -> _Sparse:
    """Return ``q`` with ``f = q g`` or raise :class:`InexactDivision`.

    Laurent operands are first made coprime to all monomials (monomials are
    units), then divided as ordinary polynomials.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by zero coefficient")
    if f.is_zero():
        return type(f)._raw({}, f.nvars)
    if isinstance(f, Laurent):
        fa = tuple(min(k[i] for k in f.terms) for i in range(f.nvars))
        ga = tuple(min(k[i] for k in g.terms) for i in range(g.nvars))
        fs = Laurent._raw({tuple(a - b for a, b in zip(k, fa)): v for k, v in f.terms.items()}, f.nvars)
        gs = Laurent._raw({tuple(a - b for a, b in zip(k, ga)): v for k, v in g.terms.items()}, g.nvars)
        q = _poly_divide(fs, gs)
        off = tuple(a - b for a, b in zip(fa, ga))
        return Laurent._raw({tuple(a + b for a, b in zip(k, off)): v for k, v in q.terms.items()}, f.nvars)
    return _poly_divide(f, g)


@dataclass(frozen=True, eq=False)
class Theory:
    """K-theory (over R(T)) or cohomology (over S) for a fixed root system."""

    name: str
    rs: RootSystem

    def __post_init__(self):
        if self.name not in ("K", "H"):
            raise ValueError(f"theory must be 'K' or 'H', not {self.name!r}")

    def __eq__(self, other):
        return isinstance(other, Theory) and self.name == other.name and self.rs is other.rs

    def __hash__(self):
        return hash((self.name, id(self.rs)))

    @property
    def is_k(self) -> bool:
        return self.name == "K"

    @property
    def nvars(self) -> int:
        return self.rs.rank

    @property
    def one(self) -> _Sparse:
        return (Laurent if self.is_k else Poly).constant(1, self.nvars)

    @property
    def zero(self) -> _Sparse:
        return (Laurent if self.is_k else Poly).constant(0, self.nvars)

    @property
    def eps(self) -> int:
        return 1 if self.is_k else 0

    @property
    def basis_name(self) -> str:
        return "T" if self.is_k else "A"

    def weight(self, lam: Sequence[int]) -> _Sparse:
        """``e^lam`` in K, the degree-one element ``lam`` in H."""
        return Laurent.monomial(lam) if self.is_k else Poly.linear(lam)

    def line_bundle_value(self, lam: Sequence[int]) -> _Sparse:
        return self.weight(lam)

    def factor(self, beta: Sequence[int]) -> _Sparse:
        """``c(beta)``: ``1 - e^beta`` in K, ``-beta`` in H."""
        if self.is_k:
            return Laurent._raw({(0,) * self.nvars: 1, tuple(beta): -1} if any(beta) else {}, self.nvars)
        return -Poly.linear(beta)

    def root_factor(self, i: int) -> _Sparse:
        return self.factor(self.rs.classical_root(i))

    def act(self, mat: Matrix, f: _Sparse) -> _Sparse:
        return f.act(mat)

    def reflect(self, i: int) -> Matrix:
        """Level-zero matrix of ``s_i`` (``s_0`` acts as ``s_theta``)."""
        return self.rs.affine.s(i).fin.mat

    def coeff_from_json(self, doc):
        return (Laurent if self.is_k else Poly).from_json(doc, self.nvars)


def level_zero_act(x, f: _Sparse) -> _Sparse:
    """Action of an affine Weyl element on a coefficient through its finite part."""
    return f.act(x.fin.mat)


def _tone_monomial(th: Theory, i: int, lam: Vector) -> Laurent:
    """``T_i . e^lam`` as a geometric sum (level-zero alpha_0 = -theta)."""
    rs = th.rs
    alpha = rs.classical_root(i)
    if i == 0:
        n = -sum(a * b for a, b in zip(rs.highest_coroot, lam))
    else:
        n = lam[i - 1]
    nv = th.nvars
    if n == 0:
        return Laurent._raw({}, nv)
    if n > 0:
        # (e^{s lam} - e^lam) / (1 - e^alpha) = e^{lam - n alpha} (1 + ... + e^{(n-1) alpha})
        return Laurent._raw({tuple(l - j * a for l, a in zip(lam, alpha)): 1 for j in range(1, n + 1)}, nv)
    return Laurent._raw({tuple(l + j * a for l, a in zip(lam, alpha)): -1 for j in range(0, -n)}, nv)


def demazure_operator(th: Theory, i: int, f: _Sparse) -> _Sparse:
    """``X_i . f = (s_i f - f) / c(alpha_i)``: ``T_i`` on R(T), ``A_i`` on S."""
    return _demazure_cached(th, i, f)


@lru_cache(maxsize=200_000)
def _demazure_cached(th: Theory, i: int, f: _Sparse) -> _Sparse:
    if th.is_k:
        acc: dict = {}
        for lam, c in f.terms.items():
            _add_into(acc, _tone_monomial(th, i, lam).terms, c)
        return Laurent._raw(acc, th.nvars)
    return exact_divide(f.act(th.reflect(i)) - f, th.root_factor(i))


def demazure_by_division(th: Theory, i: int, f: _Sparse) -> _Sparse:
    """Same operator computed by exact division in both theories (cross-check route)."""
    return exact_divide(f.act(th.reflect(i)) - f, th.root_factor(i))
