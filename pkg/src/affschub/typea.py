"""
Type A realizations: symmetric functions, affine Stanley and affine stable
Grothendieck functions, Schubert and Grothendieck polynomials, and the affine
Schubert / Grothendieck polynomials in ``Lambda/I_n (x) Z[x_1..x_{n-1}]``.

Affine type ``A_{n-1}`` uses generators ``s_0 .. s_{n-1}``.  A cyclically
decreasing element is indexed by a proper subset ``A`` of ``Z/n``: its reduced
word uses each letter of ``A`` once, with ``i+1`` written before ``i`` whenever
both occur.

>>> str(affine_schubert_poly((2, 1), 3))
'h2 + h1*x1 + x1^2'
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .affweyl import AffineWeylElement, AffineWeylGroup, compose, reduced_words
from .cartan import build_root_system

Partition = tuple[int, ...]
BASES = ("m", "h", "e", "s")


# ----------------------------------------------------------------- partitions

@lru_cache(maxsize=None)
def partitions(d: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``d`` in lex-descending order."""
    if max_part is None:
        max_part = d
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0])) if lam else ()


@lru_cache(maxsize=None)
def _matrix_count(rows: Partition, cols: Partition, binary: bool) -> int:
    """Number of nonnegative (or 0/1) integer matrices with the given row and column sums."""
    if not rows:
        return int(not any(cols))
    r, rest = rows[0], rows[1:]
    total = 0
    for vec in _compositions_bounded(r, cols, 1 if binary else None):
        total += _matrix_count(rest, tuple(c - v for c, v in zip(cols, vec)), binary)
    return total


def _compositions_bounded(r: int, caps: Sequence[int], cell_cap: int | None):
    if not caps:
        if r == 0:
            yield ()
        return
    hi = min(r, caps[0]) if cell_cap is None else min(r, caps[0], cell_cap)
    for v in range(hi, -1, -1):
        for tail in _compositions_bounded(r - v, caps[1:], cell_cap):
            yield (v,) + tail


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    # remove the largest letter: a horizontal strip of size mu[-1]
    k = mu[-1]
    total = 0
    for nu in _horizontal_strips_removed(lam, k):
        total += kostka(nu, mu[:-1])
    return total


def _horizontal_strips_removed(lam: Partition, k: int):
    """Partitions ``nu`` with ``lam / nu`` a horizontal strip of size ``k``."""
    n = len(lam)

    def rec(i, left, acc):
        if i == n:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        lower = lam[i + 1] if i + 1 < n else 0
        for take in range(min(left, lam[i] - lower), -1, -1):
            yield from rec(i + 1, left - take, acc + [lam[i] - take])

    yield from rec(0, k, [])


def _to_m_row(basis: str, lam: Partition) -> dict[Partition, int]:
    d = sum(lam)
    if basis == "m":
        return {lam: 1}
    out = {}
    for mu in partitions(d):
        if basis == "h":
            c = _matrix_count(lam, mu, False)
        elif basis == "e":
            c = _matrix_count(lam, mu, True)
        else:
            c = kostka(lam, mu)
        if c:
            out[mu] = c
    return out


@lru_cache(maxsize=None)
def _to_m_row_cached(basis: str, lam: Partition):
    return tuple(sorted(_to_m_row(basis, lam).items()))


def _lex_key(lam: Partition):
    return lam


# ----------------------------------------------------------------- SymFunc

class SymFunc:
    """Degree-truncated symmetric function in one of the bases m, h, e, s."""

    __slots__ = ("basis", "terms", "degree")

    def __init__(self, basis: str, terms: Mapping[Partition, int] | None = None, degree: int = 0):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.degree = degree
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v and sum(k) <= degree}

    def to(self, basis: str) -> "SymFunc":
        if basis == self.basis:
            return self
        m = self._to_m()
        if basis == "m":
            return m
        s = _m_to_s(m.terms)
        if basis == "s":
            return SymFunc("s", s, self.degree)
        if basis == "h":
            return SymFunc("h", _s_to_h(s), self.degree)
        return SymFunc("e", _s_to_h({conjugate(k): v for k, v in s.items()}), self.degree)

    def _to_m(self) -> "SymFunc":
        if self.basis == "m":
            return self
        acc: dict = {}
        for lam, c in self.terms.items():
            for mu, k in _to_m_row_cached(self.basis, lam):
                acc[mu] = acc.get(mu, 0) + c * k
        return SymFunc("m", acc, self.degree)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        o = other.to(self.basis)
        acc = dict(self.terms)
        for k, v in o.terms.items():
            acc[k] = acc.get(k, 0) + v
        return SymFunc(self.basis, acc, min(self.degree, other.degree))

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, {k: -v for k, v in self.terms.items()}, self.degree)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c: int) -> "SymFunc":
        return SymFunc(self.basis, {k: c * v for k, v in self.terms.items()}, self.degree)

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        """Product computed in the h basis (concatenate partitions)."""
        a, b = self.to("h"), other.to("h")
        # each factor is exact through its degree; the product is exact through this bound
        deg = min(self.degree + other._low(), other.degree + self._low())
        acc: dict = {}
        for la, ca in a.terms.items():
            for lb, cb in b.terms.items():
                lam = tuple(sorted(la + lb, reverse=True))
                if sum(lam) <= deg:
                    acc[lam] = acc.get(lam, 0) + ca * cb
        return SymFunc("h", acc, deg).to(self.basis)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        deg = min(self.degree, other.degree)
        a = {k: v for k, v in self.to("m").terms.items() if sum(k) <= deg}
        b = {k: v for k, v in other.to("m").terms.items() if sum(k) <= deg}
        return a == b

    def __hash__(self):
        return hash(frozenset(self.to("m").terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def _low(self) -> int:
        return min((sum(k) for k in self.terms), default=self.degree + 1)

    def truncate(self, degree: int) -> "SymFunc":
        return SymFunc(self.basis, self.terms, min(degree, self.degree))

    def homogeneous_part(self, d: int) -> "SymFunc":
        return SymFunc(self.basis, {k: v for k, v in self.terms.items() if sum(k) == d}, self.degree)

    def lowest_part(self) -> "SymFunc":
        if not self.terms:
            return self
        d = min(sum(k) for k in self.terms)
        return self.homogeneous_part(d)

    def reduce_mod(self, n: int) -> "SymFunc":
        """Image in ``Lambda/I_n``: drop ``m_lam`` with ``lam_1 >= n``; stays in the m basis."""
        m = self.to("m")
        return SymFunc("m", {k: v for k, v in m.terms.items() if not k or k[0] < n}, self.degree)

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))

    def text(self) -> str:
        parts = [(c, _plabel(self.basis, lam)) for lam, c in self.sorted_terms()]
        return _format_sum(parts)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"SymFunc({self.text()}, degree={self.degree})"

    def to_json(self) -> dict:
        return {"basis": self.basis, "degree": self.degree,
                "terms": {",".join(map(str, k)): v for k, v in self.sorted_terms()}}

    @classmethod
    def from_json(cls, doc: Mapping) -> "SymFunc":
        terms = {tuple(int(p) for p in k.split(",") if p): int(v) for k, v in doc["terms"].items()}
        return cls(doc["basis"], terms, int(doc["degree"]))


def _m_to_s(m: Mapping[Partition, int]) -> dict[Partition, int]:
    rem = {k: v for k, v in m.items() if v}
    out = {}
    while rem:
        lam = max(rem)
        c = rem[lam]
        out[lam] = c
        for mu, k in _to_m_row_cached("s", lam):
            v = rem.get(mu, 0) - c * k
            if v:
                rem[mu] = v
            else:
                rem.pop(mu, None)
    return out


def _s_to_h(s: Mapping[Partition, int]) -> dict[Partition, int]:
    # h_mu = sum_{lam >= mu} K_{lam mu} s_lam, so peel off the lex-smallest Schur term
    rem = {k: v for k, v in s.items() if v}
    out = {}
    while rem:
        mu = min(rem)
        c = rem[mu]
        out[mu] = c
        for lam in partitions(sum(mu)):
            k = kostka(lam, mu)
            if k:
                v = rem.get(lam, 0) - c * k
                if v:
                    rem[lam] = v
                else:
                    rem.pop(lam, None)
    return out


def _plabel(basis: str, lam: Partition) -> str:
    if not lam:
        return ""
    sep = "," if any(p >= 10 for p in lam) else ""
    return basis + sep.join(map(str, lam))


def _format_sum(parts: list[tuple[int, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for c, mono in parts:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
        out.append((sign, body))
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def h(*lam: int, degree: int | None = None) -> SymFunc:
    p = tuple(sorted(lam, reverse=True))
    return SymFunc("h", {p: 1}, sum(p) if degree is None else degree)


def schur(*lam: int, degree: int | None = None) -> SymFunc:
    p = tuple(sorted(lam, reverse=True))
    return SymFunc("s", {p: 1}, sum(p) if degree is None else degree)


# ------------------------------------------------------------------ XPoly

class XPoly:
    """Integer polynomial in ``x_1 .. x_k``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v}

    @classmethod
    def one(cls, nvars: int) -> "XPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def var(cls, nvars: int, i: int) -> "XPoly":
        return cls(nvars, {tuple(int(j == i - 1) for j in range(nvars)): 1})

    def __add__(self, other: "XPoly") -> "XPoly":
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return XPoly(self.nvars, acc)

    def __neg__(self) -> "XPoly":
        return XPoly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "XPoly") -> "XPoly":
        return self + (-other)

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, int):
            return XPoly(self.nvars, {k: other * v for k, v in self.terms.items()})
        acc: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                acc[k] = acc.get(k, 0) + ca * cb
        return XPoly(self.nvars, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, XPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def swap(self, i: int) -> "XPoly":
        """Exchange ``x_i`` and ``x_{i+1}``."""
        acc = {}
        for k, v in self.terms.items():
            kk = list(k)
            kk[i - 1], kk[i] = kk[i], kk[i - 1]
            acc[tuple(kk)] = v
        return XPoly(self.nvars, acc)

    def divided_difference(self, i: int) -> "XPoly":
        """``(f - s_i f) / (x_i - x_{i+1})``, computed monomial by monomial."""
        acc: dict = {}
        for k, v in self.terms.items():
            a, b = k[i - 1], k[i]
            if a == b:
                continue
            # (x^a y^b - x^b y^a) / (x - y) = sign * x^lo y^lo * h_{hi-lo-1}(x, y)
            lo, hi = min(a, b), max(a, b)
            sign = 1 if a > b else -1
            for j in range(hi - lo):
                kk = list(k)
                kk[i - 1] = lo + j
                kk[i] = hi - 1 - j
                t = tuple(kk)
                acc[t] = acc.get(t, 0) + sign * v
        return XPoly(self.nvars, acc)

    @property
    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def lowest_part(self) -> "XPoly":
        if not self.terms:
            return self
        d = min(sum(k) for k in self.terms)
        return XPoly(self.nvars, {k: v for k, v in self.terms.items() if sum(k) == d})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=_xkey)

    def text(self) -> str:
        return _format_sum([(c, _xlabel(k)) for k, c in self.sorted_terms()])

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"XPoly({self.text()})"

    def to_json(self) -> dict:
        return {",".join(map(str, k)): v for k, v in self.sorted_terms()}


def _xkey(item):
    k = item[0]
    return (sum(k), tuple(-e for e in k))


def _xlabel(k: tuple[int, ...]) -> str:
    return "*".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(k) if e)


# ------------------------------------------------------------ TensorPoly

@dataclass
class TensorPoly:
    """``sum_a f_a (x) x^a`` with ``f_a`` in ``Lambda/I_n`` (m basis), truncated at ``degree``."""

    n: int
    degree: int
    terms: dict = field(default_factory=dict)

    @classmethod
    def from_pairs(cls, n: int, degree: int, pairs: Iterable[tuple[SymFunc, XPoly, int]]) -> "TensorPoly":
        out = cls(n, degree)
        for f, p, c in pairs:
            out.add(f, p, c)
        return out

    def add(self, f: SymFunc, p: XPoly, c: int = 1):
        fm = f.reduce_mod(self.n)
        for xe, xc in p.terms.items():
            cur = self.terms.get(xe, {})
            for lam, v in fm.terms.items():
                if sum(lam) <= self.degree:
                    cur[lam] = cur.get(lam, 0) + c * xc * v
            self.terms[xe] = {k: v for k, v in cur.items() if v}
        self.terms = {k: v for k, v in self.terms.items() if v}

    def left(self, xe: tuple[int, ...]) -> SymFunc:
        return SymFunc("m", self.terms.get(xe, {}), self.degree)

    def __eq__(self, other):
        return isinstance(other, TensorPoly) and self.n == other.n and self.terms == other.terms

    def lowest_part(self) -> "TensorPoly":
        """Homogeneous component of lowest total degree."""
        degs = [sum(xe) + sum(lam) for xe, f in self.terms.items() for lam in f]
        if not degs:
            return TensorPoly(self.n, self.degree)
        d = min(degs)
        out = TensorPoly(self.n, self.degree)
        for xe, f in self.terms.items():
            g = {lam: v for lam, v in f.items() if sum(lam) + sum(xe) == d}
            if g:
                out.terms[xe] = g
        return out

    def auto_basis(self) -> str:
        for xe, f in self.terms.items():
            if any(v < 0 for v in SymFunc("m", f, self.degree).to("h").terms.values()):
                return "m"
        return "h"

    def text(self, basis: str = "auto") -> str:
        b = self.auto_basis() if basis == "auto" else basis
        parts = []
        for xe in sorted(self.terms, key=lambda k: (sum(k), tuple(-e for e in k))):
            f = SymFunc("m", self.terms[xe], self.degree).to(b)
            xl = _xlabel(xe)
            for lam, c in f.sorted_terms():
                pl = _plabel(b, lam)
                parts.append((c, "*".join(p for p in (pl, xl) if p)))
        return _format_sum(parts)

    def __str__(self):
        return self.text()

    def to_json(self) -> dict:
        return {"n": self.n, "degree": self.degree,
                "pairs": [{"left": SymFunc("m", self.terms[xe], self.degree).to_json(),
                           "right": {",".join(map(str, xe)): 1}}
                          for xe in sorted(self.terms, key=lambda k: (sum(k), tuple(-e for e in k)))]}


# ------------------------------------------------------ affine type A group

@lru_cache(maxsize=None)
def affine_group(n: int) -> AffineWeylGroup:
    if n < 2:
        raise ValueError("n must be at least 2")
    return build_root_system("A", n - 1).affine


def element(n: int, word: Sequence[int]) -> AffineWeylElement:
    G = affine_group(n)
    for i in word:
        if not 0 <= i < n:
            raise ValueError(f"letter {i} out of range 0..{n - 1}")
    return G.from_word(word)


@lru_cache(maxsize=None)
def cyclically_decreasing(n: int) -> dict[int, tuple[AffineWeylElement, ...]]:
    """Cyclically decreasing elements grouped by length (one per proper subset of Z/n)."""
    G = affine_group(n)
    out: dict[int, list] = {}
    for k in range(n):
        for subset in combinations(range(n), k):
            out.setdefault(k, []).append(G.from_word(cd_word(n, subset)))
    return {k: tuple(v) for k, v in out.items()}


def cd_word(n: int, subset: Iterable[int]) -> tuple[int, ...]:
    """Reduced word of the cyclically decreasing element of a proper subset."""
    A = set(subset)
    if len(A) >= n:
        raise ValueError("subset must be proper")
    word = []
    # each maximal cyclic run a, a+1, .., b is written b, b-1, .., a
    for a in sorted(A):
        if (a - 1) % n in A:
            continue
        run = [a]
        while (run[-1] + 1) % n in A:
            run.append((run[-1] + 1) % n)
        word.extend(reversed(run))
    return tuple(word)


def _factor_count(n: int, w: AffineWeylElement, lam: Sequence[int], demazure: bool) -> int:
    """Signed count of factorizations ``w = v_1 .. v_k`` into cd factors with ``l(v_i) = lam_i``."""
    G = affine_group(n)
    cds = cyclically_decreasing(n)
    lw = w.length
    states = {G.identity: 1}
    for part in lam:
        nxt: dict = {}
        for z, cnt in states.items():
            for v in cds.get(part, ()):
                if demazure:
                    y = G.demazure_product(z, v)
                    if not G.bruhat_leq(y, w):
                        continue
                else:
                    y = compose(z, v)
                    if y.length != z.length + part or y.length > lw:
                        continue
                    # y must be a length-additive prefix of w
                    if compose(y.inverse(), w).length != lw - y.length:
                        continue
                nxt[y] = nxt.get(y, 0) + cnt
        states = nxt
    c = states.get(w, 0)
    if demazure and c:
        c *= (-1) ** ((sum(lam) - lw) % 2)
    return c


def affine_stanley(w: AffineWeylElement | Sequence[int], n: int, degree: int | None = None) -> SymFunc:
    """Affine Stanley symmetric function in the m basis."""
    w = _as_element(n, w)
    d = w.length
    terms = {}
    for lam in partitions(d, n - 1):
        c = _factor_count(n, w, lam, False)
        if c:
            terms[lam] = c
    return SymFunc("m", terms, d if degree is None else max(degree, d))


def affine_stable_grothendieck(w: AffineWeylElement | Sequence[int], n: int, degree: int) -> SymFunc:
    """Affine stable Grothendieck function through ``degree`` in the m basis."""
    w = _as_element(n, w)
    terms = {}
    for d in range(w.length, degree + 1):
        for lam in partitions(d, n - 1):
            c = _factor_count(n, w, lam, True)
            if c:
                terms[lam] = c
    return SymFunc("m", terms, degree)


def affine_stanley_monomial(w: AffineWeylElement | Sequence[int], n: int, exponents: Sequence[int]) -> int:
    """Coefficient of ``x^exponents`` (any composition) in the affine Stanley function."""
    w = _as_element(n, w)
    if any(e >= n for e in exponents):
        return 0
    return _factor_count(n, w, [e for e in exponents], False) if sum(exponents) == w.length else 0


def _as_element(n: int, w) -> AffineWeylElement:
    return w if isinstance(w, AffineWeylElement) else element(n, w)


# ------------------------------------------------- Schubert / Grothendieck

def schubert_poly(v: AffineWeylElement | Sequence[int], n: int) -> XPoly:
    """Billey-Jockusch-Stanley formula over reduced words and compatible sequences."""
    v = _as_element(n, v)
    if not v.is_finite:
        raise ValueError("Schubert polynomials need a finite permutation")
    k = n - 1
    acc: dict = {}
    for a in reduced_words(v):
        for seq in _compatible(a):
            e = [0] * k
            for i in seq:
                e[i - 1] += 1
            t = tuple(e)
            acc[t] = acc.get(t, 0) + 1
    return XPoly(k, acc)


def _compatible(a: tuple[int, ...]):
    l = len(a)

    def rec(j, prev):
        if j == l:
            yield ()
            return
        lo = prev if j == 0 or a[j - 1] >= a[j] else prev + 1
        if j == 0:
            lo = 1
        for i in range(lo, a[j] + 1):
            for tail in rec(j + 1, i):
                yield (i,) + tail

    yield from rec(0, 1)


def grothendieck_poly(v: AffineWeylElement | Sequence[int], n: int) -> XPoly:
    """Pipe-dream formula: crosses in the staircase, Demazure product of the reading word equals ``v``."""
    v = _as_element(n, v)
    if not v.is_finite:
        raise ValueError("Grothendieck polynomials need a finite permutation")
    G = affine_group(n)
    cells = [(i, j) for i in range(1, n) for j in range(n - i, 0, -1)]  # rows top-down, right to left
    lv = v.length
    acc: dict = {}

    def rec(idx, z, e, count):
        if not G.bruhat_leq(z, v):
            return
        if idx == len(cells):
            if z == v:
                t = tuple(e)
                acc[t] = acc.get(t, 0) + (-1) ** ((count - lv) % 2)
            return
        i, j = cells[idx]
        rec(idx + 1, z, e, count)
        letter = i + j - 1
        z2 = z if G.is_right_descent(z, letter) else compose(z, G.s(letter))
        e[i - 1] += 1
        rec(idx + 1, z2, e, count + 1)
        e[i - 1] -= 1

    rec(0, G.identity, [0] * (n - 1), 0)
    return XPoly(n - 1, acc)


def affine_schubert_poly(w: AffineWeylElement | Sequence[int], n: int, degree: int | None = None) -> TensorPoly:
    """``sum_{w = w1 w2 additive, w2 finite} F_{w1} (x) S_{w2}`` in ``Lambda/I_n (x) Z[x]``."""
    w = _as_element(n, w)
    D = w.length if degree is None else degree
    out = TensorPoly(n, D)
    for w1, w2, _ in affine_schubert_terms(w, n):
        out.add(affine_stanley(w1, n, D), schubert_poly(w2, n))
    return out


def affine_schubert_terms(w: AffineWeylElement | Sequence[int], n: int):
    """Factor pairs ``(w1, w2, +1)`` of the cohomology formula."""
    return affine_group(n).factorizations(_as_element(n, w), "length_additive", True)


def affine_grothendieck_terms(w: AffineWeylElement | Sequence[int], n: int):
    """Factor pairs ``(w1, w2, sign)`` of the K-theory formula."""
    return affine_group(n).factorizations(_as_element(n, w), "demazure", True)


def affine_grothendieck_poly(w: AffineWeylElement | Sequence[int], n: int, degree: int) -> TensorPoly:
    """``sum_{w1 * w2 = w} (-1)^{l(w1)+l(w2)-l(w)} G_{w1} (x) Groth_{w2}``, truncated at ``degree``."""
    out = TensorPoly(n, degree)
    for w1, w2, sign in affine_grothendieck_terms(w, n):
        out.add(affine_stable_grothendieck(w1, n, degree), grothendieck_poly(w2, n), sign)
    return out


@dataclass
class PositivityResult:
    positive: bool
    witness: dict | None = None

    def to_json(self) -> dict:
        d = {"positive": self.positive}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def monomial_positivity(p: TensorPoly) -> PositivityResult:
    """All coefficients in ``m_lam (x) x^a`` nonnegative?"""
    for xe in sorted(p.terms, key=lambda k: (sum(k), tuple(-e for e in k))):
        for lam, c in SymFunc("m", p.terms[xe], p.degree).sorted_terms():
            if c < 0:
                mono = "*".join(s for s in (_plabel("m", lam), _xlabel(xe)) if s) or "1"
                return PositivityResult(False, {"term": mono, "coefficient": c})
    return PositivityResult(True)


def affine_elements(n: int, max_length: int) -> list[AffineWeylElement]:
    return affine_group(n).ball(max_length)
