"""
Affine nilHecke rings over the level-zero coefficient ring.

Elements are finite sums ``sum_w c_w X_w`` where ``X_w`` is ``T_w`` (K-theory,
coefficients in R(T)) or ``A_w`` (cohomology, coefficients in S), or sums
``sum_w c_w w`` in the group basis.  Coefficients are written on the left.

>>> from affschub.cartan import build_root_system
>>> K = Theory("K", build_root_system("A", 1))
>>> t1 = generator(K, 1)
>>> multiply(t1, t1) == -t1
True
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .affweyl import AffineWeylElement, compose, element_to_json, reduced_words
from .coeffring import Theory, _add_into, _Sparse, demazure_operator, exact_divide

GROUP = "group"


class BasisMismatch(ValueError):
    pass


def _clean(terms: Mapping) -> dict:
    return {k: v for k, v in terms.items() if not v.is_zero()}


class NilHeckeElement:
    """Finite left-linear combination over the ``X``-basis or the group basis."""

    __slots__ = ("theory", "basis", "terms")

    def __init__(self, theory: Theory, terms: Mapping[AffineWeylElement, _Sparse] | None = None,
                 basis: str | None = None):
        self.theory = theory
        self.basis = basis or theory.basis_name
        if self.basis not in (theory.basis_name, GROUP):
            raise BasisMismatch(f"basis {self.basis!r} not available in theory {theory.name}")
        self.terms = _clean(terms or {})

    @property
    def is_group(self) -> bool:
        return self.basis == GROUP

    def _check(self, other: "NilHeckeElement"):
        if other.theory != self.theory or other.basis != self.basis:
            raise BasisMismatch(f"{self.theory.name}/{self.basis} vs {other.theory.name}/{other.basis}")

    def __add__(self, other: "NilHeckeElement") -> "NilHeckeElement":
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc[k] + v if k in acc else v
        return NilHeckeElement(self.theory, acc, self.basis)

    def __sub__(self, other: "NilHeckeElement") -> "NilHeckeElement":
        return self + (-other)

    def __neg__(self) -> "NilHeckeElement":
        return NilHeckeElement(self.theory, {k: -v for k, v in self.terms.items()}, self.basis)

    def scale(self, q: _Sparse) -> "NilHeckeElement":
        """Left multiplication by a coefficient."""
        return NilHeckeElement(self.theory, {k: q * v for k, v in self.terms.items()}, self.basis)

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, NilHeckeElement) and self.theory == other.theory
                and self.basis == other.basis and self.terms == other.terms)

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def coeff(self, w: AffineWeylElement) -> _Sparse:
        return self.terms.get(w, self.theory.zero)

    def support(self) -> list[AffineWeylElement]:
        return sorted(self.terms)

    def truncate(self, max_length: int) -> "NilHeckeElement":
        return NilHeckeElement(self.theory, {w: c for w, c in self.terms.items() if w.length <= max_length},
                               self.basis)

    def max_length(self) -> int:
        return max((w.length for w in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return "0"
        b = "" if self.is_group else self.basis
        parts = []
        for w in self.support():
            c = self.terms[w]
            label = f"{b}_{w!r}" if b else repr(w)
            parts.append(label if c == 1 else f"({c!r})*{label}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"theory": self.theory.name, "basis": self.basis,
                "terms": [{"element": element_to_json(w), "coeff": self.terms[w].to_json()}
                          for w in self.support()]}


def from_json(theory: Theory, doc: Mapping) -> NilHeckeElement:
    G = theory.rs.affine
    if doc.get("theory", theory.name) != theory.name:
        raise BasisMismatch(f"document theory {doc['theory']} != {theory.name}")
    return NilHeckeElement(theory, {G.element_from_json(t["element"]): theory.coeff_from_json(t["coeff"])
                                    for t in doc["terms"]}, doc.get("basis"))


def identity(theory: Theory, basis: str | None = None) -> NilHeckeElement:
    return NilHeckeElement(theory, {theory.rs.affine.identity: theory.one}, basis)


def coefficient(theory: Theory, q: _Sparse, basis: str | None = None) -> NilHeckeElement:
    return NilHeckeElement(theory, {theory.rs.affine.identity: q}, basis)


def basis_element(theory: Theory, w: AffineWeylElement) -> NilHeckeElement:
    return NilHeckeElement(theory, {w: theory.one})


def generator(theory: Theory, i: int) -> NilHeckeElement:
    """``T_i`` in K, ``A_i`` in H."""
    return basis_element(theory, theory.rs.affine.s(i))


def group_element(theory: Theory, x: AffineWeylElement) -> NilHeckeElement:
    return NilHeckeElement(theory, {x: theory.one}, GROUP)


def lmul_generator(i: int, a: NilHeckeElement) -> NilHeckeElement:
    """``X_i a`` using ``X_i q = (X_i . q) + (s_i q) X_i`` and the nil-Coxeter rule."""
    th = a.theory
    if a.is_group:
        raise BasisMismatch("lmul_generator expects an X-basis element")
    G = th.rs.affine
    si = G.s(i)
    mat = th.reflect(i)
    acc: dict = {}

    def put(w, c):
        if w in acc:
            acc[w] = acc[w] + c
        else:
            acc[w] = c

    for w, c in a.terms.items():
        d = demazure_operator(th, i, c)
        if d:
            put(w, d)
        sc = c.act(mat)
        if G.is_left_descent(w, i):
            if th.eps:
                put(w, sc * (-th.eps))
        else:
            put(compose(si, w), sc)
    return NilHeckeElement(th, acc)


def _lmul_word(word: tuple[int, ...], b: NilHeckeElement, memo: dict) -> NilHeckeElement:
    if word in memo:
        return memo[word]
    res = b if not word else lmul_generator(word[0], _lmul_word(word[1:], b, memo))
    memo[word] = res
    return res


def multiply(a: NilHeckeElement, b: NilHeckeElement) -> NilHeckeElement:
    """Ring product; both operands must share theory and basis."""
    a._check(b)
    th = a.theory
    if a.is_group:
        acc: dict = {}
        for w, q in a.terms.items():
            mat = w.fin.mat
            for v, p in b.terms.items():
                wv = compose(w, v)
                c = q * p.act(mat)
                acc[wv] = acc[wv] + c if wv in acc else c
        return NilHeckeElement(th, acc, GROUP)
    memo: dict = {}
    out = NilHeckeElement(th)
    for w, q in a.terms.items():
        out = out + _lmul_word(w.word, b, memo).scale(q)
    return out


def expand_group_element(theory: Theory, x: AffineWeylElement) -> NilHeckeElement:
    """``x`` in the ``X``-basis: the coefficient of ``X_v`` is the localization ``psi^v(x)``."""
    return _expand_cached(theory, x)


@lru_cache(maxsize=100_000)
def _expand_cached(theory: Theory, x: AffineWeylElement) -> NilHeckeElement:
    G = theory.rs.affine
    if x == G.identity:
        return identity(theory)
    i = x.word[0]
    rest = _expand_cached(theory, compose(G.s(i), x))
    return rest + lmul_generator(i, rest).scale(theory.root_factor(i))


def expand_word(theory: Theory, word: Iterable[int]) -> NilHeckeElement:
    """Multiply out ``prod (1 + c(alpha_i) X_i)`` along an arbitrary (possibly non-reduced) word."""
    out = identity(theory)
    for i in reversed(tuple(word)):
        out = out + lmul_generator(i, out).scale(theory.root_factor(i))
    return out


def to_x_basis(a: NilHeckeElement) -> NilHeckeElement:
    if not a.is_group:
        return a
    out = NilHeckeElement(a.theory)
    for w, q in a.terms.items():
        out = out + expand_group_element(a.theory, w).scale(q)
    return out


def y_generator(theory: Theory, i: int) -> NilHeckeElement:
    """``y_i = 1 + X_i``."""
    return identity(theory) + generator(theory, i)


def y_tilde_generator(theory: Theory, i: int) -> NilHeckeElement:
    """``1 - e^{alpha_i} T_i`` in K.

    In H the element playing the same role for the dot action is ``-A_i``: with
    ``s_i = 1 - alpha_i A_i`` one gets ``(-A_i) . xi^w = xi^{s_i w}`` on left descents.
    """
    if theory.is_k:
        return identity(theory) - generator(theory, i).scale(theory.weight(theory.rs.classical_root(i)))
    return -generator(theory, i)


def y_elements(theory: Theory, w: AffineWeylElement) -> NilHeckeElement:
    """``y_w`` as the product of ``y_i`` over the reduced word of ``w``."""
    out = identity(theory)
    for i in reversed(w.word):
        out = out + lmul_generator(i, out)
    return out


def y_interval_sum(theory: Theory, w: AffineWeylElement) -> NilHeckeElement:
    G = theory.rs.affine
    return NilHeckeElement(theory, {v: theory.one for v in G.lower_interval(w)})


# ---------------------------------------------------------------- tensors

class Tensor:
    """Element of ``H (x)_coeff H`` written as ``sum q X_u (x) X_v``; coefficients sit on the left."""

    __slots__ = ("theory", "terms")

    def __init__(self, theory: Theory, terms: Mapping[tuple[AffineWeylElement, AffineWeylElement], _Sparse]):
        self.theory = theory
        self.terms = _clean(terms)

    def __add__(self, other: "Tensor") -> "Tensor":
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc[k] + v if k in acc else v
        return Tensor(self.theory, acc)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + Tensor(other.theory, {k: -v for k, v in other.terms.items()})

    def scale(self, q: _Sparse) -> "Tensor":
        return Tensor(self.theory, {k: q * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.terms == other.terms

    def __mul__(self, other: "Tensor") -> "Tensor":
        """Factorwise product; valid when ``self`` lies in the Takeuchi subring (images of the coproduct)."""
        th = self.theory
        acc: dict = {}
        for (a, b), q in self.terms.items():
            xa = basis_element(th, a)
            for (c, d), p in other.terms.items():
                left = multiply(xa, NilHeckeElement(th, {c: p}))
                right = multiply(basis_element(th, b), basis_element(th, d))
                for z, r in left.terms.items():
                    for z2, r2 in right.terms.items():
                        key = (z, z2)
                        val = q * r * r2
                        acc[key] = acc[key] + val if key in acc else val
        return Tensor(th, acc)

    def __repr__(self):
        b = self.theory.basis_name
        return " + ".join(f"({q!r}){b}_{u!r}(x){b}_{v!r}" for (u, v), q in
                          sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))) or "0"


def tensor_one(theory: Theory) -> Tensor:
    e = theory.rs.affine.identity
    return Tensor(theory, {(e, e): theory.one})


def coproduct_generator(theory: Theory, i: int) -> Tensor:
    """``Delta(X_i) = X_i (x) 1 + 1 (x) X_i + c(alpha_i) X_i (x) X_i``."""
    G = theory.rs.affine
    e, s = G.identity, G.s(i)
    return Tensor(theory, {(s, e): theory.one, (e, s): theory.one, (s, s): theory.root_factor(i)})


def coproduct_y(theory: Theory, i: int) -> Tensor:
    """``Delta(y_i)`` obtained from ``Delta(X_i)`` by the substitution ``X_i = y_i - 1``."""
    return tensor_one(theory) + coproduct_generator(theory, i)


def coproduct_y_recursion_form(theory: Theory, i: int) -> Tensor:
    """``c(alpha_i) y_i (x) y_i + (1 - c(alpha_i)) (y_i (x) 1 + 1 (x) y_i - 1 (x) 1)`` in the X-basis."""
    G = theory.rs.affine
    e, s = G.identity, G.s(i)
    one = theory.one
    c = theory.root_factor(i)
    yy = Tensor(theory, {(e, e): one, (s, e): one, (e, s): one, (s, s): one}).scale(c)
    lin = Tensor(theory, {(e, e): one, (s, e): one, (e, s): one})
    return yy + lin.scale(one - c)


def coproduct_group(theory: Theory, x: AffineWeylElement) -> list[tuple[AffineWeylElement, AffineWeylElement]]:
    """``Delta(w) = w (x) w`` in the group basis."""
    return [(x, x)]


def coproduct_word(theory: Theory, w: AffineWeylElement) -> Tensor:
    """``Delta(X_w)`` as the product of generator coproducts over a reduced word."""
    out = tensor_one(theory)
    for i in w.word:
        out = out * coproduct_generator(theory, i)
    return out


# ------------------------------------------------------- classical projection

@lru_cache(maxsize=1024)
def _cl_generator(theory: Theory, i: int) -> NilHeckeElement:
    if i != 0:
        return generator(theory, i)
    G = theory.rs.affine
    s_theta = G.finite(G.s(0).fin)
    exp = expand_group_element(theory, s_theta)
    den = theory.root_factor(0)
    return NilHeckeElement(theory, {v: exact_divide(c, den) for v, c in exp.terms.items() if v != G.identity})


def t_minus_theta(theory: Theory) -> NilHeckeElement:
    """``c(-theta)^{-1} (s_theta - 1)`` in the finite ``X``-basis."""
    return _cl_generator(theory, 0)


def classical_projection(a: NilHeckeElement) -> NilHeckeElement:
    """Ring map killing translations: ``t_mu v -> v``; ``X_0 -> X_{-theta}``."""
    th = a.theory
    G = th.rs.affine
    if a.is_group:
        acc: dict = {}
        for w, q in a.terms.items():
            v = G.finite(w.fin)
            acc[v] = acc[v] + q if v in acc else q
        return NilHeckeElement(th, acc, GROUP)
    out = NilHeckeElement(th)
    memo: dict = {}
    for w, q in a.terms.items():
        out = out + _cl_word(th, w.word, memo).scale(q)
    return out


def _cl_word(th: Theory, word: tuple[int, ...], memo: dict) -> NilHeckeElement:
    if word in memo:
        return memo[word]
    if not word:
        res = identity(th)
    else:
        res = multiply(_cl_generator(th, word[0]), _cl_word(th, word[1:], memo))
    memo[word] = res
    return res


@dataclass(frozen=True)
class NilHeckeConfig:
    """Parameters for nilHecke sweeps in scripts and tests."""

    type_letter: str = "A"
    rank: int = 2
    theory: str = "K"
    max_length: int = 3


# ------------------------------------------------------------- self-checks

@dataclass
class AlgebraReport:
    theory: str
    checks: dict

    @property
    def ok(self) -> bool:
        return all(v["status"] == "pass" for v in self.checks.values())

    def to_json(self) -> dict:
        return {"identity": "nilhecke", "theory": self.theory,
                "status": "pass" if self.ok else "fail", "checks": self.checks}


def _braid_order(G, i: int, j: int, cap: int = 6) -> int | None:
    p = compose(G.s(i), G.s(j))
    x = p
    for m in range(1, cap + 1):
        if x == G.identity:
            return m
        x = compose(x, p)
    return None


def verify_nilhecke(theory: Theory, y_length: int = 5, ball_radius: int = 3) -> AlgebraReport:
    """Quadratic, braid, reduced-word, multiplicativity and ``y_w`` interval checks."""
    G = theory.rs.affine
    checks: dict = {}

    def record(name, cases, bad):
        checks[name] = {"status": "fail" if bad else "pass", "cases": cases}
        if bad:
            checks[name]["counterexample"] = bad

    bad, n = None, 0
    for i in G.nodes:
        g = generator(theory, i)
        n += 1
        if multiply(g, g) != g.scale(theory.one * -theory.eps) and bad is None:
            bad = {"node": i}
    record("quadratic", n, bad)

    bad, n = None, 0
    for i in G.nodes:
        for j in G.nodes:
            if i >= j:
                continue
            m = _braid_order(G, i, j)
            if m is None:
                continue
            a, b = identity(theory), identity(theory)
            for k in range(m):
                a = lmul_generator(i if k % 2 == 0 else j, a)
                b = lmul_generator(j if k % 2 == 0 else i, b)
            n += 1
            if a != b and bad is None:
                bad = {"nodes": [i, j], "m": m}
    record("braid", n, bad)

    bad, n = None, 0
    for x in G.ball(min(y_length, 4)):
        ref = expand_group_element(theory, x)
        for word in reduced_words(x):
            n += 1
            if expand_word(theory, word) != ref and bad is None:
                bad = {"element": element_to_json(x), "word": list(word)}
    record("reduced_words", n, bad)

    bad, n = None, 0
    ball = G.ball(ball_radius)
    for x in ball:
        ex = expand_group_element(theory, x)
        for y in ball:
            n += 1
            if multiply(ex, expand_group_element(theory, y)) != expand_group_element(theory, compose(x, y)):
                bad = {"x": element_to_json(x), "y": element_to_json(y)}
                break
        if bad:
            break
    record("multiplicative", n, bad)

    bad, n = None, 0
    if theory.is_k:
        for w in G.ball(y_length):
            n += 1
            if y_elements(theory, w) != y_interval_sum(theory, w):
                bad = {"element": element_to_json(w)}
                break
        record("y_interval", n, bad)
    return AlgebraReport(theory.name, checks)
