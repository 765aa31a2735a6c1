"""
Rebuilding affine Schubert classes from Grassmannian ones inside
``K_T(Gr) (x) K_T(G/B)`` (resp. cohomology).

A tensor is kept in the normal form ``sum_w zeta_w (x) psi^w_{G/B}`` with ``w``
finite and each ``zeta_w`` a function on a finite set of translations ``mu``.
It is realized on the affine flag variety as ``t_mu v -> sum_w zeta_w(mu) psi^w(v)``.

Finite generators act on the right factor only.  For ``X_0`` the coproduct
``Delta(X_0) = X_0 (x) s_0 + 1 (x) X_0`` is used: on the right factor ``s_0``
and ``X_0`` act through the classical projection (``s_theta`` and
``X_{-theta}``); on the left factor ``X_0 * p^*(zeta)`` is evaluated pointwise,
``(zeta(mu + v theta^vee) - zeta(mu)) / c(-v theta)``, and split back into
normal form by a triangular solve over ``W`` at each translation.  The split
shrinks the translation domain to those ``mu`` whose whole ``theta^vee``-orbit
neighbourhood was known.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from ..affweyl import AffineWeylElement, compose, element_to_json
from ..coeffring import Theory, _Sparse, exact_divide
from .classes import schubert_value

Vec = tuple[int, ...]


@lru_cache(maxsize=None)
def _finite(theory: Theory) -> tuple[AffineWeylElement, ...]:
    return tuple(theory.rs.affine.finite_elements())


def _gb(theory: Theory, w: AffineWeylElement, v: AffineWeylElement) -> _Sparse:
    return schubert_value(theory, w, v)


def expand_flag(theory: Theory, phi: dict) -> dict:
    """``phi = sum_w b_w psi^w_{G/B}`` for a function ``phi`` on ``W``."""
    out: dict = {}
    for w in _finite(theory):
        r = phi.get(w, theory.zero)
        for a, c in out.items():
            if a.length < w.length:
                p = _gb(theory, a, w)
                if not p.is_zero():
                    r = r - c * p
        if not r.is_zero():
            out[w] = exact_divide(r, _gb(theory, w, w))
    return out


def _flag_bullet(theory: Theory, i: int, phi: dict) -> dict:
    """``X_i`` bullet on G/B; ``i = 0`` acts as ``X_{-theta}``."""
    G = theory.rs.affine
    r = G.finite(G.s(i).fin)
    beta = theory.rs.classical_root(i)
    out = {}
    for v in _finite(theory):
        d = phi.get(compose(v, r), theory.zero) - phi.get(v, theory.zero)
        if not d.is_zero():
            out[v] = exact_divide(d, theory.factor(v.fin.act(beta)))
    return out


@lru_cache(maxsize=None)
def _right_matrix(theory: Theory, i: int):
    """``X_i * psi^w_{G/B} = sum_b M[w][b] psi^b_{G/B}`` (classical ``X_i``)."""
    M = {}
    for w in _finite(theory):
        phi = {v: _gb(theory, w, v) for v in _finite(theory)}
        M[w] = expand_flag(theory, _flag_bullet(theory, i, phi))
    return M


@lru_cache(maxsize=None)
def _product_matrix(theory: Theory):
    """``psi^a * (s_theta * psi^w) = sum_b P[(a, w)][b] psi^b_{G/B}``."""
    G = theory.rs.affine
    st = G.finite(G.s(0).fin)
    P = {}
    for a in _finite(theory):
        for w in _finite(theory):
            phi = {v: _gb(theory, a, v) * _gb(theory, w, compose(v, st)) for v in _finite(theory)}
            P[(a, w)] = expand_flag(theory, phi)
    return P


@dataclass
class TensorClass:
    theory: Theory
    domain: frozenset
    parts: dict = field(default_factory=dict)

    def value(self, mu: Vec, v: AffineWeylElement) -> _Sparse:
        if mu not in self.domain:
            raise KeyError(f"translation {mu} outside tensor domain")
        acc = self.theory.zero
        for w, zeta in self.parts.items():
            z = zeta.get(mu)
            if z is not None:
                g = _gb(self.theory, w, v)
                if not g.is_zero():
                    acc = acc + z * g
        return acc

    def _add(self, parts: dict, w, mu, c):
        d = parts.setdefault(w, {})
        n = d.get(mu, self.theory.zero) + c
        if n.is_zero():
            d.pop(mu, None)
        else:
            d[mu] = n

    def apply_generator(self, i: int) -> "TensorClass":
        th = self.theory
        M = _right_matrix(th, i)
        new: dict = {}
        if i == 0:
            dom = self._shrunk_domain()
        else:
            dom = self.domain
        for w, zeta in self.parts.items():
            for b, m in M[w].items():
                for mu, z in zeta.items():
                    if mu in dom:
                        self._add(new, b, mu, z * m)
        if i == 0:
            P = _product_matrix(th)
            for w, zeta in self.parts.items():
                split = self._left_x0(zeta, dom)
                for mu, coeffs in split.items():
                    for a, c in coeffs.items():
                        for b, p in P[(a, w)].items():
                            self._add(new, b, mu, c * p)
        return TensorClass(th, dom, {w: z for w, z in new.items() if z})

    def apply_y(self, i: int) -> "TensorClass":
        """``y_i = 1 + X_i``."""
        x = self.apply_generator(i)
        for w, zeta in self.parts.items():
            for mu, z in zeta.items():
                if mu in x.domain:
                    self._add(x.parts, w, mu, z)
        x.parts = {w: z for w, z in x.parts.items() if z}
        return x

    def _shrunk_domain(self) -> frozenset:
        rs = self.theory.rs
        shifts = {v.fin.coact(rs.highest_coroot) for v in _finite(self.theory)}
        return frozenset(mu for mu in self.domain
                         if all(tuple(a + b for a, b in zip(mu, s)) in self.domain for s in shifts))

    def _left_x0(self, zeta: dict, dom: frozenset) -> dict:
        th = self.theory
        rs = th.rs
        neg_theta = rs.classical_root(0)
        out = {}
        for mu in dom:
            z0 = zeta.get(mu, th.zero)
            phi = {}
            for v in _finite(th):
                s = v.fin.coact(rs.highest_coroot)
                z1 = zeta.get(tuple(a + b for a, b in zip(mu, s)), th.zero)
                d = z1 - z0
                if not d.is_zero():
                    phi[v] = exact_divide(d, th.factor(v.fin.act(neg_theta)))
            if phi:
                out[mu] = expand_flag(th, phi)
        return out


def grassmannian_tensor(theory: Theory, u: AffineWeylElement, domain: frozenset) -> TensorClass:
    """``psi^u_Gr (x) 1``."""
    G = theory.rs.affine
    zeta = {}
    for mu in domain:
        c = schubert_value(theory, u, G.translation(mu))
        if not c.is_zero():
            zeta[mu] = c
    return TensorClass(theory, domain, {G.identity: zeta} if zeta else {})


def path_from_grassmannian(theory: Theory, x: AffineWeylElement) -> tuple[AffineWeylElement, list[int]]:
    """Grassmannian ``u`` and indices ``j_1..j_m`` with ``x = u s_{j_1} ... s_{j_m}``, lengths dropping by one.

    Breadth-first search upward in right weak order; among shortest paths the one
    with the fewest ``s_0`` steps is chosen.
    """
    G = theory.rs.affine
    best = {x: (0, 0, [])}
    queue = deque([x])
    found = []
    while queue:
        y = queue.popleft()
        steps, zeros, path = best[y]
        if found and steps > found[0][1]:
            break
        if G.is_grassmannian(y):
            found.append((zeros, steps, y, path))
            continue
        for i in G.nodes:
            if not G.is_right_descent(y, i):
                z = compose(y, G.s(i))
                cand = (steps + 1, zeros + (i == 0), [i] + path)
                if z not in best:
                    best[z] = cand
                    queue.append(z)
                elif cand[:2] < best[z][:2]:
                    best[z] = cand
    zeros, steps, u, path = min(found, key=lambda f: (f[0], f[1], f[2].word))
    return u, path


def translation_domain(theory: Theory, max_translation_length: int) -> frozenset:
    G = theory.rs.affine
    return frozenset(t.mu for t in G.translations_upto(max_translation_length))


@dataclass
class RecursionReport:
    theory: str
    max_length: int
    checked_elements: int = 0
    checked_points: int = 0
    status: str = "pass"
    counterexample: dict | None = None

    def to_json(self) -> dict:
        d = {"identity": "recursion", "theory": self.theory, "max_length": self.max_length,
             "checked_elements": self.checked_elements, "checked_points": self.checked_points,
             "status": self.status}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


def rebuild(theory: Theory, x: AffineWeylElement, final_translation_length: int = 4) -> TensorClass:
    """The tensor for ``psi^x`` obtained from ``psi^u_Gr (x) 1`` by the recursion."""
    u, path = path_from_grassmannian(theory, x)
    growth = theory.rs.affine.translation(theory.rs.highest_coroot).length
    dom = translation_domain(theory, final_translation_length + growth * path.count(0))
    t = grassmannian_tensor(theory, u, dom)
    for j in path:
        t = t.apply_y(j) if theory.is_k else t.apply_generator(j)
    return t


def verify_recursion(theory: Theory, max_length: int, final_translation_length: int = 4) -> RecursionReport:
    G = theory.rs.affine
    rep = RecursionReport(theory.name, max_length)
    for x in G.ball(max_length):
        t = rebuild(theory, x, final_translation_length)
        rep.checked_elements += 1
        for mu in sorted(t.domain):
            for v in _finite(theory):
                pt = compose(G.translation(mu), v)
                got = t.value(mu, v)
                want = schubert_value(theory, x, pt)
                rep.checked_points += 1
                if got != want:
                    rep.status = "fail"
                    rep.counterexample = {"element": element_to_json(x), "point": element_to_json(pt),
                                          "recursion": got.to_json(), "table": want.to_json()}
                    return rep
    return rep
