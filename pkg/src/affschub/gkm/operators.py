"""
Pointwise checks of the operator identities relating theta, eta, kappa, the
two nilHecke actions, cup products and Schubert classes.

Each check compares two derived classes at every point of a ball and reports
the first disagreement.  All classes involved are built from Schubert classes,
so they are extendable and every point can be evaluated exactly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from ..affweyl import AffineWeylElement, element_to_json
from ..coeffring import Theory
from ..nilhecke import GROUP, NilHeckeElement, coproduct_generator, generator, y_generator, y_tilde_generator
from .classes import (LocalizedClass, act, act_tensor, bullet_coeff, bullet_group, constant_class, cup,
                      dot_coeff, dot_group, endo, line_bundle_class, schubert_class)

@dataclass
class OperatorReport:
    name: str
    status: str = "pass"
    cases: int = 0
    points_checked: int = 0
    counterexample: dict | None = None

    def to_json(self) -> dict:
        d = {"identity": self.name, "status": self.status, "cases": self.cases,
             "points_checked": self.points_checked}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d

    @property
    def ok(self) -> bool:
        return self.status == "pass"


class OperatorSuite:
    """Builds the classes once and runs every identity over ``points``."""

    def __init__(self, theory: Theory, max_length: int = 4, radius: int | None = None,
                 translation_length: int = 4, seed: int = 0):
        self.theory = theory
        G = theory.rs.affine
        self.G = G
        self.elements = G.ball(max_length)
        self.points = G.ball(max_length if radius is None else radius)
        self.finite = G.finite_elements()
        self.translations = [t for t in G.translations_upto(translation_length)]
        self.psi = {w: schubert_class(theory, w, max_length) for w in self.elements}
        self.grass = [u for u in self.elements if G.is_grassmannian(u)]
        self.weights = [tuple(int(i == j) for j in range(theory.rs.rank)) for i in range(theory.rs.rank)]
        self.rng = random.Random(seed)

    # -- helpers
    def q(self, lam) -> object:
        return self.theory.weight(lam)

    def odot(self, w: AffineWeylElement, psi: LocalizedClass) -> LocalizedClass:
        return dot_group(w, bullet_group(w, psi))

    def compare(self, name: str, cases: Iterator[tuple[str, LocalizedClass, LocalizedClass]]) -> OperatorReport:
        rep = OperatorReport(name)
        for label, lhs, rhs in cases:
            rep.cases += 1
            for x in self.points:
                rep.points_checked += 1
                a, b = lhs(x), rhs(x)
                if a != b:
                    rep.status = "fail"
                    rep.counterexample = {"case": label, "point": element_to_json(x),
                                          "lhs": a.to_json(), "rhs": b.to_json()}
                    return rep
        return rep

    # -- endomorphism relations
    def endo_relations(self):
        for w, p in self.psi.items():
            th, et, ka = (endo(k, p) for k in ("theta", "eta", "kappa"))
            yield f"theta^2 {w!r}", endo("theta", th), th
            yield f"eta^2 {w!r}", endo("eta", et), et
            yield f"kappa^2 {w!r}", endo("kappa", ka), ka
            for a, b in (("theta", "eta"), ("eta", "theta"), ("theta", "kappa"), ("kappa", "theta"),
                         ("eta", "kappa"), ("kappa", "eta")):
                yield f"{a}{b} {w!r}", endo(a, endo(b, p)), ka

    def theta_commutations(self):
        for w, p in self.psi.items():
            th = endo("theta", p)
            for lam in self.weights:
                q = self.q(lam)
                yield f"q. {w!r} {lam}", dot_coeff(q, th), endo("theta", dot_coeff(q, p))
            for t in self.translations:
                yield f"t. {w!r} {t!r}", dot_group(t, th), endo("theta", dot_group(t, p))
            for v in self.finite:
                yield f"w. {w!r} {v!r}", dot_group(v, th), endo("theta", self.odot(v, p))
                yield f"w* {w!r} {v!r}", bullet_group(v, th), th

    def eta_commutations(self):
        for w, p in self.psi.items():
            et = endo("eta", p)
            for lam in self.weights:
                q = self.q(lam)
                yield f"q. {w!r} {lam}", dot_coeff(q, et), endo("eta", dot_coeff(q, p))
                yield f"q* {w!r} {lam}", bullet_coeff(q, et), endo("eta", bullet_coeff(q, p))
            for t in self.translations:
                yield f"t. {w!r} {t!r}", dot_group(t, et), et
                yield f"t* {w!r} {t!r}", bullet_group(t, et), et
            for v in self.finite:
                yield f"w. {w!r} {v!r}", dot_group(v, et), endo("eta", dot_group(v, p))
                yield f"w* {w!r} {v!r}", bullet_group(v, et), endo("eta", bullet_group(v, p))

    def kappa_commutations(self):
        for w, p in self.psi.items():
            ka = endo("kappa", p)
            for lam in self.weights:
                q = self.q(lam)
                yield f"q. {w!r} {lam}", dot_coeff(q, ka), endo("kappa", dot_coeff(q, p))
            for t in self.translations:
                yield f"t. {w!r} {t!r}", dot_group(t, ka), ka
                yield f"t* {w!r} {t!r}", bullet_group(t, ka), ka
            for v in self.finite:
                yield f"w. {w!r} {v!r}", dot_group(v, ka), endo("kappa", self.odot(v, p))
                yield f"w* {w!r} {v!r}", bullet_group(v, ka), ka

    # -- actions on Schubert classes
    def _bullet_y(self, i: int) -> NilHeckeElement:
        return y_generator(self.theory, i) if self.theory.is_k else generator(self.theory, i)

    def _missing(self, w: AffineWeylElement) -> LocalizedClass:
        """``psi^w`` when the generator fixes it (K), zero in H."""
        if self.theory.is_k:
            return self.psi.get(w) or schubert_class(self.theory, w, 0)
        return constant_class(self.theory, self.theory.zero)

    def dot_bullet(self):
        th, G = self.theory, self.G
        for w, p in self.psi.items():
            for i in G.nodes:
                left = G.s(i) * w
                expect = schubert_class(th, left, 0) if left.length < w.length else self._missing(w)
                yield f"ytilde_{i}. {w!r}", act("dot", y_tilde_generator(th, i), p), expect
                right = w * G.s(i)
                expect = schubert_class(th, right, 0) if right.length < w.length else self._missing(w)
                yield f"y_{i}* {w!r}", act("bullet", self._bullet_y(i), p), expect
            for lam in self.weights:
                q = self.q(lam)
                yield f"q. {w!r} {lam}", dot_coeff(q, p), LocalizedClass(th, p.radius, lambda x, p=p, q=q: q * p(x), True)
                yield f"q* {w!r} {lam}", bullet_coeff(q, p), cup(line_bundle_class(th, lam, p.radius), p)

    def _coproduct_sum(self, v: AffineWeylElement, bullet_coeff_q=None) -> LocalizedClass:
        """``sum theta(psi^{x1}) cup eta(psi^{x2})`` over the factorizations of ``v``."""
        th, G = self.theory, self.G
        mode = "demazure" if th.is_k else "length_additive"
        parts = []
        for x1, x2, sign in G.factorizations(v, mode, True):
            right = schubert_class(th, x2, 0)
            if bullet_coeff_q is not None:
                right = bullet_coeff(bullet_coeff_q, right)
            parts.append((sign, cup(endo("theta", schubert_class(th, x1, 0)), endo("eta", right))))

        def fn(x):
            acc = th.zero
            for s, c in parts:
                acc = acc + (c(x) if s > 0 else -c(x))
            return acc

        return LocalizedClass(th, 0, fn, True, f"coprod({v!r})")

    def nilhecke_theta(self):
        th, G, rs = self.theory, self.G, self.theory.rs
        neg_theta = rs.classical_root(0)
        for u in self.grass:
            p = self.psi[u]
            for lam in self.weights:
                yield f"(1) {u!r} {lam}", bullet_coeff(self.q(lam), p), cup(line_bundle_class(th, lam, p.radius), p)
            for i in G.finite_nodes:
                if th.is_k:
                    yield f"(2) y_{i} {u!r}", act("bullet", y_generator(th, i), p), p
                else:
                    yield f"(2) A_{i} {u!r}", act("bullet", generator(th, i), p), constant_class(th, th.zero)
                yield f"(2) s_{i} {u!r}", bullet_group(G.s(i), p), p
            if u == G.identity:
                continue
            us0 = u * G.s(0)
            target = self._coproduct_sum(us0)
            yield f"(3) {u!r}", act("bullet", self._bullet_y(0), p), schubert_class(th, us0, 0)
            yield f"(3) factorized {u!r}", act("bullet", self._bullet_y(0), p), target
            if th.is_k:
                # s_0 = e^{-theta} + (1 - e^{-theta}) y_0, both coefficients acting by bullet
                c = th.one - th.weight(neg_theta)
                first = bullet_coeff(th.weight(neg_theta), p)
            else:
                # bullet coefficient -cl(alpha_0) = theta
                c = th.weight(tuple(-a for a in neg_theta))
                first = p
            rest = self._coproduct_sum(us0, c)
            rhs = LocalizedClass(th, 0, lambda x, a=first, b=rest: a(x) + b(x), True)
            yield f"(4) {u!r}", bullet_group(G.s(0), p), rhs

    def cup_product(self, samples: int = 6):
        th, G = self.theory, self.G
        classes = list(self.psi.values())
        pairs = [(self.rng.choice(classes), self.rng.choice(classes)) for _ in range(samples)]
        lb = [line_bundle_class(th, lam, 0) for lam in self.weights]
        pairs += [(lb[k % len(lb)], self.rng.choice(classes)) for k in range(2)]
        for a_idx, (p1, p2) in enumerate(pairs):
            prod = cup(p1, p2)
            for i in G.nodes:
                t = coproduct_generator(th, i)
                for side in ("dot", "bullet"):
                    yield (f"X_{i} {side} #{a_idx}", act(side, generator(th, i), prod),
                           act_tensor(side, t, p1, p2))
            for lam in self.weights:
                for v in self.finite:
                    q = self.q(lam)
                    a = NilHeckeElement(th, {v: q}, GROUP)
                    one_v = NilHeckeElement(th, {v: th.one}, GROUP)
                    for side in ("dot", "bullet"):
                        rhs = cup(act(side, a, p1), act(side, one_v, p2))
                        yield f"e^lam w {side} #{a_idx} {lam} {v!r}", act(side, a, prod), rhs

    def checks(self) -> list[tuple[str, Callable]]:
        return [("endo_relations", self.endo_relations), ("theta_commutations", self.theta_commutations),
                ("eta_commutations", self.eta_commutations), ("kappa_commutations", self.kappa_commutations),
                ("dot_bullet", self.dot_bullet), ("nilhecke_theta", self.nilhecke_theta),
                ("cup_product", self.cup_product)]

    def run(self, only: Iterable[str] | None = None) -> list[OperatorReport]:
        wanted = set(only) if only else None
        return [self.compare(name, fn()) for name, fn in self.checks() if wanted is None or name in wanted]


def verify_operators(theory: Theory, max_length: int = 4, radius: int | None = None,
                     seed: int = 0, only: Iterable[str] | None = None) -> list[OperatorReport]:
    return OperatorSuite(theory, max_length, radius, seed=seed).run(only)
