"""
Pointwise verification of the coproduct decompositions of affine Schubert
classes, Grassmannian expansion of coset-invariant classes, and the Schubert
divisor identities.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..affweyl import AffineWeylElement, element_to_json
from ..coeffring import InexactDivision, Theory, _Sparse, exact_divide
from .classes import LocalizedClass, TruncationError, ideal_sheaf_value, schubert_value

VARIANTS = ("structure_sheaf", "ideal_sheaf")


def coproduct_terms(theory: Theory, w: AffineWeylElement, variant: str = "structure_sheaf"):
    """``[(w1, w2, coefficient)]`` with ``w2`` finite, in the theory's native form.

    Structure sheaf: Demazure factorizations with signs (K) or length-additive
    factorizations (H).  Ideal sheaf (K only): Demazure factorizations without
    signs.  Cohomology has no factorization formula for the dual basis of ``y_w``;
    :func:`verify_coproduct` checks it as the Moebius transform of the
    length-additive formula instead.
    """
    G = theory.rs.affine
    if variant == "structure_sheaf":
        mode = "demazure" if theory.is_k else "length_additive"
        return G.factorizations(w, mode, True)
    if variant == "ideal_sheaf":
        if theory.is_k:
            return [(a, b, 1) for a, b, _ in G.factorizations(w, "demazure", True)]
        raise NoFactorizationFormula("cohomology ideal-sheaf classes have no factorization formula")
    raise ValueError(f"unknown variant {variant!r}")


class NoFactorizationFormula(ValueError):
    pass


@dataclass
class CoproductReport:
    identity: str
    type: str
    rank: int
    radius: int
    theory: str
    variant: str
    element: list
    status: str = "pass"
    points_checked: int = 0
    terms: int = 0
    counterexample: dict | None = None

    def to_json(self) -> dict:
        d = {k: getattr(self, k) for k in ("identity", "type", "rank", "radius", "theory", "variant",
                                           "element", "status", "points_checked", "terms")}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def _class_value(theory: Theory, variant: str, v: AffineWeylElement, x: AffineWeylElement) -> _Sparse:
    if variant == "structure_sheaf":
        return schubert_value(theory, v, x)
    return ideal_sheaf_value(theory, v, x)


def _moebius_rhs(theory: Theory, w: AffineWeylElement, x: AffineWeylElement, cache: dict) -> _Sparse:
    """``sum_{w <= u <= x} (-1)^{l(u)-l(w)} sum_{u = u1 u2} xi^{u1}(t_mu) xi^{u2}(v)``."""
    G = theory.rs.affine
    t = G.translation(x.mu)
    v = G.finite(x.fin)
    acc = theory.zero
    for u in G.lower_interval(x):
        if not G.bruhat_leq(w, u):
            continue
        if u not in cache:
            cache[u] = G.factorizations(u, "length_additive", True)
        part = theory.zero
        for u1, u2, _ in cache[u]:
            a = schubert_value(theory, u1, t)
            if not a.is_zero():
                part = part + a * schubert_value(theory, u2, v)
        acc = acc + (part if (u.length - w.length) % 2 == 0 else -part)
    return acc


def verify_coproduct(theory: Theory, w: AffineWeylElement, radius: int,
                     variant: str = "structure_sheaf", points: Iterable[AffineWeylElement] | None = None,
                     exhaust: bool = False) -> CoproductReport:
    """Check ``psi^w(t_mu v) = sum coeff * psi^{w1}(t_mu) * psi^{w2}(v)`` at every point of ``ball(radius)``.

    ``w2`` runs over finite elements.  The report stops at the first failing
    point unless ``exhaust`` is set.
    """
    rs = theory.rs
    G = rs.affine
    if w.length > radius:
        raise TruncationError(f"element of length {w.length} exceeds radius {radius}")
    moebius = variant == "ideal_sheaf" and not theory.is_k
    terms = [] if moebius else coproduct_terms(theory, w, variant)
    rep = CoproductReport("coproduct", rs.name, rs.rank, radius, theory.name, variant,
                          list(w.word), terms=len(terms))
    cache: dict = {}
    pts = G.ball(radius) if points is None else list(points)
    for x in pts:
        t = G.translation(x.mu)
        v = G.finite(x.fin)
        lhs = _class_value(theory, variant, w, x)
        if moebius:
            rhs = _moebius_rhs(theory, w, x, cache)
        else:
            rhs = theory.zero
            for w1, w2, c in terms:
                a = _class_value(theory, variant, w1, t)
                if a.is_zero():
                    continue
                b = _class_value(theory, variant, w2, v)
                if not b.is_zero():
                    rhs = rhs + a * b * c
        rep.points_checked += 1
        if lhs != rhs:
            if rep.counterexample is None:
                rep.status = "fail"
                rep.counterexample = {"point": element_to_json(x), "lhs": lhs.to_json(), "rhs": rhs.to_json()}
            if not exhaust:
                break
    return rep


# ------------------------------------------------------- Grassmannian basis

class NotCosetInvariant(ValueError):
    pass


def grassmannian_elements(theory: Theory, max_length: int) -> list[AffineWeylElement]:
    G = theory.rs.affine
    return [u for u in G.ball(max_length) if G.is_grassmannian(u)]


def expand_grassmannian(theory: Theory, zeta: LocalizedClass, max_length: int,
                        check_invariance: bool = True) -> dict[AffineWeylElement, _Sparse]:
    """Coefficients ``c_u`` with ``zeta = sum c_u psi^u`` on Grassmannian ``u`` of length ``<= max_length``.

    Triangular solve at the minimal coset representatives in increasing length.
    """
    G = theory.rs.affine
    if check_invariance:
        for x in G.ball(min(max_length, zeta.radius) if not zeta.extendable else max_length):
            u = G.min_coset_rep(x)
            if zeta(x) != zeta(u):
                raise NotCosetInvariant(f"class differs on the coset of {x!r}: {zeta(x)!r} vs {zeta(u)!r}")
    coeffs: dict[AffineWeylElement, _Sparse] = {}
    for u in grassmannian_elements(theory, max_length):
        r = zeta(u)
        for v, c in coeffs.items():
            if v != u and v.length < u.length:
                pv = schubert_value(theory, v, u)
                if not pv.is_zero():
                    r = r - c * pv
        if r.is_zero():
            continue
        try:
            coeffs[u] = exact_divide(r, schubert_value(theory, u, u))
        except InexactDivision as exc:
            raise InexactDivision(f"class is not in the Schubert span at {u!r}") from exc
    return coeffs


# ---------------------------------------------------------- divisor identities

@dataclass
class DivisorReport:
    theory: str
    node: int
    level: int
    points_checked: int = 0
    status: str = "pass"
    counterexample: dict | None = field(default=None)

    def to_json(self) -> dict:
        d = {"identity": "divisor", "theory": self.theory, "node": self.node, "level": self.level,
             "points_checked": self.points_checked, "status": self.status}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


def verify_divisor(theory: Theory, i: int, max_translation_length: int) -> DivisorReport:
    """K: ``1 - psi^{s_i}(t) = (1 - psi^{s_0}(t))^level``; H: ``xi^{s_i}(t) = level * xi^{s_0}(t)``."""
    rs = theory.rs
    G = rs.affine
    lev = rs.level(i)
    rep = DivisorReport(theory.name, i, lev)
    si, s0 = G.s(i), G.s(0)
    one = theory.one
    for t in G.translations_upto(max_translation_length):
        a = schubert_value(theory, si, t)
        b = schubert_value(theory, s0, t)
        if theory.is_k:
            ok = one - a == (one - b) ** lev
        else:
            ok = a == b * lev
        rep.points_checked += 1
        if not ok:
            rep.status = "fail"
            rep.counterexample = {"point": element_to_json(t), "psi_si": a.to_json(), "psi_s0": b.to_json()}
            break
    return rep
