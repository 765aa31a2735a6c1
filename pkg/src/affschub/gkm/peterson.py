"""
Peterson elements assembled from Grassmannian expansions of wrong-way classes.

For Grassmannian ``u`` the coefficient of ``X_z`` in ``k_u`` (K) / ``j_u`` (H) is
the coefficient of ``psi^u`` in the Grassmannian expansion of ``theta(psi^z)``.
Only values at Grassmannian ``v <= u`` enter that coefficient, so ``z`` must lie
below some translation ``t(v)``; once the radius reaches the longest such
translation the assembled element is exact.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..affweyl import AffineWeylElement
from ..coeffring import Theory, exact_divide
from ..nilhecke import NilHeckeElement, classical_projection, coefficient, multiply
from .classes import schubert_value


def exact_radius(theory: Theory, u: AffineWeylElement) -> int:
    G = theory.rs.affine
    below = [v for v in G.lower_interval(u) if G.is_grassmannian(v)]
    return max(G.translation(v.mu).length for v in below)


def _grass_below(theory: Theory, u: AffineWeylElement) -> list[AffineWeylElement]:
    G = theory.rs.affine
    return sorted(v for v in G.lower_interval(u) if G.is_grassmannian(v))


def peterson_coefficient(theory: Theory, u: AffineWeylElement, z: AffineWeylElement) -> object:
    """Coefficient of ``psi^u`` in the Grassmannian expansion of ``theta(psi^z)``."""
    G = theory.rs.affine
    coeffs = {}
    for v in _grass_below(theory, u):
        r = schubert_value(theory, z, G.translation(v.mu))
        for w, c in coeffs.items():
            if w.length < v.length:
                pw = schubert_value(theory, w, v)
                if not pw.is_zero():
                    r = r - c * pw
        if not r.is_zero():
            coeffs[v] = exact_divide(r, schubert_value(theory, v, v))
    return coeffs.get(u, theory.zero)


@dataclass
class PetersonResult:
    element: NilHeckeElement
    radius: int
    exact: bool


def peterson_assemble(theory: Theory, u: AffineWeylElement, radius: int | None = None) -> PetersonResult:
    """``sum_{l(z) <= radius} k^z_u X_z``; exact when ``radius >= exact_radius(u)``."""
    G = theory.rs.affine
    if not G.is_grassmannian(u):
        raise ValueError(f"{u!r} is not a minimal coset representative")
    need = exact_radius(theory, u)
    L = need if radius is None else radius
    tops = [G.translation(v.mu) for v in _grass_below(theory, u)]
    terms = {}
    for z in G.ball(L):
        if not any(G.bruhat_leq(z, t) for t in tops):
            continue
        c = peterson_coefficient(theory, u, z)
        if not c.is_zero():
            terms[z] = c
    return PetersonResult(NilHeckeElement(theory, terms), L, L >= need)


def commutator_with_weight(theory: Theory, a: NilHeckeElement, lam) -> NilHeckeElement:
    """``a q - q a`` for ``q = e^lam`` (K) or ``lam`` (H)."""
    q = coefficient(theory, theory.weight(lam))
    return multiply(a, q) - multiply(q, a)


def classical_image(result: PetersonResult) -> NilHeckeElement:
    return classical_projection(result.element)
