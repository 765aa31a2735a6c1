"""
Finite root systems, weight lattices and finite Weyl groups built from Cartan data.

Conventions: ``cartan[i][j] = <alpha_i^vee, alpha_j>``.  Weights live in
fundamental-weight coordinates, so ``<alpha_i^vee, lam>`` is just ``lam[i]``;
coroot-lattice vectors live in simple-coroot coordinates and pair with weights
by the plain dot product.  Roots are kept both in simple-root coordinates (for
positivity and dominance) and in weight coordinates (for the Weyl action).

>>> rs = build_root_system("A", 2)
>>> rs.highest_root, rs.comarks
((1, 1), (1, 1, 1))
>>> weyl_act(rs, [2, 1], (1, 0))
(0, -1)
"""
from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

DEFAULT_ENUMERATION_CAP = 10**6
BUDGET_ENV = "AFFSCHUB_BUDGET"


class CartanError(ValueError):
    """Invalid or unsupported Cartan data."""


class BudgetExceeded(RuntimeError):
    """An enumeration outgrew its configured cap."""


def enumeration_cap() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_ENUMERATION_CAP


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(b)
    cols = list(zip(*b))
    return tuple(tuple(sum(row[k] * col[k] for k in range(n)) for col in cols) for row in a)


def _matvec(m: Matrix, v: Sequence[int]) -> Vector:
    return tuple(sum(r * x for r, x in zip(row, v)) for row in m)


def cartan_matrix(type_letter: str, rank: int) -> list[list[int]]:
    """Cartan matrix of a finite irreducible type (Bourbaki numbering)."""
    t = type_letter.upper()
    if t == "G":
        if rank != 2:
            raise CartanError("type G only exists in rank 2")
        # alpha_1 short, alpha_2 long
        return [[2, -3], [-1, 2]]
    min_rank = {"A": 1, "B": 2, "C": 2, "D": 3}
    if t not in min_rank:
        raise CartanError(f"unsupported type {type_letter!r}")
    if rank < min_rank[t]:
        raise CartanError(f"type {t} needs rank >= {min_rank[t]}")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if t == "B":
        a[rank - 1][rank - 2] = -2
    elif t == "C":
        a[rank - 2][rank - 1] = -2
    elif t == "D":
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    return a


def validate_cartan(cartan: Sequence[Sequence[int]]) -> None:
    n = len(cartan)
    if n == 0 or any(len(row) != n for row in cartan):
        raise CartanError("Cartan matrix must be square and non-empty")
    for i in range(n):
        if cartan[i][i] != 2:
            raise CartanError(f"diagonal entry ({i},{i}) is not 2")
        for j in range(n):
            if i == j:
                continue
            if cartan[i][j] > 0:
                raise CartanError(f"off-diagonal entry ({i},{j}) is positive")
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise CartanError(f"zero pattern not symmetric at ({i},{j})")
    # connectedness: a unique highest root needs an irreducible system
    seen, todo = {0}, [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if cartan[i][j] and j not in seen:
                seen.add(j)
                todo.append(j)
    if len(seen) != n:
        raise CartanError("Cartan matrix is decomposable; only irreducible systems are supported")


@dataclass(frozen=True, eq=False)
class FiniteWeylElement:
    """An element of the finite Weyl group, canonicalized by its matrix on weights."""

    mat: Matrix
    comat: Matrix  # action on coroot coordinates (inverse transpose of ``mat``)
    group: "FiniteWeylGroup" = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, FiniteWeylElement) and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __mul__(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        return self.group.intern(_matmul(self.mat, other.mat), _matmul(self.comat, other.comat))

    def act(self, weight: Sequence[int]) -> Vector:
        return _matvec(self.mat, weight)

    def coact(self, coweight: Sequence[int]) -> Vector:
        return _matvec(self.comat, coweight)

    @cached_property
    def inverse(self) -> "FiniteWeylElement":
        # orthogonality of the pairing: w^{-1} on weights is comat^T
        inv = tuple(zip(*self.comat))
        coinv = tuple(zip(*self.mat))
        return self.group.intern(inv, coinv)

    @property
    def is_identity(self) -> bool:
        return self.mat == self.group.identity.mat

    @cached_property
    def word(self) -> tuple[int, ...]:
        """Lex-least reduced word, as 1-based simple indices."""
        rs = self.group.rs
        for i in range(1, rs.rank + 1):
            if rs.is_negative_weight_root(self.inverse.act(rs.simple_root_weight(i))):
                return (i,) + (self.group.simple(i) * self).word
        return ()

    @property
    def length(self) -> int:
        return len(self.word)

    def __repr__(self):
        return "e" if not self.word else "s" + "s".join(str(i) for i in self.word)


class FiniteWeylGroup:
    def __init__(self, rs: "RootSystem"):
        self.rs = rs
        self._elements: dict[Matrix, FiniteWeylElement] = {}
        n = rs.rank
        self.identity = self.intern(_identity(n), _identity(n))
        self._simple = {}
        for i in range(1, n + 1):
            aw = rs.simple_root_weight(i)
            m = tuple(tuple(int(k == l) - (aw[k] if l == i - 1 else 0) for l in range(n)) for k in range(n))
            c = tuple(tuple(int(k == l) - (rs.cartan[l][i - 1] if k == i - 1 else 0) for l in range(n)) for k in range(n))
            self._simple[i] = self.intern(m, c)

    def intern(self, mat: Matrix, comat: Matrix) -> FiniteWeylElement:
        el = self._elements.get(mat)
        if el is None:
            el = FiniteWeylElement(mat, comat, self)
            self._elements[mat] = el
        return el

    def simple(self, i: int) -> FiniteWeylElement:
        return self._simple[i]

    def from_word(self, word: Iterable[int]) -> FiniteWeylElement:
        x = self.identity
        for i in word:
            if i not in self._simple:
                raise IndexError(f"simple index {i} out of range 1..{self.rs.rank}")
            x = x * self._simple[i]
        return x

    def reflection(self, root: Sequence[int]) -> FiniteWeylElement:
        """Reflection in a root given in simple-root coordinates."""
        rs = self.rs
        coroot = rs.coroot_of(tuple(root))
        rw = rs.root_to_weight(root)
        n = rs.rank
        m = tuple(tuple(int(k == l) - rw[k] * coroot[l] for l in range(n)) for k in range(n))
        # coweights: gamma -> gamma - <gamma, root> coroot
        c = tuple(tuple(int(k == l) - coroot[k] * rw[l] for l in range(n)) for k in range(n))
        return self.intern(m, c)

    @cached_property
    def elements(self) -> list[FiniteWeylElement]:
        """All elements, sorted by length then lex-least reduced word."""
        cap = self.rs.cap
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for s in self._simple.values():
                y = x * s
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise BudgetExceeded(f"finite Weyl group exceeds cap {cap}")
                    queue.append(y)
        return sorted(seen, key=lambda w: (w.length, w.word))

    @cached_property
    def longest(self) -> FiniteWeylElement:
        return self.elements[-1]

    def __len__(self):
        return len(self.elements)


@dataclass(eq=False)
class RootSystem:
    """Finite crystallographic root system with its affine node data.

    Affine node indices run over ``0..rank``; node 0 is the affine node.
    """

    cartan: Matrix
    name: str = "custom"
    labels: tuple[str, ...] = ()
    cap: int = field(default_factory=enumeration_cap)

    def __post_init__(self):
        validate_cartan(self.cartan)
        self.cartan = tuple(tuple(int(x) for x in row) for row in self.cartan)
        if not self.labels:
            self.labels = tuple(str(i) for i in range(1, self.rank + 1))
        self._build_roots()

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def root_to_weight(self, root: Sequence[int]) -> Vector:
        n = self.rank
        return tuple(sum(self.cartan[k][j] * root[j] for j in range(n)) for k in range(n))

    def simple_root_weight(self, i: int) -> Vector:
        """alpha_i in fundamental-weight coordinates (1-based i)."""
        return tuple(row[i - 1] for row in self.cartan)

    def _build_roots(self):
        n = self.rank
        a = self.cartan
        simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
        coroot = {s: s for s in simple}
        queue = deque(simple)
        limit = 4 * n * n + 16  # generous bound on |Phi^+| for finite types of rank n
        while queue:
            beta = queue.popleft()
            bc = coroot[beta]
            for j in range(n):
                pair = sum(a[j][k] * beta[k] for k in range(n))
                new = tuple(beta[k] - pair * (k == j) for k in range(n))
                copair = sum(bc[k] * a[k][j] for k in range(n))
                newc = tuple(bc[k] - copair * (k == j) for k in range(n))
                if new not in coroot:
                    coroot[new] = newc
                    queue.append(new)
                    if len(coroot) > 2 * limit:
                        raise CartanError("Cartan matrix is not of finite type")
        self._coroot = coroot
        pos = [r for r in coroot if all(c >= 0 for c in r)]
        pos.sort(key=lambda r: (sum(r), r))
        self.positive_roots: list[Vector] = pos
        self.positive_roots_weight: list[Vector] = [self.root_to_weight(r) for r in pos]
        self._pos_weight_set = frozenset(self.positive_roots_weight)
        self._neg_weight_set = frozenset(tuple(-x for x in r) for r in self.positive_roots_weight)
        top = pos[-1]
        if any(any(t < b for t, b in zip(top, beta)) for beta in pos):
            raise CartanError("no unique highest root")
        self.highest_root: Vector = top
        self.highest_coroot: Vector = coroot[top]
        self.comarks: Vector = (1,) + self.highest_coroot

    def coroot_of(self, root: Vector) -> Vector:
        return self._coroot[root]

    @property
    def theta_weight(self) -> Vector:
        return self.root_to_weight(self.highest_root)

    def is_positive_weight_root(self, beta: Vector) -> bool:
        return beta in self._pos_weight_set

    def is_negative_weight_root(self, beta: Vector) -> bool:
        return beta in self._neg_weight_set

    def level(self, i: int) -> int:
        """level(Lambda_i): coefficient of alpha_i^vee in the canonical central element."""
        return self.comarks[i]

    def classical_root(self, i: int) -> Vector:
        """alpha_i at level zero in weight coordinates; alpha_0 maps to -theta."""
        if i == 0:
            return tuple(-x for x in self.theta_weight)
        return self.simple_root_weight(i)

    @cached_property
    def weyl(self) -> FiniteWeylGroup:
        return FiniteWeylGroup(self)

    @cached_property
    def affine(self):
        from .affweyl import AffineWeylGroup

        return AffineWeylGroup(self)

    @cached_property
    def rho(self) -> Vector:
        return (1,) * self.rank

    def __repr__(self):
        return f"RootSystem({self.name})"


def build_root_system(type_letter: str | None = None, rank: int | None = None, *,
                      cartan: Sequence[Sequence[int]] | None = None,
                      labels: Sequence[str] = (), cap: int | None = None) -> RootSystem:
    """Build a root system from a type and rank, or from an explicit Cartan matrix."""
    if cartan is None:
        if type_letter is None or rank is None:
            raise CartanError("give either type and rank or an explicit Cartan matrix")
        cartan = cartan_matrix(type_letter, rank)
        name = f"{type_letter.upper()}{rank}"
    else:
        name = "custom"
    kwargs = {} if cap is None else {"cap": cap}
    rs = RootSystem(tuple(tuple(r) for r in cartan), name=name, labels=tuple(labels), **kwargs)
    if len(rs.weyl.elements) > rs.cap:
        raise BudgetExceeded("finite Weyl group exceeds cap")
    return rs


def load_cartan_json(path_or_text: str) -> RootSystem:
    """Load ``{"cartan": [[...]], "labels": [...]}`` from a file path or JSON text."""
    if os.path.exists(path_or_text):
        with open(path_or_text) as fh:
            doc = json.load(fh)
    else:
        doc = json.loads(path_or_text)
    if "cartan" not in doc:
        raise CartanError("JSON document lacks a 'cartan' field")
    return build_root_system(cartan=doc["cartan"], labels=doc.get("labels", ()))


def weyl_act(rs: RootSystem, element_or_word, weight: Sequence[int]) -> Vector:
    """Act on a weight by a Weyl element or by the product ``s_{i1} ... s_{ik}`` of a word."""
    if isinstance(element_or_word, FiniteWeylElement):
        w = element_or_word
    else:
        w = rs.weyl.from_word(element_or_word)
    return w.act(weight)


def pair(coweight: Sequence[int], weight: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(coweight, weight))
