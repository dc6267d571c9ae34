"""Exact enumeration of a Coxeter group by breadth-first search in its
geometric representation, with descent data and parabolic decompositions.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Optional, Sequence

from ..exactmath import CycloElement
from .system import INFINITY, CoxeterMatrix, is_finite_type

DEFAULT_MEM_CAP = 200_000
COMPLETE = None  # max_length value requesting the whole (finite) group


class BallError(RuntimeError):
    pass


class BallTooLarge(BallError):
    def __init__(self, cap: int, radius: int):
        self.cap, self.radius = cap, radius
        super().__init__(f"ball size exceeded memory cap {cap} (complete through radius {radius})")


class RadiusError(BallError):
    """A computation needs elements beyond the enumerated radius."""

    def __init__(self, message: str, required: Optional[int] = None):
        self.required = required
        super().__init__(message)


class GeometricRep:
    """The reflection representation over Q(zeta_n), n = 2 lcm(finite labels >= 3).

    ``two_b[s][t]`` is 2B(alpha_s, alpha_t) with B(alpha_s, alpha_t) = -cos(pi/m)
    and -1 for m = infinity.  ``sigma[s]`` is the matrix of the reflection in
    the basis of simple roots.
    """

    def __init__(self, m: CoxeterMatrix):
        self.coxeter = m
        n = m.rank
        finite = {m.labels[i][j] for i in range(n) for j in range(n) if i != j and m.labels[i][j] not in (2, INFINITY)}
        self.conductor = 2 * lcm(*finite) if finite else 2
        c = self.conductor
        self.two_b = [[self._two_b(m.labels[i][j]) for j in range(n)] for i in range(n)]
        one = CycloElement.rational(c, 1)
        zero = CycloElement.rational(c, 0)
        self.sigma = []
        for s in range(n):
            mat = [[one if i == j else zero for j in range(n)] for i in range(n)]
            mat[s] = [(one if t == s else zero) - self.two_b[s][t] for t in range(n)]
            self.sigma.append(tuple(tuple(r) for r in mat))
        # the nonzero off-diagonal coefficients of row s of sigma_s
        self._row = [
            [(t, -self.two_b[s][t]) for t in range(n) if t != s and self.two_b[s][t]] for s in range(n)
        ]

    def _two_b(self, label: int) -> CycloElement:
        c = self.conductor
        if label == 1:
            return CycloElement.rational(c, 2)
        if label == 2:
            return CycloElement.rational(c, 0)
        if label == INFINITY:
            return CycloElement.rational(c, -2)
        k = c // (2 * label)
        return -(CycloElement.zeta(c, k) + CycloElement.zeta(c, c - k))

    def identity(self) -> tuple:
        n = self.coxeter.rank
        one = CycloElement.rational(self.conductor, 1)
        zero = CycloElement.rational(self.conductor, 0)
        return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))

    def left(self, s: int, mat: tuple) -> tuple:
        """sigma_s * mat: only row s changes."""
        new = [-x for x in mat[s]]
        for t, c in self._row[s]:
            rt = mat[t]
            for j in range(len(new)):
                if rt[j]:
                    new[j] = new[j] + c * rt[j]
        return mat[:s] + (tuple(new),) + mat[s + 1:]

    def right(self, mat: tuple, s: int) -> tuple:
        """mat * sigma_s: column s is negated, column t gains c_st times the old column s."""
        out = []
        for row in mat:
            x = row[s]
            new = list(row)
            new[s] = -x
            if x:
                for t, c in self._row[s]:
                    new[t] = new[t] + x * c
            out.append(tuple(new))
        return tuple(out)

    @staticmethod
    def multiply(a: tuple, b: tuple) -> tuple:
        n = len(a)
        return tuple(
            tuple(_dot([a[i][k] for k in range(n)], [b[k][j] for k in range(n)]) for j in range(n))
            for i in range(n)
        )


def _dot(xs, ys):
    acc = xs[0] * ys[0]
    for x, y in zip(xs[1:], ys[1:]):
        acc = acc + x * y
    return acc


@dataclass(frozen=True)
class ElementRef:
    index: int
    length: int


@dataclass(frozen=True)
class ParabolicDecomposition:
    coset_part: ElementRef
    parabolic_part: ElementRef


class CayleyBall:
    """All elements of W of length <= radius, indexed in BFS order.

    Index 0 is the identity.  ``left_mul[s][w]`` and ``right_mul[w][s]`` are
    element indices, or None when the product has length radius + 1.
    """

    def __init__(self, m: CoxeterMatrix, max_length: Optional[int] = COMPLETE, mem_cap: int = DEFAULT_MEM_CAP):
        if max_length is COMPLETE and not is_finite_type(m):
            raise BallError(f"complete enumeration requested for an infinite Coxeter group")
        if max_length is not None and max_length < 0:
            raise ValueError("max_length must be nonnegative")
        self.coxeter = m
        self.rep = GeometricRep(m)
        self.mem_cap = mem_cap
        self._build(max_length)

    # -- construction -------------------------------------------------
    def _build(self, max_length: Optional[int]) -> None:
        rep, n = self.rep, self.coxeter.rank
        ident = rep.identity()
        self.matrices: list[tuple] = [ident]
        self.lengths: list[int] = [0]
        self.parent: list[Optional[tuple[int, int]]] = [None]
        lookup = {ident: 0}
        self.left_mul: list[list[Optional[int]]] = [[] for _ in range(n)]
        frontier, depth = [0], 0
        self.complete = False
        while frontier:
            at_edge = max_length is not None and depth == max_length
            new = []
            for w in frontier:
                mat = self.matrices[w]
                for s in range(n):
                    prod = rep.left(s, mat)
                    j = lookup.get(prod)
                    if j is None and not at_edge:
                        j = len(self.matrices)
                        if j >= self.mem_cap:
                            raise BallTooLarge(self.mem_cap, depth)
                        lookup[prod] = j
                        self.matrices.append(prod)
                        self.lengths.append(depth + 1)
                        self.parent.append((w, s))
                        new.append(j)
                    self.left_mul[s].append(j)
            if not new and not at_edge:
                self.complete = True
            frontier = new
            if at_edge:
                break
            depth += 1
        self.radius = max(self.lengths) if self.complete else max_length
        self._lookup = lookup
        size = len(self.matrices)
        self.right_mul = [[lookup.get(rep.right(self.matrices[w], s)) for s in range(n)] for w in range(size)]
        self.left_desc = [
            frozenset(s for s in range(n) if self._below(self.left_mul[s][w], w)) for w in range(size)
        ]
        self.right_desc = [
            frozenset(s for s in range(n) if self._below(self.right_mul[w][s], w)) for w in range(size)
        ]
        # w = s * parent  =>  w^-1 = parent^-1 * s
        self.inverse = [0] * size
        for w in range(1, size):
            p, s = self.parent[w]
            inv = self.right_mul[self.inverse[p]][s]
            assert inv is not None
            self.inverse[w] = inv
        self._words: list[Optional[tuple[int, ...]]] = [None] * size

    def _below(self, j: Optional[int], w: int) -> bool:
        return j is not None and self.lengths[j] < self.lengths[w]

    # -- queries ------------------------------------------------------
    def __len__(self) -> int:
        return len(self.matrices)

    @property
    def rank(self) -> int:
        return self.coxeter.rank

    def ref(self, w: int) -> ElementRef:
        if not 0 <= w < len(self.matrices):
            raise IndexError(f"element index {w} not in ball of size {len(self.matrices)}")
        return ElementRef(w, self.lengths[w])

    def word(self, w: int) -> tuple[int, ...]:
        """Reduced word of w read off the BFS parent chain (leftmost letter first)."""
        cached = self._words[w]
        if cached is not None:
            return cached
        letters = []
        x = w
        while x:
            p, s = self.parent[x]
            letters.append(s)
            x = p
        out = tuple(letters)
        self._words[w] = out
        return out

    def word_str(self, w: int) -> str:
        return "[" + ",".join(self.coxeter.names[s] for s in self.word(w)) + "]"

    def element_from_word(self, word: Sequence[int]) -> int:
        """Evaluate a word as a group element (any word, reduced or not)."""
        x = 0
        for s in reversed(word):
            y = self.left_mul[s][x]
            if y is None:
                raise RadiusError(f"word {list(word)} leaves the ball of radius {self.radius}", len(word))
            x = y
        return x

    def index_of_matrix(self, mat: tuple) -> Optional[int]:
        return self._lookup.get(mat)

    def lmul(self, s: int, w: int) -> int:
        j = self.left_mul[s][w]
        if j is None:
            raise RadiusError(
                f"s*w has length {self.lengths[w] + 1}, beyond radius {self.radius}", self.lengths[w] + 1
            )
        return j

    def rmul(self, w: int, s: int) -> int:
        j = self.right_mul[w][s]
        if j is None:
            raise RadiusError(
                f"w*s has length {self.lengths[w] + 1}, beyond radius {self.radius}", self.lengths[w] + 1
            )
        return j

    def multiply(self, u: int, v: int) -> int:
        """Group product u*v (must stay in the ball)."""
        x = v
        for s in reversed(self.word(u)):
            x = self.lmul(s, x)
        return x

    def in_parabolic(self, w: int, subset: Iterable[int]) -> bool:
        return set(self.word(w)) <= set(subset)

    def parabolic_elements(self, subset: Iterable[int]) -> list[int]:
        subset = frozenset(subset)
        return [w for w in range(len(self)) if set(self.word(w)) <= subset]

    def length_histogram(self) -> list[int]:
        h = [0] * ((self.radius or 0) + 1)
        for ln in self.lengths:
            h[ln] += 1
        return h


def build_ball(m: CoxeterMatrix, max_length: Optional[int] = COMPLETE, mem_cap: int = DEFAULT_MEM_CAP) -> CayleyBall:
    return CayleyBall(m, max_length, mem_cap)


def coset_reps(ball: CayleyBall, subset: Iterable[int]) -> list[ElementRef]:
    """Elements of the ball with no right descent in ``subset`` (minimal left coset reps W^I)."""
    subset = frozenset(subset)
    return [ball.ref(w) for w in range(len(ball)) if not (ball.right_desc[w] & subset)]


def left_coset_reps(ball: CayleyBall, subset: Iterable[int]) -> list[ElementRef]:
    """Elements with no left descent in ``subset`` (the set written ^I W)."""
    subset = frozenset(subset)
    return [ball.ref(w) for w in range(len(ball)) if not (ball.left_desc[w] & subset)]


def parabolic_decompose(ball: CayleyBall, w, subset: Iterable[int]) -> ParabolicDecomposition:
    """Write w = w^I * w_I by stripping right descents in I one at a time."""
    w = w.index if isinstance(w, ElementRef) else w
    y, u = _decompose(ball, w, frozenset(subset))
    return ParabolicDecomposition(ball.ref(y), ball.ref(u))


def _decompose(ball: CayleyBall, w: int, subset: frozenset) -> tuple[int, int]:
    y, u = w, 0
    while True:
        hit = ball.right_desc[y] & subset
        if not hit:
            return y, u
        s = min(hit)
        y2 = ball.right_mul[y][s]
        u2 = ball.left_mul[s][u]
        if y2 is None or u2 is None:
            raise RadiusError("radius insufficient for parabolic decomposition")
        y, u = y2, u2


def left_parabolic_decompose(ball: CayleyBall, w, subset: Iterable[int]) -> ParabolicDecomposition:
    """Write w = _I w * ^I w, obtained from the right decomposition of w^-1.

    The returned ``coset_part`` is ^I w and ``parabolic_part`` is _I w.
    """
    w = w.index if isinstance(w, ElementRef) else w
    y, u = _decompose(ball, ball.inverse[w], frozenset(subset))
    return ParabolicDecomposition(ball.ref(ball.inverse[y]), ball.ref(ball.inverse[u]))
