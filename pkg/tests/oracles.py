"""Independent models of small Coxeter groups and Hecke algebras used as test oracles.

Groups are realised as permutation groups: type A by adjacent transpositions,
type B by signed permutations, dihedral groups by reflections of a polygon.
None of this shares code with the package.
"""
from __future__ import annotations

from collections import deque

import sympy


def perm_generators(kind: str) -> list[tuple[int, ...]]:
    """Images of the Coxeter generators as permutations of range(N)."""
    if kind.startswith("A"):
        n = int(kind[1:]) + 1
        gens = []
        for i in range(n - 1):
            p = list(range(n))
            p[i], p[i + 1] = p[i + 1], p[i]
            gens.append(tuple(p))
        return gens
    if kind.startswith("B"):
        # signed permutations of {+-1..+-n}; point k <-> index k-1, -k <-> n+k-1
        n = int(kind[1:])

        def idx(x):
            return x - 1 if x > 0 else n - x - 1

        def perm(f):
            out = [0] * (2 * n)
            for x in list(range(1, n + 1)) + [-k for k in range(1, n + 1)]:
                out[idx(x)] = idx(f(x))
            return tuple(out)

        gens = [perm(lambda x: -x if abs(x) == 1 else x)]
        for i in range(1, n):
            def swap(x, i=i):
                a = abs(x)
                b = i + 1 if a == i else i if a == i + 1 else a
                return b if x > 0 else -b
            gens.append(perm(swap))
        return gens
    if kind.startswith("I2("):
        m = int(kind[3:-1])
        s = tuple((-i) % m for i in range(m))
        t = tuple((1 - i) % m for i in range(m))
        return [s, t]
    raise ValueError(kind)


def compose(p, g):
    """p then g, i.e. the element p*g acting on the right."""
    return tuple(g[p[i]] for i in range(len(p)))


def enumerate_group(gens):
    """BFS by right multiplication: returns {perm: length}."""
    e = tuple(range(len(gens[0])))
    seen = {e: 0}
    todo = deque([e])
    while todo:
        p = todo.popleft()
        for g in gens:
            r = compose(p, g)
            if r not in seen:
                seen[r] = seen[p] + 1
                todo.append(r)
    return seen


def word_to_perm(word, gens):
    p = tuple(range(len(gens[0])))
    for s in word:
        p = compose(p, gens[s])
    return p


class RegularHecke:
    """The Hecke algebra of a finite group given by permutation generators,
    built as left multiplication operators on the free module with basis W.

    T_s acts by T_s T_w = T_{sw} if l(sw) > l(w), else (q-1) T_w + q T_{sw}.
    Elements are dicts perm -> sympy expression; products are computed by
    expanding the left factor into generator words.
    """

    q = sympy.Symbol("q")

    def __init__(self, gens):
        self.gens = gens
        self.length = enumerate_group(gens)
        self.words = {}
        for p, _ in sorted(self.length.items(), key=lambda kv: kv[1]):
            if self.length[p] == 0:
                self.words[p] = ()
                continue
            for s, g in enumerate(self.gens):
                prev = compose(p, g)  # p * s, since s is an involution
                if self.length[prev] == self.length[p] - 1:
                    self.words[p] = self.words[prev] + (s,)
                    break

    def left_s(self, s, x):
        out = {}
        for w, c in x.items():
            sw = compose(self.gens[s], w)
            if self.length[sw] > self.length[w]:
                out[sw] = out.get(sw, 0) + c
            else:
                out[w] = out.get(w, 0) + (self.q - 1) * c
                out[sw] = out.get(sw, 0) + self.q * c
        return {w: sympy.expand(c) for w, c in out.items() if sympy.expand(c) != 0}

    def mul(self, a, b):
        total = {}
        for u, c in a.items():
            x = dict(b)
            for s in reversed(self.words[u]):
                x = self.left_s(s, x)
            for w, d in x.items():
                total[w] = total.get(w, 0) + c * d
        return {w: sympy.expand(c) for w, c in total.items() if sympy.expand(c) != 0}
