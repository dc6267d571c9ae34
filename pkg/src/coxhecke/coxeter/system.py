"""Coxeter matrices: validation, the named catalog, JSON parsing and the
finite-type classification of Coxeter diagrams.

Generators are identified by their position in the matrix.  A label of 0
stands for infinity, both internally and in the JSON format.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

INFINITY = 0

Subset = frozenset


class CoxeterParseError(ValueError):
    """Invalid Coxeter system input; ``location`` points at the offending field."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


@dataclass(frozen=True)
class CoxeterMatrix:
    labels: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        n = len(self.labels)
        if not self.names:
            object.__setattr__(self, "names", default_names(n))
        validate_labels(self.labels, self.names)

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def generators(self) -> frozenset:
        return frozenset(range(self.rank))

    def m(self, s: int, t: int) -> int:
        return self.labels[s][t]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}; generators are {list(self.names)}") from None

    def subset(self, items: Iterable[Union[int, str]]) -> frozenset:
        """Normalize a collection of generator names or indices to a frozenset of indices."""
        out = set()
        for x in items:
            if isinstance(x, str):
                out.add(self.index(x))
            elif 0 <= x < self.rank:
                out.add(x)
            else:
                raise KeyError(f"generator index {x} out of range")
        return frozenset(out)

    def restrict(self, subset: Iterable[int]) -> "CoxeterMatrix":
        """The Coxeter matrix of the parabolic subsystem on ``subset`` (in increasing order)."""
        idx = sorted(subset)
        return CoxeterMatrix(
            tuple(tuple(self.labels[i][j] for j in idx) for i in idx),
            tuple(self.names[i] for i in idx),
        )

    def components(self, subset: Optional[Iterable[int]] = None) -> list[frozenset]:
        """Connected components of the Coxeter diagram induced on ``subset``."""
        todo = set(self.generators if subset is None else subset)
        comps = []
        while todo:
            start = min(todo)
            comp, stack = {start}, [start]
            todo.discard(start)
            while stack:
                v = stack.pop()
                for u in list(todo):
                    if self.labels[v][u] != 2:
                        todo.discard(u)
                        comp.add(u)
                        stack.append(u)
            comps.append(frozenset(comp))
        return sorted(comps, key=min)

    def label_str(self, s: int, t: int) -> str:
        m = self.labels[s][t]
        return "inf" if m == INFINITY else str(m)

    def subset_name(self, subset: Iterable[int]) -> str:
        return "[" + ",".join(self.names[i] for i in sorted(subset)) + "]"

    def to_json(self) -> dict:
        return {"rank": self.rank, "labels": [list(r) for r in self.labels], "names": list(self.names)}


def default_names(n: int) -> tuple[str, ...]:
    if n <= 4:
        return tuple("stuv"[:n])
    return tuple(f"s{i + 1}" for i in range(n))


def validate_labels(labels: Sequence[Sequence[int]], names: Sequence[str]) -> None:
    n = len(labels)
    for i, row in enumerate(labels):
        if len(row) != n:
            raise CoxeterParseError(f"row has {len(row)} entries, expected {n}", f"labels[{i}]")
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool):
                raise CoxeterParseError(f"label must be an integer, got {x!r}", f"labels[{i}][{j}]")
    for i in range(n):
        if labels[i][i] != 1:
            raise CoxeterParseError("diagonal entries must be 1", f"labels[{i}][{i}]")
        for j in range(i + 1, n):
            if labels[i][j] != labels[j][i]:
                raise CoxeterParseError("labels not symmetric", f"labels[{i}][{j}]")
            if labels[i][j] != INFINITY and labels[i][j] < 2:
                raise CoxeterParseError("off-diagonal label must be >= 2 or 0 (infinity)", f"labels[{i}][{j}]")
    if len(names) != n:
        raise CoxeterParseError(f"expected {n} names, got {len(names)}", "names")
    if len(set(names)) != n:
        raise CoxeterParseError("generator names must be distinct", "names")
    for k, nm in enumerate(names):
        if not isinstance(nm, str) or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", nm):
            raise CoxeterParseError(f"invalid generator name {nm!r}", f"names[{k}]")


# ---------------------------------------------------------------------------
# catalog


def _from_edges(n: int, edges: Iterable[tuple[int, int, int]]) -> tuple[tuple[int, ...], ...]:
    lab = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, j, m in edges:
        lab[i][j] = lab[j][i] = m
    return tuple(tuple(r) for r in lab)


def _path(n: int, first: int = 3) -> list[tuple[int, int, int]]:
    return [(i, i + 1, first if i == 0 else 3) for i in range(n - 1)]


def _catalog_labels(name: str) -> tuple[tuple[int, ...], ...]:
    m = re.fullmatch(r"([ABDEFH])(\d+)", name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "A" and 1 <= n <= 8:
            return _from_edges(n, _path(n))
        if kind == "B" and 2 <= n <= 8:
            return _from_edges(n, _path(n, first=4))
        if kind == "D" and 4 <= n <= 8:
            return _from_edges(n, _path(n - 1) + [(n - 3, n - 1, 3)])
        if kind == "E" and 6 <= n <= 8:
            # Bourbaki numbering: 1-3-4-5-...-n with 2 attached to 4
            edges = [(0, 2, 3), (1, 3, 3)] + [(i, i + 1, 3) for i in range(2, n - 1)]
            return _from_edges(n, edges)
        if kind == "F" and n == 4:
            return _from_edges(4, [(0, 1, 3), (1, 2, 4), (2, 3, 3)])
        if kind == "H" and n in (3, 4):
            return _from_edges(n, _path(n, first=5))
    m = re.fullmatch(r"I2\((\d+)\)", name)
    if m and 5 <= int(m.group(1)) <= 12:
        return _from_edges(2, [(0, 1, int(m.group(1)))])
    fixed = {
        "Atilde1": _from_edges(2, [(0, 1, INFINITY)]),
        "Atilde2": _from_edges(3, [(0, 1, 3), (1, 2, 3), (0, 2, 3)]),
        "Btilde2": _from_edges(3, [(0, 1, 4), (1, 2, 4)]),
        "Hyp334": _from_edges(3, [(0, 1, 3), (1, 2, 3), (0, 2, 4)]),
    }
    if name in fixed:
        return fixed[name]
    raise CoxeterParseError(f"unknown catalog name {name!r}", "type")


CATALOG_NAMES = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "H3", "H4"]
    + [f"I2({m})" for m in range(5, 13)]
    + ["Atilde1", "Atilde2", "Btilde2", "Hyp334"]
)


def catalog(name: str, names: Optional[Sequence[str]] = None) -> CoxeterMatrix:
    """Expand a catalog name; ``x``-separated names give reducible products, e.g. ``A1xA1``."""
    parts = [p for p in name.strip().split("x") if p] if "x" in name else [name.strip()]
    blocks = [_catalog_labels(p) for p in parts]
    n = sum(len(b) for b in blocks)
    lab = [[2] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                lab[off + i][off + j] = v
        off += len(b)
    for i in range(n):
        lab[i][i] = 1
    labels = tuple(tuple(r) for r in lab)
    return CoxeterMatrix(labels, tuple(names) if names else default_names(n))


def parse_coxeter(source: Union[str, dict]) -> CoxeterMatrix:
    """Build a CoxeterMatrix from a catalog name, JSON text, or an already-decoded dict."""
    if isinstance(source, str):
        text = source.strip()
        if not text.startswith("{"):
            return catalog(text)
        try:
            source = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CoxeterParseError(f"malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    if not isinstance(source, dict):
        raise CoxeterParseError("expected a JSON object")
    names = source.get("names")
    if names is not None and not isinstance(names, list):
        raise CoxeterParseError("names must be a list of strings", "names")
    if "type" in source:
        if not isinstance(source["type"], str):
            raise CoxeterParseError("type must be a string", "type")
        return catalog(source["type"], names)
    if "labels" not in source:
        raise CoxeterParseError("missing 'labels' (or 'type')")
    raw = source["labels"]
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise CoxeterParseError("labels must be a list of lists", "labels")
    labels = []
    for i, row in enumerate(raw):
        out = []
        for j, x in enumerate(row):
            if x is None or x == "inf":
                x = INFINITY
            out.append(x)
        labels.append(tuple(out))
    rank = source.get("rank")
    if rank is not None and rank != len(labels):
        raise CoxeterParseError(f"rank {rank} does not match {len(labels)} label rows", "rank")
    return CoxeterMatrix(tuple(labels), tuple(names) if names else default_names(len(labels)))


# ---------------------------------------------------------------------------
# classification


_ORDERS = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "H3": 120, "H4": 14400}
_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "H3": (2, 6, 10),
    "H4": (2, 12, 20, 30),
}


def component_type(m: CoxeterMatrix, comp: Iterable[int]) -> Optional[str]:
    """Name of the finite irreducible type of a connected component, or None if infinite."""
    comp = sorted(comp)
    n = len(comp)
    if n == 1:
        return "A1"
    edges = [(i, j, m.labels[i][j]) for i, j in combinations(comp, 2) if m.labels[i][j] != 2]
    if any(lab == INFINITY for _, _, lab in edges):
        return None
    if n == 2:
        lab = edges[0][2]
        return {3: "A2", 4: "B2", 6: "G2"}.get(lab, f"I2({lab})")
    if len(edges) != n - 1:
        return None  # contains a cycle
    if any(lab > 5 for _, _, lab in edges):
        return None
    deg = {v: 0 for v in comp}
    for i, j, _ in edges:
        deg[i] += 1
        deg[j] += 1
    big = [e for e in edges if e[2] >= 4]
    if len(big) > 1:
        return None
    if big:
        if max(deg.values()) > 2:
            return None
        i, j, lab = big[0]
        at_end = deg[i] == 1 or deg[j] == 1
        if lab == 4:
            if at_end:
                return f"B{n}"
            return "F4" if n == 4 else None
        return f"H{n}" if at_end and n in (3, 4) else None
    branch = [v for v in comp if deg[v] >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1 or deg[branch[0]] > 3:
        return None
    adj = {v: [] for v in comp}
    for i, j, _ in edges:
        adj[i].append(j)
        adj[j].append(i)
    arms = []
    for start in adj[branch[0]]:
        length, prev, cur = 1, branch[0], start
        while deg[cur] == 2:
            prev, cur = cur, next(u for u in adj[cur] if u != prev)
            length += 1
        arms.append(length)
    a, b, c = sorted(arms)
    if Fraction(1, a + 1) + Fraction(1, b + 1) + Fraction(1, c + 1) <= 1:
        return None
    if (a, b) == (1, 1):
        return f"D{n}"
    return f"E{n}"


def is_finite_type(m: CoxeterMatrix, subset: Optional[Iterable[int]] = None) -> bool:
    """True iff W_subset is finite (every component is in the finite classification)."""
    return all(component_type(m, c) is not None for c in m.components(subset))


def type_name(m: CoxeterMatrix, subset: Optional[Iterable[int]] = None) -> str:
    """E.g. ``A2xA1``; infinite components are shown by their generator list."""
    parts = []
    for c in m.components(subset):
        t = component_type(m, c)
        parts.append(t if t else "inf" + m.subset_name(c))
    return "x".join(parts) if parts else "trivial"


def component_order(kind: str) -> int:
    """Order of a finite irreducible Coxeter group given its type name."""
    from math import factorial

    if kind in _ORDERS:
        return _ORDERS[kind]
    mt = re.fullmatch(r"I2\((\d+)\)", kind)
    if mt:
        return 2 * int(mt.group(1))
    if kind == "G2":
        return 12
    letter, n = kind[0], int(kind[1:])
    if letter == "A":
        return factorial(n + 1)
    if letter == "B":
        return 2 ** n * factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * factorial(n)
    raise ValueError(kind)


def component_degrees(kind: str) -> tuple[int, ...]:
    """Degrees of the basic invariants of a finite irreducible type."""
    if kind in _DEGREES:
        return _DEGREES[kind]
    mt = re.fullmatch(r"I2\((\d+)\)", kind)
    if mt:
        return (2, int(mt.group(1)))
    if kind == "G2":
        return (2, 6)
    letter, n = kind[0], int(kind[1:])
    if letter == "A":
        return tuple(range(2, n + 2))
    if letter == "B":
        return tuple(range(2, 2 * n + 1, 2))
    if letter == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    raise ValueError(kind)
