"""Sparse matrices over Z[q] and exact linear algebra over Q(q).

All elimination is fraction-free (Bareiss) over Z[q]; rational functions
only appear during back substitution when a witness or kernel vector is
requested.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .poly import ONE, ZERO, IntPolynomial
from .ratfunc import RationalFunction


class PolyMatrix:
    """A rows x cols matrix stored as one ``{col: IntPolynomial}`` dict per row."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        self.rows, self.cols = rows, cols
        self.data: list[dict[int, IntPolynomial]] = [dict() for _ in range(rows)]
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for (i, j), v in items:
                self[i, j] = v

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        m = cls(nr, nc)
        for i, row in enumerate(rows):
            if len(row) != nc:
                raise ValueError("ragged matrix")
            for j, v in enumerate(row):
                v = IntPolynomial.coerce(v)
                if v:
                    m.data[i][j] = v
        return m

    def _check(self, i: int, j: int) -> None:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")

    def __getitem__(self, ij) -> IntPolynomial:
        i, j = ij
        self._check(i, j)
        return self.data[i].get(j, ZERO)

    def __setitem__(self, ij, v) -> None:
        i, j = ij
        self._check(i, j)
        v = IntPolynomial.coerce(v)
        if v:
            self.data[i][j] = v
        else:
            self.data[i].pop(j, None)

    def add_to(self, i: int, j: int, v: IntPolynomial) -> None:
        self[i, j] = self[i, j] + v

    def entries(self):
        for i, row in enumerate(self.data):
            for j in sorted(row):
                yield (i, j), row[j]

    def nnz(self) -> int:
        return sum(len(r) for r in self.data)

    def is_zero(self) -> bool:
        return not any(self.data)

    def to_dense(self) -> list[list[IntPolynomial]]:
        return [[r.get(j, ZERO) for j in range(self.cols)] for r in self.data]

    def column(self, j: int) -> list[IntPolynomial]:
        return [r.get(j, ZERO) for r in self.data]

    def transpose(self) -> "PolyMatrix":
        t = PolyMatrix(self.cols, self.rows)
        for i, row in enumerate(self.data):
            for j, v in row.items():
                t.data[j][i] = v
        return t

    def copy(self) -> "PolyMatrix":
        m = PolyMatrix(self.rows, self.cols)
        m.data = [dict(r) for r in self.data]
        return m

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = PolyMatrix(self.rows, other.cols)
        for i, row in enumerate(self.data):
            acc: dict[int, IntPolynomial] = {}
            for k, a in row.items():
                for j, b in other.data[k].items():
                    acc[j] = acc.get(j, ZERO) + a * b
            out.data[i] = {j: v for j, v in acc.items() if v}
        return out

    def apply(self, v: Sequence) -> list:
        """Matrix-vector product; v may hold IntPolynomial or RationalFunction entries."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for row in self.data:
            acc = None
            for j, a in row.items():
                if v[j]:
                    t = v[j] * a
                    acc = t if acc is None else acc + t
            out.append(acc if acc is not None else ZERO)
        return out

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        m = PolyMatrix(self.rows, self.cols + other.cols)
        for i in range(self.rows):
            m.data[i] = dict(self.data[i])
            for j, v in other.data[i].items():
                m.data[i][j + self.cols] = v
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.data == other.data

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"


# ---------------------------------------------------------------------------
# elimination


def _pivot_key(p: IntPolynomial) -> tuple:
    return (p.degree, sum(1 for c in p.coeffs if c), max(abs(c) for c in p.coeffs))


def _echelon(rows: Iterable[dict], allowed: int):
    """Fraction-free Gaussian elimination with full pivoting on columns < allowed.

    Returns ``(pivots, rest)``: ``pivots`` is the list of ``(row, col)`` in
    elimination order, where each row has zeros in all earlier pivot
    columns; ``rest`` holds the leftover nonzero rows, which vanish on every
    column < allowed.  Columns >= allowed (right-hand sides) are carried along
    but never chosen as pivots.
    """
    active = [dict(r) for r in rows if r]
    pivots: list[tuple[dict, int]] = []
    prev = ONE
    while active:
        best = None
        for i, r in enumerate(active):
            for c, p in r.items():
                if c < allowed:
                    key = _pivot_key(p) + (c, i)
                    if best is None or key < best:
                        best = key
                        if key[0] == 0 and key[2] == 1:
                            break
        if best is None:
            break
        c, i = best[-2], best[-1]
        prow = active.pop(i)
        piv = prow[c]
        scale_only = piv != prev
        nxt = []
        for r in active:
            a = r.get(c)
            if a is None:
                if scale_only:
                    r = {k: (v * piv).exact_div(prev) for k, v in r.items()}
            else:
                new = {}
                for k in r.keys() | prow.keys():
                    if k == c:
                        continue
                    x = r.get(k)
                    y = prow.get(k)
                    val = (x * piv if x is not None else ZERO) - (a * y if y is not None else ZERO)
                    if val:
                        if not prev.is_one():
                            val = val.exact_div(prev)
                        new[k] = val
                r = new
            if r:
                nxt.append(r)
        active = nxt
        pivots.append((prow, c))
        prev = piv
    return pivots, active


def rank_over_fraction_field(m: PolyMatrix) -> int:
    """Rank of m over Q(q)."""
    pivots, _ = _echelon(m.data, m.cols)
    return len(pivots)


def _back_substitute(pivots, fixed: dict) -> dict:
    """Solve the echelon system for pivot variables given values of the others.

    ``fixed`` maps column -> RationalFunction for the non-pivot unknowns and
    for right-hand-side columns (entered with a negative sign by callers).
    """
    x = dict(fixed)
    for prow, c in reversed(pivots):
        acc = None
        for k, a in prow.items():
            if k == c:
                continue
            v = x.get(k)
            if v is not None and v:
                t = v * a
                acc = t if acc is None else acc + t
        x[c] = RationalFunction(ZERO) if acc is None else -acc / prow[c]
    return x


def solve_many(m: PolyMatrix, rhs: Sequence[Sequence]) -> list[Optional[list[RationalFunction]]]:
    """Solve ``m x = v`` over Q(q) for each v in rhs, sharing one elimination.

    Each result is a witness vector of length m.cols, or None when v is not
    in the column space.
    """
    for v in rhs:
        if len(v) != m.rows:
            raise ValueError(f"right-hand side has length {len(v)}, expected {m.rows}")
    n = m.cols
    rows = []
    for i in range(m.rows):
        r = dict(m.data[i])
        for t, v in enumerate(rhs):
            val = IntPolynomial.coerce(v[i])
            if val:
                r[n + t] = val
        rows.append(r)
    pivots, rest = _echelon(rows, n)
    bad = set()
    for r in rest:
        bad.update(r.keys())
    pivot_cols = {c for _, c in pivots}
    out: list[Optional[list[RationalFunction]]] = []
    for t in range(len(rhs)):
        if n + t in bad:
            out.append(None)
            continue
        # move the rhs to the left side with coefficient -1
        fixed = {n + t: RationalFunction(-1)}
        fixed.update({j: RationalFunction(ZERO) for j in range(n) if j not in pivot_cols})
        sub = [(_restrict(prow, n, n + t), c) for prow, c in pivots]
        x = _back_substitute(sub, fixed)
        out.append([x[j] for j in range(n)])
    return out


def _restrict(row: dict, n: int, keep: int) -> dict:
    return {k: v for k, v in row.items() if k < n or k == keep}


def solve_in_image(m: PolyMatrix, v: Sequence) -> Optional[list[RationalFunction]]:
    """A witness x with m x = v over Q(q), or None if v is not in the image."""
    if len(v) != m.rows:
        raise ValueError(f"dimension mismatch: vector of length {len(v)} for {m.rows} rows")
    return solve_many(m, [v])[0]


def nullspace(m: PolyMatrix) -> list[list[IntPolynomial]]:
    """A basis of the kernel of m over Q(q), scaled to primitive polynomial vectors."""
    pivots, _ = _echelon(m.data, m.cols)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(m.cols):
        if f in pivot_cols:
            continue
        fixed = {j: RationalFunction(ZERO) for j in range(m.cols) if j not in pivot_cols}
        fixed[f] = RationalFunction(1)
        x = _back_substitute(pivots, fixed)
        basis.append(clear_denominators([x[j] for j in range(m.cols)]))
    return basis


def clear_denominators(vec: Sequence[RationalFunction]) -> list[IntPolynomial]:
    """Scale a Q(q)-vector into a primitive Z[q]-vector (positive leading entry sign kept)."""
    from .poly import poly_gcd

    lcm = ONE
    for x in vec:
        if x:
            g = poly_gcd(lcm, x.den)
            lcm = (lcm * x.den).exact_div(g)
    out = [(x.num * lcm.exact_div(x.den)) if x else ZERO for x in vec]
    g = ZERO
    for p in out:
        if p:
            g = poly_gcd(g, p)
            if g.is_one():
                break
    if g and not g.is_one():
        out = [p.exact_div(g) for p in out]
    return out
