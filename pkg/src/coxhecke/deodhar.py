"""The Deodhar complex of a Hecke algebra.

Degree k collects the induced modules Ind_I^S(R_q) with |S| - |I| - 1 = k,
each with basis T_w eta_I (w in W^I).  The differential sends the summand of
I to the summands of J = I + {s} with sign sgn(s, I); on basis vectors
T_w eta_I -> q^l(w_J) T_{w^J} eta_J.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from .coxeter import CayleyBall, RadiusError, build_ball, is_finite_type
from .coxeter.ball import _decompose
from .exactmath import ONE, Q, ZERO, IntPolynomial, PolyMatrix, nullspace, rank_over_fraction_field, solve_many
from .hecke import InducedVector, induced_action


class ComplexError(ValueError):
    pass


class SignMap:
    """sgn(s, I) = (-1)^#{t in S - I : t < s} for a total order on S."""

    def __init__(self, order: Sequence[int]):
        self.order = tuple(order)
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError(f"order {list(order)} is not a permutation of the generators")
        self.pos = {s: i for i, s in enumerate(self.order)}

    def __call__(self, s: int, subset: Iterable[int]) -> int:
        subset = set(subset)
        n = sum(1 for t in self.order if t not in subset and self.pos[t] < self.pos[s])
        return -1 if n % 2 else 1

    def subset_key(self, subset: Iterable[int]) -> tuple:
        return tuple(sorted(self.pos[s] for s in subset))

    def __repr__(self) -> str:
        return f"SignMap(order={list(self.order)})"


def sign_map(order: Sequence[int]) -> SignMap:
    return SignMap(order)


def sign_axiom_holds(sgn: SignMap, rank: int) -> bool:
    """Check sgn(s,I)sgn(t,I+s) + sgn(t,I)sgn(s,I+t) = 0 for all I and distinct s, t not in I."""
    gens = range(rank)
    for k in range(rank + 1):
        for subset in combinations(gens, k):
            rest = [s for s in gens if s not in subset]
            for s, t in permutations(rest, 2):
                I = set(subset)
                if sgn(s, I) * sgn(t, I | {s}) + sgn(t, I) * sgn(s, I | {t}) != 0:
                    return False
    return True


@dataclass
class DeodharComplex:
    ball: CayleyBall
    sgn: SignMap
    radius: Optional[int]  # None: the whole finite group
    basis: list[list[tuple[frozenset, int]]]
    index: list[dict[tuple[frozenset, int], int]]
    differentials: dict[int, PolyMatrix]
    augmentation: PolyMatrix

    @property
    def top(self) -> int:
        return self.ball.rank - 1

    def dims(self) -> list[int]:
        return [len(b) for b in self.basis]

    def describe_basis(self, k: int, j: int) -> str:
        subset, w = self.basis[k][j]
        return f"T{self.ball.word_str(w)}.eta{self.ball.coxeter.subset_name(subset)}"


def _degree_subsets(rank: int, sgn: SignMap, k: int) -> list[frozenset]:
    size = rank - k - 1
    subs = [frozenset(c) for c in combinations(range(rank), size)]
    return sorted(subs, key=sgn.subset_key)


def build_complex(ball: CayleyBall, sgn: SignMap, radius: Optional[int] = None,
                  max_basis: int = 2_000_000) -> DeodharComplex:
    """Assemble bases and differential matrices (truncated to l(w) <= radius if given)."""
    n = ball.rank
    if len(sgn.order) != n:
        raise ComplexError("sign map order does not match the rank")
    if radius is None:
        if not ball.complete:
            raise ComplexError("complete complex requested on a truncated ball")
    elif not ball.complete and radius > ball.radius:
        raise RadiusError(f"complex radius {radius} exceeds ball radius {ball.radius}", radius)
    basis: list[list[tuple[frozenset, int]]] = []
    total = 0
    for k in range(n):
        row = []
        for subset in _degree_subsets(n, sgn, k):
            for w in range(len(ball)):
                if radius is not None and ball.lengths[w] > radius:
                    break
                if not (ball.right_desc[w] & subset):
                    row.append((subset, w))
        total += len(row)
        if total > max_basis:
            raise ComplexError(f"complex basis exceeds {max_basis} elements")
        basis.append(row)
    index = [{b: i for i, b in enumerate(row)} for row in basis]
    diffs: dict[int, PolyMatrix] = {}
    for k in range(1, n):
        d = PolyMatrix(len(basis[k - 1]), len(basis[k]))
        for col, (subset, w) in enumerate(basis[k]):
            for s in range(n):
                if s in subset:
                    continue
                J = subset | {s}
                y, u = _decompose(ball, w, J)
                entry = IntPolynomial.monomial(sgn(s, subset), ball.lengths[u])
                d.add_to(index[k - 1][(J, y)], col, entry)
        diffs[k] = d
    aug = PolyMatrix(1, len(basis[0]) if basis else 0)
    if basis:
        full = frozenset(range(n))
        for col, (subset, w) in enumerate(basis[0]):
            (s,) = full - subset
            aug[0, col] = IntPolynomial.monomial(sgn(s, subset), ball.lengths[w])
    return DeodharComplex(ball, sgn, radius, basis, index, diffs, aug)


def verify_chain(c: DeodharComplex) -> bool:
    """d_k d_{k+1} = 0 for all k and eps d_1 = 0, exactly over Z[q]."""
    for k in range(1, c.top):
        if not (c.differentials[k] @ c.differentials[k + 1]).is_zero():
            return False
    if 1 in c.differentials and not (c.augmentation @ c.differentials[1]).is_zero():
        return False
    return True


def action_matrix(c: DeodharComplex, k: int, s: int) -> PolyMatrix:
    """Matrix of T_s on C_k in the standard basis (column j = image of basis vector j)."""
    ball = c.ball
    mat = PolyMatrix(len(c.basis[k]), len(c.basis[k]))
    for col, (subset, w) in enumerate(c.basis[k]):
        v = induced_action(s, InducedVector._raw(ball, subset, {w: ONE}))
        for y, coeff in v.support.items():
            key = (subset, y)
            if key not in c.index[k]:
                raise RadiusError("action leaves the truncated complex")
            mat[c.index[k][key], col] = coeff
    return mat


@dataclass
class HomologyReport:
    degrees: list[int]
    ranks: dict[int, int]
    homology: list[int]
    actions: dict[str, str] = field(default_factory=dict)
    action_details: dict[str, dict[str, str]] = field(default_factory=dict)
    actions_verified: bool = False

    def euler_ok(self) -> bool:
        a = sum((-1) ** k * d for k, d in enumerate(self.degrees))
        b = sum((-1) ** k * d for k, d in enumerate(self.homology))
        return a == b

    def to_json(self) -> dict:
        return {
            "degrees": self.degrees,
            "homology": self.homology,
            "actions": self.actions,
            "certified": self.actions_verified,
            "radius": None,
            "coradius": None,
        }


def _unit(n: int, j: int) -> list[IntPolynomial]:
    v = [ZERO] * n
    v[j] = ONE
    return v


def _summary(values: dict[str, str]) -> str:
    vals = set(values.values())
    return vals.pop() if len(vals) == 1 else "mixed"


def homology(c: DeodharComplex) -> HomologyReport:
    """Dimensions of H_k over Q(q) and the scalar by which each T_s acts on H_0 and H_top."""
    if c.radius is not None:
        raise ComplexError("homology needs the complete complex of a finite group")
    n = c.ball.rank
    dims = c.dims()
    ranks = {k: rank_over_fraction_field(d) for k, d in c.differentials.items()}
    hom = [dims[k] - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(n)]
    report = HomologyReport(dims, ranks, hom)
    if n == 0:
        report.actions_verified = True
        return report
    names = c.ball.coxeter.names
    ok = True
    if n == 1:
        # H_0 = C_0 = H is 2-dimensional: T_s has eigenvalues q and -1
        details = {}
        a = action_matrix(c, 0, 0)
        found = []
        for label, lam in (("q", Q), ("-1", IntPolynomial.constant(-1))):
            shifted = a.copy()
            for i in range(a.rows):
                shifted[i, i] = shifted[i, i] - lam
            if len(nullspace(shifted)) == 1:
                found.append(label)
        details[names[0]] = ",".join(found)
        ok = found == ["q", "-1"]
        report.actions["0"] = details[names[0]]
        report.action_details["0"] = details
        report.actions_verified = ok
        return report
    # degree 0: pick a class not in the image of d_1, check T_s v - q v in the image
    d1 = c.differentials[1]
    details0: dict[str, str] = {}
    if hom[0] == 1:
        units = [_unit(dims[0], j) for j in range(dims[0])]
        sols = solve_many(d1, units)
        j = next(j for j, x in enumerate(sols) if x is None)
        for s in range(n):
            a = action_matrix(c, 0, s)
            col = a.column(j)
            label = "?"
            for lab, lam in (("q", Q), ("-1", IntPolynomial.constant(-1))):
                diff = list(col)
                diff[j] = diff[j] - lam
                if solve_many(d1, [diff])[0] is not None:
                    label = lab
                    break
            details0[names[s]] = label
    report.action_details["0"] = details0
    report.actions["0"] = _summary(details0) if details0 else "n/a"
    # top degree: C_{top+1} = 0, so H_top is the kernel of d_top
    top = n - 1
    kernel = nullspace(c.differentials[top])
    details_top: dict[str, str] = {}
    for s in range(n):
        a = action_matrix(c, top, s)
        label = "?"
        if kernel:
            for lab, lam in (("q", Q), ("-1", IntPolynomial.constant(-1))):
                if all(all(x == y * lam for x, y in zip(a.apply(v), v)) for v in kernel):
                    label = lab
                    break
        details_top[names[s]] = label
    report.action_details["top"] = details_top
    report.actions["top"] = _summary(details_top)
    ok = report.actions["0"] == "q" and report.actions["top"] == "-1"
    report.actions_verified = ok
    return report


@dataclass
class DegreeCertificate:
    degree: int
    cycles: int
    certified: int
    max_witness_length: int
    offending: list[list[str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.cycles == self.certified


@dataclass
class AcyclicityReport:
    radius: int
    coradius: int
    degrees: list[int]
    per_degree: list[DegreeCertificate]
    augmentation_surjective: bool

    @property
    def certified(self) -> bool:
        return self.augmentation_surjective and all(d.ok for d in self.per_degree)

    def to_json(self) -> dict:
        return {
            "degrees": self.degrees,
            "homology": [d.cycles - d.certified for d in self.per_degree],
            "actions": {"0": "q"} if self.certified else {},
            "certified": self.certified,
            "radius": self.radius,
            "coradius": self.coradius,
            "per_degree": [
                {
                    "degree": d.degree,
                    "cycles": d.cycles,
                    "certified": d.certified,
                    "max_witness_length": d.max_witness_length,
                    **({"offending": d.offending} if d.offending else {}),
                }
                for d in self.per_degree
            ],
        }


def _format_vec(c: DeodharComplex, k: int, v: Sequence[IntPolynomial]) -> list[str]:
    return [f"({x})*{c.describe_basis(k, j)}" for j, x in enumerate(v) if x]


def verify_truncated_acyclicity(ball: CayleyBall, sgn: SignMap, radius: int, coradius: int,
                                max_coradius: Optional[int] = None) -> AcyclicityReport:
    """Certify that every cycle of the radius-L subcomplex (augmented by eps) bounds a
    chain of length <= coradius.  Retries with growing coradius up to max_coradius."""
    m = ball.coxeter
    if is_finite_type(m):
        raise ComplexError("truncated acyclicity applies to infinite Coxeter groups; use homology()")
    if coradius < radius:
        raise ValueError("coradius must be >= radius")
    while True:
        if ball.radius < coradius:
            ball = build_ball(m, coradius, ball.mem_cap)
        report = _certify(ball, sgn, radius, coradius)
        if report.certified or max_coradius is None or coradius >= max_coradius:
            return report
        coradius += 1


def _certify(ball: CayleyBall, sgn: SignMap, radius: int, coradius: int) -> AcyclicityReport:
    small = build_complex(ball, sgn, radius)
    big = build_complex(ball, sgn, coradius)
    n = ball.rank
    top = n - 1
    results = []

    def embed(k: int, v: Sequence[IntPolynomial]) -> list[IntPolynomial]:
        out = [ZERO] * len(big.basis[k])
        for j, x in enumerate(v):
            if x:
                out[big.index[k][small.basis[k][j]]] = x
        return out

    for k in range(n):
        cycles = nullspace(small.augmentation if k == 0 else small.differentials[k])
        cert = DegreeCertificate(k, len(cycles), 0, 0)
        if cycles and k < top:
            witnesses = solve_many(big.differentials[k + 1], [embed(k, v) for v in cycles])
            for v, x in zip(cycles, witnesses):
                if x is None:
                    cert.offending.append(_format_vec(small, k, v))
                    continue
                cert.certified += 1
                for j, val in enumerate(x):
                    if val:
                        w = big.basis[k + 1][j][1]
                        cert.max_witness_length = max(cert.max_witness_length, ball.lengths[w])
        else:
            cert.offending = [_format_vec(small, k, v) for v in cycles]
        results.append(cert)
    surjective = small.augmentation.nnz() > 0
    return AcyclicityReport(radius, coradius, small.dims(), results, surjective)
