"""Line arrangements: intersection-lattice combinatorics, the multiple-point
syzygy, trichotomy and bound checks, the cone construction, and exact
lattice-isomorphism testing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .backend import Backend
from .fields import Field, QQ
from .poly import HomogPoly
from .syzygy import SyzygyTriple, mdr, verify_syzygy
from .tjurina import FreenessReport, InconsistencyError, classify, thmF_gate

__all__ = [
    "ProjLine",
    "LineArrangement",
    "LatticePoint",
    "IntersectionLattice",
    "lattice",
    "tau_combinatorial",
    "point_syzygy",
    "trichotomy",
    "multiplicity_bound_check",
    "exponent_gap_check",
    "faenzi_valles_check",
    "cone_construction",
    "lattice_isomorphic",
    "parse_arrangement_file",
    "arrangement_to_file",
]


def _normalize(field: Field, vec):
    vec = tuple(field.coerce(v) for v in vec)
    for v in vec:
        if not field.is_zero(v):
            inv = field.inv(v)
            return tuple(field.mul(inv, w) for w in vec)
    raise ValueError("zero vector cannot be normalized")


def _cross(field: Field, a, b):
    return (
        field.sub(field.mul(a[1], b[2]), field.mul(a[2], b[1])),
        field.sub(field.mul(a[2], b[0]), field.mul(a[0], b[2])),
        field.sub(field.mul(a[0], b[1]), field.mul(a[1], b[0])),
    )


@dataclass(frozen=True)
class ProjLine:
    """Projective line as a normalized covector (first nonzero entry = 1)."""

    field: Field
    covector: tuple

    @classmethod
    def make(cls, field: Field, covector) -> "ProjLine":
        return cls(field, _normalize(field, covector))

    def form(self) -> HomogPoly:
        return HomogPoly.linear(self.field, self.covector)

    def contains(self, point) -> bool:
        F = self.field
        acc = F.zero()
        for a, p in zip(self.covector, point):
            acc = F.add(acc, F.mul(a, F.coerce(p)))
        return F.is_zero(acc)


class LineArrangement:
    """d pairwise-distinct projective lines with their product polynomial."""

    def __init__(self, field: Field, covectors):
        self.field = field
        self.lines = [ProjLine.make(field, c) for c in covectors]
        if len({l.covector for l in self.lines}) != len(self.lines):
            raise ValueError("duplicate lines in arrangement")
        self._f = None
        self._lattice = None

    @property
    def d(self) -> int:
        return len(self.lines)

    @property
    def f(self) -> HomogPoly:
        if self._f is None:
            acc = HomogPoly.constant(self.field, 1)
            for line in self.lines:
                acc = acc * line.form()
            self._f = acc
        return self._f

    def lattice(self) -> "IntersectionLattice":
        if self._lattice is None:
            self._lattice = lattice(self)
        return self._lattice

    def __repr__(self):
        return f"LineArrangement({self.field}, {self.d} lines)"


@dataclass(frozen=True)
class LatticePoint:
    point: tuple
    multiplicity: int
    lines: tuple  # incident line indices


@dataclass(frozen=True)
class IntersectionLattice:
    points: tuple
    m_max: int

    def point_at(self, coords):
        for p in self.points:
            if p.point == coords:
                return p
        return None


def lattice(A: LineArrangement) -> IntersectionLattice:
    """All pairwise intersection points with multiplicities and incidences;
    ordering is deterministic (multiplicity desc, then coordinates)."""
    F = A.field
    table: dict = {}
    for i in range(A.d):
        for j in range(i + 1, A.d):
            pt = _normalize(F, _cross(F, A.lines[i].covector, A.lines[j].covector))
            table.setdefault(pt, set()).update((i, j))
    points = [LatticePoint(pt, len(idx), tuple(sorted(idx)))
              for pt, idx in table.items()]
    total = sum(comb(p.multiplicity, 2) for p in points)
    if total != comb(A.d, 2):
        raise ArithmeticError(
            "lattice bookkeeping failed: sum C(m_p,2) != C(d,2)")
    points.sort(key=lambda p: (-p.multiplicity, _sort_key(F, p.point)))
    return IntersectionLattice(tuple(points), max(p.multiplicity for p in points))


def _sort_key(field, vec):
    return tuple(str(field.scalar_str(v)) for v in vec)


def tau_combinatorial(A: LineArrangement) -> int:
    """Sum over lattice points of (m_p - 1)^2: the global Tjurina number of a
    line arrangement is determined by its intersection lattice."""
    return sum((p.multiplicity - 1) ** 2 for p in A.lattice().points)


def _basis_matrix_through(field, point):
    """Unimodular 3x3 matrix B with first column the given point (completed
    with standard basis vectors, deterministic pivot choice)."""
    pt = list(point)
    pivot = next(i for i, v in enumerate(pt) if not field.is_zero(v))
    others = [i for i in range(3) if i != pivot]
    cols = [pt]
    for i in others:
        e = [field.zero()] * 3
        e[i] = field.one()
        cols.append(e)
    # column-major assembly
    return [[cols[j][i] for j in range(3)] for i in range(3)]


def _mat_inverse(field, M):
    """Inverse of a 3x3 matrix over an exact field (adjugate / determinant)."""
    a, b, c = M[0]
    d, e, f = M[1]
    g, h, i = M[2]
    mul, sub, add = field.mul, field.sub, field.add
    A = sub(mul(e, i), mul(f, h))
    B = sub(mul(c, h), mul(b, i))
    C = sub(mul(b, f), mul(c, e))
    D = sub(mul(f, g), mul(d, i))
    E = sub(mul(a, i), mul(c, g))
    Fv = sub(mul(c, d), mul(a, f))
    G = sub(mul(d, h), mul(e, g))
    H = sub(mul(b, g), mul(a, h))
    I = sub(mul(a, e), mul(b, d))
    det = add(add(mul(a, A), mul(b, D)), mul(c, G))
    if field.is_zero(det):
        raise ValueError("singular matrix")
    inv = field.inv(det)
    adj = [[A, B, C], [D, E, Fv], [G, H, I]]
    return [[field.mul(inv, adj[r][cc]) for cc in range(3)] for r in range(3)]


def point_syzygy(A: LineArrangement, p: LatticePoint) -> SyzygyTriple:
    """The degree d-m syzygy attached to a point of multiplicity m: change
    coordinates so the point is (1:0:0), form h = product of lines avoiding
    the point and P = sum over those lines of a_L * h/L, take
    (x*P - d*h, y*P, z*P) and pull back."""
    F = A.field
    if p.multiplicity < 2:
        raise ValueError("lattice points have multiplicity >= 2")
    d = A.d
    B = _basis_matrix_through(F, p.point)
    M = _mat_inverse(F, B)
    # covectors transform by B^T when points transform by B
    away = [i for i in range(A.d) if i not in p.lines]
    h = HomogPoly.constant(F, 1)
    transformed = []
    for i in away:
        ell = A.lines[i].covector
        new_cov = tuple(
            _dot(F, [B[r][cc] for r in range(3)], ell) for cc in range(3))
        transformed.append(new_cov)
        h = h * HomogPoly.linear(F, new_cov)
    # P = sum_L a_L * (h / L), degree d-m-1
    P = HomogPoly.zero(F)
    for idx, cov in enumerate(transformed):
        a_L = cov[0]
        if F.is_zero(a_L):
            raise ArithmeticError("line through the point slipped into h")
        partial = HomogPoly.constant(F, 1)
        for jdx, cov2 in enumerate(transformed):
            if jdx != idx:
                partial = partial * HomogPoly.linear(F, cov2)
        term = partial.scale(a_L)
        P = term if P.is_zero() else P + term
    x = HomogPoly.variable(F, 0)
    y = HomogPoly.variable(F, 1)
    z = HomogPoly.variable(F, 2)
    a_new = x * P - h.scale(d)
    b_new = y * P
    c_new = z * P
    # pull back: components substitute M, then mix through B
    pa = a_new.substitute(M)
    pb = b_new.substitute(M)
    pc = c_new.substitute(M)
    comps = []
    for r in range(3):
        acc = HomogPoly.zero(F)
        for cc, q in enumerate((pa, pb, pc)):
            t = q.scale(B[r][cc])
            if not t.is_zero():
                acc = t if acc.is_zero() else acc + t
        comps.append(acc)
    triple = SyzygyTriple(comps[0], comps[1], comps[2], d)
    if not verify_syzygy(A.f, triple):
        raise ArithmeticError("multiple-point syzygy failed verification")
    if triple.degree != d - p.multiplicity:
        raise ArithmeticError("multiple-point syzygy has wrong degree")
    return triple


def _dot(field, u, v):
    acc = field.zero()
    for a, b in zip(u, v):
        acc = field.add(acc, field.mul(a, b))
    return acc


@dataclass
class TrichotomyResult:
    case: int  # 0: r = d-m; 1: r = m-1, free; 2: m <= r <= d-m-1
    r: int
    m: int
    d: int
    report: FreenessReport | None = None
    boundary_note: str | None = None


def trichotomy(A: LineArrangement, p: LatticePoint,
               backend: Backend | None = None) -> TrichotomyResult:
    """Exhaustive case split for a multiple point: either r = d-m, or r = m-1
    with freeness certified, or m <= r <= d-m-1.  Raising here would falsify
    the trichotomy theorem."""
    m = p.multiplicity
    d = A.d
    f = A.f
    r = mdr(f, backend)
    if r > d - m:
        raise InconsistencyError(
            f"mdr={r} exceeds d-m={d - m}: contradicts the multiple-point syzygy")
    if r == d - m:
        return TrichotomyResult(0, r, m, d)
    if r <= m - 1:
        if r != m - 1:
            raise InconsistencyError(
                f"mdr={r} < m-1={m - 1} with mdr < d-m: impossible case")
        report = classify(f, backend)
        if thmF_gate(d, r, report.tau) != "attained":
            raise InconsistencyError(
                f"case (1) fired (r=m-1={r}) but freeness bound not attained")
        note = None
        if 2 * m == d + 1:
            note = "edge case 2m = d+1 observed in case (1)"
        return TrichotomyResult(1, r, m, d, report, note)
    if m <= r <= d - m - 1:
        return TrichotomyResult(2, r, m, d)
    raise InconsistencyError(
        f"trichotomy fell through: d={d}, m={m}, r={r}")


def multiplicity_bound_check(A: LineArrangement,
                             backend: Backend | None = None):
    """m(A) >= 2d/(mdr+2), compared exactly over the rationals."""
    m = A.lattice().m_max
    d = A.d
    r = mdr(A.f, backend)
    rhs = Fraction(2 * d, r + 2)
    return m, rhs, Fraction(m) >= rhs


def exponent_gap_check(report: FreenessReport, m: int) -> bool:
    """Dichotomy for the maximal multiplicity of a free (resp. nearly free)
    line arrangement: m = d2+1 or m <= d1+1 (resp. m = d2 or m <= d1)."""
    if report.classification not in ("free", "nearly-free"):
        raise ValueError("check applies to free or nearly free reports only")
    d1, d2 = report.exponents
    if report.classification == "free":
        return m == d2 + 1 or m <= d1 + 1
    return m == d2 or m <= d1


@dataclass
class FVVerdict:
    free: bool
    exponents: tuple
    tau: int
    target_tau: int
    report: FreenessReport


def faenzi_valles_check(A: LineArrangement, k: int, ell: int,
                        backend: Backend | None = None) -> FVVerdict:
    """Freeness with exponents (k, k+ell) decided by the Tjurina count alone,
    for d = 2k+ell+1 with a point of multiplicity in [k, k+ell+1]; the verdict
    is cross-checked against the full classification."""
    d = A.d
    if d != 2 * k + ell + 1:
        raise ValueError(f"need d = 2k+ell+1, got d={d}, k={k}, ell={ell}")
    lat = A.lattice()
    if not any(k <= p.multiplicity <= k + ell + 1 for p in lat.points):
        raise ValueError(
            f"no intersection point of multiplicity in [{k}, {k + ell + 1}]")
    tau = tau_combinatorial(A)
    target = (d - 1) ** 2 - k * (k + ell)
    free = tau == target
    report = classify(A.f, backend)
    if free != (report.classification == "free"
                and report.exponents == (k, k + ell)):
        raise InconsistencyError(
            "Tjurina criterion and classification disagree: "
            f"tau={tau}, target={target}, report={report.classification} "
            f"{report.exponents}")
    return FVVerdict(free, (k, k + ell), tau, target, report)


@dataclass
class ConeSkeleton:
    e: int  # lines in the input arrangement
    m: int  # added lines (deduplicated)
    d: int
    expected_tau: int
    expected_exponents: tuple


def cone_construction(A: LineArrangement, apex):
    """Add the lines joining an external point to every lattice point of A;
    the result is free with exponent set {e, m-1} and
    tau = (d-1)^2 - e(m-1)."""
    F = A.field
    apex = _normalize(F, apex)
    for line in A.lines:
        if line.contains(apex):
            raise ValueError("apex lies on the arrangement")
    added = []
    for p in A.lattice().points:
        cov = _normalize(F, _cross(F, apex, p.point))
        if cov not in added:
            added.append(cov)
    e = A.d
    m = len(added)
    B = LineArrangement(F, [l.covector for l in A.lines] + added)
    d = e + m
    skeleton = ConeSkeleton(
        e=e, m=m, d=d,
        expected_tau=(d - 1) ** 2 - e * (m - 1),
        expected_exponents=tuple(sorted((e, m - 1))),
    )
    return B, skeleton


def lattice_isomorphic(A: LineArrangement, B: LineArrangement,
                       max_lines: int = 20) -> bool:
    """Exact backtracking test for an incidence-preserving bijection of lines;
    refuses (rather than approximates) beyond ``max_lines`` lines."""
    if A.d != B.d:
        return False
    if A.d > max_lines or B.d > max_lines:
        raise ValueError(f"lattice isomorphism limited to {max_lines} lines")
    latA, latB = A.lattice(), B.lattice()
    profA = sorted(p.multiplicity for p in latA.points)
    profB = sorted(p.multiplicity for p in latB.points)
    if profA != profB:
        return False
    # per-line signature: multiset of multiplicities of its points
    ptsA = {p.point: p for p in latA.points}

    def signatures(lat, d):
        sig = [[] for _ in range(d)]
        for p in lat.points:
            for i in p.lines:
                sig[i].append(p.multiplicity)
        return [tuple(sorted(s)) for s in sig]

    sigA = signatures(latA, A.d)
    sigB = signatures(latB, B.d)
    if sorted(sigA) != sorted(sigB):
        return False
    # point lookup by line pair
    pairA: dict = {}
    for p in latA.points:
        for i in p.lines:
            for j in p.lines:
                if i < j:
                    pairA[(i, j)] = p.point
    pairB: dict = {}
    for p in latB.points:
        for i in p.lines:
            for j in p.lines:
                if i < j:
                    pairB[(i, j)] = p.point
    multA = {p.point: p.multiplicity for p in latA.points}
    multB = {p.point: p.multiplicity for p in latB.points}

    d = A.d
    mapping = [None] * d
    used = [False] * d

    def consistent(i, target):
        # check all pairs with already-assigned lines
        pt_map = {}
        for a in range(d):
            if mapping[a] is None:
                continue
            for b in range(a + 1, d):
                if mapping[b] is None:
                    continue
                key = (a, b)
                pa = pairA[key]
                ii, jj = sorted((mapping[a], mapping[b]))
                pb = pairB[(ii, jj)]
                if multA[pa] != multB[pb]:
                    return False
                if pa in pt_map:
                    if pt_map[pa] != pb:
                        return False
                else:
                    if pb in pt_map.values():
                        return False
                    pt_map[pa] = pb
        return True

    def backtrack(i):
        if i == d:
            return True
        for j in range(d):
            if used[j] or sigA[i] != sigB[j]:
                continue
            mapping[i] = j
            used[j] = True
            if consistent(i, j) and backtrack(i + 1):
                return True
            mapping[i] = None
            used[j] = False
        return False

    return backtrack(0)


def parse_arrangement_file(text: str, field: Field = QQ) -> LineArrangement:
    """One line per covector: three rationals whitespace-separated; '#'
    starts a comment."""
    covectors = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 3:
            raise ValueError(
                f"line {lineno}: expected three rationals, got {body!r}")
        covectors.append(tuple(field.scalar_from_str(p) for p in parts))
    if not covectors:
        raise ValueError("empty arrangement file")
    return LineArrangement(field, covectors)


def arrangement_to_file(A: LineArrangement) -> str:
    out = ["# one projective line per row: three coordinates"]
    for line in A.lines:
        out.append(" ".join(A.field.scalar_str(v) for v in line.covector))
    return "\n".join(out) + "\n"
