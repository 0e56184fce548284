"""Graded syzygy spaces of the partial derivatives, and the minimal syzygy
degree.

A syzygy of degree r is a triple (a, b, c) of degree-r forms with
a*f_x + b*f_y + c*f_z = 0; the degree-r slice is the kernel of the linear map
S_r^3 -> S_{r+d-1} realized as an exact matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import Backend
from .fields import Field, PrimeField, QQ
from .linalg import ExactMatrix, nullspace_mod_np
from .poly import HomogPoly, homog_gcd, monomial_count, monomial_index, monomials, poly_parse

__all__ = [
    "SyzygyTriple",
    "ARSlice",
    "ar_slice",
    "mdr",
    "verify_syzygy",
    "is_primitive",
    "graded_multiplication_matrix",
]


@dataclass(frozen=True)
class SyzygyTriple:
    """(a, b, c) with a*f_x + b*f_y + c*f_z = 0; the certificate currency."""

    a: HomogPoly
    b: HomogPoly
    c: HomogPoly
    f_degree: int

    @property
    def degree(self) -> int:
        return max(self.a.degree, self.b.degree, self.c.degree)

    @property
    def field(self) -> Field:
        return self.a.field if not self.a.is_zero() else (
            self.b.field if not self.b.is_zero() else self.c.field)

    def components(self):
        return (self.a, self.b, self.c)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero() and self.c.is_zero()

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "a": self.a.to_str(),
            "b": self.b.to_str(),
            "c": self.c.to_str(),
        }

    @classmethod
    def from_json(cls, data: dict, field: Field, f_degree: int) -> "SyzygyTriple":
        return cls(
            poly_parse(data["a"], field),
            poly_parse(data["b"], field),
            poly_parse(data["c"], field),
            f_degree,
        )


@dataclass(frozen=True)
class ARSlice:
    degree: int
    basis: tuple
    dimension: int


class DegreeMismatchError(ValueError):
    pass


def verify_syzygy(f: HomogPoly, s: SyzygyTriple) -> bool:
    """Pure recomputation of a*f_x + b*f_y + c*f_z; no trust in the input."""
    degs = {p.degree for p in s.components() if not p.is_zero()}
    if len(degs) > 1:
        raise DegreeMismatchError(f"mixed component degrees {sorted(degs)}")
    fx, fy, fz = f.gradient()
    acc = HomogPoly.zero(f.field)
    for coeff, part in ((s.a, fx), (s.b, fy), (s.c, fz)):
        t = coeff * part
        if not t.is_zero():
            acc = t if acc.is_zero() else acc + t
    return acc.is_zero()


def is_primitive(s: SyzygyTriple) -> bool:
    """True iff the components have no common divisor of positive degree."""
    if s.is_zero():
        return False
    nonzero = [p for p in s.components() if not p.is_zero()]
    g = nonzero[0]
    for p in nonzero[1:]:
        g = homog_gcd(g, p)
        if g.degree == 0:
            return True
    return g.degree == 0


def graded_multiplication_matrix(polys, r: int, target: int):
    """Matrix of (u_1, ..., u_s) -> sum u_i * p_i from S_r^s to S_target.

    Columns are grouped by polynomial, graded-lex within each group; rows are
    the graded-lex monomials of S_target.  Returns a numpy int64 array over a
    prime field, otherwise a list-of-lists over the exact field.
    """
    field = polys[0].field
    nrows = monomial_count(target)
    ncols = len(polys) * monomial_count(r)
    ridx = monomial_index(target)
    mons = monomials(r)
    if isinstance(field, PrimeField) and field.p < 2**31:
        A = np.zeros((nrows, ncols), dtype=np.int64)
        col = 0
        for p in polys:
            terms = list(p.coeffs.items())
            for (mi, mj, mk) in mons:
                for (ei, ej, ek), v in terms:
                    A[ridx[(ei + mi, ej + mj, ek + mk)], col] = v
                col += 1
        return A
    rows = [[field.zero()] * ncols for _ in range(nrows)]
    col = 0
    for p in polys:
        terms = list(p.coeffs.items())
        for (mi, mj, mk) in mons:
            for (ei, ej, ek), v in terms:
                rows[ridx[(ei + mi, ej + mj, ek + mk)]][col] = v
            col += 1
    return rows


def _slice_nullspace(f: HomogPoly, r: int):
    field = f.field
    d = f.degree
    grads = list(f.gradient())
    target = r + d - 1
    A = graded_multiplication_matrix(grads, r, target)
    if isinstance(A, np.ndarray):
        vecs = nullspace_mod_np(A, field.p)
        return [[int(x) for x in v] for v in vecs]
    return ExactMatrix(field, A).nullspace()


def _vector_to_triple(field, vec, r: int, d: int) -> SyzygyTriple:
    mc = monomial_count(r)
    mons = monomials(r)
    comps = []
    for b in range(3):
        coeffs = {}
        for i, m in enumerate(mons):
            v = field.coerce(vec[b * mc + i])
            if not field.is_zero(v):
                coeffs[m] = v
        comps.append(HomogPoly(field, r if coeffs else -1, coeffs))
    return SyzygyTriple(comps[0], comps[1], comps[2], d)


def ar_slice(f: HomogPoly, r: int) -> ARSlice:
    """Basis of the degree-r syzygies of f; every triple re-verified."""
    if r < 0:
        raise ValueError("negative degree")
    if f.degree < 1:
        raise ValueError("f must have positive degree")
    vecs = _slice_nullspace(f, r)
    basis = []
    for v in vecs:
        t = _vector_to_triple(f.field, v, r, f.degree)
        if not verify_syzygy(f, t):
            raise ArithmeticError("nullspace triple failed re-verification")
        basis.append(t)
    return ARSlice(r, tuple(basis), len(basis))


def ar_dimension(f: HomogPoly, r: int) -> int:
    """dim AR(f)_r without materializing the basis (rank only)."""
    field = f.field
    A = graded_multiplication_matrix(list(f.gradient()), r, r + f.degree - 1)
    ncols = 3 * monomial_count(r)
    if isinstance(A, np.ndarray):
        from .linalg import rank_mod_np
        return ncols - rank_mod_np(A, field.p)
    return ncols - ExactMatrix(field, A).rank()


def mdr(f: HomogPoly, backend: Backend | None = None) -> int:
    """Minimal degree of a nontrivial Jacobian syzygy: ascending scan with
    early exit; always <= d-1 (the Koszul triple lives there)."""
    if f.degree < 1:
        raise ValueError("f must have positive degree")
    if backend is not None and f.field == QQ and backend.mode == "modular":
        return backend.vote(mdr, f, what="mdr")
    for r in range(f.degree):
        if ar_dimension(f, r) > 0:
            return r
    raise ArithmeticError(
        "no syzygy found up to degree d-1; Koszul floor violated")


def is_cone(f: HomogPoly, backend: Backend | None = None) -> bool:
    """A constant-coefficient syzygy exists iff f depends on only two
    coordinates after a linear change, i.e. f is a cone."""
    if backend is not None and f.field == QQ and backend.mode == "modular":
        return backend.vote(is_cone, f, what="cone flag")
    return ar_dimension(f, 0) > 0
