"""Homogeneous ternary forms with exact coefficients.

The term order is graded lexicographic with x > y > z, fixed globally, so
printed certificates are byte-stable.
"""

from __future__ import annotations

from functools import lru_cache

from .fields import Field, QQ
from .uni import UniPoly

__all__ = [
    "HomogPoly",
    "HomogeneityError",
    "ParseError",
    "poly_parse",
    "homog_gcd",
    "monomials",
    "monomial_count",
]

VARS = ("x", "y", "z")


class HomogeneityError(ValueError):
    """Input mixes two total degrees."""

    def __init__(self, deg_a: int, deg_b: int):
        self.degrees = (deg_a, deg_b)
        super().__init__(f"non-homogeneous input: degrees {deg_a} and {deg_b}")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


def monomial_count(degree: int) -> int:
    """dim of the degree-r piece of k[x,y,z]: (r+1)(r+2)/2."""
    if degree < 0:
        return 0
    return (degree + 1) * (degree + 2) // 2


@lru_cache(maxsize=None)
def monomials(degree: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent triples of total degree ``degree`` in graded-lex order (x>y>z)."""
    out = []
    for i in range(degree, -1, -1):
        for j in range(degree - i, -1, -1):
            out.append((i, j, degree - i - j))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(degree: int) -> dict:
    return {m: i for i, m in enumerate(monomials(degree))}


class HomogPoly:
    """Homogeneous polynomial in x, y, z: table from exponent triples to
    nonzero scalars.  The zero polynomial has empty table and degree -1."""

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field: Field, degree: int, coeffs: dict):
        clean = {}
        for exp, c in coeffs.items():
            c = field.coerce(c)
            if field.is_zero(c):
                continue
            if sum(exp) != degree:
                raise HomogeneityError(degree, sum(exp))
            clean[tuple(exp)] = c
        if not clean:
            degree = -1
        self.field = field
        self.degree = degree
        self.coeffs = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, field):
        return cls(field, -1, {})

    @classmethod
    def constant(cls, field, c):
        return cls(field, 0, {(0, 0, 0): c})

    @classmethod
    def variable(cls, field, var):
        i = VARS.index(var) if isinstance(var, str) else var
        exp = [0, 0, 0]
        exp[i] = 1
        return cls(field, 1, {tuple(exp): field.one()})

    @classmethod
    def linear(cls, field, covector):
        """a*x + b*y + c*z from a length-3 covector."""
        a, b, c = covector
        return cls(field, 1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @classmethod
    def from_terms(cls, field, terms):
        """Sum of (coefficient, exponent-triple) pairs; must be homogeneous."""
        acc: dict = {}
        for c, e in terms:
            c = field.coerce(c)
            e = tuple(e)
            acc[e] = field.add(acc.get(e, field.zero()), c)
        acc = {e: c for e, c in acc.items() if not field.is_zero(c)}
        degrees = sorted({sum(e) for e in acc})
        if len(degrees) > 1:
            raise HomogeneityError(degrees[-1], degrees[-2])
        degree = degrees[0] if degrees else -1
        return cls(field, degree, acc)

    # -- queries ------------------------------------------------------
    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return self.degree <= 0

    def __eq__(self, other):
        return (isinstance(other, HomogPoly) and self.field == other.field
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.degree, frozenset(self.coeffs.items())))

    def coeff(self, exp):
        return self.coeffs.get(tuple(exp), self.field.zero())

    def leading_term(self):
        """(exponent, coefficient) maximal in graded-lex order."""
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.coeffs)
        return exp, self.coeffs[exp]

    # -- arithmetic ---------------------------------------------------
    def _check_field(self, other):
        if self.field != other.field:
            raise ValueError(
                f"field backend mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        self._check_field(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise HomogeneityError(self.degree, other.degree)
        F = self.field
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = F.add(out.get(e, F.zero()), c)
            if F.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return HomogPoly(F, self.degree, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        F = self.field
        return HomogPoly(F, self.degree, {e: F.neg(c) for e, c in self.coeffs.items()})

    def __mul__(self, other):
        self._check_field(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return HomogPoly.zero(F)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                s = F.add(out.get(e, F.zero()), F.mul(c1, c2))
                if F.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return HomogPoly(F, self.degree + other.degree, out)

    def scale(self, c):
        F = self.field
        c = F.coerce(c)
        if F.is_zero(c) or self.is_zero():
            return HomogPoly.zero(F)
        return HomogPoly(F, self.degree, {e: F.mul(c, v) for e, v in self.coeffs.items()})

    def __pow__(self, n: int):
        out = HomogPoly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def diff(self, var):
        """Partial derivative with respect to x, y or z."""
        i = VARS.index(var) if isinstance(var, str) else var
        F = self.field
        out: dict = {}
        for e, c in self.coeffs.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            v = F.mul(F.coerce(e[i]), c)
            if not F.is_zero(v):
                out[tuple(ne)] = v
        return HomogPoly(F, self.degree - 1 if out else -1, out)

    def gradient(self):
        return (self.diff(0), self.diff(1), self.diff(2))

    def evaluate(self, point):
        F = self.field
        pt = [F.coerce(v) for v in point]
        acc = F.zero()
        for (i, j, k), c in self.coeffs.items():
            t = c
            for _ in range(i):
                t = F.mul(t, pt[0])
            for _ in range(j):
                t = F.mul(t, pt[1])
            for _ in range(k):
                t = F.mul(t, pt[2])
            acc = F.add(acc, t)
        return acc

    def substitute(self, matrix):
        """p(M x) for a 3x3 matrix M: each variable is replaced by the
        corresponding row's linear form."""
        F = self.field
        rows = [HomogPoly.linear(F, [F.coerce(v) for v in row]) for row in matrix]
        out = HomogPoly.zero(F)
        # cache powers of the three linear forms
        max_e = [0, 0, 0]
        for e in self.coeffs:
            for i in range(3):
                max_e[i] = max(max_e[i], e[i])
        powers = [[HomogPoly.constant(F, 1)] for _ in range(3)]
        for i in range(3):
            for _ in range(max_e[i]):
                powers[i].append(powers[i][-1] * rows[i])
        for e, c in self.coeffs.items():
            term = powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]
            term = term.scale(c)
            out = term if out.is_zero() else out + term
        return out

    def restrict_binary(self, pa, pb):
        """Coefficients [c_0..c_d] of p(s*A + r*B) with c_m the coefficient
        of s^m r^(d-m); the restriction of the form to the line through A, B."""
        F = self.field
        d = self.degree
        if d < 0:
            return []
        pa = [F.coerce(v) for v in pa]
        pb = [F.coerce(v) for v in pb]

        def bin_mul(u, v):
            out = [F.zero()] * (len(u) + len(v) - 1)
            for i, a in enumerate(u):
                for j, b in enumerate(v):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
            return out

        lin = [[pb[i], pa[i]] for i in range(3)]  # r*B_i + s*A_i, index = s-degree
        # powers cache
        max_e = [0, 0, 0]
        for e in self.coeffs:
            for i in range(3):
                max_e[i] = max(max_e[i], e[i])
        pows = []
        for i in range(3):
            ps = [[F.one()]]
            for _ in range(max_e[i]):
                ps.append(bin_mul(ps[-1], lin[i]))
            pows.append(ps)
        total = [F.zero()] * (d + 1)
        for (i, j, k), c in self.coeffs.items():
            term = bin_mul(bin_mul(pows[0][i], pows[1][j]), pows[2][k])
            for m, v in enumerate(term):
                total[m] = F.add(total[m], F.mul(c, v))
        return total

    def restrict_to_line(self, pa, pb) -> UniPoly:
        """Dehomogenized restriction: p(A + t*B) as a univariate polynomial."""
        cs = self.restrict_binary(pb, pa)  # s-degree = multiplicity of B
        return UniPoly(self.field, cs)

    def euler_combination(self):
        """x*p_x + y*p_y + z*p_z (equals deg * p in good characteristic)."""
        F = self.field
        out = HomogPoly.zero(F)
        for i in range(3):
            t = HomogPoly.variable(F, i) * self.diff(i)
            if not t.is_zero():
                out = t if out.is_zero() else out + t
        return out

    def map_field(self, new_field: Field):
        """Reinterpret the coefficients in another exact backend."""
        out = {}
        for e, c in self.coeffs.items():
            v = new_field.coerce(c)
            if not new_field.is_zero(v):
                out[e] = v
        return HomogPoly(new_field, self.degree if out else -1, out)

    def normalized(self):
        """Scale so the graded-lex leading coefficient is 1."""
        if self.is_zero():
            return self
        _, lc = self.leading_term()
        return self.scale(self.field.inv(lc))

    def exact_div(self, g: "HomogPoly"):
        """Exact quotient self / g, or None if g does not divide self."""
        F = self.field
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return HomogPoly.zero(F)
        if g.degree > self.degree:
            return None
        rem = dict(self.coeffs)
        gle, glc = g.leading_term()
        glc_inv = F.inv(glc)
        quot: dict = {}
        while rem:
            e = max(rem)
            c = rem[e]
            qe = (e[0] - gle[0], e[1] - gle[1], e[2] - gle[2])
            if min(qe) < 0:
                return None
            qc = F.mul(c, glc_inv)
            quot[qe] = qc
            for ge, gc in g.coeffs.items():
                te = (qe[0] + ge[0], qe[1] + ge[1], qe[2] + ge[2])
                v = F.sub(rem.get(te, F.zero()), F.mul(qc, gc))
                if F.is_zero(v):
                    rem.pop(te, None)
                else:
                    rem[te] = v
        return HomogPoly(F, self.degree - g.degree, quot)

    def divides(self, other: "HomogPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        if other.is_zero():
            return True
        return other.exact_div(self) is not None

    # -- text ---------------------------------------------------------
    def to_str(self) -> str:
        if self.is_zero():
            return "0"
        F = self.field
        parts = []
        for exp in sorted(self.coeffs, reverse=True):
            c = self.coeffs[exp]
            factors = []
            for v, e in zip(VARS, exp):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            cs = F.scalar_str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if not factors:
                body = cs
            elif cs == "1":
                body = "*".join(factors)
            else:
                body = cs + "*" + "*".join(factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"HomogPoly({self.field}, {self.to_str()})"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

class _Parser:
    """Recursive-descent parser for the polynomial text grammar: terms joined
    by +/-, factors var^exp joined by '*', rational literals, parentheses."""

    def __init__(self, text: str, field: Field):
        self.text = text
        self.field = field
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.pos)

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def parse(self):
        terms = self.expression()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error(f"unexpected character {self.text[self.pos]!r}")
        return terms

    # each production returns a plain dict exponent -> scalar (inhomogeneous
    # intermediates are fine; homogeneity is checked at the top)
    def expression(self):
        sign = 1
        ch = self.peek()
        if ch in "+-":
            self.pos += 1
            sign = -1 if ch in ("-", "−") else 1
        acc = self._scaled(self.term(), sign)
        while True:
            ch = self.peek()
            if ch in ("+", "-", "−"):
                self.pos += 1
                t = self.term()
                acc = self._add(acc, self._scaled(t, -1 if ch != "+" else 1))
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                acc = self._mul(acc, self.factor())
            elif ch == "(" or ch.isalpha():
                # implicit multiplication: "3x", ")(", "x y"
                acc = self._mul(acc, self.factor())
            else:
                return acc

    def factor(self):
        base = self.primary()
        while self.peek() == "^":
            self.pos += 1
            e = self.integer()
            if e < 0:
                self.error("negative exponent")
            out = {(0, 0, 0): self.field.one()}
            b = base
            n = e
            while n:
                if n & 1:
                    out = self._mul(out, b)
                b = self._mul(b, b)
                n >>= 1
            base = out
        return base

    def primary(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expression()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        if ch in VARS:
            self.pos += 1
            exp = [0, 0, 0]
            exp[VARS.index(ch)] = 1
            return {tuple(exp): self.field.one()}
        if ch.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
                if den == 0:
                    self.error("zero denominator")
                from fractions import Fraction
                c = self.field.coerce(Fraction(num, den))
            else:
                c = self.field.coerce(num)
            return {(0, 0, 0): c}
        if ch == "":
            self.error("unexpected end of input")
        self.error(f"unexpected character {ch!r}")

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def _add(self, a, b):
        F = self.field
        out = dict(a)
        for e, c in b.items():
            s = F.add(out.get(e, F.zero()), c)
            if F.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return out

    def _mul(self, a, b):
        F = self.field
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                s = F.add(out.get(e, F.zero()), F.mul(c1, c2))
                if F.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return out

    def _scaled(self, a, sign):
        if sign == 1:
            return a
        return {e: self.field.neg(c) for e, c in a.items()}


def poly_parse(text: str, field: Field = QQ) -> HomogPoly:
    """Parse a polynomial expression in x, y, z; must expand homogeneous."""
    table = _Parser(text, field).parse()
    table = {e: c for e, c in table.items() if not field.is_zero(c)}
    degrees = sorted({sum(e) for e in table})
    if len(degrees) > 1:
        raise HomogeneityError(degrees[-1], degrees[-2])
    degree = degrees[0] if degrees else -1
    return HomogPoly(field, degree, table)


# ---------------------------------------------------------------------------
# gcd of homogeneous forms
# ---------------------------------------------------------------------------

def _ord_var(p: HomogPoly, i: int) -> int:
    return min(e[i] for e in p.coeffs)


def _bi_from(p: HomogPoly):
    """Dehomogenize at z=1 and view as a polynomial in x with UniPoly(y)
    coefficients."""
    F = p.field
    dx = max(e[0] for e in p.coeffs)
    cols: list[dict] = [dict() for _ in range(dx + 1)]
    for (i, j, _k), c in p.coeffs.items():
        cols[i][j] = F.add(cols[i].get(j, F.zero()), c)
    out = []
    for tab in cols:
        dy = max(tab) if tab else -1
        out.append(UniPoly(F, [tab.get(j, F.zero()) for j in range(dy + 1)]))
    while out and out[-1].is_zero():
        out.pop()
    return out


def _bi_degree(a):
    return len(a) - 1


def _bi_is_zero(a):
    return not a


def _bi_trim(a):
    while a and a[-1].is_zero():
        a.pop()
    return a


def _bi_content(a, F):
    g = UniPoly.zero(F)
    for c in a:
        g = g.gcd(c) if not g.is_zero() else c
        if g.degree == 0:
            break
    return g.monic() if not g.is_zero() else g


def _bi_prim(a, F):
    cont = _bi_content(a, F)
    if cont.is_zero() or cont.degree == 0:
        return list(a)
    return [c.exact_div(cont) for c in a]


def _bi_scale(a, u: UniPoly):
    return _bi_trim([c * u for c in a])


def _bi_sub(a, b, F):
    n = max(len(a), len(b))
    za = a + [UniPoly.zero(F)] * (n - len(a))
    zb = b + [UniPoly.zero(F)] * (n - len(b))
    return _bi_trim([za[i] - zb[i] for i in range(n)])


def _bi_prem(a, b, F):
    """Pseudo-remainder of a by b (both poly-in-x over F[y])."""
    r = list(a)
    db = _bi_degree(b)
    lb = b[-1]
    e = _bi_degree(a) - db + 1
    while not _bi_is_zero(r) and _bi_degree(r) >= db:
        lr = r[-1]
        dr = _bi_degree(r)
        shifted = [UniPoly.zero(F)] * (dr - db) + [c * lr for c in b]
        r = _bi_sub(_bi_scale(r, lb), shifted, F)
        e -= 1
    for _ in range(max(e, 0)):
        r = _bi_scale(r, lb)
    return r


def _bi_gcd(a, b, F):
    if _bi_is_zero(a):
        return list(b)
    if _bi_is_zero(b):
        return list(a)
    ca, cb = _bi_content(a, F), _bi_content(b, F)
    cont = ca.gcd(cb)
    A, B = _bi_prim(a, F), _bi_prim(b, F)
    if _bi_degree(A) < _bi_degree(B):
        A, B = B, A
    while not _bi_is_zero(B):
        R = _bi_prem(A, B, F)
        A, B = B, _bi_prim(R, F)
    if cont.is_zero() or cont.degree == 0:
        return A
    return [c * cont for c in A]


def _bi_to_homog(a, F) -> HomogPoly:
    """Homogenize a bivariate poly-in-x-over-F[y] with z to its total degree."""
    terms = {}
    total = -1
    for i, c in enumerate(a):
        for j in range(c.degree + 1):
            if not F.is_zero(c[j]):
                total = max(total, i + j)
    for i, c in enumerate(a):
        for j in range(c.degree + 1):
            v = c[j]
            if not F.is_zero(v):
                terms[(i, j, total - i - j)] = v
    return HomogPoly(F, total, terms) if terms else HomogPoly.zero(F)


def homog_gcd(p: HomogPoly, q: HomogPoly) -> HomogPoly:
    """Homogeneous gcd, monic under graded-lex; divides both inputs exactly."""
    F = p.field
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    # strip the common z-power, detected by divisibility
    cz = min(_ord_var(p, 2), _ord_var(q, 2))
    zc = HomogPoly(F, 1, {(0, 0, 1): F.one()}) ** cz if cz else None
    ps = _strip_z(p, _ord_var(p, 2))
    qs = _strip_z(q, _ord_var(q, 2))
    g = _bi_to_homog(_bi_gcd(_bi_from(ps), _bi_from(qs), F), F)
    if zc is not None:
        g = g * zc
    g = g.normalized()
    assert g.divides(p) and g.divides(q)
    return g


def _strip_z(p: HomogPoly, c: int) -> HomogPoly:
    if c == 0:
        return p
    F = p.field
    return HomogPoly(F, p.degree - c,
                     {(i, j, k - c): v for (i, j, k), v in p.coeffs.items()})


def is_reduced(f: HomogPoly) -> bool:
    """Squarefree test via gcds with the partial derivatives."""
    if f.is_zero() or f.degree <= 0:
        return False
    g = None
    for i in range(3):
        fi = f.diff(i)
        if fi.is_zero():
            continue
        gi = homog_gcd(f, fi)
        g = gi if g is None else homog_gcd(g, gi)
        if g.degree == 0:
            return True
    if g is None:
        # all partials vanish: only possible in bad characteristic
        return False
    return g.degree == 0
