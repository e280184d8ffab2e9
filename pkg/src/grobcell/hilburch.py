"""The forward parametrization: from an admissible parameter matrix A to
the ideal basis given by the signed maximal minors of X + A.

X is the (t+1) x t matrix with y^(d_i) on the diagonal and -x on the
subdiagonal; its signed minors are the staircase monomials x^(t-i)y^(m_i).
Adding an A whose entries respect the cell's degree bounds perturbs those
minors into a basis f_0..f_t with the same leading terms.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass

from .cell import MonomialCell, hilbert_function, make_cell
from .errors import BoundViolation, InternalError, LeadingTermMismatch
from .field import char_ok, field_from_json
from .groebner import divide
from .poly import Poly, format_poly, parse_poly


@dataclass(frozen=True)
class ParamMatrix:
    """A (t+1) x t matrix of univariate polynomials in y satisfying the
    cell's degree bounds; the coordinates of one point of the cell."""

    cell: MonomialCell
    field: object
    entries: tuple  # (t+1) x t nested tuples of Poly in K[y]

    def entry(self, i: int, j: int) -> Poly:
        """1-based access, rows i = 1..t+1, columns j = 1..t."""
        return self.entries[i - 1][j - 1]


@dataclass(frozen=True)
class IdealBasis:
    """Polynomials f_0..f_t with in(f_i) = x^(t-i) y^(m_i), monic."""

    cell: MonomialCell
    polys: tuple


def check_membership(cell: MonomialCell, entries, field) -> ParamMatrix:
    """Validate shapes and degree bounds; report every violating slot."""
    t = cell.t
    rows = [list(r) for r in entries]
    if len(rows) != t + 1 or any(len(r) != t for r in rows):
        raise ValueError(f"expected a {t + 1} x {t} matrix of entries")
    violations = []
    for r in range(t + 1):
        for c in range(t):
            e = rows[r][c]
            if not isinstance(e, Poly) or e.nvars != 1:
                raise ValueError(f"entry ({r + 1},{c + 1}) is not a polynomial in y")
            if e.field != field:
                raise ValueError(f"entry ({r + 1},{c + 1}) lives in {e.field}, not {field}")
            if e.is_zero():
                continue
            b = cell.bound(r + 1, c + 1)
            if e.degree() > b:
                violations.append((r + 1, c + 1, int(e.degree()), b))
    if violations:
        raise BoundViolation(violations)
    return ParamMatrix(cell, field, tuple(tuple(r) for r in rows))


def zero_matrix(cell: MonomialCell, field) -> ParamMatrix:
    t = cell.t
    z = Poly.zero(field, 1)
    return ParamMatrix(cell, field, tuple(tuple(z for _ in range(t)) for _ in range(t + 1)))


def param_matrix_from_strings(cell: MonomialCell, field, string_rows) -> ParamMatrix:
    entries = [[parse_poly(s, field, 1) for s in row] for row in string_rows]
    return check_membership(cell, entries, field)


def hb_matrix(A: ParamMatrix) -> list:
    """The full (t+1) x t matrix X + A over K[x, y], as nested lists."""
    cell, field = A.cell, A.field
    t = cell.t
    rows = [[A.entries[r][c].embed(2) for c in range(t)] for r in range(t + 1)]
    for i in range(1, t + 1):
        rows[i - 1][i - 1] = rows[i - 1][i - 1] + Poly.monomial(field, 2, (0, cell.d_of(i)))
        rows[i][i - 1] = rows[i][i - 1] - Poly.monomial(field, 2, (1, 0))
    return rows


class _MinorTable:
    """Memoized cofactor expansion; sub-minors are shared across all the
    maximal minors of one matrix via (rows, cols) keys.  The expansion
    column is the one with the most zero entries left."""

    def __init__(self, rows, field, nvars):
        self.rows = rows
        self.field = field
        self.nvars = nvars
        self.memo: dict = {}

    def minor(self, ridx: tuple, cidx: tuple) -> Poly:
        if not ridx:
            return Poly.constant(self.field, self.nvars, self.field.one)
        key = (ridx, cidx)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        best_pos, best_zeros = 0, -1
        for pos, c in enumerate(cidx):
            nz = sum(1 for r in ridx if self.rows[r][c].is_zero())
            if nz > best_zeros:
                best_pos, best_zeros = pos, nz
        c = cidx[best_pos]
        sub_cols = cidx[:best_pos] + cidx[best_pos + 1 :]
        acc = Poly.zero(self.field, self.nvars)
        for k, r in enumerate(ridx):
            e = self.rows[r][c]
            if e.is_zero():
                continue
            cof = self.minor(ridx[:k] + ridx[k + 1 :], sub_cols)
            term = e * cof
            acc = acc + term if (k + best_pos) % 2 == 0 else acc - term
        self.memo[key] = acc
        return acc


def determinant(rows) -> Poly:
    """Exact determinant of a square matrix of polynomials."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        raise ValueError("empty matrix")
    probe = rows[0][0]
    table = _MinorTable(rows, probe.field, probe.nvars)
    return table.minor(tuple(range(n)), tuple(range(n)))


def maximal_minors(rows, field, nvars) -> list:
    """For a (t+1) x t matrix: the t x t minor obtained by deleting each
    row in turn, computed off one shared memo table."""
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    if nr != nc + 1:
        raise ValueError("maximal minors expect one more row than columns")
    table = _MinorTable(rows, field, nvars)
    all_rows = tuple(range(nr))
    cols = tuple(range(nc))
    return [
        table.minor(all_rows[:r] + all_rows[r + 1 :], cols) for r in range(nr)
    ]


def psi(A: ParamMatrix) -> IdealBasis:
    """f_i = (-1)^(t-i) * det of (X+A) with row i+1 deleted.

    The sign makes every f_i monic with leading term x^(t-i) y^(m_i)."""
    cell, field = A.cell, A.field
    t = cell.t
    minors = maximal_minors(hb_matrix(A), field, 2)
    polys = []
    for i in range(t + 1):
        f = minors[i] if (t - i) % 2 == 0 else -minors[i]
        expected = (t - i, cell.m[i])
        if f.is_zero() or f.leading_monomial() != expected or f.leading_coeff() != field.one:
            raise InternalError(
                f"minor {i} of X+A has leading term {f.leading_term() if f else 0}, "
                f"expected monic x^{expected[0]}*y^{expected[1]}"
            )
        polys.append(f)
    return IdealBasis(cell, tuple(polys))


def verify_groebner_property(basis: IdealBasis) -> bool:
    """Certify the basis is a Groebner basis by reducing the t critical
    S-polynomials y^(d_i) f_(i-1) - x f_i; no full Buchberger run needed."""
    cell = basis.cell
    t = cell.t
    fs = basis.polys
    if len(fs) != t + 1:
        raise LeadingTermMismatch(f"expected {t + 1} polynomials, got {len(fs)}")
    field = fs[0].field
    for i, f in enumerate(fs):
        expected = (t - i, cell.m[i])
        if f.is_zero() or f.leading_monomial() != expected:
            raise LeadingTermMismatch(
                f"f_{i} must have leading monomial x^{expected[0]}*y^{expected[1]}"
            )
        if f.leading_coeff() != field.one:
            raise LeadingTermMismatch(f"f_{i} must be monic")
    for i in range(1, t + 1):
        s = fs[i - 1].mul_term((0, cell.d_of(i)), field.one) - fs[i].mul_term(
            (1, 0), field.one
        )
        if s.is_zero():
            continue
        if not divide(s, fs).remainder.is_zero():
            return False
    return True


def sample(cell: MonomialCell, field, seed: int) -> ParamMatrix:
    """Draw every admissible coefficient i.i.d.: uniform on GF(p), or
    uniform on the integers -9..9 over QQ.  Deterministic per seed; slots
    are filled row-major, coefficients low degree first."""
    if not char_ok(field, hilbert_function(cell)):
        warnings.warn(
            f"characteristic of {field} is small for {cell}; "
            "Betti computations over this field may misbehave",
            stacklevel=2,
        )
    rng = random.Random(seed)
    t = cell.t
    rows = []
    for i in range(1, t + 2):
        row = []
        for j in range(1, t + 1):
            b = cell.bound(i, j)
            if b < 0:
                row.append(Poly.zero(field, 1))
            else:
                coeffs = [((k,), field.sample_scalar(rng)) for k in range(b + 1)]
                row.append(Poly.from_terms(field, 1, coeffs))
        rows.append(tuple(row))
    return ParamMatrix(cell, field, tuple(rows))


def param_matrix_to_json(A: ParamMatrix) -> dict:
    return {
        "m": list(A.cell.m),
        "index_base": 1,
        "field": A.field.to_json(),
        "entries": [[format_poly(e) for e in row] for row in A.entries],
    }


def param_matrix_from_json(obj: dict, field=None) -> ParamMatrix:
    cell = make_cell(obj["m"])
    if field is None:
        field = field_from_json(obj.get("field"))
    entries = [[parse_poly(s, field, 1) for s in row] for row in obj["entries"]]
    return check_membership(cell, entries, field)


__all__ = [
    "ParamMatrix",
    "IdealBasis",
    "check_membership",
    "zero_matrix",
    "param_matrix_from_strings",
    "hb_matrix",
    "determinant",
    "maximal_minors",
    "psi",
    "verify_groebner_property",
    "sample",
    "param_matrix_to_json",
    "param_matrix_from_json",
]
