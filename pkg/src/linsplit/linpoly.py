"""q-linearized polynomials, their companion matrices and the twisted products.

A q-linearized polynomial over GF(q^n) is ``L(x) = sum_i a_i x^(q^i)``; it acts
as a GF(q)-linear map on GF(q^n).  Its nullity (the GF(q)-dimension of the
roots in GF(q^n)) equals ``d - rank(A_{L,n} - I_d)`` where
``A_{L,k} = C_L C_L^q ... C_L^(q^(k-1))`` and ``C^q`` raises every entry to the
q-th power.  :func:`nullity_fast` uses that identity; :func:`nullity_bruteforce`
writes ``L`` out as a matrix over GF(p) and is kept as an independent check.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import ArgOutOfRange, DimensionMismatch, FieldMismatch
from .ff_core import FieldSpec

__all__ = [
    "LinearizedPoly",
    "FieldMatrix",
    "evaluate",
    "companion_matrix",
    "a_matrix",
    "a_matrix_naive",
    "matrix_rank",
    "is_identity",
    "nullity_fast",
    "splits_completely",
    "nullity_bruteforce",
    "kernel_basis",
    "m_recursive",
    "m_sequence",
    "a_matrix_entry_via_recursion",
    "a_matrix_via_recursion",
]


@dataclass(frozen=True)
class LinearizedPoly:
    """``sum_{i=0}^{d} coeffs[i] * x^(q^i)`` with ``coeffs[d] != 0`` and ``d >= 1``."""

    spec: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) < 2:
            raise ValueError("a linearized polynomial needs q-degree d >= 1")
        for c in coeffs:
            self.spec.check(c)
        if coeffs[-1] == 0:
            raise ValueError("leading coefficient a_d must be nonzero")

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_lower(cls, spec: FieldSpec, lower: Sequence[int]) -> "LinearizedPoly":
        """``x^(q^d) - sum_{i<d} lower[i] x^(q^i)`` with ``d = len(lower)``."""
        return cls(spec, tuple(spec.neg(c) for c in lower) + (1,))

    @classmethod
    def trinomial(cls, spec: FieldSpec, d: int, a: int, b: int) -> "LinearizedPoly":
        """``x^(q^d) - b x^q - a x``; requires ``d >= 2`` so the terms stay distinct."""
        if d < 2:
            raise ValueError("trinomials need d >= 2; use from_lower for binomials")
        lower = [0] * d
        lower[0], lower[1] = a, b
        return cls.from_lower(spec, lower)

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def monic(self) -> "LinearizedPoly":
        if self.is_monic():
            return self
        inv = self.spec.inv(self.coeffs[-1])
        return LinearizedPoly(self.spec, tuple(self.spec.mul(c, inv) for c in self.coeffs))

    def lower(self) -> tuple[int, ...]:
        """Coefficients ``a'_i`` with monic ``L = x^(q^d) - sum_{i<d} a'_i x^(q^i)``."""
        F = self.spec
        inv = F.inv(self.coeffs[-1])
        return tuple(F.neg(F.mul(c, inv)) for c in self.coeffs[:-1])

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def to_json(self) -> dict:
        return {"field": self.spec.to_json(), "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "LinearizedPoly":
        return cls(FieldSpec.from_json(data["field"]), tuple(int(c) for c in data["coeffs"]))


@dataclass(frozen=True)
class FieldMatrix:
    """Dense matrix of element codes over ``spec``, stored row-major."""

    spec: FieldSpec
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("rows of unequal length")
        for r in rows:
            for c in r:
                self.spec.check(c)

    @classmethod
    def identity(cls, spec: FieldSpec, d: int) -> "FieldMatrix":
        return cls(spec, tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> "FieldMatrix":
        return cls(spec, ((0,) * cols,) * rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.spec != other.spec:
            raise FieldMismatch("matrices over different fields")
        if self.shape[1] != other.shape[0]:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        F = self.spec
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = 0
                for x, y in zip(r, c):
                    if x and y:
                        acc = F.add(acc, F.mul(x, y))
                row.append(acc)
            out.append(tuple(row))
        return FieldMatrix(F, tuple(out))

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {other.shape} from {self.shape}")
        F = self.spec
        return FieldMatrix(
            F, tuple(tuple(F.sub(x, y) for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def frobenius(self, j: int = 1) -> "FieldMatrix":
        """Entrywise ``x -> x^(q^j)``."""
        F = self.spec
        return FieldMatrix(F, tuple(tuple(F.frobenius_q(x, j) for x in r) for r in self.rows))

    def rank(self) -> int:
        return matrix_rank(self)

    def is_identity(self) -> bool:
        return is_identity(self)

    def to_codes(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _check_same_field(L: LinearizedPoly, x: int) -> None:
    if not isinstance(x, int) or not 0 <= x < L.spec.order:
        raise FieldMismatch(f"{x!r} is not an element of {L.spec}")


def evaluate(L: LinearizedPoly, x: int) -> int:
    _check_same_field(L, x)
    F = L.spec
    acc, y = 0, x
    for i, c in enumerate(L.coeffs):
        if c:
            acc = F.add(acc, F.mul(c, y))
        if i < L.d:
            y = F.frobenius_q(y, 1)
    return acc


def companion_matrix(L: LinearizedPoly) -> FieldMatrix:
    d = L.d
    lower = L.lower()
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = lower[i]
    return FieldMatrix(L.spec, tuple(map(tuple, rows)))


def _twisted_product(F: FieldSpec, lower: Sequence[int], k: int) -> list[list[int]]:
    # Right multiplication by a companion matrix shifts columns left and puts
    # sum_i A[:, i] * c_i into the last column, so each step costs d * nnz.
    d = len(lower)
    A = [[int(i == j) for j in range(d)] for i in range(d)]
    c = list(lower)
    add, mul, frob = F.add, F.mul, F.frobenius_q
    for step in range(k):
        terms = [(i, ci) for i, ci in enumerate(c) if ci]
        for row in A:
            last = 0
            for i, ci in terms:
                if row[i]:
                    last = add(last, mul(row[i], ci))
            del row[0]
            row.append(last)
        if step + 1 < k:
            c = [frob(ci, 1) if ci else 0 for ci in c]
    return A


def a_matrix(L: LinearizedPoly, k: int) -> FieldMatrix:
    """``A_{L,k} = C_L C_L^q ... C_L^(q^(k-1))`` for ``k >= 1``."""
    if k < 1:
        raise ArgOutOfRange(f"k must be >= 1, got {k}")
    A = _twisted_product(L.spec, L.lower(), k)
    return FieldMatrix(L.spec, tuple(map(tuple, A)))


def a_matrix_naive(L: LinearizedPoly, k: int) -> FieldMatrix:
    """Same as :func:`a_matrix` by explicit dense products; used as a cross-check."""
    if k < 1:
        raise ArgOutOfRange(f"k must be >= 1, got {k}")
    C = companion_matrix(L)
    A = C
    for j in range(1, k):
        A = A @ C.frobenius(j)
    return A


def _rank_rows(F: FieldSpec, rows: list[list[int]]) -> int:
    """Gaussian elimination in place; pivot is the first nonzero in column order."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = F.inv(rows[r][col])
        prow = [F.mul(x, inv) for x in rows[r]]
        rows[r] = prow
        for i in range(r + 1, nrows):
            f = rows[i][col]
            if f:
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], prow)]
        r += 1
        if r == nrows:
            break
    return r


def matrix_rank(M: FieldMatrix) -> int:
    return _rank_rows(M.spec, [list(r) for r in M.rows])


def is_identity(M: FieldMatrix) -> bool:
    return all(x == int(i == j) for i, r in enumerate(M.rows) for j, x in enumerate(r))


def _rank_of_a_minus_identity(F: FieldSpec, A: list[list[int]]) -> int:
    for i, row in enumerate(A):
        row[i] = F.sub(row[i], 1)
    return _rank_rows(F, A)


def nullity_fast(L: LinearizedPoly) -> int:
    """``d - rank(A_{L,n} - I_d)``."""
    A = _twisted_product(L.spec, L.lower(), L.spec.n)
    return L.d - _rank_of_a_minus_identity(L.spec, A)


def splits_completely(L: LinearizedPoly) -> bool:
    """True iff ``L`` has all ``q^d`` roots in GF(q^n), i.e. ``A_{L,n} = I_d``."""
    A = _twisted_product(L.spec, L.lower(), L.spec.n)
    return all(x == int(i == j) for i, r in enumerate(A) for j, x in enumerate(r))


# -- brute force over GF(p) --------------------------------------------------------


def _rref_mod_p(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _nullspace_mod_p(rows: list[list[int]], p: int) -> list[list[int]]:
    ncols = len(rows[0])
    R, pivots = _rref_mod_p(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][fcol] % p
        basis.append(v)
    return basis


def _prime_field_matrix(L: LinearizedPoly) -> list[list[int]]:
    """Matrix of ``L`` over GF(p) in the basis ``1, t, ..., t^(sn-1)``."""
    F = L.spec
    images = [F.coeffs(evaluate(L, F.p**i)) for i in range(F.m)]
    return [[images[j][i] for j in range(F.m)] for i in range(F.m)]


def _kernel_mod_p(L: LinearizedPoly) -> list[list[int]]:
    return _nullspace_mod_p(_prime_field_matrix(L), L.spec.p)


def nullity_bruteforce(L: LinearizedPoly) -> int:
    """GF(q)-dimension of the root space via the full GF(p)-matrix of ``L``."""
    F = L.spec
    dim_p = len(_kernel_mod_p(L))
    if dim_p % F.s:
        raise AssertionError("GF(p)-kernel dimension not a multiple of s")
    return dim_p // F.s


def kernel_basis(L: LinearizedPoly) -> list[int]:
    """A GF(q)-basis of the roots of ``L`` in GF(q^n)."""
    F = L.spec
    vectors = _kernel_mod_p(L)
    if F.s == 1:
        return [F.from_coeffs(v) for v in vectors]
    subfield = [F.from_coeffs(v) for v in _kernel_mod_p(LinearizedPoly(F, (F.neg(1), 1)))]
    chosen: list[int] = []
    span: list[list[int]] = []
    for v in vectors:
        x = F.from_coeffs(v)
        trial = span + [list(F.coeffs(x))]
        if len(_rref_mod_p(trial, F.p)[1]) > len(span):
            chosen.append(x)
            span += [list(F.coeffs(F.mul(w, x))) for w in subfield]
        if len(chosen) * F.s == len(vectors):
            break
    return chosen


# -- the M_{l,k} recursion ------------------------------------------------------------


def m_sequence(L: LinearizedPoly, l: int, kmax: int) -> dict[int, int]:
    """``{k: M_{l,k}}`` for ``1 - d <= k <= kmax`` by forward recursion.

    ``M_{l,l-d} = 1``, ``M_{l,k} = 0`` for other ``k <= 0``, and for ``k >= 1``
    ``M_{l,k} = sum_{i<d} M_{l,k-d+i} * (a'_i)^(q^(k-1))``.
    """
    d = L.d
    if not 1 <= l <= d:
        raise ArgOutOfRange(f"l must lie in 1..{d}, got {l}")
    F = L.spec
    M = {k: int(k == l - d) for k in range(1 - d, 1)}
    c = list(L.lower())
    for k in range(1, kmax + 1):
        acc = 0
        for i, ci in enumerate(c):
            prev = M[k - d + i]
            if ci and prev:
                acc = F.add(acc, F.mul(prev, ci))
        M[k] = acc
        c = [F.frobenius_q(ci, 1) if ci else 0 for ci in c]
    return M


def m_recursive(L: LinearizedPoly, l: int, k: int) -> int:
    if k < 1 - L.d:
        raise ArgOutOfRange(f"k must be >= 1 - d = {1 - L.d}, got {k}")
    return m_sequence(L, l, max(k, 0))[k]


def a_matrix_entry_via_recursion(L: LinearizedPoly, l: int, j: int, k: int) -> int:
    """Entry ``(l, j)`` (1-based) of ``A_{L,k}``, read off as ``M_{l,k-d+j}``."""
    if not 1 <= j <= L.d:
        raise ArgOutOfRange(f"j must lie in 1..{L.d}, got {j}")
    if k < 1:
        raise ArgOutOfRange(f"k must be >= 1, got {k}")
    return m_recursive(L, l, k - L.d + j)


def a_matrix_via_recursion(L: LinearizedPoly, k: int) -> FieldMatrix:
    d = L.d
    rows = []
    for l in range(1, d + 1):
        M = m_sequence(L, l, k)
        rows.append(tuple(M[k - d + j] for j in range(1, d + 1)))
    return FieldMatrix(L.spec, tuple(rows))
