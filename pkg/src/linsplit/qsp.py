"""Quasi-subfield polynomials and the cost of the summation-polynomial ECDLP attack.

The attack over GF(q^n) with a quasi-subfield polynomial ``x^(q^d) - lambda(x)``
and the ``(m+1)``-th summation polynomial costs

    m! q^(n - d(m-1)) * O~(m^5.188 2^(7.376 m(m-1)) deg(lambda)^(4.876 m(m-1))) + m q^(2d)

Everything is evaluated in log2.  Polylog factors hidden in ``O~`` are
omitted (taken as 1); the result is a leading-order estimate only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .linpoly import LinearizedPoly, nullity_fast

__all__ = [
    "QspParams",
    "ComplexityEstimate",
    "lambda_degree",
    "is_quasi_subfield",
    "four_term_feasible",
    "log2_inner_factor",
    "complexity_log2",
    "window_ok",
    "scan_parameters",
    "TABLE_COLUMNS",
    "to_tsv",
]

POLYLOG_NOTE = "polylog factors omitted"

TABLE_COLUMNS = (
    "q", "n", "d", "m", "deg_lambda", "log2_relation", "log2_linalg",
    "log2_total", "window_ok", "beats_generic", "beats_bruteforce",
)


@dataclass(frozen=True)
class QspParams:
    q: int
    n: int
    d: int
    deg_lambda: int
    m: int

    def __post_init__(self):
        if self.q < 2 or self.n < 1 or not 1 <= self.d <= self.n:
            raise ValueError(f"need q >= 2, n >= 1, 1 <= d <= n; got {self}")
        if self.deg_lambda < 1 or self.m < 2:
            raise ValueError(f"need deg_lambda >= 1 and m >= 2; got {self}")


@dataclass(frozen=True)
class ComplexityEstimate:
    params: QspParams
    log2_relation_term: float
    log2_linear_algebra_term: float
    log2_total: float
    beats_generic: bool
    beats_bruteforce: bool
    window_ok: bool
    note: str = POLYLOG_NOTE

    def row(self) -> dict:
        p = self.params
        return {
            "q": p.q,
            "n": p.n,
            "d": p.d,
            "m": p.m,
            "deg_lambda": p.deg_lambda,
            "log2_relation": self.log2_relation_term,
            "log2_linalg": self.log2_linear_algebra_term,
            "log2_total": self.log2_total,
            "window_ok": self.window_ok,
            "beats_generic": self.beats_generic,
            "beats_bruteforce": self.beats_bruteforce,
        }

    def to_json(self) -> dict:
        out = self.row()
        out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ComplexityEstimate":
        params = QspParams(data["q"], data["n"], data["d"], data["deg_lambda"], data["m"])
        return cls(
            params,
            data["log2_relation"],
            data["log2_linalg"],
            data["log2_total"],
            data["beats_generic"],
            data["beats_bruteforce"],
            data["window_ok"],
            data.get("note", POLYLOG_NOTE),
        )


def lambda_degree(L: LinearizedPoly) -> int:
    """Ordinary degree ``q^j`` of ``lambda = x^(q^d) - L`` (monic ``L``); 0 if ``lambda = 0``."""
    lower = L.monic().coeffs[:-1]
    j = max((i for i, c in enumerate(lower) if c), default=None)
    return 0 if j is None else L.spec.q**j


def is_quasi_subfield(L: LinearizedPoly) -> bool:
    """``L`` splits completely in GF(q^n) and ``log_q deg(lambda) < d^2 / n``."""
    lower = L.monic().coeffs[:-1]
    j = max((i for i, c in enumerate(lower) if c), default=None)
    if j is None:
        # L = x^(q^d) has only the root 0, so it never divides x^(q^n) - x here.
        return False
    d, n = L.d, L.spec.n
    return j * n < d * d and nullity_fast(L) == d


def four_term_feasible(n: int, d: int) -> bool:
    """``d^2 > 2n``: the QSP degree condition when ``lambda`` has degree ``q^2``."""
    return d * d > 2 * n


def log2_inner_factor(m: int, deg_lambda: int) -> float:
    """log2 of ``2^(7.376 m(m-1)) * deg(lambda)^(4.876 m(m-1))``."""
    mm = m * (m - 1)
    return 7.376 * mm + 4.876 * mm * math.log2(deg_lambda)


def _log2_add(x: float, y: float) -> float:
    hi, lo = max(x, y), min(x, y)
    return hi + math.log2(1.0 + 2.0 ** (lo - hi))


def window_ok(n: int, d: int, m: int) -> bool:
    """``n / (2(m-1)) <= d <= n / 4``, checked in exact arithmetic."""
    return Fraction(n, 2 * (m - 1)) <= d <= Fraction(n, 4)


def complexity_log2(params: QspParams) -> ComplexityEstimate:
    q, n, d, m, deg = params.q, params.n, params.d, params.m, params.deg_lambda
    lq = math.log2(q)
    relation = (
        math.lgamma(m + 1) / math.log(2)
        + (n - d * (m - 1)) * lq
        + 5.188 * math.log2(m)
        + log2_inner_factor(m, deg)
    )
    linalg = math.log2(m) + 2 * d * lq
    total = _log2_add(relation, linalg)
    return ComplexityEstimate(
        params,
        relation,
        linalg,
        total,
        beats_generic=total < n / 2 * lq,
        beats_bruteforce=total < n * lq,
        window_ok=window_ok(n, d, m),
    )


def scan_parameters(
    q: int, n: int, d_range, m_range, deg_lambda: int
) -> list[ComplexityEstimate]:
    """Every ``(d, m)`` pair, cheapest first; ties broken by ``(d, m)``."""
    d_values, m_values = list(d_range), list(m_range)
    if not d_values or not m_values:
        raise ValueError("d_range and m_range must be nonempty")
    rows = [
        complexity_log2(QspParams(q, n, d, deg_lambda, m)) for d in d_values for m in m_values
    ]
    rows.sort(key=lambda r: (r.log2_total, r.params.d, r.params.m))
    return rows


def to_tsv(rows: list[ComplexityEstimate]) -> str:
    lines = ["\t".join(TABLE_COLUMNS)]
    for r in rows:
        row = r.row()
        cells = []
        for col in TABLE_COLUMNS:
            v = row[col]
            if isinstance(v, bool):
                cells.append(str(v).lower())
            elif isinstance(v, float):
                cells.append(f"{v:.6f}")
            else:
                cells.append(str(v))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"

