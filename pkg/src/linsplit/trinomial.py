"""When does ``x^(q^d) - b x^q - a x`` split completely over GF(q^n)?

For ``n <= d(d-1)+1`` the answer is known in closed form:

* ``d`` does not divide ``n`` (and ``n <= d(d-1)``): never;
* ``n = i*d`` with ``1 <= i <= d-1``: iff ``b = 0`` and ``a^(1+q^d+...+q^((i-1)d)) = 1``;
* ``n = d(d-1)+1``: iff ``N(a) = (-1)^(d-1)``, ``b = -a^(q e1)`` and ``d-1`` is a
  power of the characteristic.

:func:`predict` applies that rule.  The sweep helpers compare it with the
companion-matrix nullity on every pair ``(a, b)`` of small fields.
"""

from __future__ import annotations

import enum
import math
import random
from collections import Counter
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import ArgOutOfRange, InfeasibleSweep, OutsideTheoremRange, TheoremViolation
from .ff_core import FieldSpec, make_field, split_prime_power
from .linpoly import LinearizedPoly, _rank_of_a_minus_identity, _twisted_product
from .numtheory import ExponentPair, exponents, is_power_of

__all__ = [
    "CaseTag",
    "TrinomialParams",
    "SplitVerdict",
    "ExponentPair",
    "exponents",
    "classify",
    "predict",
    "canonical_b",
    "norm_condition_holds",
    "secondary_condition_check",
    "necessary_norm_filter",
    "trinomial_nullity",
    "boundary_candidates",
    "theorem_candidates",
    "enumerate_splitting",
    "count_splitting",
    "sweep",
    "SweepResult",
    "TheoremReport",
    "verify_theorem",
    "sample_splitting",
    "EXHAUSTIVE_LIMIT",
    "THEOREM_LIMIT",
]

EXHAUSTIVE_LIMIT = 1 << 13
THEOREM_LIMIT = 1 << 20


class CaseTag(str, enum.Enum):
    NO_SPLIT_POSSIBLE = "NoSplitPossible"
    DIVIDES = "DividesCase"
    BOUNDARY = "BoundaryCase"
    OUTSIDE = "OutsideTheoremRange"


@dataclass(frozen=True)
class TrinomialParams:
    spec: FieldSpec
    d: int
    a: int
    b: int

    def __post_init__(self):
        if self.d < 2:
            raise ArgOutOfRange("trinomial theorems need d >= 2")
        self.spec.check(self.a)
        self.spec.check(self.b)

    def poly(self) -> LinearizedPoly:
        return LinearizedPoly.trinomial(self.spec, self.d, self.a, self.b)


@dataclass(frozen=True)
class SplitVerdict:
    """``predicted_splits`` is ``None`` exactly when the case is outside the theorem."""

    case_tag: CaseTag
    predicted_splits: bool | None
    i: int | None = None
    conditions: dict = field(default_factory=dict)


def classify(n: int, d: int) -> tuple[CaseTag, int | None]:
    """Which part of the characterization covers ``(n, d)``; ``i = n/d`` in the divides case."""
    if d < 2 or n < 1:
        raise ArgOutOfRange(f"need d >= 2 and n >= 1, got d={d}, n={n}")
    if n <= d * (d - 1):
        if n % d:
            return CaseTag.NO_SPLIT_POSSIBLE, None
        return CaseTag.DIVIDES, n // d
    if n == d * (d - 1) + 1:
        return CaseTag.BOUNDARY, None
    return CaseTag.OUTSIDE, None


def _divides_exponent(q: int, d: int, i: int) -> int:
    return sum(q ** (j * d) for j in range(i))


def canonical_b(spec: FieldSpec, d: int, a: int) -> int:
    """``-a^(q e1)``, the only ``b`` that can pair with ``a`` at ``n = d(d-1)+1``."""
    if a == 0:
        raise ArgOutOfRange("canonical_b needs a != 0")
    e1 = exponents(spec.q, d).e1
    return spec.neg(spec.pow(a, spec.q * e1))


def norm_condition_holds(spec: FieldSpec, d: int, a: int) -> bool:
    """``N(a) = (-1)^(d-1)`` with ``N`` the norm to GF(q)."""
    return a != 0 and spec.norm_rel(a) == spec.minus_one_power(d - 1)


def secondary_condition_check(spec: FieldSpec, d: int, a: int) -> bool:
    """``a^(1 + q e1 e2) = (-1)^(d-1)``; implied by the norm condition."""
    if a == 0:
        raise ArgOutOfRange("secondary_condition_check needs a != 0")
    e = exponents(spec.q, d)
    return spec.pow(a, 1 + spec.q * e.e1 * e.e2) == spec.minus_one_power(d - 1)


def necessary_norm_filter(params: TrinomialParams) -> bool:
    """``N(a) = (-1)^(n(d-1))``: holds for every splitting trinomial, any ``n``."""
    F = params.spec
    return params.a != 0 and F.norm_rel(params.a) == F.minus_one_power(F.n * (params.d - 1))


def predict(params: TrinomialParams) -> SplitVerdict:
    F, d, a, b = params.spec, params.d, params.a, params.b
    tag, i = classify(F.n, d)
    if tag is CaseTag.NO_SPLIT_POSSIBLE:
        return SplitVerdict(tag, False)
    if tag is CaseTag.DIVIDES:
        sub_norm = F.pow(a, _divides_exponent(F.q, d, i))
        ok = sub_norm == 1 and b == 0
        return SplitVerdict(tag, ok, i, {"subfield_norm": sub_norm, "expected_b": 0})
    if tag is CaseTag.BOUNDARY:
        norm = F.norm_rel(a)
        char_power = is_power_of(d - 1, F.p)
        expected_b = canonical_b(F, d, a) if a else None
        ok = (
            norm == F.minus_one_power(d - 1)
            and expected_b is not None
            and b == expected_b
            and char_power
        )
        conditions = {"norm": norm, "expected_b": expected_b, "char_power": char_power}
        return SplitVerdict(tag, ok, None, conditions)
    return SplitVerdict(tag, None)


def trinomial_nullity(spec: FieldSpec, d: int, a: int, b: int) -> int:
    """Nullity of ``x^(q^d) - b x^q - a x`` through the companion-matrix criterion."""
    lower = [0] * d
    lower[0], lower[1] = a, b
    A = _twisted_product(spec, lower, spec.n)
    return d - _rank_of_a_minus_identity(spec, A)


# -- candidate construction ---------------------------------------------------------


def _require_size(spec: FieldSpec, limit: int, what: str) -> None:
    if spec.order > limit:
        raise InfeasibleSweep(f"{what} over {spec} needs |F| <= {limit}, have {spec.order}")


def boundary_candidates(spec: FieldSpec, d: int) -> list[tuple[int, int]]:
    """Pairs ``(a, -a^(q e1))`` with ``N(a) = (-1)^(d-1)``, ignoring the characteristic condition."""
    if classify(spec.n, d)[0] is not CaseTag.BOUNDARY:
        raise ArgOutOfRange(f"n = {spec.n} is not d(d-1)+1 for d = {d}")
    _require_size(spec, THEOREM_LIMIT, "candidate construction")
    target = spec.minus_one_power(d - 1)
    qe1 = spec.q * exponents(spec.q, d).e1
    out = []
    for a in spec.nonzero():
        if spec.norm_rel(a) == target:
            out.append((a, spec.neg(spec.pow(a, qe1))))
    return out


def theorem_candidates(spec: FieldSpec, d: int) -> list[tuple[int, int]]:
    """Every ``(a, b)`` that :func:`predict` says splits, sorted by code."""
    tag, i = classify(spec.n, d)
    if tag is CaseTag.OUTSIDE:
        raise OutsideTheoremRange(f"n = {spec.n} > d(d-1)+1 = {d * (d - 1) + 1}")
    if tag is CaseTag.NO_SPLIT_POSSIBLE:
        return []
    _require_size(spec, THEOREM_LIMIT, "candidate construction")
    if tag is CaseTag.DIVIDES:
        E = _divides_exponent(spec.q, d, i)
        return [(a, 0) for a in spec.nonzero() if spec.pow(a, E) == 1]
    if not is_power_of(d - 1, spec.p):
        return []
    return boundary_candidates(spec, d)


# -- exhaustive sweeps ----------------------------------------------------------------


@dataclass
class SweepResult:
    """Merged outcome of checking every pair ``(a, b)`` with ``a`` in a code range."""

    census: Counter = field(default_factory=Counter)
    splitting: list[tuple[int, int]] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    def merge(self, other: "SweepResult") -> "SweepResult":
        self.census.update(other.census)
        self.splitting.extend(other.splitting)
        self.counterexamples.extend(other.counterexamples)
        return self


def _sweep_shard(spec: FieldSpec, d: int, a_start: int, a_stop: int, check_predict: bool) -> SweepResult:
    res = SweepResult()
    for a in range(a_start, a_stop):
        for b in spec.elements():
            k = trinomial_nullity(spec, d, a, b)
            res.census[k] += 1
            splits = k == d
            if splits:
                res.splitting.append((a, b))
            if check_predict:
                predicted = predict(TrinomialParams(spec, d, a, b)).predicted_splits
                if predicted is not None and predicted != splits:
                    res.counterexamples.append(
                        {"a": a, "b": b, "predicted": predicted, "nullity": k}
                    )
    return res


def _shards(order: int, workers: int) -> list[tuple[int, int]]:
    step = max(1, math.ceil(order / (4 * workers)))
    return [(lo, min(order, lo + step)) for lo in range(0, order, step)]


def sweep(spec: FieldSpec, d: int, workers: int = 1, check_predict: bool = True) -> SweepResult:
    """Nullity of every trinomial over ``spec``; output does not depend on ``workers``."""
    _require_size(spec, EXHAUSTIVE_LIMIT, "exhaustive sweep")
    shards = _shards(spec.order, workers)
    if workers <= 1:
        parts = [_sweep_shard(spec, d, lo, hi, check_predict) for lo, hi in shards]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_sweep_shard, spec, d, lo, hi, check_predict) for lo, hi in shards]
            parts = [f.result() for f in futures]
    total = SweepResult()
    for part in parts:
        total.merge(part)
    total.splitting.sort()
    total.counterexamples.sort(key=lambda c: (c["a"], c["b"]))
    return total


def sample_splitting(
    spec: FieldSpec, d: int, samples: int, rng: random.Random
) -> list[tuple[int, int]]:
    """Uniformly random pairs ``(a, b)``; returns those whose trinomial splits."""
    hits = []
    for _ in range(samples):
        a, b = spec.random_element(rng), spec.random_element(rng)
        if trinomial_nullity(spec, d, a, b) == d:
            hits.append((a, b))
    return sorted(set(hits))


def enumerate_splitting(
    spec: FieldSpec, d: int, mode: str = "both", workers: int = 1
) -> list[tuple[int, int]]:
    """All ``(a, b)`` for which the trinomial splits, sorted by ``(a, b)`` codes.

    ``mode="theorem"`` builds the predicted pairs and verifies each one,
    ``"exhaustive"`` sweeps every pair, ``"both"`` does both and requires equality.
    """
    if mode not in ("theorem", "exhaustive", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    if d < 2:
        raise ArgOutOfRange("trinomials need d >= 2")
    theorem = exhaustive = None
    if mode in ("exhaustive", "both"):
        _require_size(spec, EXHAUSTIVE_LIMIT, "exhaustive sweep")
    if mode in ("theorem", "both"):
        theorem = sorted(theorem_candidates(spec, d))
        for a, b in theorem:
            if trinomial_nullity(spec, d, a, b) != d:
                raise TheoremViolation(f"predicted pair ({a}, {b}) does not split over {spec}")
    if mode in ("exhaustive", "both"):
        exhaustive = sweep(spec, d, workers, check_predict=False).splitting
    if mode == "both" and theorem != exhaustive:
        raise TheoremViolation(f"theorem and exhaustive sets differ over {spec}")
    return theorem if theorem is not None else exhaustive


def count_splitting(spec: FieldSpec, d: int) -> int:
    """Closed-form number of splitting trinomials for ``n <= d(d-1)+1``."""
    tag, i = classify(spec.n, d)
    q, n = spec.q, spec.n
    if tag is CaseTag.OUTSIDE:
        raise OutsideTheoremRange(f"n = {n} > d(d-1)+1 = {d * (d - 1) + 1}")
    if tag is CaseTag.NO_SPLIT_POSSIBLE:
        return 0
    if tag is CaseTag.DIVIDES:
        return math.gcd(_divides_exponent(q, d, i), q**n - 1)
    return (q**n - 1) // (q - 1) if is_power_of(d - 1, spec.p) else 0


# -- theorem verification reports ---------------------------------------------------

_PART_TAG = {1: CaseTag.NO_SPLIT_POSSIBLE, 2: CaseTag.DIVIDES, 3: CaseTag.BOUNDARY}


@dataclass
class TheoremReport:
    q: int
    d: int
    n: int
    part: int
    splitting_count: int
    counterexamples: list[dict]
    census: dict[str, int]

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "d": self.d,
            "n": self.n,
            "part": self.part,
            "splitting_count": self.splitting_count,
            "counterexamples": self.counterexamples,
            "census": self.census,
        }

    @classmethod
    def from_json(cls, data: dict) -> "TheoremReport":
        return cls(**{k: data[k] for k in cls.__dataclass_fields__})

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_theorem(
    part: int, q: int, d: int, n_list: Iterable[int], workers: int = 1
) -> list[TheoremReport]:
    """Exhaustively compare :func:`predict` with the nullity for each ``n``."""
    if part not in _PART_TAG:
        raise ArgOutOfRange(f"part must be 1, 2 or 3, got {part}")
    p, s = split_prime_power(q)
    reports = []
    for n in n_list:
        tag, _ = classify(n, d)
        if tag is not _PART_TAG[part]:
            raise ArgOutOfRange(f"(d={d}, n={n}) falls under {tag.value}, not part {part}")
        spec = make_field(p, s, n)
        res = sweep(spec, d, workers, check_predict=True)
        census = {f"nullity_{k}": res.census[k] for k in sorted(res.census)}
        reports.append(
            TheoremReport(q, d, n, part, len(res.splitting), res.counterexamples, census)
        )
    return reports
