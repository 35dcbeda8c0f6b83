"""Integer and polynomial identities behind the split characterization.

Everything here uses Python's arbitrary-width integers; exponents such as
``q^(d^2)`` overflow machine words already for small ``d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArgOutOfRange

__all__ = [
    "SignedPowerPoly",
    "GcdResult",
    "gcd_power_polys",
    "gcd_power_polys_oracle",
    "binom_mod",
    "all_inner_binoms_zero",
    "is_power_of",
    "exponents",
    "ExponentPair",
    "expos_divides",
    "exponent_coverage",
    "expos_lemma_check",
    "bezout",
]


@dataclass(frozen=True)
class SignedPowerPoly:
    """``x^k + sign``."""

    k: int
    sign: int

    def __post_init__(self):
        if self.k < 1:
            raise ArgOutOfRange(f"k must be >= 1, got {self.k}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def __str__(self) -> str:
        return f"x^{self.k} {'+' if self.sign > 0 else '-'} 1"


@dataclass(frozen=True)
class GcdResult:
    """Either the constant 1 (``is_trivial``) or ``x^g + const_sign``."""

    is_trivial: bool
    g: int = 0
    const_sign: int = 1

    def __str__(self) -> str:
        if self.is_trivial:
            return "1"
        return f"x^{self.g} {'+' if self.const_sign > 0 else '-'} 1"


TRIVIAL = GcdResult(True)


def gcd_power_polys(A: SignedPowerPoly, B: SignedPowerPoly) -> GcdResult:
    """Closed-form gcd of ``x^k +- 1`` and ``x^l +- 1`` over the integers.

    Valid over any field of characteristic other than 2.  In characteristic 2
    the signs coincide and the ``x^g - 1`` rule applies to every pair.
    """
    g = math.gcd(A.k, B.k)
    e, f = A.k // g, B.k // g
    if A.sign == -1 and B.sign == -1:
        return GcdResult(False, g, -1)
    if A.sign == 1 and B.sign == 1:
        return GcdResult(False, g, 1) if e % 2 and f % 2 else TRIVIAL
    minus_q, plus_q = (e, f) if A.sign == -1 else (f, e)
    if minus_q % 2 == 0 and plus_q % 2 == 1:
        return GcdResult(False, g, 1)
    return TRIVIAL


# -- exact Euclid over Q[x], sparse ---------------------------------------------


def _sparse(P: SignedPowerPoly) -> dict[int, int]:
    return {P.k: 1, 0: P.sign}


def _make_monic(a: dict) -> dict:
    lead = a[max(a)]
    if lead == 1:
        return a
    if lead == -1:
        return {e: -v for e, v in a.items()}
    return {e: Fraction(v) / lead for e, v in a.items()}


def _sparse_rem(a: dict, b: dict) -> dict:
    """Remainder of ``a`` by the monic ``b``; integral inputs stay integral."""
    a = dict(a)
    db = max(b)
    while a and max(a) >= db:
        da = max(a)
        c = a[da]
        shift = da - db
        for e, v in b.items():
            key = e + shift
            nv = a.get(key, 0) - c * v
            if nv:
                a[key] = nv
            else:
                a.pop(key, None)
    return a


def gcd_power_polys_oracle(A: SignedPowerPoly, B: SignedPowerPoly) -> GcdResult:
    """Monic gcd by the Euclidean algorithm on exact rational polynomials."""
    if max(A.k, B.k) > 512:
        raise ArgOutOfRange("oracle limited to exponents <= 512")
    a, b = _sparse(A), _sparse(B)
    while b:
        a, b = b, _sparse_rem(a, b)
        if b:
            b = _make_monic(b)
    a = _make_monic(a)
    g = max(a)
    if g == 0:
        return TRIVIAL
    if set(a) != {g, 0} or abs(a[0]) != 1:
        raise AssertionError(f"gcd is not of the form x^g +- 1: {a}")
    return GcdResult(False, g, int(a[0]))


# -- binomials mod p ------------------------------------------------------------


def binom_mod(n: int, i: int, p: int) -> int:
    """``C(n, i) mod p`` as the product of digit binomials (Lucas)."""
    if not 0 <= i <= n:
        raise ArgOutOfRange(f"need 0 <= i <= n, got n={n}, i={i}")
    r = 1
    while n or i:
        n, nd = divmod(n, p)
        i, id_ = divmod(i, p)
        if id_ > nd:
            return 0
        r = r * math.comb(nd, id_) % p
    return r


def all_inner_binoms_zero(n: int, p: int) -> bool:
    if n < 1:
        raise ArgOutOfRange(f"n must be >= 1, got {n}")
    return all(binom_mod(n, i, p) == 0 for i in range(1, n))


def is_power_of(n: int, p: int) -> bool:
    """True for ``n = p^k`` with ``k >= 0`` (so ``n = 1`` counts)."""
    if n < 1:
        raise ArgOutOfRange(f"n must be >= 1, got {n}")
    while n % p == 0:
        n //= p
    return n == 1


# -- exponents e_1, e_2 ---------------------------------------------------------


@dataclass(frozen=True)
class ExponentPair:
    e1: int
    e2: int


def exponents(q: int, d: int) -> ExponentPair:
    """``e1 = (q^(d^2)-1)/(q^d-1)`` and ``e2 = (q^((d-1)d)-q^(d-1))/(q^(d-1)-1)``.

    Both closed forms are checked against their geometric sums.
    """
    if q < 2 or d < 2:
        raise ArgOutOfRange(f"need q >= 2 and d >= 2, got q={q}, d={d}")
    e1 = (q ** (d * d) - 1) // (q**d - 1)
    e2 = (q ** ((d - 1) * d) - q ** (d - 1)) // (q ** (d - 1) - 1)
    if e1 != sum(q ** (i * d) for i in range(d)):
        raise AssertionError("e1 closed form disagrees with its sum")
    if e2 != sum(q ** (i * (d - 1)) for i in range(1, d)):
        raise AssertionError("e2 closed form disagrees with its sum")
    return ExponentPair(e1, e2)


def expos_divides(q: int, d: int) -> bool:
    """Whether ``(q^n-1)/(q-1)`` divides ``1 + q e1 e2`` for ``n = d(d-1)+1``."""
    n = d * (d - 1) + 1
    e = exponents(q, d)
    return (1 + q * e.e1 * e.e2) % ((q**n - 1) // (q - 1)) == 0


def exponent_coverage(d: int) -> bool:
    """``{i d + j (d-1) + 1 mod n : 0 <= i < d, 1 <= j < d}`` is exactly ``{1, ..., n-1}``.

    The residues are also required to be pairwise distinct, which is what makes
    the sum of the ``q^(...)`` terms collapse to ``1 + q + ... + q^(n-1)``.
    """
    n = d * (d - 1) + 1
    residues = [(i * d + j * (d - 1) + 1) % n for i in range(d) for j in range(1, d)]
    return len(residues) == len(set(residues)) and set(residues) == set(range(1, n))


def expos_lemma_check(q: int, d: int) -> bool:
    return expos_divides(q, d) and exponent_coverage(d)


def bezout(k: int, l: int) -> tuple[int, int, int]:
    """``(s, t, g)`` with ``s*k + t*l == g == gcd(k, l)``."""
    if k < 1 or l < 1:
        raise ArgOutOfRange(f"need k, l >= 1, got {k}, {l}")
    old_r, r = k, l
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    return old_s, old_t, old_r
