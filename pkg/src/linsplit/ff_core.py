"""Arithmetic in GF(q^n), q = p^s, realised as GF(p)[t]/(f) with deg f = s*n.

Elements are plain Python ints.  The integer ``c`` stands for the polynomial
whose base-``p`` little-endian digits are its coefficients, so ``c = 6`` in
GF(2^3) is ``t^2 + t``.  This integer code is also the text format used for
elements everywhere in the package.

Fields with at most ``TABLE_LIMIT`` elements get log/antilog tables (plus
Zech logarithms in odd characteristic); larger fields fall back to
carry-less integer arithmetic (p = 2) or digit vectors (odd p).
"""

from __future__ import annotations

import functools
import random
from collections.abc import Iterator, Sequence

from .errors import DimensionMismatch, DivisionByZero, NotPrime, OutOfRange, TooLarge

__all__ = [
    "FieldSpec",
    "make_field",
    "is_prime",
    "is_irreducible",
    "prime_factors",
    "split_prime_power",
    "CAPACITY_BITS",
    "TABLE_LIMIT",
]

CAPACITY_BITS = 63
TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    from sympy import isprime

    return n >= 2 and bool(isprime(n))


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order."""
    from sympy import primefactors

    return [int(r) for r in primefactors(n)]


def split_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, s)`` with ``q == p**s`` or raise ``NotPrime``."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    primes = prime_factors(q)
    if len(primes) != 1:
        raise NotPrime(f"{q} is not a prime power")
    p = primes[0]
    s, r = 0, q
    while r > 1:
        r //= p
        s += 1
    return p, s


# -- polynomials over GF(p) as little-endian coefficient lists -----------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``f``."""
    a = list(a)
    m = len(f) - 1
    for k in range(len(a) - 1, m - 1, -1):
        c = a[k] % p
        if c:
            off = k - m
            for j in range(m):
                a[off + j] = (a[off + j] - c * f[j]) % p
        a[k] = 0
    return _trim([c % p for c in a[:m]])


def _poly_mulmod(a: list[int], b: list[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return _poly_mod(r, f, p)


def _poly_powmod(a: list[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        e >>= 1
        if e:
            base = _poly_mulmod(base, base, f, p)
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        monic_b = [c * inv % p for c in b]
        a, b = b, _poly_mod(a, monic_b, p)
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial ``f`` (little-endian) over GF(p)."""
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    if f[0] % p == 0:
        return False
    t = [0, 1]
    # frob[k] = t^(p^k) mod f
    frob = [t]
    for _ in range(m):
        frob.append(_poly_powmod(frob[-1], p, f, p))
    if _trim(list(frob[m])) != t:
        return False
    for r in prime_factors(m):
        h = list(frob[m // r]) + [0] * 2
        h[1] = (h[1] - 1) % p
        if len(_poly_gcd(list(f), _trim(h), p)) > 1:
            return False
    return True


def _lex_smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    # Candidates ordered by the integer whose base-p digits are (c_0, ..., c_{m-1}).
    for code in range(p**m):
        low = []
        c = code
        for _ in range(m):
            c, r = divmod(c, p)
            low.append(r)
        if m > 1 and low[0] == 0:
            continue
        f = low + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


# -- the field ------------------------------------------------------------------

_SPREAD = [0] * 256
for _b in range(256):
    _v = 0
    for _i in range(8):
        if _b >> _i & 1:
            _v |= 1 << (2 * _i)
    _SPREAD[_b] = _v
del _b, _v, _i


class FieldSpec:
    """The finite field GF(q^n) with q = p^s.

    Parameters
    ----------
    p, s, n : int
        Characteristic, subfield exponent (q = p^s) and extension degree over GF(q).
    modulus : sequence of int
        Monic irreducible polynomial of degree ``s*n`` over GF(p), little-endian.
        Checked at construction.

    Instances are immutable; use :func:`make_field` to get the canonical one.
    """

    __slots__ = (
        "p", "s", "n", "m", "q", "order", "modulus", "_group", "_modint",
        "_exp", "_log", "_zech", "_half",
        "add", "neg", "mul", "pow", "__weakref__",
    )

    def __init__(self, p: int, s: int, n: int, modulus: Sequence[int]):
        for name, v in (("p", p), ("s", s), ("n", n)):
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p ** (s * n) > 1 << CAPACITY_BITS:
            raise TooLarge(f"{p}^{s * n} exceeds 2^{CAPACITY_BITS}")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != s * n + 1 or any(not 0 <= c < p for c in modulus):
            raise ValueError(f"modulus must have {s * n + 1} coefficients in [0, {p})")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is not monic irreducible over GF({p})")
        self.p, self.s, self.n = p, s, n
        self.m = s * n
        self.q = p**s
        self.order = p**self.m
        self.modulus = modulus
        self._group = self.order - 1
        self._modint = sum(c << i for i, c in enumerate(modulus)) if p == 2 else None
        self._exp = self._log = self._zech = None
        self._half = None

        if p == 2:
            self.add = int.__xor__
            self.neg = _identity
        else:
            self.add = self._add_digits
            self.neg = self._neg_digits
        self.mul = self._mul_slow
        self.pow = self._pow_slow
        if self.order <= TABLE_LIMIT:
            self._build_tables()

    # -- table construction -----------------------------------------------------

    def _build_tables(self) -> None:
        N1 = self._group
        g = self._find_generator()
        exp = [0] * (2 * N1)
        log = [0] * self.order
        for k, x in enumerate(self._powers(g, N1)):
            exp[k] = x
            log[x] = k
        exp[N1:] = exp[:N1]
        self._exp, self._log = exp, log
        self.mul = self._mul_table
        self.pow = self._pow_table
        if self.p != 2:
            p = self.p
            zech = [-1] * N1
            for k in range(N1):
                y = exp[k]
                y1 = y - y % p + (y % p + 1) % p
                zech[k] = log[y1] if y1 else -1
            self._zech = zech
            self._half = N1 // 2  # -1 = g^(N1/2) in odd characteristic
            self.add = self._add_zech
            self.neg = self._neg_table

    def _powers(self, g: int, count: int) -> Iterator[int]:
        """``g^0, g^1, ...`` with digit-list arithmetic (odd ``p``)."""
        if self.p == 2:
            x = 1
            for _ in range(count):
                yield x
                x = self._mul_slow(x, g)
            return
        p, m, f = self.p, self.m, self.modulus
        terms = [(i, c) for i, c in enumerate(self.coeffs(g)) if c]
        x = [1] + [0] * (m - 1)
        for _ in range(count):
            yield self._pack(x)
            prod = [0] * (2 * m)
            for i, c in terms:
                for j, v in enumerate(x):
                    if v:
                        prod[i + j] += c * v
            x = _poly_mod(prod, f, p)
            x += [0] * (m - len(x))

    def _find_generator(self) -> int:
        N1 = self._group
        if N1 == 1:
            return 1
        cofactors = [N1 // r for r in prime_factors(N1)]
        for g in range(2, self.order):
            if all(self._pow_slow(g, c) != 1 for c in cofactors):
                return g
        return 1 if self.order == 2 else self.p - 1  # pragma: no cover

    # -- digit helpers ------------------------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Coefficient vector of ``x`` over GF(p), little-endian, length ``s*n``."""
        p = self.p
        out = []
        for _ in range(self.m):
            x, r = divmod(x, p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.m:
            raise DimensionMismatch(f"expected {self.m} coefficients, got {len(coeffs)}")
        x = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise OutOfRange(f"coefficient {c} not in [0, {self.p})")
            x = x * self.p + c
        return x

    def _pack(self, digits: Sequence[int]) -> int:
        x = 0
        p = self.p
        for c in reversed(digits):
            x = x * p + c
        return x

    # -- slow arithmetic ------------------------------------------------------------

    def _add_digits(self, x: int, y: int) -> int:
        p = self.p
        r, place = 0, 1
        while x or y:
            x, a = divmod(x, p)
            y, b = divmod(y, p)
            r += (a + b) % p * place
            place *= p
        return r

    def _neg_digits(self, x: int) -> int:
        p = self.p
        r, place = 0, 1
        while x:
            x, a = divmod(x, p)
            if a:
                r += (p - a) * place
            place *= p
        return r

    def _mul_slow(self, x: int, y: int) -> int:
        if self.p == 2:
            return self._reduce2(_clmul(x, y))
        a, b = self.coeffs(x), self.coeffs(y)
        return self._pack(_poly_mulmod(list(a), list(b), self.modulus, self.p))

    def _reduce2(self, r: int) -> int:
        m, f = self.m, self._modint
        for i in range(r.bit_length() - 1, m - 1, -1):
            if r >> i & 1:
                r ^= f << (i - m)
        return r

    def _square2(self, x: int) -> int:
        r, shift = 0, 0
        while x:
            r |= _SPREAD[x & 255] << shift
            x >>= 8
            shift += 16
        return self._reduce2(r)

    def _pow_slow(self, x: int, e: int) -> int:
        e = self._reduce_exponent(x, e)
        if e is None:
            return 0
        result = 1
        square = self._square2 if self.p == 2 else (lambda z: self._mul_slow(z, z))
        for bit in bin(e)[2:]:
            result = square(result)
            if bit == "1":
                result = self._mul_slow(result, x)
        return result

    def _reduce_exponent(self, x: int, e: int) -> int | None:
        """Exponent to use for ``x**e``; ``None`` means the answer is zero."""
        if x == 0:
            if e < 0:
                raise DivisionByZero("0 raised to a negative power")
            return 0 if e == 0 else None
        return e % self._group

    # -- table arithmetic ---------------------------------------------------------

    def _mul_table(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def _pow_table(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise DivisionByZero("0 raised to a negative power")
            return 1 if e == 0 else 0
        return self._exp[self._log[x] * e % self._group]

    def _add_zech(self, x: int, y: int) -> int:
        if x == 0:
            return y
        if y == 0:
            return x
        lx = self._log[x]
        z = self._zech[(self._log[y] - lx) % self._group]
        if z < 0:
            return 0
        return self._exp[lx + z]

    def _neg_table(self, x: int) -> int:
        if x == 0:
            return 0
        return self._exp[self._log[x] + self._half]

    # -- public arithmetic --------------------------------------------------------

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero")
        if self._log is not None:
            return self._exp[self._group - self._log[x]]
        return self.pow(x, self._group - 1)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def frobenius_q(self, x: int, j: int = 1) -> int:
        """``x ** (q ** j)``; the map is the identity when ``n`` divides ``j``."""
        j %= self.n
        if j == 0 or x == 0:
            return x
        if self.p == 2 and self._log is None:
            for _ in range(self.s * j):
                x = self._square2(x)
            return x
        return self.pow(x, self.q**j)

    def norm_rel(self, x: int) -> int:
        """Relative norm down to GF(q): ``x ** ((q^n - 1)/(q - 1))``."""
        if x == 0:
            return 0
        return self.pow(x, self._group // (self.q - 1))

    def minus_one_power(self, k: int) -> int:
        if self.p == 2 or k % 2 == 0:
            return 1
        return self.p - 1

    # -- encoding -------------------------------------------------------------------

    def check(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.order:
            raise DimensionMismatch(f"{x!r} is not an element code of {self}")
        return x

    def encode(self, x: int) -> int:
        return self.check(x)

    def decode(self, i: int) -> int:
        if not isinstance(i, int) or not 0 <= i < self.order:
            raise OutOfRange(f"code {i!r} outside [0, {self.order})")
        return i

    def elements(self, start: int = 0, stop: int | None = None) -> Iterator[int]:
        """Elements in increasing code order; a sub-range partitions the work."""
        return iter(range(start, self.order if stop is None else stop))

    def nonzero(self) -> Iterator[int]:
        return iter(range(1, self.order))

    def random_element(self, rng: random.Random, nonzero: bool = False) -> int:
        return rng.randrange(1 if nonzero else 0, self.order)

    @property
    def gen(self) -> int:
        """The class of ``t`` in GF(p)[t]/(f)."""
        if self.m == 1:
            return -self.modulus[0] % self.p
        return self.p

    def to_json(self) -> dict:
        return {"p": self.p, "s": self.s, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FieldSpec":
        return cls(int(data["p"]), int(data["s"]), int(data["n"]), data["modulus"])

    # -- dunder -------------------------------------------------------------------

    def __reduce__(self):
        return FieldSpec, (self.p, self.s, self.n, self.modulus)

    def _key(self):
        return (self.p, self.s, self.n, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, s={self.s}, n={self.n}, modulus={list(self.modulus)})"

    def __str__(self) -> str:
        return f"GF({self.p}^{self.s}^{self.n})"


def _identity(x: int) -> int:
    return x


def _clmul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


@functools.lru_cache(maxsize=None)
def make_field(p: int, s: int = 1, n: int = 1) -> FieldSpec:
    """Canonical GF((p^s)^n): the modulus is the smallest monic irreducible of
    degree ``s*n`` when candidates are ordered by the integer with base-``p``
    digits ``(c_0, ..., c_{sn-1})``.
    """
    for name, v in (("p", p), ("s", s), ("n", n)):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p ** (s * n) > 1 << CAPACITY_BITS:
        raise TooLarge(f"{p}^{s * n} exceeds 2^{CAPACITY_BITS}")
    return FieldSpec(p, s, n, _lex_smallest_irreducible(p, s * n))
