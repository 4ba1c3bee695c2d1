"""Exact arithmetic in GF(p^n).

Elements are integer codes in 0..q-1: an element with coordinates
(c_0, ..., c_{n-1}) in the power basis 1, alpha, ..., alpha^{n-1} has
code sum(c_i * p^i).  Alongside the coefficient form we keep a full
discrete-log table for a fixed generator, so multiplication, inversion,
Frobenius powers and the quadratic character are table lookups.  The two
representations convert losslessly.

All tables are built once at construction; a FieldCtx is immutable and
safe to share between workers.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass

import numpy as np

DEFAULT_Q_CEILING = 3**13
CEILING_ENV_VAR = "TRIWEIL_CEILING"


class FieldError(ValueError):
    """Invalid field parameters or out-of-budget field size."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    i = 2
    while i * i <= m:
        if m % i == 0:
            return False
        i += 1
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, by trial division (m is small here)."""
    out = []
    i = 2
    while i * i <= m:
        if m % i == 0:
            out.append(i)
            while m % i == 0:
                m //= i
        i += 1
    if m > 1:
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# Polynomial arithmetic over F_p, little-endian coefficient lists.
# Used only during construction; bulk arithmetic goes through the log tables.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _reduce(a: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    # mod is monic; fold x^k for k >= deg(mod) down using x^n = -sum mod[j] x^j
    n = len(mod) - 1
    a = list(a)
    for k in range(len(a) - 1, n - 1, -1):
        c = a[k]
        if c:
            a[k] = 0
            for j in range(n):
                a[k - n + j] = (a[k - n + j] - c * mod[j]) % p
    return _trim(a[:n])


def _mulmod(a: list[int], b: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _reduce(res, mod, p)


def _powmod(base: list[int], e: int, mod: tuple[int, ...], p: int) -> list[int]:
    result = [1]
    b = _reduce(base, mod, p)
    while e:
        if e & 1:
            result = _mulmod(result, b, mod, p)
        b = _mulmod(b, b, mod, p)
        e >>= 1
    return result


def _rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    while a and len(a) - 1 >= db:
        c = (a[-1] * inv) % p
        k = len(a) - 1 - db
        for j in range(db + 1):
            a[k + j] = (a[k + j] - c * b[j]) % p
        a = _trim(a)
    return a


def _polygcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _rem(a, b, p)
    return a


def is_irreducible(mod: tuple[int, ...], p: int) -> bool:
    """Monic mod is irreducible iff x^(p^n) = x mod it and, for every prime
    l | n, gcd(x^(p^(n/l)) - x, mod) is constant."""
    n = len(mod) - 1
    if n == 1:
        return True
    x = [0, 1]
    if _powmod(x, p**n, mod, p) != x:
        return False
    for ell in prime_factors(n):
        xk = _powmod(x, p ** (n // ell), mod, p)
        diff = [0] * max(len(xk), 2)
        for i, c in enumerate(xk):
            diff[i] = c
        diff[1] = (diff[1] - 1) % p
        g = _polygcd(diff, list(mod), p)
        if len(g) > 1:
            return False
    return True


def code_digits(code: int, p: int, n: int) -> tuple[int, ...]:
    digs = []
    for _ in range(n):
        digs.append(code % p)
        code //= p
    return tuple(digs)


def digits_code(digs, p: int) -> int:
    code = 0
    for d in reversed(list(digs)):
        code = code * p + d
    return code


def _smallest_modulus(p: int, n: int) -> tuple[int, ...]:
    # monic degree-n polynomials ordered by their packed lower-coefficient code
    for code in range(p**n):
        mod = code_digits(code, p, n) + (1,)
        if is_irreducible(mod, p):
            return mod
    raise FieldError(f"no irreducible of degree {n} over F_{p}")  # unreachable


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Immutable description of GF(p^n) with precomputed tables."""

    p: int
    n: int
    q: int
    modulus: tuple[int, ...]  # monic, little-endian, length n+1
    gen: int  # code of the fixed multiplicative generator
    exp: np.ndarray  # exp[i] = code of gen^i, length q-1
    log: np.ndarray  # log[code] = i; log[0] = -1
    trace_table: np.ndarray  # absolute trace per code, values in 0..p-1

    # -- representation ----------------------------------------------------

    def digits(self, x: int) -> tuple[int, ...]:
        return code_digits(x, self.p, self.n)

    def from_digits(self, digs) -> int:
        return digits_code(digs, self.p)

    def index(self, x: int) -> int:
        """Discrete log of a nonzero element."""
        if x == 0:
            raise FieldError("zero has no discrete log")
        return int(self.log[x])

    def from_index(self, i: int) -> int:
        return int(self.exp[i % (self.q - 1)])

    def elements(self):
        return range(self.q)

    # -- arithmetic --------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        p = self.p
        s, mult = 0, 1
        while x or y:
            s += ((x + y) % p) * mult
            x //= p
            y //= p
            mult *= p
        return s

    def neg(self, x: int) -> int:
        p = self.p
        s, mult = 0, 1
        while x:
            s += (-x % p) * mult
            x //= p
            mult *= p
        return s

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.exp[(int(self.log[x]) + int(self.log[y])) % (self.q - 1)])

    def inv(self, x: int) -> int:
        if x == 0:
            raise FieldError("division by zero")
        return int(self.exp[-int(self.log[x]) % (self.q - 1)])

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldError("division by zero")
            return 0
        return int(self.exp[(int(self.log[x]) * e) % (self.q - 1)])

    def frobenius(self, x: int, r: int) -> int:
        """x^(p^r), via index multiplication."""
        if r < 0:
            raise FieldError("negative Frobenius power")
        if x == 0:
            return 0
        i = (int(self.log[x]) * pow(self.p, r, self.q - 1)) % (self.q - 1)
        return int(self.exp[i])

    def trace(self, x: int) -> int:
        return int(self.trace_table[x])

    def eta(self, x: int) -> int:
        """Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise."""
        if self.p == 2:
            raise FieldError("quadratic character needs odd characteristic")
        if x == 0:
            return 0
        return 1 if int(self.log[x]) % 2 == 0 else -1


def default_ceiling() -> int:
    env = os.environ.get(CEILING_ENV_VAR)
    return int(env) if env else DEFAULT_Q_CEILING


def build_field(p: int, n: int, *, ceiling: int | None = None) -> FieldCtx:
    """Construct GF(p^n) deterministically.

    The modulus is the monic irreducible of degree n with the smallest
    packed coefficient code; the generator is the full-order element with
    the smallest code.  Both choices only affect internal representation:
    spectra, counts and weights are representation-independent.
    """
    if not is_prime(p):
        raise FieldError(f"p = {p} is not prime")
    if n < 1:
        raise FieldError(f"extension degree must be >= 1, got {n}")
    q = p**n
    limit = ceiling if ceiling is not None else default_ceiling()
    if q > limit:
        raise FieldError(
            f"q = {p}^{n} = {q} exceeds the table ceiling {limit}; "
            f"raise it via ceiling= or ${CEILING_ENV_VAR}"
        )
    return _build_field(p, n)


@functools.lru_cache(maxsize=None)
def _build_field(p: int, n: int) -> FieldCtx:
    q = p**n
    modulus = _smallest_modulus(p, n)

    qm1_factors = prime_factors(q - 1)

    def has_full_order(code: int) -> bool:
        digs = list(code_digits(code, p, n))
        for ell in qm1_factors:
            if digits_code(_powmod(digs, (q - 1) // ell, modulus, p), p) == 1:
                return False
        return True

    gen = next(c for c in range(1, q) if has_full_order(c))

    exp = np.empty(q - 1, dtype=np.int64)
    gen_digits = list(code_digits(gen, p, n))
    cur = [1]
    for i in range(q - 1):
        exp[i] = digits_code(cur, p)
        cur = _mulmod(cur, gen_digits, modulus, p)
    if cur != [1]:
        raise FieldError("generator power cycle did not close")  # defensive

    log = np.full(q, -1, dtype=np.int64)
    log[exp] = np.arange(q - 1)

    trace_table = _trace_table(p, n, q, modulus, exp, log)

    return FieldCtx(
        p=p, n=n, q=q, modulus=modulus, gen=gen,
        exp=exp, log=log, trace_table=trace_table,
    )


def _trace_table(p, n, q, modulus, exp, log) -> np.ndarray:
    if n == 1:
        return np.arange(q, dtype=np.int64) % p
    # Tr is F_p-linear: evaluate it on the power basis, then extend by digits.
    qm1 = q - 1
    basis_tr = []
    for j in range(n):
        code = p**j  # alpha^j
        acc_digits = [0] * n
        for i in range(n):
            fr = int(exp[(int(log[code]) * pow(p, i, qm1)) % qm1])
            fd = code_digits(fr, p, n)
            acc_digits = [(a + b) % p for a, b in zip(acc_digits, fd)]
        if any(acc_digits[1:]):
            raise FieldError("trace left the prime field")  # defensive
        basis_tr.append(acc_digits[0])
    codes = np.arange(q, dtype=np.int64)
    tr = np.zeros(q, dtype=np.int64)
    for j in range(n):
        tr += (codes // p**j) % p * basis_tr[j]
    return tr % p
