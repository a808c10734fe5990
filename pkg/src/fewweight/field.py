"""Table-driven arithmetic in the prime-power field F_{p^m} (p odd).

Elements are plain integers in ``[0, q)``: digit ``j`` of the base-``p``
expansion is the coefficient of ``x^j`` in the polynomial basis.  Products go
through discrete-log / antilog tables built from a primitive modulus, so the
residue of ``x`` is always the generator ``g`` with ``log(g) == 1``.

All element-wise methods accept either Python ints or numpy integer arrays.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from sympy import factorint, isprime

DEFAULT_MAX_ORDER = 1 << 22


class FieldError(ValueError):
    """Invalid field parameters (bad characteristic, modulus or size)."""


def legendre(c: int, p: int) -> int:
    """Quadratic character of F_p, extended by 0 at 0."""
    c %= p
    if c == 0:
        return 0
    return 1 if pow(c, (p - 1) // 2, p) == 1 else -1


# -- polynomials over F_p, coefficient lists low degree first ---------------

def _polymulmod(u, v, f, p):
    m = len(f) - 1
    prod = [0] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                prod[i + j] = (prod[i + j] + ui * vj) % p
    # f is monic
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k]
        if c:
            for j in range(m + 1):
                prod[k - m + j] = (prod[k - m + j] - c * f[j]) % p
    out = prod[:m]
    return out + [0] * (m - len(out))


def _polypowmod(base, e, f, p):
    m = len(f) - 1
    result = [1] + [0] * (m - 1)
    while e:
        if e & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        e >>= 1
    return result


def is_primitive_polynomial(modulus, p: int) -> bool:
    """True iff ``modulus`` (monic, low-first) has the residue of x of order p^m - 1.

    Order p^m - 1 forces the quotient ring to be a field, so irreducibility
    comes for free.
    """
    f = [int(c) % p for c in modulus]
    m = len(f) - 1
    if m < 1 or f[-1] != 1 or f[0] == 0:
        return False
    order = p**m - 1
    one = [1] + [0] * (m - 1)
    x = [0, 1] + [0] * (m - 2) if m > 1 else [(-f[0]) % p]
    if _polypowmod(x, order, f, p) != one:
        return False
    return all(_polypowmod(x, order // r, f, p) != one for r in factorint(order))


def primitive_polynomials(p: int, m: int):
    """Yield monic primitive polynomials of degree m in lexicographic order.

    Coefficient lists are compared low degree first, so ``[2, 1, 1]``
    (x^2 + x + 2) precedes ``[2, 2, 1]``.
    """
    for low in itertools.product(range(p), repeat=m):
        f = list(low) + [1]
        if is_primitive_polynomial(f, p):
            yield f


@dataclass(frozen=True)
class FieldParams:
    p: int
    m: int
    modulus: tuple

    @property
    def q(self) -> int:
        return self.p**self.m


class FieldCtx:
    """Immutable lookup tables for F_{p^m}; build with :func:`build_field`."""

    def __init__(self, params: FieldParams):
        self.params = params
        self.p = p = params.p
        self.m = m = params.m
        self.q = q = p**m
        self.order = q - 1
        self.modulus = params.modulus
        self._pows = p ** np.arange(m, dtype=np.int64)

        # digits[v, j] = coefficient of x^j in v
        idx = np.arange(q, dtype=np.int64)
        self.digits = (idx[:, None] // self._pows[None, :]) % p

        antilog = np.empty(q - 1, dtype=np.int64)
        low = [(-c) % p for c in params.modulus[:m]]  # x^m == -f_low
        cur = [1] + [0] * (m - 1)
        for k in range(q - 1):
            antilog[k] = sum(c * int(w) for c, w in zip(cur, self._pows))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c + top * r) % p for c, r in zip(cur, low)]
        log = np.full(q, -1, dtype=np.int64)
        log[antilog] = np.arange(q - 1)
        if (log[1:] < 0).any():
            raise FieldError(f"modulus {list(params.modulus)} is not primitive")
        self.antilog = antilog
        self.log = log
        self.g = int(antilog[1 % (q - 1)])

        # Tr is F_p-linear: tabulate it on the basis x^j, then extend
        basis_tr = np.array([self._trace_direct(int(self._pows[j])) for j in range(m)])
        self.trace_tab = (self.digits @ basis_tr) % p
        eta = np.zeros(q, dtype=np.int64)
        eta[antilog] = np.where(np.arange(q - 1) % 2 == 0, 1, -1)
        self.eta_tab = eta
        for arr in (self.digits, self.antilog, self.log, self.trace_tab, self.eta_tab):
            arr.setflags(write=False)

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    # -- element arithmetic -------------------------------------------------

    def _from_digits(self, dig):
        return (np.asarray(dig) % self.p) @ self._pows

    def _out(self, v):
        return int(v) if np.ndim(v) == 0 else v

    def add(self, u, v):
        return self._out(self._from_digits(self.digits[u] + self.digits[v]))

    def sub(self, u, v):
        return self._out(self._from_digits(self.digits[u] - self.digits[v]))

    def neg(self, v):
        return self._out(self._from_digits(-self.digits[v]))

    def scale(self, c, v):
        """Multiply by the F_p scalar ``c``."""
        return self._out(self._from_digits(np.asarray(c)[..., None] * self.digits[v]))

    def mul(self, u, v):
        u = np.asarray(u)
        v = np.asarray(v)
        k = (self.log[u] + self.log[v]) % self.order
        out = np.where((u == 0) | (v == 0), 0, self.antilog[k])
        return self._out(out)

    def inv(self, v):
        v = np.asarray(v)
        if (v == 0).any():
            raise ZeroDivisionError("inverse of zero in F_q")
        return self._out(self.antilog[(-self.log[v]) % self.order])

    def power(self, v, e: int):
        v = np.asarray(v)
        if e == 0:
            return self._out(np.ones_like(v))
        if e < 0:
            v = np.asarray(self.inv(v))
            e = -e
        k = (self.log[v] * e) % self.order
        return self._out(np.where(v == 0, 0, self.antilog[k]))

    def square(self, v):
        return self.power(v, 2)

    def exp(self, k):
        """g**k."""
        return self._out(self.antilog[np.asarray(k) % self.order])

    def embed(self, y):
        """F_p -> F_q: constants are exactly the elements below p."""
        return self._out(np.asarray(y) % self.p)

    def frobenius(self, v):
        return self.power(v, self.p)

    # -- characters ---------------------------------------------------------

    def trace(self, v):
        return self._out(self.trace_tab[v])

    def eta(self, v):
        return self._out(self.eta_tab[v])

    def _trace_direct(self, v: int) -> int:
        acc = 0
        w = v
        for _ in range(self.m):
            acc = self.add(acc, w)
            w = self.frobenius(w)
        if acc >= self.p:
            raise FieldError("trace left the prime field; tables are inconsistent")
        return acc

    def trace_direct(self, v: int) -> int:
        """Trace as the literal sum v + v^p + ... + v^(p^(m-1))."""
        return self._trace_direct(int(v))

    @cached_property
    def elements(self):
        return np.arange(self.q, dtype=np.int64)

    @cached_property
    def trace_of_square(self):
        """Tr(v^2) for every v."""
        t = self.trace_tab[self.square(self.elements)]
        t.setflags(write=False)
        return t

    @cached_property
    def trace_product(self):
        """q x q matrix with entry [u, v] = Tr(u*v)."""
        e = self.elements
        return self.trace_tab[self.mul(e[:, None], e[None, :])]

    # -- cyclotomy ----------------------------------------------------------

    def cyclotomic_class(self, N: int, i: int):
        if N < 1 or self.order % N:
            raise FieldError(f"N={N} does not divide q-1={self.order}")
        h = self.order // N
        return self.exp(N * np.arange(h) + i)

    def cyclotomic_number(self, N: int, i: int, j: int) -> int:
        """Number of x in C_i with x + 1 in C_j, by enumeration of C_i."""
        xs = self.cyclotomic_class(N, i)
        ys = self.add(xs, np.ones_like(xs))
        ys = ys[ys != 0]
        return int(np.count_nonzero(self.log[ys] % N == j % N))


def cyclotomic_number_order2(q: int, i: int, j: int) -> int:
    """Closed form of the order-2 cyclotomic numbers (i, j) for q = 2h + 1."""
    h = (q - 1) // 2
    i, j = i % 2, j % 2
    if h % 2 == 0:
        return (h - 2) // 2 if (i, j) == (0, 0) else h // 2
    return (h + 1) // 2 if (i, j) == (0, 1) else (h - 1) // 2


def build_field(p: int, m: int, modulus=None, max_order: int = DEFAULT_MAX_ORDER) -> FieldCtx:
    """Construct F_{p^m}.

    Without ``modulus`` the lexicographically smallest monic primitive
    polynomial is used, which makes the tables reproducible run to run.
    """
    if not isinstance(p, (int, np.integer)) or p < 3 or not isprime(int(p)):
        raise FieldError(f"p must be an odd prime, got {p!r}")
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise FieldError(f"m must be a positive integer, got {m!r}")
    p, m = int(p), int(m)
    if p**m > max_order:
        raise FieldError(f"q = {p}^{m} exceeds table cap {max_order}")
    if modulus is None:
        modulus = next(primitive_polynomials(p, m))
    else:
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != m + 1 or not is_primitive_polynomial(modulus, p):
            raise FieldError(f"{modulus} is not a monic primitive polynomial of degree {m}")
    return FieldCtx(FieldParams(p, m, tuple(modulus)))
