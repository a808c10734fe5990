"""Quadratic Gauss sums and the character-sum identities built on them.

Every closed form here has a brute-force counterpart (suffix
``_bruteforce``) that evaluates the defining sum numerically with
``zeta_p = exp(2*pi*i/p)``.  Closed forms are exact :class:`AlgebraicScalar`
values (or ints for counts); oracles are Python ``complex`` or ``int``.

Notation: ``G`` is the quadratic Gauss sum of F_q, ``Gb`` the one of F_p,
``eta_bar`` the Legendre symbol.  Arguments named ``c*`` are F_p values given
as ints in ``[0, p)``; ``xi``, ``a``, ``b`` are field elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .field import FieldCtx, legendre
from .scalar import AlgebraicScalar


# -- Gauss sums --------------------------------------------------------------

@lru_cache(maxsize=None)
def gauss_sum_exact(p: int, m: int) -> AlgebraicScalar:
    """(-1)^(m-1) * i^((p-1)^2 m / 4) * p^(m/2); the m = 1 value is Gb."""
    sign = -1 if (m - 1) % 2 else 1
    unit = AlgebraicScalar.i_power(p, (p - 1) ** 2 * m // 4)
    return sign * unit * AlgebraicScalar.p_half_power(p, m)


def gauss_sum_bruteforce(ctx: FieldCtx) -> complex:
    """sum over x != 0 of eta(x) * zeta_p^Tr(x)."""
    z = zeta_table(ctx.p)
    x = ctx.elements[1:]
    return complex(np.sum(ctx.eta_tab[x] * z[ctx.trace_tab[x]]))


@lru_cache(maxsize=None)
def zeta_table(p: int) -> np.ndarray:
    """zeta_p^t for t in [0, p)."""
    t = np.exp(2j * np.pi * np.arange(p) / p)
    t.setflags(write=False)
    return t


@lru_cache(maxsize=None)
def inner_sum_table(p: int) -> np.ndarray:
    """S[t] = sum over x in F_p^* of zeta_p^(x t), summed numerically."""
    z = zeta_table(p)
    x = np.arange(1, p)
    s = np.array([np.sum(z[(x * t) % p]) for t in range(p)])
    s.setflags(write=False)
    return s


class _Consts:
    """G, Gb and the products that recur in every table."""

    def __init__(self, p, m):
        self.p, self.m = p, m
        self.G = gauss_sum_exact(p, m)
        self.Gb = gauss_sum_exact(p, 1)
        self.GGb = self.G * self.Gb
        self.G2Gb2 = self.GGb * self.GGb
        self.pm = p**m
        self.even = m % 2 == 0

    def pw(self, k):
        """p**k as an exact rational (k may be negative)."""
        return Fraction(self.p) ** k


@lru_cache(maxsize=None)
def consts(p: int, m: int) -> _Consts:
    return _Consts(p, m)


def _parity(m):
    return "even m" if m % 2 == 0 else "odd m"


# -- quadratic polynomial sums -----------------------------------------------

@dataclass(frozen=True)
class QuadSum:
    closed: complex
    direct: complex
    shift: int  # Tr(a0 - a1^2 / (4 a2)), the exponent of the leading character value
    sign: int   # eta(a2)

    @property
    def match(self) -> bool:
        return abs(self.closed - self.direct) < 1e-6 * (1 + abs(self.closed))


def quad_sum(ctx: FieldCtx, a2: int, a1: int, a0: int) -> QuadSum:
    """sum over x in F_q of chi(a2 x^2 + a1 x + a0), closed form and direct sum."""
    if a2 == 0:
        raise ValueError("leading coefficient must be nonzero")
    four_a2 = ctx.mul(ctx.embed(4), a2)
    t = ctx.trace(ctx.sub(a0, ctx.mul(ctx.square(a1), ctx.inv(four_a2))))
    sign = ctx.eta(a2)
    closed = zeta_table(ctx.p)[t] * sign * complex(gauss_sum_exact(ctx.p, ctx.m))
    x = ctx.elements
    f = ctx.add(ctx.add(ctx.mul(a2, ctx.square(x)), ctx.mul(a1, x)), np.full_like(x, a0))
    direct = complex(np.sum(zeta_table(ctx.p)[ctx.trace_tab[f]]))
    return QuadSum(complex(closed), direct, int(t), int(sign))


# -- n_c = #{v : Tr(v^2) = c} ------------------------------------------------

def n_c_case(m: int, c: int) -> str:
    return f"{_parity(m)}, c{'=' if c == 0 else '≠'}0"


def n_c(ctx: FieldCtx, c: int) -> int:
    k = consts(ctx.p, ctx.m)
    p, m, c = ctx.p, ctx.m, c % ctx.p
    if k.even:
        v = k.pw(m - 1) + k.pw(-1) * (p - 1) * k.G if c == 0 else k.pw(m - 1) - k.pw(-1) * k.G
    else:
        v = AlgebraicScalar(p, k.pw(m - 1))
        if c:
            v = v + k.pw(-1) * legendre(-c, p) * k.GGb
    return int(v)


def n_c_bruteforce(ctx: FieldCtx, c: int) -> int:
    return int(np.count_nonzero(ctx.trace_of_square == c % ctx.p))


# -- K_xi --------------------------------------------------------------------

def _xi_case(ctx, xi):
    t = ctx.trace(ctx.square(xi))
    return t, f"{_parity(ctx.m)}, Tr(ξ²){'=' if t == 0 else '≠'}0"


def k_xi_case(ctx: FieldCtx, xi: int) -> str:
    return _xi_case(ctx, xi)[1]


def k_xi(ctx: FieldCtx, xi: int) -> AlgebraicScalar:
    if xi == 0:
        raise ValueError("xi must be nonzero")
    k = consts(ctx.p, ctx.m)
    p = ctx.p
    t, _ = _xi_case(ctx, xi)
    if k.even:
        return k.G * (p - 1) ** 2 if t == 0 else -k.G * (p - 1)
    if t == 0:
        return AlgebraicScalar(p, 0)
    return legendre(-t, p) * (p - 1) * k.GGb


def k_xi_bruteforce(ctx: FieldCtx, xi: int) -> complex:
    s = inner_sum_table(ctx.p)
    d = ctx.elements
    return complex(np.sum(s[ctx.trace_of_square] * s[ctx.trace_tab[ctx.mul(xi, d)]]))


# -- N_xi --------------------------------------------------------------------

def n_xi(ctx: FieldCtx, xi: int) -> int:
    if xi == 0:
        raise ValueError("xi must be nonzero")
    k = consts(ctx.p, ctx.m)
    p, m = ctx.p, ctx.m
    t, _ = _xi_case(ctx, xi)
    base = AlgebraicScalar(p, k.pw(m - 2))
    if k.even:
        v = base + k.pw(-1) * (p - 1) * k.G if t == 0 else base
    else:
        v = base if t == 0 else base + k.pw(-2) * legendre(-t, p) * (p - 1) * k.GGb
    return int(v)


n_xi_case = k_xi_case


def n_xi_bruteforce(ctx: FieldCtx, xi: int) -> int:
    d = ctx.elements
    hit = (ctx.trace_of_square == 0) & (ctx.trace_tab[ctx.mul(xi, d)] == 0)
    return int(np.count_nonzero(hit))


# -- N(c1, c2) ---------------------------------------------------------------

def _zero_pattern(*cs):
    return "".join("0" if c == 0 else "*" for c in cs)


def n2_case(m: int, c1: int, c2: int) -> str:
    return f"{_parity(m)}, (c1,c2)~{_zero_pattern(c1, c2)}"


def n2(ctx: FieldCtx, c1: int, c2: int) -> int:
    k = consts(ctx.p, ctx.m)
    p, m = ctx.p, ctx.m
    c1, c2 = c1 % p, c2 % p
    G, GGb = k.G, k.GGb
    if not k.even:
        v = AlgebraicScalar(p, k.pw(2 * m - 2))
        if c1:
            v = v + k.pw(m - 2) * legendre(-c1, p) * GGb
        if c2:
            v = v + k.pw(m - 2) * legendre(-c2, p) * GGb
        if c1 and c2:
            v = v + k.pw(-2) * legendre(c1 * c2, p) * k.G2Gb2
        return int(v)
    if c1 == 0 and c2 == 0:
        v = (k.pw(m - 1) + k.pw(-1) * (p - 1) * G) ** 2
    elif c1 == 0 or c2 == 0:
        v = k.pw(2 * m - 2) + k.pw(m - 2) * (p - 2) * G - k.pw(-2) * (p - 1) * G * G
    else:
        v = (k.pw(m - 1) - k.pw(-1) * G) ** 2
    return int(v)


def n2_bruteforce(ctx: FieldCtx, c1: int, c2: int) -> int:
    t = ctx.trace_of_square
    hit = (t[:, None] == c1 % ctx.p) & (t[None, :] == c2 % ctx.p)
    return int(np.count_nonzero(hit))


# -- L_j ---------------------------------------------------------------------

def l_j(p: int, j: int) -> int:
    if j == 1:
        return (p - 1) ** 2 * (p - 3) // 2
    if j == -1:
        return (p - 1) ** 3 // 2
    raise ValueError("j must be 1 or -1")


def l_j_bruteforce(p: int, j: int) -> int:
    return sum(
        1
        for c1 in range(1, p)
        for c2 in range(1, p)
        for c3 in range(1, p)
        if legendre(c3 * c3 - c1 * c2, p) == j
    )


# -- Psi_1, Psi_2, Psi_3: sums over pairs (a, b) -----------------------------

@lru_cache(maxsize=8)
def pair_histogram(ctx: FieldCtx) -> np.ndarray:
    """H[alpha, beta, gamma] = #{(a, b) : Tr(a^2), Tr(b^2), Tr(ab) = alpha, beta, gamma}."""
    p = ctx.p
    t = ctx.trace_of_square
    key = (t[:, None] * p + t[None, :]) * p + ctx.trace_product
    h = np.bincount(key.ravel(), minlength=p**3).reshape(p, p, p)
    h.setflags(write=False)
    return h


def psi1(ctx: FieldCtx, c3: int) -> int:
    return ctx.q * (ctx.p - 1) if c3 % ctx.p == 0 else -ctx.q


def psi1_bruteforce(ctx: FieldCtx, c3: int) -> complex:
    s = inner_sum_table(ctx.p)
    h = pair_histogram(ctx).sum(axis=(0, 1))
    g = np.arange(ctx.p)
    return complex(np.sum(h * s[(g - c3) % ctx.p]))


def psi2_case(c1: int, c3: int) -> str:
    return f"(c1,c3)~{_zero_pattern(c1, c3)}"


def psi2(ctx: FieldCtx, c1: int, c3: int) -> int:
    p, pm = ctx.p, ctx.q
    c1, c3 = c1 % p, c3 % p
    if c1 == 0 and c3 == 0:
        return pm * (p - 1) ** 2
    if c1 == 0 or c3 == 0:
        return -pm * (p - 1)
    return pm


def psi2_bruteforce(ctx: FieldCtx, c1: int, c3: int) -> complex:
    """sum over a, b of S(Tr(a^2) - c1) * S(Tr(ab) - c3)."""
    p = ctx.p
    s = inner_sum_table(p)
    h = pair_histogram(ctx).sum(axis=1)  # over beta
    r = np.arange(p)
    return complex(np.sum(h * s[(r - c1) % p][:, None] * s[(r - c3) % p][None, :]))


def psi3(ctx: FieldCtx, c2: int, c3: int) -> int:
    return psi2(ctx, c2, c3)


def psi3_bruteforce(ctx: FieldCtx, c2: int, c3: int) -> complex:
    p = ctx.p
    s = inner_sum_table(p)
    h = pair_histogram(ctx).sum(axis=0)  # over alpha
    r = np.arange(p)
    return complex(np.sum(h * s[(r - c2) % p][:, None] * s[(r - c3) % p][None, :]))


# -- Delta, rho, sigma: sums over F_p ----------------------------------------

def _disc_case(p, c1, c2, c3):
    e = legendre(c3 * c3 - c1 * c2, p)
    return e, {0: "c3²=c1c2", 1: "η̄(c3²-c1c2)=1", -1: "η̄(c3²-c1c2)=-1"}[e]


def _check_units(p, *cs):
    if any(c % p == 0 for c in cs):
        raise ValueError("arguments must be nonzero in F_p")


def delta_case(p: int, c1: int, c2: int, c3: int) -> str:
    return _disc_case(p, c1, c2, c3)[1]


def delta(p: int, c1: int, c2: int, c3: int) -> int:
    _check_units(p, c1, c2, c3)
    e, _ = _disc_case(p, c1, c2, c3)
    return {0: p + 1, 1: p * p + p + 1, -1: -p * p + p + 1}[e]


def _fp_quadruple_sum(p, c1, c2, c3, weight):
    """sum over c, x, y, z in F_p^* of
    zeta^(x(c - c1)) zeta^(-y c2) weight(c, y) zeta^(-z^2 c / (4y) - z c3)."""
    z_tab = zeta_table(p)
    r = np.arange(1, p)
    c, x, y, z = np.meshgrid(r, r, r, r, indexing="ij")
    inv4y = np.array([0] + [pow(4 * v, -1, p) for v in range(1, p)])[y]
    expo = x * (c - c1) - y * c2 - z * z * c * inv4y - z * c3
    return complex(np.sum(weight(c, y) * z_tab[expo % p]))


def delta_bruteforce(p: int, c1: int, c2: int, c3: int) -> complex:
    return _fp_quadruple_sum(p, c1, c2, c3, lambda c, y: 1)


def _leg_vec(p):
    return np.array([legendre(v, p) for v in range(p)])


def rho_case(p: int, c1: int, c2: int, c3: int) -> str:
    return "c3²=c1c2" if (c3 * c3 - c1 * c2) % p == 0 else "c3²≠c1c2"


def rho(p: int, c1: int, c2: int, c3: int) -> AlgebraicScalar:
    _check_units(p, c1, c2, c3)
    Gb = gauss_sum_exact(p, 1)
    e1, e2 = legendre(-c1, p), legendre(-c2, p)
    if (c3 * c3 - c1 * c2) % p == 0:
        return -(e1 + e2) * Gb + e1 * (p - 1) ** 2 * Gb
    return -(p + 1) * e2 * Gb - p * e1 * Gb


def rho_bruteforce(p: int, c1: int, c2: int, c3: int) -> complex:
    leg = _leg_vec(p)
    return _fp_quadruple_sum(p, c1, c2, c3, lambda c, y: leg[y % p])


sigma_case = rho_case


def sigma(p: int, c1: int, c2: int, c3: int) -> AlgebraicScalar:
    _check_units(p, c1, c2, c3)
    Gb = gauss_sum_exact(p, 1)
    if (c3 * c3 - c1 * c2) % p == 0:
        return (p * p - 2 * p - 1) * Gb
    return -(p + 1) * Gb - p * legendre(c1 * c2, p) * Gb


def sigma_bruteforce(p: int, c1: int, c2: int, c3: int) -> complex:
    leg = _leg_vec(p)
    return _fp_quadruple_sum(p, c1, c2, c3, lambda c, y: leg[(-c * y) % p])


# -- Psi_4 -------------------------------------------------------------------

def psi4_case(p: int, m: int, c1: int, c2: int, c3: int) -> str:
    c1, c2, c3 = c1 % p, c2 % p, c3 % p
    nz = sum(1 for c in (c1, c2, c3) if c)
    par = _parity(m)
    if m % 2 == 0:
        if nz == 0:
            return f"{par}, c1=c2=c3=0"
        if nz == 1:
            return f"{par}, exactly one ci≠0"
        if c3 == 0:
            return f"{par}, c1≠0, c2≠0, c3=0"
        if nz == 2:
            return f"{par}, c3≠0, exactly one of c1,c2 zero"
        return f"{par}, all ci≠0, {_disc_case(p, c1, c2, c3)[1]}"
    if c1 == 0 and c2 == 0:
        return f"{par}, c1=c2=0, c3{'=' if c3 == 0 else '≠'}0"
    if c1 == 0 or c2 == 0:
        who = "c2≠0, c1=0" if c1 == 0 else "c1≠0, c2=0"
        return f"{par}, {who}, c3{'=' if c3 == 0 else '≠'}0"
    if c3 == 0:
        return f"{par}, c1≠0, c2≠0, c3=0"
    return f"{par}, all ci≠0, {rho_case(p, c1, c2, c3)}"


def psi4(ctx: FieldCtx, c1: int, c2: int, c3: int) -> AlgebraicScalar:
    k = consts(ctx.p, ctx.m)
    p, pm, G = ctx.p, k.pm, k.G
    c1, c2, c3 = c1 % p, c2 % p, c3 % p
    case = psi4_case(p, ctx.m, c1, c2, c3)
    if k.even:
        base = (pm + G * (p - 2)) * G
        if case.endswith("c1=c2=c3=0"):
            return (p - 1) ** 2 * base
        if case.endswith("exactly one ci≠0"):
            return -(p - 1) * base
        if case.endswith("c1≠0, c2≠0, c3=0"):
            return base + legendre(-c1 * c2, p) * (pm * p - p * G) * G
        if case.endswith("exactly one of c1,c2 zero"):
            return base
        e, _ = _disc_case(p, c1, c2, c3)
        if e == 0:
            return G * (pm - 2 * G)
        if e == 1:
            return G * (p + 1) * (pm - G) - G * G
        return -G * (p - 1) * (pm - G) - G * G
    GGb, G2Gb2, inv_p = k.GGb, k.G2Gb2, Fraction(1, p)
    e1, e2 = legendre(-c1, p), legendre(-c2, p)
    if c1 == 0 and c2 == 0:
        if c3 == 0:
            return -inv_p * (p - 1) ** 2 * G2Gb2
        return inv_p * (p - 1) * G2Gb2
    if c1 == 0 or c2 == 0:
        e = e2 if c1 == 0 else e1
        inner = (e * pm + inv_p * GGb) * GGb
        return (p - 1) * inner if c3 == 0 else -inner
    if c3 == 0:
        return -(e1 + e2) * pm * GGb - (legendre(c1 * c2, p) + inv_p) * G2Gb2
    if (c3 * c3 - c1 * c2) % p == 0:
        return e1 * (p - 2) * pm * GGb + (p - 2 - inv_p) * G2Gb2
    return -(e1 + e2) * pm * GGb - (legendre(c1 * c2, p) + 1 + inv_p) * G2Gb2


def psi4_bruteforce(ctx: FieldCtx, c1: int, c2: int, c3: int) -> complex:
    """sum over (a, b) of S(alpha - c1) S(beta - c2) S(gamma - c3), grouped by
    the brute-force histogram of (alpha, beta, gamma)."""
    p = ctx.p
    s = inner_sum_table(p)
    r = np.arange(p)
    w = (s[(r - c1) % p][:, None, None] * s[(r - c2) % p][None, :, None]
         * s[(r - c3) % p][None, None, :])
    return complex(np.sum(pair_histogram(ctx) * w))


NAIVE_PSI4_LIMIT = 5_000_000


def psi4_naive(ctx: FieldCtx, c1: int, c2: int, c3: int) -> complex:
    """Literal five-fold sum over a, b, x, y, z; only for tiny fields."""
    p, q = ctx.p, ctx.q
    if q * q * (p - 1) ** 3 > NAIVE_PSI4_LIMIT:
        raise ValueError(f"naive five-fold sum is too large for q={q}")
    zt = zeta_table(p)
    e = ctx.elements
    a, b = np.meshgrid(e, e, indexing="ij")
    alpha = ctx.trace_tab[ctx.square(a)].astype(np.int64)
    beta = ctx.trace_tab[ctx.square(b)].astype(np.int64)
    gamma = ctx.trace_tab[ctx.mul(a, b)].astype(np.int64)
    total = 0j
    for x in range(1, p):
        for y in range(1, p):
            for z in range(1, p):
                expo = x * (alpha - c1) + y * (beta - c2) + z * (gamma - c3)
                total += complex(np.sum(zt[expo % p]))
    return total


# -- Omega_4 -----------------------------------------------------------------

def pair_invariants(ctx: FieldCtx, a, b):
    """(alpha, beta, gamma) = (Tr(a^2), Tr(b^2), Tr(ab)); works on arrays."""
    return ctx.trace(ctx.square(a)), ctx.trace(ctx.square(b)), ctx.trace(ctx.mul(a, b))


def is_independent_pair(ctx: FieldCtx, a: int, b: int) -> bool:
    """a, b nonzero and a != w b for every w in F_p^*."""
    if a == 0 or b == 0:
        return False
    return (ctx.log[a] - ctx.log[b]) % (ctx.order // (ctx.p - 1)) != 0


def omega_case(p: int, m: int, alpha: int, beta: int, gamma: int) -> str:
    """Case label shared by Omega_4 and Omega (both split on the same invariants)."""
    par = _parity(m)
    if alpha and beta:
        rel = "αβ=γ²" if (alpha * beta - gamma * gamma) % p == 0 else "αβ≠γ²"
        return f"{par}, α≠0, β≠0, {rel}"
    if m % 2 == 0:
        nz = sum(1 for v in (alpha, beta, gamma) if v)
        if nz == 0:
            return f"{par}, α=β=γ=0"
        if nz == 1:
            return f"{par}, exactly one of α,β,γ nonzero"
        return f"{par}, exactly one of α,β zero, γ≠0"
    if not alpha and not beta:
        return f"{par}, α=β=0"
    who = "β≠0, α=0" if alpha == 0 else "α≠0, β=0"
    return f"{par}, {who}, γ{'=' if gamma == 0 else '≠'}0"


def omega4_from_invariants(p: int, m: int, alpha: int, beta: int, gamma: int) -> AlgebraicScalar:
    k = consts(p, m)
    G = k.G
    alpha, beta, gamma = alpha % p, beta % p, gamma % p
    if k.even:
        nz = sum(1 for v in (alpha, beta, gamma) if v)
        if nz == 0:
            return G * (p - 1) ** 3
        if alpha and beta:
            if (alpha * beta - gamma * gamma) % p == 0:
                return G * (p - 1)
            return legendre(gamma * gamma - alpha * beta, p) * p * (p - 1) * G + G * (p - 1)
        if nz == 1:
            return -G * (p - 1) ** 2
        return G * (p - 1)
    GGb = k.GGb
    ea, eb = legendre(-alpha, p), legendre(-beta, p)
    if not alpha and not beta:
        return AlgebraicScalar(p, 0)
    if alpha == 0:
        return eb * (p - 1) ** 2 * GGb if gamma == 0 else -eb * (p - 1) * GGb
    if beta == 0:
        return ea * (p - 1) ** 2 * GGb if gamma == 0 else -ea * (p - 1) * GGb
    if (alpha * beta - gamma * gamma) % p == 0:
        return (eb * (p - 1) - ea) * (p - 1) * GGb
    return -(eb + ea) * (p - 1) * GGb


def _require_independent(ctx, a, b):
    if not is_independent_pair(ctx, a, b):
        raise ValueError("need a, b nonzero with a != w*b for all w in F_p^*")


def omega4(ctx: FieldCtx, a: int, b: int) -> AlgebraicScalar:
    _require_independent(ctx, a, b)
    return omega4_from_invariants(ctx.p, ctx.m, *pair_invariants(ctx, a, b))


def omega4_bruteforce(ctx: FieldCtx, a: int, b: int) -> complex:
    s = inner_sum_table(ctx.p)
    d = ctx.elements
    terms = s[ctx.trace_of_square] * s[ctx.trace_tab[ctx.mul(a, d)]] * s[ctx.trace_tab[ctx.mul(b, d)]]
    return complex(np.sum(terms))


