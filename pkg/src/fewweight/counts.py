"""Counting pairs (a, b) and solutions d by their trace invariants.

For a pair (a, b) write alpha = Tr(a^2), beta = Tr(b^2), gamma = Tr(ab).
``aleph(a, b)`` counts d with Tr(d^2) = Tr(ad) = Tr(bd) = 0; the codeword
indexed by a + ub then has weight ``n0 - aleph(a, b)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import charsums as cs
from .charsums import consts, is_independent_pair, pair_histogram, pair_invariants
from .field import FieldCtx, legendre
from .scalar import AlgebraicScalar


# -- Omega -------------------------------------------------------------------

def omega_count_case(p: int, m: int, alpha: int, beta: int, gamma: int) -> str:
    alpha, beta, gamma = alpha % p, beta % p, gamma % p
    square_rel = (alpha * beta - gamma * gamma) % p == 0
    if m % 2 == 0:
        if alpha and beta:
            return "even m, α≠0, β≠0, αβ=γ²" if square_rel else "even m, α≠0, β≠0, αβ≠γ²"
        if not alpha and not beta and not gamma:
            return "even m, α=β=γ=0"
        if gamma:
            return "even m, γ≠0, at most one of α,β nonzero"
        return "even m, γ=0, exactly one of α,β nonzero"
    if alpha and beta:
        return "odd m, α≠0, β≠0, αβ=γ²" if square_rel else "odd m, α≠0, β≠0, αβ≠γ²"
    if not alpha and not beta:
        return "odd m, α=β=0"
    if gamma:
        return "odd m, γ≠0, exactly one of α,β nonzero"
    return "odd m, α≠0, β=γ=0" if alpha else "odd m, β≠0, α=γ=0"


def omega_from_invariants(p: int, m: int, alpha: int, beta: int, gamma: int) -> AlgebraicScalar:
    """Closed form of Omega; may be negative on classes no pair reaches."""
    k = consts(p, m)
    base = AlgebraicScalar(p, k.pw(m - 3))
    alpha, beta, gamma = alpha % p, beta % p, gamma % p
    case = omega_count_case(p, m, alpha, beta, gamma)
    if k.even:
        if case.endswith("α=β=γ=0"):
            return base + k.pw(-1) * (p - 1) * k.G
        if case.endswith("αβ=γ²") or case.endswith("exactly one of α,β nonzero"):
            return base
        if case.endswith("αβ≠γ²"):
            return base + legendre(gamma * gamma - alpha * beta, p) * k.pw(-2) * (p - 1) * k.G
        return base + k.pw(-2) * (p - 1) * k.G
    tail = k.pw(-2) * (p - 1) * k.GGb
    if case.endswith("α≠0, β=γ=0"):
        return base + legendre(-alpha, p) * tail
    if case.endswith("αβ=γ²") or case.endswith("β≠0, α=γ=0"):
        return base + legendre(-beta, p) * tail
    return base


def omega(ctx: FieldCtx, a: int, b: int) -> int:
    if not is_independent_pair(ctx, a, b):
        raise ValueError("need a, b nonzero with a != w*b for all w in F_p^*")
    v = omega_from_invariants(ctx.p, ctx.m, *pair_invariants(ctx, a, b))
    if not v.is_integer() or int(v) < 0:
        raise ArithmeticError(f"Omega closed form gave {v} on a reachable pair")
    return int(v)


def omega_bruteforce(ctx: FieldCtx, a: int, b: int) -> int:
    return aleph_bruteforce(ctx, a, b)


# -- aleph -------------------------------------------------------------------

def aleph_bruteforce(ctx: FieldCtx, a: int, b: int) -> int:
    d = ctx.elements
    hit = ((ctx.trace_of_square == 0)
           & (ctx.trace_tab[ctx.mul(a, d)] == 0)
           & (ctx.trace_tab[ctx.mul(b, d)] == 0))
    return int(np.count_nonzero(hit))


def aleph_case(ctx: FieldCtx, a: int, b: int) -> str:
    if a == 0 and b == 0:
        return "a=b=0"
    if b == 0:
        return "b=0"
    if a == 0:
        return "a=0"
    if not is_independent_pair(ctx, a, b):
        return "a=wb"
    return "independent"


def aleph_closed(ctx: FieldCtx, a: int, b: int) -> int:
    """Dispatch: n0 for the zero pair, N_xi for a dependent pair, else Omega."""
    case = aleph_case(ctx, a, b)
    if case == "a=b=0":
        return cs.n_c(ctx, 0)
    if case == "b=0":
        return cs.n_xi(ctx, a)
    if case in ("a=0", "a=wb"):
        return cs.n_xi(ctx, b)
    return omega(ctx, a, b)


def aleph(ctx: FieldCtx, a: int, b: int, method: str = "brute") -> int:
    if method == "brute":
        return aleph_bruteforce(ctx, a, b)
    if method == "closed":
        return aleph_closed(ctx, a, b)
    raise ValueError(f"unknown method {method!r}")


def zero_set_indicator(ctx: FieldCtx, zero_set=None) -> np.ndarray:
    """M[a, j] = (Tr(a * z_j) == 0) for z_j running over {d : Tr(d^2) = 0}."""
    if zero_set is None:
        zero_set = np.flatnonzero(ctx.trace_of_square == 0)
    z = np.asarray(zero_set, dtype=np.int64)
    e = ctx.elements
    return ctx.trace_tab[ctx.mul(e[:, None], z[None, :])] == 0


def aleph_matrix(ctx: FieldCtx, rows=None, indicator=None) -> np.ndarray:
    """aleph(a, b) for a in ``rows`` (default all) and every b."""
    M = zero_set_indicator(ctx) if indicator is None else indicator
    Mf = M.astype(np.float64)
    sub = Mf if rows is None else Mf[rows]
    return np.rint(sub @ Mf.T).astype(np.int64)


# -- N(c1, c2, c3) -----------------------------------------------------------

def n3_case(p: int, m: int, c1: int, c2: int, c3: int) -> str:
    c1, c2, c3 = c1 % p, c2 % p, c3 % p
    nz = sum(1 for c in (c1, c2, c3) if c)
    if m % 2 == 0:
        if nz == 0:
            return "even m, c1=c2=c3=0"
        if c1 == 0 and c2 == 0:
            return "even m, c1=c2=0, c3≠0"
        if c1 and c2 and c3 == 0:
            return "even m, c1≠0, c2≠0, c3=0"
        if c3 == 0:
            return "even m, c3=0, exactly one of c1,c2 zero"
        if c1 == 0 or c2 == 0:
            return "even m, c3≠0, exactly one of c1,c2 zero"
        e = legendre(c3 * c3 - c1 * c2, p)
        return {0: "even m, all ci≠0, c3²=c1c2",
                1: "even m, all ci≠0, η̄(c3²-c1c2)=1",
                -1: "even m, all ci≠0, η̄(c3²-c1c2)=-1"}[e]
    if nz == 0:
        return "odd m, c1=c2=c3=0"
    if c1 == 0 and c2 == 0:
        return "odd m, c1=c2=0, c3≠0"
    if nz == 1:
        return "odd m, c2≠0, c1=c3=0" if c2 else "odd m, c1≠0, c2=c3=0"
    if nz == 2:
        return "odd m, exactly two ci≠0"
    if (c3 * c3 - c1 * c2) % p == 0:
        return "odd m, all ci≠0, c3²=c1c2"
    return "odd m, all ci≠0, c3²≠c1c2"


def n3_exact(p: int, m: int, c1: int, c2: int, c3: int) -> AlgebraicScalar:
    """Table value of N(c1, c2, c3) as an exact scalar."""
    k = consts(p, m)
    G, pw = k.G, k.pw
    c1, c2, c3 = c1 % p, c2 % p, c3 % p
    case = n3_case(p, m, c1, c2, c3)
    top = AlgebraicScalar(p, pw(2 * m - 3))
    if k.even:
        G2 = G * G
        if case.endswith("c1=c2=c3=0"):
            return (top + pw(m - 3) * (p - 1) * (2 * p - 1) + pw(m - 3) * (p * p - 1) * G
                    + pw(-3) * (p - 1) ** 3 * G2)
        if case.endswith("c1=c2=0, c3≠0"):
            return top + pw(m - 3) * (p - 1) * G - pw(m - 3) * (2 * p - 1) + pw(-3) * (p - 1) * G2
        if case.endswith("c1≠0, c2≠0, c3=0"):
            return (top - pw(m - 3) * (p - 1) - pw(m - 3) * G + pw(-3) * (p - 1) * G2
                    + pw(-2) * legendre(-c1 * c2, p) * (k.pm - G) * G)
        if case.endswith("c3=0, exactly one of c1,c2 zero"):
            return top + pw(m - 3) * (p - 1) ** 2 - pw(m - 3) * G - pw(-3) * (p - 1) ** 2 * G2
        if case.endswith("c3≠0, exactly one of c1,c2 zero"):
            return top + pw(m - 3) * (p - 1) * (G - 1) - pw(-3) * G2
        if case.endswith("c3²=c1c2"):
            return top - pw(m - 3) * (G - 1) - pw(-3) * G2
        if case.endswith("=1"):
            return top - pw(m - 3) * (2 * G - 1) + pw(-3) * (p + 1) * (k.pm - G) * G
        return top - pw(m - 3) * (2 * G - 1) - pw(-3) * (p - 1) * (k.pm - G) * G
    GGb, G2Gb2 = k.GGb, k.G2Gb2
    if case.endswith("c1=c2=c3=0"):
        return top + pw(m - 3) * (p - 1) * (2 * p - 1) - pw(-4) * (p - 1) ** 2 * G2Gb2
    if case.endswith("c1=c2=0, c3≠0"):
        return top - pw(m - 3) * (2 * p - 1) + pw(-4) * (p - 1) * G2Gb2
    if case.endswith("c2≠0, c1=c3=0") or case.endswith("c1≠0, c2=c3=0"):
        e = legendre(-(c2 or c1), p)
        return top + pw(m - 3) * (p - 1) ** 2 + pw(-4) * (p - 1) * G2Gb2 + pw(m - 2) * e * GGb
    if case.endswith("exactly two ci≠0"):
        return top - pw(m - 3) * (p - 1) - pw(-4) * G2Gb2
    if case.endswith("c3²=c1c2"):
        e1, e2 = legendre(-c1, p), legendre(-c2, p)
        return (top + pw(m - 3) + pw(-4) * (p * p - p - 1) * G2Gb2
                + pw(m - 3) * (e1 * (p - 1) + e2) * GGb)
    return top + pw(m - 3) - pw(-4) * (p + 1) * G2Gb2


def n3(ctx: FieldCtx, c1: int, c2: int, c3: int) -> int:
    v = n3_exact(ctx.p, ctx.m, c1, c2, c3)
    if not v.is_integer() or int(v) < 0:
        raise ArithmeticError(f"N({c1},{c2},{c3}) evaluated to {v}")
    return int(v)


def n3_bruteforce(ctx: FieldCtx, c1: int, c2: int, c3: int) -> int:
    p = ctx.p
    return int(pair_histogram(ctx)[c1 % p, c2 % p, c3 % p])


def n3_from_sums(ctx: FieldCtx, c1: int, c2: int, c3: int) -> AlgebraicScalar:
    """N(c1,c2)/p + (Psi_1 + Psi_2 + Psi_3 + Psi_4)/p^3 from the closed forms."""
    p = ctx.p
    psis = cs.psi1(ctx, c3) + cs.psi2(ctx, c1, c3) + cs.psi3(ctx, c2, c3) + cs.psi4(ctx, c1, c2, c3)
    return Fraction(cs.n2(ctx, c1, c2), p) + psis / p**3


# -- pair classes behind the theorem tables ----------------------------------

CLASS_NAMES = ("N1", "N2", "N3", "N4", "N5", "N6", "N7")


@dataclass(frozen=True)
class PairClassCensus:
    """Number of pairs (a, b) in each class, counted and predicted."""

    p: int
    m: int
    counted: dict
    predicted: dict

    @property
    def match(self) -> bool:
        return self.counted == self.predicted

    @property
    def total(self) -> int:
        return sum(self.counted.values())


def _class_of_dependent(p, m, t):
    """Class of a nonzero pair whose aleph is N_xi with Tr(xi^2) = t."""
    if m % 2 == 0:
        return "N5" if t == 0 else "N6"
    if t == 0:
        return "N6"
    return "N4" if legendre(-t, p) == 1 else "N5"


def _class_of_independent(p, m, alpha, beta, gamma):
    if m % 2 == 0:
        if not alpha and not beta and not gamma:
            return "N1"
        if alpha and beta:
            e = legendre(gamma * gamma - alpha * beta, p)
            return {1: "N2", 0: "N3", -1: "N4"}[e]
        return "N2" if gamma else "N3"
    if alpha and beta:
        if (alpha * beta - gamma * gamma) % p:
            return "N3"
        return "N1" if legendre(-beta, p) == 1 else "N2"
    if not alpha and not beta:
        return "N3"
    if gamma:
        return "N3"
    e = legendre(-(alpha or beta), p)
    return "N1" if e == 1 else "N2"


def classify_pair(ctx: FieldCtx, a: int, b: int) -> str:
    case = aleph_case(ctx, a, b)
    p, m = ctx.p, ctx.m
    if case == "a=b=0":
        return "N7"
    if case == "b=0":
        return _class_of_dependent(p, m, ctx.trace(ctx.square(a)))
    if case in ("a=0", "a=wb"):
        return _class_of_dependent(p, m, ctx.trace(ctx.square(b)))
    return _class_of_independent(p, m, *pair_invariants(ctx, a, b))


def count_pair_classes(ctx: FieldCtx) -> dict:
    """Exhaustive classification of all q^2 pairs."""
    p, m = ctx.p, ctx.m
    e = ctx.elements
    A, B = np.meshgrid(e, e, indexing="ij")
    A, B = A.ravel(), B.ravel()
    t = ctx.trace_of_square
    alpha, beta, gamma = t[A], t[B], ctx.trace_product[A, B]
    sub = ctx.order // (p - 1)
    dependent = (A == 0) | (B == 0) | ((ctx.log[A] - ctx.log[B]) % sub == 0)
    xi = np.where(B == 0, A, B)
    counts = dict.fromkeys(CLASS_NAMES, 0)
    # pattern table over (alpha, beta, gamma) for the independent pairs
    indep_label = {}
    for key in itertools.product(range(p), repeat=3):
        indep_label[key] = _class_of_independent(p, m, *key)
    hist = np.bincount(((alpha * p + beta) * p + gamma)[~dependent], minlength=p**3)
    for flat, n in enumerate(hist):
        if n:
            key = (flat // (p * p), (flat // p) % p, flat % p)
            counts[indep_label[key]] += int(n)
    dep_t = t[xi[dependent & (xi != 0)]]
    for val, n in zip(*np.unique(dep_t, return_counts=True)):
        counts[_class_of_dependent(p, m, int(val))] += int(n)
    counts["N7"] += 1
    return counts


def predicted_pair_classes(ctx: FieldCtx) -> dict:
    """Class sizes from the closed forms of N(c1,c2,c3) and n_c."""
    p, m = ctx.p, ctx.m
    N = lambda *c: n3(ctx, *c)  # noqa: E731
    nc = lambda c: cs.n_c(ctx, c)  # noqa: E731
    n0 = nc(0)
    units = range(1, p)
    deg0 = (p + 1) * n0 - p
    if m % 2 == 0:
        triples = list(itertools.product(units, repeat=3))
        disc = {c: legendre(c[2] ** 2 - c[0] * c[1], p) for c in triples}
        pairs = list(itertools.product(units, repeat=2))
        return {
            "N1": N(0, 0, 0) - deg0,
            "N2": (sum(N(*c) for c in triples if disc[c] == 1)
                   + sum(N(c1, c2, 0) for c1, c2 in pairs if legendre(-c1 * c2, p) == 1)
                   + (p - 1) * N(0, 0, 1) + 2 * (p - 1) ** 2 * N(1, 0, 1)),
            "N3": (sum(N(*c) for c in triples if disc[c] == 0)
                   + 2 * (p - 1) * N(1, 0, 0) - (p * p - 1) * nc(1)),
            "N4": (sum(N(*c) for c in triples if disc[c] == -1)
                   + sum(N(c1, c2, 0) for c1, c2 in pairs if legendre(-c1 * c2, p) == -1)),
            "N5": (p + 1) * (n0 - 1),
            "N6": (p * p - 1) * nc(1),
            "N7": 1,
        }
    triples = list(itertools.product(units, repeat=3))

    def side(sign):
        return (sum(N(c1, 0, 0) for c1 in units if legendre(-c1, p) == sign)
                + sum(N(c1, c2, c3) for c1, c2, c3 in triples
                      if legendre(-c2, p) == sign and (c1 * c2 - c3 * c3) % p == 0)
                + sum(N(0, c2, 0) for c2 in units if legendre(-c2, p) == sign)
                - (p + 1) * sum(nc(c) for c in units if legendre(-c, p) == sign))

    return {
        "N1": side(1),
        "N2": side(-1),
        "N3": (sum(N(*c) for c in triples if (c[0] * c[1] - c[2] ** 2) % p)
               + 3 * (p - 1) ** 2 * N(1, 1, 0) + (p - 1) * N(0, 0, 1) + N(0, 0, 0) - deg0),
        "N4": (p + 1) * sum(nc(c) for c in units if legendre(-c, p) == 1),
        "N5": (p + 1) * sum(nc(c) for c in units if legendre(-c, p) == -1),
        "N6": (p + 1) * (n0 - 1),
        "N7": 1,
    }


def pair_class_census(ctx: FieldCtx) -> PairClassCensus:
    if ctx.m < 3:
        raise ValueError("the class census needs m >= 3")
    return PairClassCensus(ctx.p, ctx.m, count_pair_classes(ctx), predicted_pair_classes(ctx))
