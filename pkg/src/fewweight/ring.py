"""The ring F_q + uF_q, its trace down to F_p + uF_p, and the Gray map."""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .field import FieldCtx


class RingElem(NamedTuple):
    """a + u*b.  Over F_p + uF_p the components are F_p values."""

    a: int
    b: int

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


ZERO = RingElem(0, 0)


def ring_add(ctx: FieldCtx, x: RingElem, y: RingElem) -> RingElem:
    return RingElem(ctx.add(x.a, y.a), ctx.add(x.b, y.b))


def ring_mul(ctx: FieldCtx, x: RingElem, y: RingElem) -> RingElem:
    # u^2 = 0.  The code only uses the F_q-module action (y.b == 0), where
    # every convention for u^2 agrees.
    return RingElem(ctx.mul(x.a, y.a), ctx.add(ctx.mul(x.a, y.b), ctx.mul(x.b, y.a)))


def tr_ring(ctx: FieldCtx, x: RingElem) -> RingElem:
    """tr(a + ub) = Tr(a) + u Tr(b)."""
    return RingElem(ctx.trace(x.a), ctx.trace(x.b))


def tr_ring_direct(ctx: FieldCtx, x: RingElem) -> RingElem:
    """Same map as the sum of Frobenius images a^(p^j) + u b^(p^j)."""
    acc = ZERO
    cur = x
    for _ in range(ctx.m):
        acc = ring_add(ctx, acc, cur)
        cur = RingElem(ctx.frobenius(cur.a), ctx.frobenius(cur.b))
    return acc


def hamming_weight(v: Sequence[RingElem]) -> int:
    return sum(1 for x in v if not RingElem(*x).is_zero())


def gray_map(v: Sequence[RingElem]) -> np.ndarray:
    """(a_1 + u b_1, ..., a_n + u b_n) -> (a_1, ..., a_n, b_1, ..., b_n)."""
    arr = np.asarray([tuple(x) for x in v], dtype=np.int64).reshape(-1, 2)
    return np.concatenate([arr[:, 0], arr[:, 1]])


def gray_inverse(w) -> list[RingElem]:
    w = np.asarray(w)
    if w.ndim != 1 or len(w) % 2:
        raise ValueError("Gray image must have even length")
    n = len(w) // 2
    return [RingElem(int(w[k]), int(w[n + k])) for k in range(n)]


def swt(w) -> int:
    """Symplectic weight: #{k : (w_k, w_{n+k}) != (0, 0)}."""
    w = np.asarray(w)
    if w.ndim != 1 or len(w) % 2:
        raise ValueError("symplectic weight needs an even-length vector")
    n = len(w) // 2
    return int(np.count_nonzero((w[:n] != 0) | (w[n:] != 0)))
