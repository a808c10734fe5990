"""The code C_D over F_p + uF_p and its Hamming weight distribution.

D is the set of nonzero d in F_q with Tr(d^2) = 0, and the codeword
indexed by x = a + ub in F_q + uF_q is (tr(x d_1), ..., tr(x d_n)).
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .charsums import consts
from .counts import zero_set_indicator
from .field import FieldCtx, build_field
from .ring import RingElem, ring_mul, tr_ring
from .scalar import AlgebraicScalar

SLOW_ORACLE_MAX_Q = 3**5
JSON_SAFE_INT = 2**53


class TableError(ArithmeticError):
    """A weight-table row evaluated to something other than a count."""


@dataclass(frozen=True)
class CodeSpec:
    p: int
    m: int
    ctx: FieldCtx = field(repr=False)
    D: tuple
    n: int

    @property
    def n0(self) -> int:
        """#{d in F_q : Tr(d^2) = 0}, zero included."""
        return self.n + 1

    @property
    def codewords(self) -> int:
        return self.p ** (2 * self.m)


def build_code(p: int, m: int, ctx: FieldCtx | None = None) -> CodeSpec:
    ctx = build_field(p, m) if ctx is None else ctx
    D = tuple(int(d) for d in np.flatnonzero(ctx.trace_of_square == 0) if d != 0)
    if not D:
        raise ValueError(f"defining set is empty for p={p}, m={m}")
    return CodeSpec(ctx.p, ctx.m, ctx, D, len(D))


def spec_from_defining_set(ctx: FieldCtx, D) -> CodeSpec:
    D = tuple(sorted(int(d) for d in D))
    return CodeSpec(ctx.p, ctx.m, ctx, D, len(D))


def theorem_length(p: int, m: int) -> int:
    k = consts(p, m)
    if k.even:
        return int(k.pw(m - 1) + k.pw(-1) * (p - 1) * k.G - 1)
    return p ** (m - 1) - 1


def codeword(spec: CodeSpec, x: RingElem) -> list[RingElem]:
    ctx = spec.ctx
    x = RingElem(*x)
    return [tr_ring(ctx, ring_mul(ctx, x, RingElem(d, 0))) for d in spec.D]


def codeword_fast(spec: CodeSpec, x: RingElem) -> list[RingElem]:
    ctx = spec.ctx
    D = np.asarray(spec.D)
    ta = ctx.trace_tab[ctx.mul(x[0], D)]
    tb = ctx.trace_tab[ctx.mul(x[1], D)]
    return [RingElem(int(u), int(v)) for u, v in zip(ta, tb)]


# -- weight distributions ---------------------------------------------------

@dataclass
class WeightDistribution:
    """Rows (weight, count, label) plus their aggregation by weight."""

    rows: list
    aggregated: dict = field(init=False)

    def __post_init__(self):
        agg = {}
        for w, c, _ in self.rows:
            agg[w] = agg.get(w, 0) + c
        self.aggregated = {w: c for w, c in sorted(agg.items()) if c}

    @classmethod
    def from_histogram(cls, hist) -> "WeightDistribution":
        return cls([(int(w), int(c), "enumerated") for w, c in enumerate(hist) if c])

    @property
    def total(self) -> int:
        return sum(self.aggregated.values())

    def nonzero_weights(self) -> list[int]:
        return [w for w in self.aggregated if w > 0]

    def enumerator(self) -> str:
        """1+240z^12+... in the usual polynomial notation."""
        parts = []
        for w, c in self.aggregated.items():
            parts.append(str(c) if w == 0 else f"{c}z^{w}")
        return "+".join(parts)

    def diff(self, other: "WeightDistribution") -> dict:
        """weight -> (self count, other count) wherever they differ."""
        keys = sorted(set(self.aggregated) | set(other.aggregated))
        return {w: (self.aggregated.get(w, 0), other.aggregated.get(w, 0))
                for w in keys if self.aggregated.get(w, 0) != other.aggregated.get(w, 0)}

    def __eq__(self, other):
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return self.aggregated == other.aggregated


def min_distance(wd: WeightDistribution) -> int:
    ws = wd.nonzero_weights()
    if not ws:
        raise ValueError("distribution has no nonzero codeword")
    return min(ws)


def _chunks(q, size):
    return [np.arange(s, min(s + size, q)) for s in range(0, q, size)]


def weight_histogram_fast(spec: CodeSpec, chunk: int = 256, n_jobs: int = 1) -> np.ndarray:
    """Histogram of n0 - aleph(a, b) over all q^2 pairs, partitioned by a."""
    ctx = spec.ctx
    zero_set = np.array((0,) + spec.D)
    M = zero_set_indicator(ctx, zero_set).astype(np.float64)
    n0 = len(zero_set)

    def part(rows):
        al = np.rint(M[rows] @ M.T).astype(np.int64)
        return np.bincount((n0 - al).ravel(), minlength=n0)

    parts = _chunks(ctx.q, chunk)
    if n_jobs > 1:
        with ThreadPoolExecutor(n_jobs) as pool:
            hists = list(pool.map(part, parts))
    else:
        hists = [part(r) for r in parts]
    return np.sum(hists, axis=0)


def weight_histogram_slow(spec: CodeSpec) -> np.ndarray:
    """Histogram from explicit codewords: Gray image, then symplectic weight."""
    ctx = spec.ctx
    if ctx.q > SLOW_ORACLE_MAX_Q:
        raise ValueError(f"per-coordinate oracle limited to q <= {SLOW_ORACLE_MAX_Q}")
    D = np.asarray(spec.D)
    e = ctx.elements
    # T[x, i] = Tr(x d_i): first half of the Gray image for a = x, second for b = x
    T = ctx.trace_tab[ctx.mul(e[:, None], D[None, :])]
    nz = T != 0
    hist = np.zeros(spec.n + 1, dtype=np.int64)
    for a in range(ctx.q):
        w = np.count_nonzero(nz[a][None, :] | nz, axis=1)
        hist += np.bincount(w, minlength=spec.n + 1)
    return hist


def wdist_bruteforce(spec: CodeSpec, check_slow: bool | None = None,
                     chunk: int = 256, n_jobs: int = 1) -> WeightDistribution:
    hist = weight_histogram_fast(spec, chunk=chunk, n_jobs=n_jobs)
    if check_slow is None:
        check_slow = spec.ctx.q <= SLOW_ORACLE_MAX_Q
    if check_slow:
        slow = weight_histogram_slow(spec)
        if not np.array_equal(hist[: len(slow)], slow) or hist[len(slow):].any():
            raise AssertionError("fast and per-coordinate weight enumeration disagree")
    return WeightDistribution.from_histogram(hist)


# -- closed-form tables --------------------------------------------------------

def _even_rows(p, m):
    k = consts(p, m)
    G, pw, G2 = k.G, k.pw, k.G * k.G
    a = pw(m - 3) * (p * p - 1)
    half = Fraction(1, 2)
    return [
        ("p^(m-3)(p^2-1)", AlgebraicScalar(p, a),
         pw(2 * m - 3) - pw(m - 3) * (p**3 - p * p + 3 * p - 1)
         + pw(-1) * (p * p - 1) * (pw(m - 2) - 1) * G + pw(-3) * (p - 1) ** 3 * G2 + p),
        ("p^(m-3)(p^2-1)+p^(-2)(p-1)^2 G", a + pw(-2) * (p - 1) ** 2 * G,
         half * (p - 1) * (pw(2 * m - 2) * (p + 1) + pw(m - 2) * (p * p - 1) * G
                           - 2 * pw(m - 2) * (2 * p - 1) - pw(-2) * (p - 1) * (p - 2) * G2)),
        ("p^(m-3)(p^2-1)+p^(-1)(p-1)G", a + pw(-1) * (p - 1) * G,
         (p - 1) * (pw(2 * m - 3) * (p + 1) - pw(m - 3) * (p**3 - p * p + 3 * p - 1)
                    - pw(-3) * (2 * p * p - 3 * p + 1) * G2
                    - pw(-1) * (p + 1) * (pw(m - 2) - 1) * G)),
        ("(p^2-1)(p^(m-3)+p^(-2)G)", (p * p - 1) * (pw(m - 3) + pw(-2) * G),
         half * (p - 1) ** 2 * (pw(2 * m - 2) - pw(m - 2) * (p + 1) * G + pw(-1) * G2)),
        ("p^(m-2)(p-1)", AlgebraicScalar(p, pw(m - 2) * (p - 1)),
         (p + 1) * (pw(m - 1) + pw(-1) * (p - 1) * G - 1)),
        ("(p-1)(p^(m-2)+p^(-1)G)", (p - 1) * (pw(m - 2) + pw(-1) * G),
         (p * p - 1) * (pw(m - 1) - pw(-1) * G)),
    ]


def _odd_rows(p, m):
    k = consts(p, m)
    GGb, G2Gb2, pw = k.GGb, k.G2Gb2, k.pw
    a = pw(m - 3) * (p * p - 1)
    b = pw(m - 2) * (p - 1)
    t = pw(-2) * (p - 1) * GGb
    half = Fraction(1, 2)
    core = pw(2 * m - 3) * (p + 1) + pw(m - 3) * (2 * p - 1) * (p - 1)
    sq = pw(-4) * (p - 1) * (p * p - p + 1) * G2Gb2
    return [
        ("p^(m-3)(p^2-1)-p^(-2)(p-1)GGb", a - t,
         half * (p - 1) * (core + pw(m - 2) * (p + 1) * GGb + sq)
         - half * (p * p - 1) * (pw(m - 1) + pw(-1) * GGb)),
        ("p^(m-3)(p^2-1)+p^(-2)(p-1)GGb", a + t,
         half * (p - 1) * (core - pw(m - 2) * (p + 1) * GGb + sq)
         - half * (p * p - 1) * (pw(m - 1) - pw(-1) * GGb)),
        ("p^(m-3)(p^2-1)", AlgebraicScalar(p, a),
         (p - 1) ** 2 * (pw(2 * m - 3) * (p + 1) - pw(m - 3) * (2 * p - 1)
                         - pw(-4) * (p * p - p + 1) * G2Gb2)
         + pw(2 * m - 2) - (p + 1) * pw(m - 1) + p),
        ("p^(m-2)(p-1)-p^(-2)(p-1)GGb", b - t,
         half * (p * p - 1) * (pw(m - 1) + pw(-1) * GGb)),
        ("p^(m-2)(p-1)+p^(-2)(p-1)GGb", b + t,
         half * (p * p - 1) * (pw(m - 1) - pw(-1) * GGb)),
        ("p^(m-2)(p-1)", AlgebraicScalar(p, b), (p + 1) * (pw(m - 1) - 1)),
    ]


def theorem_rows(p: int, m: int) -> list[tuple[str, AlgebraicScalar, AlgebraicScalar]]:
    """Unevaluated (label, weight, multiplicity) rows of the closed-form table."""
    if m < 3:
        raise ValueError("closed-form weight tables need m >= 3")
    rows = _even_rows(p, m) if m % 2 == 0 else _odd_rows(p, m)
    return [(label, AlgebraicScalar(p, 0) + w, AlgebraicScalar(p, 0) + c) for label, w, c in rows]


def wdist_theorem(p: int, m: int) -> WeightDistribution:
    out = [(0, 1, "zero codeword")]
    for label, w, c in theorem_rows(p, m):
        if not w.is_integer() or int(w) < 0:
            raise TableError(f"row {label}: weight {w} is not a nonnegative integer")
        if not c.is_integer() or int(c) < 0:
            raise TableError(f"row {label}: multiplicity {c} is not a nonnegative integer")
        out.append((int(w), int(c), label))
    return WeightDistribution(out)


# -- JSON export -------------------------------------------------------------

def _jsonint(v: int):
    return str(v) if abs(v) > JSON_SAFE_INT else int(v)


def export_record(spec: CodeSpec, wd: WeightDistribution) -> dict:
    return {
        "p": spec.p,
        "m": spec.m,
        "modulus": [int(c) for c in spec.ctx.modulus],
        "n": spec.n,
        "defining_set": list(spec.D),
        "codewords": _jsonint(spec.codewords),
        "distribution": [{"weight": w, "count": _jsonint(c)}
                         for w, c in wd.aggregated.items() if w > 0],
        "min_distance": min_distance(wd),
    }


def dumps_record(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2) + "\n"


def write_export(path, spec: CodeSpec, wd: WeightDistribution) -> dict:
    record = export_record(spec, wd)
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(dumps_record(record))
    os.replace(tmp, path)
    return record


def read_export(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def distribution_from_record(record: dict) -> WeightDistribution:
    """Re-derive the distribution from a record's modulus and defining set."""
    ctx = build_field(record["p"], record["m"], modulus=record["modulus"])
    spec = spec_from_defining_set(ctx, record["defining_set"])
    return wdist_bruteforce(spec, check_slow=False)


def stored_distribution(record: dict) -> WeightDistribution:
    # the zero codeword is implicit in the record
    rows = [(0, 1, "zero codeword")]
    rows += [(int(e["weight"]), int(e["count"]), "stored") for e in record["distribution"]]
    return WeightDistribution(rows)
