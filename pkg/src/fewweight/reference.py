"""Published parameters for the worked examples, and consistency checks against them."""

from __future__ import annotations

from dataclasses import dataclass, field

from .code import WeightDistribution, min_distance


@dataclass(frozen=True)
class PublishedExample:
    p: int
    m: int
    n: int
    k: int
    d: int
    enumerator: dict = field(default_factory=dict)  # nonzero weight -> count

    @property
    def total(self) -> int:
        return 1 + sum(self.enumerator.values())

    @property
    def enumerator_min_weight(self) -> int:
        return min(self.enumerator)


PUBLISHED = {
    (3, 4): PublishedExample(3, 4, 20, 4, 12, {12: 240, 16: 2160, 18: 2000, 20: 2160}),
    (3, 6): PublishedExample(3, 6, 260, 6, 162, {162: 1040, 180: 1872, 216: 24960,
                                                 228: 252720, 234: 149760, 240: 101088}),
    (3, 3): PublishedExample(3, 3, 8, 3, 4, {4: 48, 6: 224, 8: 456}),
    (3, 5): PublishedExample(3, 5, 80, 5, 54, {48: 360, 54: 320, 60: 288, 66: 11520,
                                               72: 40800, 78: 5760}),
}


@dataclass(frozen=True)
class Note:
    kind: str  # "ok", "inconsistent" or "mismatch"
    text: str


def published_notes(p: int, m: int, n: int | None = None,
                    wd: WeightDistribution | None = None) -> list[Note]:
    """Compare a computed code against the published example at (p, m), if any.

    Also checks the published record against itself: stated d versus the
    smallest weight of the stated enumerator, and the enumerator's total.
    """
    ex = PUBLISHED.get((p, m))
    if ex is None:
        return []
    out = []
    if ex.d != ex.enumerator_min_weight:
        out.append(Note("inconsistent",
                        f"published parameters [{ex.n}, {ex.k}, {ex.d}] state d={ex.d}, "
                        f"but the published enumerator's smallest nonzero weight is "
                        f"{ex.enumerator_min_weight}"))
    if ex.total != p ** (2 * m):
        out.append(Note("inconsistent",
                        f"published enumerator sums to {ex.total}, expected {p ** (2 * m)}"))
    if n is not None:
        out.append(Note("ok" if n == ex.n else "mismatch",
                        f"length n={n} (published {ex.n})"))
    if wd is not None:
        got = {w: c for w, c in wd.aggregated.items() if w > 0}
        out.append(Note("ok" if got == ex.enumerator else "mismatch",
                        "enumerator " + ("matches" if got == ex.enumerator else "differs from")
                        + " the published one"))
        d = min_distance(wd)
        out.append(Note("ok" if d == ex.d else "inconsistent",
                        f"computed min distance {d}"
                        + ("" if d == ex.d else f" (published parameters state {ex.d})")))
    return out
