"""Graded Betti numbers of t-spread strongly stable ideals."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .core import binom
from .errors import NotStronglyStableError
from .ideals import MonomialIdeal, is_strongly_stable_ideal, lexify

log = logging.getLogger(__name__)


class BettiTable:
    """Nonzero beta_{i,i+j}, keyed by (i, j): homological index i, generator degree j."""

    __slots__ = ("entries",)

    def __init__(self, entries: dict[tuple[int, int], int] | None = None):
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"BettiTable({self.entries})"

    def rows(self) -> list[int]:
        return sorted({j for _, j in self.entries})

    def width(self) -> int:
        """Number of columns, i.e. 1 + the largest homological index present."""
        return 1 + max((i for i, _ in self.entries), default=-1)

    def row(self, j: int) -> list[int]:
        return [self[i, j] for i in range(self.width())]

    def to_record(self) -> list[dict]:
        return [{"i": i, "j": j, "value": v} for (i, j), v in sorted(self.entries.items())]

    @classmethod
    def from_record(cls, rec: list[dict]) -> "BettiTable":
        return cls({(int(e["i"]), int(e["j"])): int(e["value"]) for e in rec})


def graded_betti(I: MonomialIdeal) -> BettiTable:
    """beta_{i,i+j}(I) = sum over u in G(I)_j of C(max(u) - 1 - (t_1+...+t_{j-1}), i)."""
    if not is_strongly_stable_ideal(I):
        raise NotStronglyStableError(f"{I} is not a t-spread strongly stable ideal")
    ctx = I.ctx
    entries: dict[tuple[int, int], int] = {}
    for u in I.generators:
        j = u.degree
        if j == 0:
            entries[0, 0] = entries.get((0, 0), 0) + 1
            continue
        top = u.max_index - 1 - ctx.gap_sum(j - 1)
        for i in range(top + 1):
            entries[i, j] = entries.get((i, j), 0) + binom(top, i)
    return BettiTable(entries)


@dataclass(frozen=True)
class DominanceReport:
    holds: bool
    table: BettiTable
    lex_table: BettiTable
    lex_ideal: MonomialIdeal
    witness: tuple[int, int, int, int] | None = None  # (i, j, beta(I), beta(I^lex))

    def __bool__(self):
        return self.holds


def dominance_check(I: MonomialIdeal) -> DominanceReport:
    """Compare beta(I) with beta(lexify(I)) entrywise."""
    J = lexify(I)
    table, lex_table = graded_betti(I), graded_betti(J)
    for (i, j), v in sorted(table.entries.items()):
        if v > lex_table[i, j]:
            log.error("lex dominance fails at beta_{%d,%d}: %d > %d for %s", i, i + j, v, lex_table[i, j], I)
            return DominanceReport(False, table, lex_table, J, (i, j, v, lex_table[i, j]))
    return DominanceReport(True, table, lex_table, J)


def render_table(T: BettiTable) -> str:
    """Text table: one row per generator degree j, columns i, '.' for zero."""
    rows = T.rows()
    labels = [f"{j}:" for j in rows]
    lw = max((len(s) for s in labels), default=0)
    cells = [[str(T[i, j]) if T[i, j] else "." for i in range(T.width())] for j in rows]
    widths = [
        max([len(str(i))] + [len(r[i]) for r in cells]) for i in range(T.width())
    ]
    header = " " * lw + "".join(" " + str(i).rjust(w) for i, w in enumerate(widths))
    if not rows:
        return header.rstrip() + "\n"
    lines = [header.rstrip(), "-" * len(header)]
    for label, r in zip(labels, cells):
        lines.append(label.rjust(lw) + "".join(" " + c.rjust(w) for c, w in zip(r, widths)))
    return "\n".join(lines) + "\n"
