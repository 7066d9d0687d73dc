"""Ambient context, monomials, lex order and t-spread enumeration.

A monomial x_{j1} x_{j2} ... x_{jl} is stored as its non-decreasing index
tuple (j1, ..., jl).  Under the lex order induced by x1 > x2 > ... > xn,
sorting index tuples ascending is the same as sorting monomials in
descending lex order, which is the order used everywhere in the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import (
    ContractError,
    InvalidMonomialError,
    MonomialParseError,
    OutOfRangeError,
)


def binom(a: int, b: int) -> int:
    """C(a, b), taken to be 0 whenever b < 0, a < 0 or a < b."""
    if b < 0 or a < 0 or a < b:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class SpreadContext:
    """The data (n, t) every computation is relative to; d = len(t) + 1."""

    n: int
    t: tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(x) for x in self.t)
        object.__setattr__(self, "t", t)
        if not isinstance(self.n, int) or self.n < 1:
            raise ContractError(f"n must be a positive integer, got {self.n!r}")
        if len(t) < 1:
            raise ContractError("t must have at least one entry (d >= 2)")
        if any(x < 0 for x in t):
            raise ContractError(f"t entries must be non-negative, got {t}")

    @property
    def d(self) -> int:
        return len(self.t) + 1

    @property
    def full_support(self) -> bool:
        return self.n > sum(self.t)

    def gap(self, i: int) -> int:
        """t_i for 1 <= i <= d-1, with the convention t_0 = 0."""
        if i == 0:
            return 0
        if not 1 <= i <= len(self.t):
            raise ContractError(f"t_{i} is undefined for d = {self.d}")
        return self.t[i - 1]

    def gap_sum(self, k: int) -> int:
        """t_1 + ... + t_k (0 for k <= 0)."""
        return sum(self.t[: max(k, 0)])

    def suffix(self, k: int) -> tuple[int, ...]:
        """The tail (t_k, ..., t_{d-1})."""
        return self.t[k - 1:]

    @classmethod
    def zero(cls, n: int, d: int) -> "SpreadContext":
        return cls(n, (0,) * (d - 1))

    @classmethod
    def parse(cls, n: int | str, t: str | Sequence[int]) -> "SpreadContext":
        """Build a context from CLI-style input, e.g. ``parse(6, "1,0,2")``."""
        if isinstance(t, str):
            try:
                t = tuple(int(x) for x in t.split(",") if x != "")
            except ValueError as exc:
                raise ContractError(f"malformed t vector {t!r}") from exc
        return cls(int(n), tuple(t))

    def to_record(self) -> dict:
        return {"n": self.n, "t": list(self.t)}

    @classmethod
    def from_record(cls, rec: dict) -> "SpreadContext":
        return cls(int(rec["n"]), tuple(rec["t"]))

    def __str__(self):
        return f"n={self.n} t={','.join(map(str, self.t))}"


@dataclass(frozen=True)
class Monomial:
    """A monomial given by its non-decreasing tuple of variable indices."""

    indices: tuple[int, ...] = field(default=())

    def __post_init__(self):
        idx = tuple(self.indices)
        object.__setattr__(self, "indices", idx)
        for a, b in zip(idx, idx[1:]):
            if b < a:
                raise InvalidMonomialError(f"indices must be non-decreasing: {idx}")
        if idx and idx[0] < 1:
            raise InvalidMonomialError(f"indices must be >= 1: {idx}")

    @classmethod
    def of(cls, *indices: int) -> "Monomial":
        """Monomial from indices in any order: ``Monomial.of(4, 1, 4)`` is x1*x4^2."""
        return cls(tuple(sorted(indices)))

    @property
    def degree(self) -> int:
        return len(self.indices)

    @property
    def max_index(self) -> int | None:
        return self.indices[-1] if self.indices else None

    def is_unit(self) -> bool:
        return not self.indices

    def times(self, i: int) -> "Monomial":
        return Monomial(tuple(sorted(self.indices + (i,))))

    def divided_by(self, i: int) -> "Monomial":
        idx = list(self.indices)
        try:
            idx.remove(i)
        except ValueError:
            raise ContractError(f"x{i} does not divide {self}") from None
        return Monomial(tuple(idx))

    def exchange(self, i: int, j: int) -> "Monomial":
        """x_j * (u / x_i)."""
        return self.divided_by(i).times(j)

    def divides(self, other: "Monomial") -> bool:
        a, b = self.indices, other.indices
        if len(a) > len(b):
            return False
        k = 0
        for x in b:
            if k < len(a) and a[k] == x:
                k += 1
            elif k < len(a) and a[k] < x:
                return False
        return k == len(a)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.indices)))

    def exponents(self) -> dict[int, int]:
        exps: dict[int, int] = {}
        for i in self.indices:
            exps[i] = exps.get(i, 0) + 1
        return exps

    def check_range(self, n: int) -> None:
        if self.indices and self.indices[-1] > n:
            raise InvalidMonomialError(f"{self} uses x{self.indices[-1]} but n = {n}")

    def __str__(self):
        return format_monomial(self)


UNIT = Monomial(())


def is_t_spread(u: Monomial, ctx: SpreadContext) -> bool:
    u.check_range(ctx.n)
    idx = u.indices
    if len(idx) > ctx.d:
        return False
    return all(idx[i + 1] - idx[i] >= ctx.t[i] for i in range(len(idx) - 1))


def lex_compare(u: Monomial, v: Monomial) -> int:
    """Return 1 if u >_lex v, -1 if u <_lex v, 0 if equal."""
    if u.degree != v.degree:
        raise ContractError(f"lex comparison needs equal degrees: {u} vs {v}")
    for a, b in zip(u.indices, v.indices):
        if a != b:
            return 1 if a < b else -1
    return 0


def _check_degree(ctx: SpreadContext, ell: int) -> None:
    if not 0 <= ell <= ctx.d:
        raise OutOfRangeError(f"degree {ell} outside [0, {ctx.d}]")


def count_t_spread(ctx: SpreadContext, ell: int) -> int:
    """|M_{n,l,t}| = C(n + (l-1) - (t_1 + ... + t_{l-1}), l)."""
    _check_degree(ctx, ell)
    if ell == 0:
        return 1
    return binom(ctx.n + ell - 1 - ctx.gap_sum(ell - 1), ell)


def iter_t_spread(ctx: SpreadContext, ell: int) -> Iterator[Monomial]:
    """Lazily yield M_{n,l,t} in descending lex order."""
    _check_degree(ctx, ell)
    n, t = ctx.n, ctx.t
    # tail[k]: room needed after position k (0-based) = t_{k+1} + ... + t_{l-1}
    tail = [sum(t[k:ell - 1]) for k in range(ell)]

    def rec(prefix: tuple[int, ...], k: int) -> Iterator[Monomial]:
        if k == ell:
            yield Monomial(prefix)
            return
        lo = 1 if k == 0 else prefix[-1] + t[k - 1]
        for j in range(lo, n - tail[k] + 1):
            yield from rec(prefix + (j,), k + 1)

    yield from rec((), 0)


def enumerate_t_spread(ctx: SpreadContext, ell: int):
    """M_{n,l,t} as a MonomialSet, descending lex."""
    from .sets import MonomialSet

    return MonomialSet(ctx, ell, iter_t_spread(ctx, ell), check=False)


_FACTOR = re.compile(r"\s*x(\d+)(?:\^(\d+))?\s*")


def parse_monomial(text: str, ctx: SpreadContext | None = None) -> Monomial:
    """Parse ``"x1*x4^2*x6"``, the index list ``"1 4 4 6"``, or ``"1"`` (the unit).

    A lone ``"1"`` always means the unit monomial; write ``"x1"`` for x1.
    """
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if s == "":
        raise MonomialParseError("empty monomial", text, 0)
    if s == "1":
        return UNIT
    if s.startswith("x"):
        idx: list[int] = []
        pos = offset
        for k, piece in enumerate(s.split("*")):
            m = _FACTOR.fullmatch(piece)
            if not m:
                raise MonomialParseError(f"malformed factor {piece.strip()!r}", text, pos)
            i = int(m.group(1))
            e = int(m.group(2)) if m.group(2) is not None else 1
            if i == 0:
                raise MonomialParseError("variable index 0", text, pos)
            if e == 0:
                raise MonomialParseError("zero exponent", text, pos)
            idx.extend([i] * e)
            pos += len(piece) + 1
        u = Monomial(tuple(sorted(idx)))
    else:
        idx = []
        for m in re.finditer(r"\S+", s):
            tok = m.group()
            if not tok.isdigit():
                raise MonomialParseError(f"malformed index {tok!r}", text, offset + m.start())
            i = int(tok)
            if i == 0:
                raise MonomialParseError("variable index 0", text, offset + m.start())
            if idx and i < idx[-1]:
                raise MonomialParseError("index list must be non-decreasing", text, offset + m.start())
            idx.append(i)
        u = Monomial(tuple(idx))
    if ctx is not None and u.indices and u.indices[-1] > ctx.n:
        raise MonomialParseError(f"index {u.indices[-1]} exceeds n = {ctx.n}", text)
    return u


def format_monomial(u: Monomial) -> str:
    if not u.indices:
        return "1"
    parts = []
    for i, e in u.exponents().items():
        parts.append(f"x{i}" if e == 1 else f"x{i}^{e}")
    return "*".join(parts)


def to_monomials(items: Iterable) -> list[Monomial]:
    """Coerce index sequences / strings / Monomials to Monomials."""
    out = []
    for item in items:
        if isinstance(item, Monomial):
            out.append(item)
        elif isinstance(item, str):
            out.append(parse_monomial(item))
        else:
            out.append(Monomial(tuple(item)))
    return out
