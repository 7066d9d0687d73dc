"""Sets of same-degree t-spread monomials and their shadows."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Iterator

from .core import (
    Monomial,
    SpreadContext,
    count_t_spread,
    format_monomial,
    is_t_spread,
    iter_t_spread,
    parse_monomial,
    to_monomials,
)
from .errors import ContractError, InfeasibleSizeError, ShadowEmptyError


class MonomialSet:
    """A duplicate-free set of degree-``degree`` monomials, kept in descending lex order."""

    __slots__ = ("ctx", "degree", "elements", "_members")

    def __init__(self, ctx: SpreadContext, degree: int, elements: Iterable = (), check: bool = True):
        mons = to_monomials(elements)
        uniq = sorted(set(mons), key=lambda u: u.indices)
        if check:
            for u in uniq:
                if u.degree != degree:
                    raise ContractError(f"{u} has degree {u.degree}, expected {degree}")
                if not is_t_spread(u, ctx):
                    raise ContractError(f"{u} is not t-spread for {ctx}")
        self.ctx = ctx
        self.degree = degree
        self.elements: tuple[Monomial, ...] = tuple(uniq)
        self._members = frozenset(uniq)

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.elements)

    def __contains__(self, u) -> bool:
        return u in self._members

    def __eq__(self, other):
        if not isinstance(other, MonomialSet):
            return NotImplemented
        return (self.ctx, self.degree, self.elements) == (other.ctx, other.degree, other.elements)

    def __hash__(self):
        return hash((self.ctx, self.degree, self.elements))

    def __repr__(self):
        body = ", ".join(map(str, self.elements[:6]))
        more = ", ..." if len(self) > 6 else ""
        return f"MonomialSet(deg={self.degree}, {{{body}{more}}})"

    def as_frozenset(self) -> frozenset[Monomial]:
        return self._members

    def lex_min(self) -> Monomial | None:
        return self.elements[-1] if self.elements else None

    def lex_max(self) -> Monomial | None:
        return self.elements[0] if self.elements else None

    def union(self, other: "MonomialSet") -> "MonomialSet":
        return MonomialSet(self.ctx, self.degree, self._members | other._members, check=False)

    def difference(self, other: "MonomialSet") -> "MonomialSet":
        return MonomialSet(self.ctx, self.degree, self._members - other._members, check=False)

    def issubset(self, other: "MonomialSet") -> bool:
        return self._members <= other._members

    def to_record(self) -> dict:
        return {
            "context": self.ctx.to_record(),
            "degree": self.degree,
            "monomials": [list(u.indices) for u in self.elements],
        }

    @classmethod
    def from_record(cls, rec: dict) -> "MonomialSet":
        ctx = SpreadContext.from_record(rec["context"])
        return cls(ctx, int(rec["degree"]), [tuple(m) for m in rec["monomials"]])

    def to_text(self) -> str:
        return "".join(format_monomial(u) + "\n" for u in self.elements)


def read_set(text: str, ctx: SpreadContext, degree: int | None = None) -> MonomialSet:
    """Parse a set file: one monomial per line, or a JSON array of index lists."""
    stripped = text.strip()
    if stripped.startswith("["):
        mons = [Monomial(tuple(m)) for m in json.loads(stripped)]
        for u in mons:
            u.check_range(ctx.n)
    else:
        mons = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                mons.append(parse_monomial(line, ctx))
    degrees = {u.degree for u in mons}
    if len(degrees) > 1:
        raise ContractError(f"mixed degrees in set: {sorted(degrees)}")
    if degree is None:
        if not degrees:
            raise ContractError("empty set needs an explicit degree")
        degree = degrees.pop()
    return MonomialSet(ctx, degree, mons)


def shadow_t(L: MonomialSet) -> MonomialSet:
    """{x_i w : w in L, x_i w t-spread}; empty once the degree reaches d."""
    ctx = L.ctx
    out = set()
    if L.degree < ctx.d:
        for w in L:
            for i in range(1, ctx.n + 1):
                v = w.times(i)
                if is_t_spread(v, ctx):
                    out.add(v)
    return MonomialSet(ctx, L.degree + 1, out, check=False)


def shadow_0(L: MonomialSet) -> MonomialSet:
    """Classical shadow {x_i w}; the result lives in the all-zero context."""
    n = L.ctx.n
    zctx = SpreadContext.zero(n, max(L.ctx.d, L.degree + 1))
    out = {w.times(i) for w in L for i in range(1, n + 1)}
    return MonomialSet(zctx, L.degree + 1, out, check=False)


def stability_violation(L: MonomialSet) -> tuple[Monomial, Monomial] | None:
    """First (u, x_j u/x_i) with the exchange t-spread but missing from L, else None."""
    ctx = L.ctx
    for u in L:
        for i in u.support():
            for j in range(1, i):
                v = u.exchange(i, j)
                if v not in L and is_t_spread(v, ctx):
                    return u, v
    return None


def is_strongly_stable_set(L: MonomialSet) -> bool:
    return stability_violation(L) is None


def lex_violation(L: MonomialSet) -> Monomial | None:
    """The lex-largest t-spread monomial missing from L although L is not yet exhausted."""
    for u, v in zip(iter_t_spread(L.ctx, L.degree), L.elements):
        if u != v:
            return u
    return None


def is_lex_set(L: MonomialSet) -> bool:
    if L.degree > L.ctx.d:
        return len(L) == 0
    return lex_violation(L) is None


@dataclass(frozen=True)
class MaxStats:
    """counts[i-1] = m_i(L) (elements with max index i); prefix[i-1] = m_{<=i}(L).

    The unit monomial has no max index and is not counted.
    """

    counts: tuple[int, ...]
    prefix: tuple[int, ...]

    def m(self, i: int) -> int:
        return self.counts[i - 1] if 1 <= i <= len(self.counts) else 0

    def m_le(self, j: int) -> int:
        if j <= 0:
            return 0
        return self.prefix[min(j, len(self.prefix)) - 1]


def max_stats(L: MonomialSet) -> MaxStats:
    counts = [0] * L.ctx.n
    for u in L:
        if u.indices:
            counts[u.max_index - 1] += 1
    prefix, acc = [], 0
    for c in counts:
        acc += c
        prefix.append(acc)
    return MaxStats(tuple(counts), tuple(prefix))


def lex_segment(u: Monomial, ctx: SpreadContext) -> MonomialSet:
    """The initial lex segment {v in M_{n,l,t} : v >=_lex u}."""
    if not is_t_spread(u, ctx):
        raise ContractError(f"{u} is not t-spread for {ctx}")
    out = []
    for v in iter_t_spread(ctx, u.degree):
        out.append(v)
        if v == u:
            break
    return MonomialSet(ctx, u.degree, out, check=False)


def lex_set_of_size(ctx: SpreadContext, ell: int, s: int) -> MonomialSet:
    """The first s monomials of M_{n,l,t} in descending lex order."""
    total = count_t_spread(ctx, ell)
    if not 0 <= s <= total:
        raise InfeasibleSizeError(f"no lex set of size {s} in degree {ell} (|M| = {total})")
    return MonomialSet(ctx, ell, islice(iter_t_spread(ctx, ell), s), check=False)


def min_of_shadow(u: Monomial, ctx: SpreadContext) -> tuple[Monomial, int]:
    """Lex-minimum of the shadow of lex_segment(u), in closed form, plus the index r.

    With u = x_{i_1}...x_{i_l}, r is the least s in [0, l] such that
    n - i_{l-s} - (t_{l-1} + ... + t_{l-s}) >= t_l (i_0 = 0), and the
    minimum keeps x_{i_1}...x_{i_{l-r}} and then packs the remaining r+1
    variables as far right as the gaps t_{l-r+1}, ..., t_l allow.
    """
    ell = u.degree
    if not is_t_spread(u, ctx):
        raise ContractError(f"{u} is not t-spread for {ctx}")
    if ell >= ctx.d:
        raise ContractError(f"degree {ell} has no t-spread shadow (d = {ctx.d})")
    n, i = ctx.n, (0,) + u.indices
    t_ell = ctx.gap(ell)
    r = None
    for s in range(ell + 1):
        if n - i[ell - s] - sum(ctx.gap(ell - h) for h in range(1, s + 1)) >= t_ell:
            r = s
            break
    if r is None:
        raise ShadowEmptyError(f"lex segment of {u} has empty shadow for {ctx}")
    head = list(u.indices[: ell - r])
    tail = [n - sum(ctx.gap(p) for p in range(ell - (r - h), ell + 1)) for h in range(1, r + 2)]
    if tail[0] < 1 or (head and tail[0] < head[-1]):
        raise ShadowEmptyError(f"lex segment of {u} has empty shadow for {ctx}")
    return Monomial(tuple(head + tail)), r


def strongly_stable_closure(L: MonomialSet) -> MonomialSet:
    """Smallest strongly stable set containing L (close under t-spread exchanges)."""
    ctx = L.ctx
    members = set(L)
    stack = list(L)
    while stack:
        u = stack.pop()
        for i in u.support():
            for j in range(1, i):
                v = u.exchange(i, j)
                if v not in members and is_t_spread(v, ctx):
                    members.add(v)
                    stack.append(v)
    return MonomialSet(ctx, L.degree, members, check=False)
