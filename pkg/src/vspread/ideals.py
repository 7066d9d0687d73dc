"""Monomial ideals: minimal generators, t-spread components, f_t-vectors, lexification."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

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
from .errors import ContractError, NotStronglyStableError, UnitIdealError
from .macaulay import FTVector
from .sets import (
    MonomialSet,
    is_lex_set,
    is_strongly_stable_set,
    lex_set_of_size,
    shadow_0,
)


class MonomialIdeal:
    """A monomial ideal given by its minimal generators G(I).

    Build instances with :func:`minimalize`; the constructor trusts its input.
    """

    __slots__ = ("ctx", "generators")

    def __init__(self, ctx: SpreadContext, generators: Iterable[Monomial]):
        self.ctx = ctx
        self.generators: tuple[Monomial, ...] = tuple(
            sorted(generators, key=lambda u: (u.degree, u.indices))
        )

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ctx == other.ctx and self.generators == other.generators

    def __hash__(self):
        return hash((self.ctx, self.generators))

    def __repr__(self):
        return f"MonomialIdeal({self.ctx}, ({', '.join(map(str, self.generators))}))"

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(map(str, self.generators)) + ")"

    def generators_of_degree(self, j: int) -> tuple[Monomial, ...]:
        return tuple(u for u in self.generators if u.degree == j)

    @property
    def indeg(self) -> int | None:
        return self.generators[0].degree if self.generators else None

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return bool(self.generators) and self.generators[0].is_unit()

    def is_t_spread(self) -> bool:
        return all(is_t_spread(u, self.ctx) for u in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def to_record(self) -> dict:
        return {
            "context": self.ctx.to_record(),
            "generators": [list(u.indices) for u in self.generators],
        }

    @classmethod
    def from_record(cls, rec: dict) -> "MonomialIdeal":
        ctx = SpreadContext.from_record(rec["context"])
        gens = [Monomial(tuple(g)) for g in rec["generators"]]
        for g in gens:
            g.check_range(ctx.n)
        return minimalize(gens, ctx)

    def to_text(self) -> str:
        lines = [str(self.ctx)] + [format_monomial(u) for u in self.generators]
        return "\n".join(lines) + "\n"


def minimalize(gens: Iterable, ctx: SpreadContext) -> MonomialIdeal:
    """Drop every monomial divisible by another one in the collection."""
    mons = sorted(set(to_monomials(gens)), key=lambda u: (u.degree, u.indices))
    for u in mons:
        u.check_range(ctx.n)
    kept: list[Monomial] = []
    for u in mons:
        if not any(g.divides(u) for g in kept):
            kept.append(u)
    return MonomialIdeal(ctx, kept)


def read_ideal(text: str) -> MonomialIdeal:
    """Parse an ideal file (``n=<int> t=<list>`` header + generators) or its JSON form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return MonomialIdeal.from_record(json.loads(stripped))
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ContractError("ideal file is empty")
    fields = dict(tok.split("=", 1) for tok in lines[0].split() if "=" in tok)
    if "n" not in fields or "t" not in fields:
        raise ContractError(f"bad ideal header {lines[0]!r}; expected 'n=<int> t=<list>'")
    ctx = SpreadContext.parse(fields["n"], fields["t"])
    return minimalize([parse_monomial(ln, ctx) for ln in lines[1:]], ctx)


def graded_component_t(I: MonomialIdeal, ell: int) -> MonomialSet:
    """[I_l]_t: the t-spread monomials of degree l lying in I."""
    gens = [g for g in I.generators if g.degree <= ell]
    members = [m for m in iter_t_spread(I.ctx, ell) if any(g.divides(m) for g in gens)]
    return MonomialSet(I.ctx, ell, members, check=False)


def ft_vector(I: MonomialIdeal) -> FTVector:
    """(f_{-1}, ..., f_{d-1}) with f_{l-1} = |M_{n,l,t}| - |[I_l]_t|."""
    if I.is_unit():
        raise UnitIdealError("the unit ideal has no proper f_t-vector")
    ctx = I.ctx
    return FTVector(
        tuple(count_t_spread(ctx, ell) - len(graded_component_t(I, ell)) for ell in range(ctx.d + 1))
    )


def is_strongly_stable_ideal(I: MonomialIdeal) -> bool:
    if not I.is_t_spread():
        return False
    return all(is_strongly_stable_set(graded_component_t(I, ell)) for ell in range(I.ctx.d + 1))


def is_lex_ideal(I: MonomialIdeal) -> bool:
    if not I.is_t_spread():
        return False
    return all(is_lex_set(graded_component_t(I, ell)) for ell in range(I.ctx.d + 1))


def lex_layers(ctx: SpreadContext, sizes: Sequence[int]) -> list[tuple[MonomialSet, MonomialSet]]:
    """Pairs (L_l, B_l) for l = 0..d: L_l the lex set of size sizes[l] and
    B_l = L_l united with the classical shadow of B_{l-1} (all monomials of
    degree l in the ideal being built)."""
    layers = []
    prev: MonomialSet | None = None
    for ell, s in enumerate(sizes):
        L = lex_set_of_size(ctx, ell, s)
        zctx = SpreadContext.zero(ctx.n, ctx.d)
        B = MonomialSet(zctx, ell, L.elements, check=False)
        if prev is not None:
            B = B.union(MonomialSet(zctx, ell, shadow_0(prev).elements, check=False))
        layers.append((L, B))
        prev = B
    return layers


def lex_ideal_from_sizes(ctx: SpreadContext, sizes: Sequence[int]) -> MonomialIdeal:
    """Ideal generated by the lex sets L_l with |L_l| = sizes[l], l = 0..d."""
    if len(sizes) != ctx.d + 1:
        raise ContractError(f"need {ctx.d + 1} component sizes, got {len(sizes)}")
    gens: list[Monomial] = []
    for ell, s in enumerate(sizes):
        gens.extend(lex_set_of_size(ctx, ell, s))
    return minimalize(gens, ctx)


def lexify(I: MonomialIdeal) -> MonomialIdeal:
    """The unique t-spread lex ideal with the same f_t-vector as I."""
    if not is_strongly_stable_ideal(I):
        raise NotStronglyStableError(f"{I} is not a t-spread strongly stable ideal")
    sizes = [len(graded_component_t(I, ell)) for ell in range(I.ctx.d + 1)]
    return lex_ideal_from_sizes(I.ctx, sizes)
