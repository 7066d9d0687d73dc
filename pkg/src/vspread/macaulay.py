"""Binomial expansions, the t-spread Macaulay operator and f_t-vector classification."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .core import Monomial, SpreadContext, binom, count_t_spread, is_t_spread
from .errors import (
    ClassificationError,
    ContractError,
    OutOfRangeError,
    UnsupportedContextError,
)


@dataclass(frozen=True)
class BinomialExpansion:
    """a = sum of C(a_j, j) over ``terms`` (pairs (a_j, j), j descending).

    ``raw_terms`` keeps vanishing summands C(a_j, j) with a_j < j when the
    expansion came from a formula that produces them; otherwise it equals
    ``terms``.
    """

    degree: int
    terms: tuple[tuple[int, int], ...]
    raw_terms: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        if self.raw_terms is None:
            object.__setattr__(self, "raw_terms", self.terms)

    @property
    def value(self) -> int:
        return sum(binom(a, j) for a, j in self.terms)

    @property
    def lowest(self) -> int | None:
        """The index p of the last non-vanishing term."""
        return self.terms[-1][1] if self.terms else None

    def coefficient(self, j: int) -> int | None:
        for a, k in self.raw_terms:
            if k == j:
                return a
        return None

    def is_canonical(self) -> bool:
        """a_l > a_{l-1} > ... > a_p >= p >= 1 with consecutive j."""
        js = [j for _, j in self.terms]
        if js != list(range(self.degree, self.degree - len(js), -1)):
            return False
        coeffs = [a for a, _ in self.terms]
        if any(x <= y for x, y in zip(coeffs, coeffs[1:])):
            return False
        return not self.terms or (self.terms[-1][0] >= self.terms[-1][1] >= 1)

    def to_record(self) -> dict:
        return {"value": self.value, "degree": self.degree, "terms": [list(p) for p in self.terms]}

    @classmethod
    def from_record(cls, rec: dict) -> "BinomialExpansion":
        return cls(int(rec["degree"]), tuple((int(a), int(j)) for a, j in rec["terms"]))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"C({a},{j})" for a, j in self.terms)


def _largest_top(a: int, j: int) -> int:
    """Largest x with C(x, j) <= a, for a >= 1 (so x >= j)."""
    lo, hi = j, j + 1
    while binom(hi, j) <= a:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binom(mid, j) <= a:
            lo = mid
        else:
            hi = mid
    return lo


def binomial_expansion(a: int, ell: int) -> BinomialExpansion:
    """The unique (greedy) Macaulay expansion of a with respect to ell."""
    if ell < 1:
        raise ContractError(f"expansion degree must be >= 1, got {ell}")
    if a < 0:
        raise ContractError(f"cannot expand negative integer {a}")
    terms = []
    rest = a
    for j in range(ell, 0, -1):
        if rest == 0:
            break
        x = _largest_top(rest, j)
        terms.append((x, j))
        rest -= binom(x, j)
    return BinomialExpansion(ell, tuple(terms))


def _require_support(ctx: SpreadContext) -> None:
    if not ctx.full_support:
        raise UnsupportedContextError(
            f"operator needs n > t_1 + ... + t_(d-1); got n={ctx.n}, sum(t)={sum(ctx.t)}"
        )


def t_operator(a: int, ctx: SpreadContext, ell: int) -> int:
    """a^(n,l,t) = sum_{j=p+1}^{l+1} C(a_{j-1} + 1 - t_l, j)."""
    _require_support(ctx)
    if not 1 <= ell < ctx.d:
        raise ContractError(f"operator degree must lie in [1, {ctx.d - 1}], got {ell}")
    top = count_t_spread(ctx, ell)
    if not 0 <= a <= top:
        raise OutOfRangeError(f"a = {a} outside [0, |M_(n,{ell},t)| = {top}]")
    shift = 1 - ctx.gap(ell)
    return sum(binom(aj + shift, j + 1) for aj, j in binomial_expansion(a, ell).terms)


def complement_size(u: Monomial, ctx: SpreadContext) -> BinomialExpansion:
    """|M_{n,l,t} minus lex_segment(u)| as a binomial expansion read off u.

    a_j = n - i_{l-(j-1)} + j - 1 - (t_{l-(j-1)} + ... + t_{l-1}).
    """
    if not is_t_spread(u, ctx):
        raise ContractError(f"{u} is not t-spread for {ctx}")
    ell = u.degree
    i = u.indices
    raw = []
    for j in range(ell, 0, -1):
        pos = ell - (j - 1)
        a_j = ctx.n - i[pos - 1] + j - 1 - sum(ctx.gap(h) for h in range(pos, ell))
        raw.append((a_j, j))
    canonical = tuple((a, j) for a, j in raw if a >= j)
    return BinomialExpansion(ell, canonical, tuple(raw))


@dataclass(frozen=True)
class FTVector:
    """(f_{-1}, f_0, ..., f_{d-1}); use ``f(k)`` for the entry with index k."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    def f(self, k: int) -> int:
        return self.entries[k + 1]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"

    @classmethod
    def parse(cls, text: str) -> "FTVector":
        s = text.strip()
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        if not re.fullmatch(r"\s*-?\d+(\s*,\s*-?\d+)*\s*", s):
            raise ContractError(f"malformed f-vector {text!r}")
        return cls(tuple(int(x) for x in s.split(",")))

    def to_record(self) -> list[int]:
        return list(self.entries)

    @classmethod
    def from_record(cls, rec: Sequence[int]) -> "FTVector":
        return cls(tuple(rec))


@dataclass(frozen=True)
class BoundCheck:
    """One inequality of the classification: f_position compared with bound."""

    position: int
    value: int
    bound: int
    rule: str
    ok: bool

    def describe(self) -> str:
        if self.ok:
            return f"ℓ={self.position}: {self.value} <= {self.bound} ({self.rule})"
        if self.rule == "f_-1 = 1":
            return f"violated at ℓ={self.position}: {self.value} != 1"
        if self.rule == "non-negative":
            return f"violated at ℓ={self.position}: {self.value} < 0"
        return f"violated at ℓ={self.position}: {self.value} > {self.bound}"


@dataclass(frozen=True)
class FVectorReport:
    valid: bool
    checks: tuple[BoundCheck, ...]

    def __bool__(self):
        return self.valid

    @property
    def first_violation(self) -> BoundCheck | None:
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def to_record(self) -> dict:
        return {
            "valid": self.valid,
            "checks": [
                {"position": c.position, "value": c.value, "bound": c.bound, "rule": c.rule, "ok": c.ok}
                for c in self.checks
            ],
        }


def validate_ft_vector(f: FTVector, ctx: SpreadContext) -> FVectorReport:
    """Check f_{-1} = 1, f_0 <= n and f_{l+1} <= f_l^(n,l+1,t) for l = 0..d-2.

    Checks stop at the first failure; later operator bounds may be undefined.
    """
    _require_support(ctx)
    if len(f) != ctx.d + 1:
        raise ContractError(f"f-vector needs {ctx.d + 1} entries for d = {ctx.d}, got {len(f)}")
    checks: list[BoundCheck] = []

    def add(c: BoundCheck) -> bool:
        checks.append(c)
        return c.ok

    for k in range(-1, ctx.d):
        if f.f(k) < 0:
            add(BoundCheck(k, f.f(k), 0, "non-negative", False))
            return FVectorReport(False, tuple(checks))
    if not add(BoundCheck(-1, f.f(-1), 1, "f_-1 = 1", f.f(-1) == 1)):
        return FVectorReport(False, tuple(checks))
    if not add(BoundCheck(0, f.f(0), ctx.n, "degree-0 bound", f.f(0) <= ctx.n)):
        return FVectorReport(False, tuple(checks))
    for ell in range(0, ctx.d - 1):
        bound = t_operator(f.f(ell), ctx, ell + 1)
        if not add(BoundCheck(ell + 1, f.f(ell + 1), bound, "operator bound", f.f(ell + 1) <= bound)):
            return FVectorReport(False, tuple(checks))
    return FVectorReport(True, tuple(checks))


def lex_ideal_from_ft_vector(f: FTVector, ctx: SpreadContext):
    """The t-spread lex ideal whose f_t-vector is f."""
    from .ideals import lex_ideal_from_sizes

    report = validate_ft_vector(f, ctx)
    if not report:
        raise ClassificationError(
            f"{f} is not an f_t-vector: {report.first_violation.describe()}", report
        )
    sizes = [count_t_spread(ctx, ell) - f.f(ell - 1) for ell in range(ctx.d + 1)]
    return lex_ideal_from_sizes(ctx, sizes)
