"""Random generators of contexts, strongly stable sets/ideals and valid f-vectors."""

from vspread import MonomialSet, SpreadContext, minimalize, shadow_t, strongly_stable_closure, t_operator
from vspread.core import iter_t_spread


def random_context(rng, max_n, max_d=4, max_gap=2, full_support=False):
    d = rng.randint(2, max_d)
    t = tuple(rng.randint(0, max_gap) for _ in range(d - 1))
    lo = sum(t) + 1 if full_support else 1
    if lo > max_n:
        t = tuple(0 for _ in t)
        lo = 1
    return SpreadContext(rng.randint(lo, max_n), t)


def random_ss_set(rng, ctx, ell, density=None):
    """Strongly stable closure of a random seed subset of M_{n,l,t}."""
    M = list(iter_t_spread(ctx, ell))
    p = rng.random() * 0.3 if density is None else density
    seeds = [u for u in M if rng.random() < p]
    return strongly_stable_closure(MonomialSet(ctx, ell, seeds, check=False))


def random_ss_ideal(rng, ctx, density=None):
    """Components closed under exchanges and under the shadow of the previous one."""
    comps = []
    prev = None
    for ell in range(ctx.d + 1):
        p = rng.random() * 0.15 if density is None else density
        seeds = [u for u in iter_t_spread(ctx, ell) if ell > 0 and rng.random() < p]
        base = MonomialSet(ctx, ell, seeds, check=False)
        if prev is not None:
            base = base.union(shadow_t(prev))
        prev = strongly_stable_closure(base)
        comps.append(prev)
    return minimalize([u for c in comps for u in c], ctx), comps


def random_valid_f(rng, ctx):
    f = [1, rng.randint(0, ctx.n)]
    for ell in range(1, ctx.d):
        f.append(rng.randint(0, t_operator(f[-1], ctx, ell)))
    return tuple(f)

