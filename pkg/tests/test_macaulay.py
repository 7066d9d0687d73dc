from itertools import product

import pytest
from hypothesis import given, strategies as st

from vspread import (
    ClassificationError,
    ContractError,
    FTVector,
    Monomial,
    OutOfRangeError,
    SpreadContext,
    UnsupportedContextError,
    binom,
    binomial_expansion,
    complement_size,
    count_t_spread,
    enumerate_t_spread,
    ft_vector,
    is_lex_ideal,
    lex_ideal_from_ft_vector,
    t_operator,
    validate_ft_vector,
)
from vspread.macaulay import BinomialExpansion

from helpers import random_context, random_valid_f
from oracles import all_spread, ft_vector_brute, macaulay_coefficients, naive_shadow

EX = SpreadContext(6, (1, 0, 2))


def greedy_oracle(a, ell):
    """Largest a_l with C(a_l, l) <= a by linear scan, then recurse."""
    terms = []
    for j in range(ell, 0, -1):
        if a == 0:
            break
        x = j
        while binom(x + 1, j) <= a:
            x += 1
        terms.append((x, j))
        a -= binom(x, j)
    return tuple(terms)


class TestExpansion:
    def test_golden_example(self):
        e = binomial_expansion(2023, 3)
        assert e.terms == ((23, 3), (22, 2), (21, 1))
        assert e.value == 2023
        assert str(e) == "C(23,3) + C(22,2) + C(21,1)"

    def test_zero(self):
        assert binomial_expansion(0, 4).terms == ()

    def test_derived(self):
        assert binomial_expansion(10, 2).terms == greedy_oracle(10, 2) == ((5, 2),)
        assert binomial_expansion(11, 2).terms == greedy_oracle(11, 2) == ((5, 2), (1, 1))

    def test_bad_degree(self):
        with pytest.raises(ContractError):
            binomial_expansion(5, 0)

    @given(st.integers(0, 20000), st.integers(1, 7))
    def test_reconstruction(self, a, ell):
        e = binomial_expansion(a, ell)
        assert e.value == a
        assert e.is_canonical()
        assert e.terms == greedy_oracle(a, ell)

    def test_huge(self):
        a = 10**40 + 12345
        e = binomial_expansion(a, 5)
        assert e.value == a and e.is_canonical()

    def test_record(self):
        e = binomial_expansion(2023, 3)
        assert BinomialExpansion.from_record(e.to_record()) == e


class TestOperator:
    def test_golden_example(self):
        assert t_operator(2023, SpreadContext(31, (0, 1, 3, 1)), 3) == 7296

    def test_zero(self):
        assert t_operator(0, EX, 2) == 0

    def test_derived_example(self):
        # lex segment with complement 11 in M_{6,2,t}; count the complement of its shadow directly
        M2 = all_spread(6, (1, 0, 2), 2)
        seg = M2[: len(M2) - 11]
        brute = len(all_spread(6, (1, 0, 2), 3)) - len(naive_shadow(seg, 6, (1, 0, 2)))
        assert brute == 21
        assert t_operator(11, EX, 2) == 21

    def test_domain(self):
        with pytest.raises(OutOfRangeError):
            t_operator(16, EX, 2)
        with pytest.raises(ContractError):
            t_operator(1, EX, 4)
        with pytest.raises(ContractError):
            t_operator(1, EX, 0)
        with pytest.raises(UnsupportedContextError):
            t_operator(1, SpreadContext(3, (2, 1)), 1)

    def test_full_range_against_shadow_counts(self):
        ctx = SpreadContext(7, (1, 2, 0))
        for ell in range(1, ctx.d):
            M = all_spread(7, ctx.t, ell)
            top = len(all_spread(7, ctx.t, ell + 1))
            for a in range(len(M) + 1):
                seg = M[: len(M) - a]
                assert t_operator(a, ctx, ell) == top - len(naive_shadow(seg, 7, ctx.t))


class TestComplementSize:
    def test_extremes(self):
        ctx = SpreadContext(8, (2, 1, 2))
        for ell in range(1, ctx.d + 1):
            M = enumerate_t_spread(ctx, ell)
            assert complement_size(M.lex_min(), ctx).value == 0
            assert complement_size(M.lex_max(), ctx).value == len(M) - 1

    def test_derived_example(self):
        ctx = SpreadContext(8, (2, 1, 2))
        u = (2, 4, 6)
        brute = sum(1 for v in all_spread(8, ctx.t, 3) if v > u)
        assert complement_size(Monomial(u), ctx).value == brute

    def test_raw_and_canonical_views(self):
        ctx = SpreadContext(8, (2, 1, 2))
        for u in all_spread(8, ctx.t, 3):
            e = complement_size(Monomial(u), ctx)
            assert [j for _, j in e.raw_terms] == [3, 2, 1]
            assert e.is_canonical()
            assert e.terms == binomial_expansion(e.value, 3).terms
            assert e.terms == tuple(macaulay_coefficients(e.value, 3))

    def test_exhaustive_against_counting(self):
        for d in range(2, 5):
            for t in product(range(3), repeat=d - 1):
                for n in range(1, 9):
                    ctx = SpreadContext(n, t)
                    for ell in range(1, d + 1):
                        M = all_spread(n, t, ell)
                        for pos, u in enumerate(M):
                            e = complement_size(Monomial(u), ctx)
                            assert e.value == len(M) - pos - 1
                            raw = dict((j, a) for a, j in e.raw_terms)
                            p = e.lowest
                            if p is not None:
                                for j in range(p, ell):
                                    assert raw[j + 1] >= raw[j] + 1
                                assert all(raw[j] < j for j in range(1, p))


class TestFTVector:
    def test_parse_and_format(self):
        f = FTVector.parse("(1,6,11,18,0)")
        assert f.entries == (1, 6, 11, 18, 0)
        assert str(f) == "(1,6,11,18,0)"
        assert FTVector.parse("1, 6,11,18,0") == f
        assert f.f(-1) == 1 and f.f(3) == 0
        with pytest.raises(ContractError):
            FTVector.parse("1,,2")


class TestValidate:
    def test_golden_vector(self):
        rep = validate_ft_vector(FTVector((1, 6, 11, 18, 0)), EX)
        assert rep.valid and rep.first_violation is None
        assert [c.position for c in rep.checks] == [-1, 0, 1, 2, 3]

    def test_too_many_vertices(self):
        rep = validate_ft_vector(FTVector((1, 7, 0, 0, 0)), EX)
        assert not rep
        assert rep.first_violation.position == 0
        assert rep.first_violation.rule == "degree-0 bound"

    def test_derived_violation(self):
        rep = validate_ft_vector(FTVector((1, 6, 11, 22, 0)), EX)
        v = rep.first_violation
        assert (v.position, v.value, v.bound) == (2, 22, 21)
        assert v.describe() == "violated at ℓ=2: 22 > 21"

    def test_leading_entry(self):
        assert not validate_ft_vector(FTVector((0, 0, 0, 0, 0)), EX)
        assert not validate_ft_vector(FTVector((1, -1, 0, 0, 0)), EX)

    def test_length_mismatch(self):
        with pytest.raises(ContractError):
            validate_ft_vector(FTVector((1, 6, 11)), EX)

    def test_brute_force_classification(self):
        # every f-vector of a lex ideal in a small ring validates; all others are caught
        ctx = SpreadContext(4, (1, 0))
        Ms = [count_t_spread(ctx, ell) for ell in range(ctx.d + 1)]
        realised = set()
        for sizes in product(*(range(m + 1) for m in Ms[1:])):
            from vspread import lex_ideal_from_sizes

            J = lex_ideal_from_sizes(ctx, (0,) + sizes)
            realised.add(ft_vector(J).entries)
        for f1 in range(Ms[1] + 1):
            for f2 in range(Ms[2] + 1):
                for f3 in range(Ms[3] + 1):
                    f = (1, f1, f2, f3)
                    assert bool(validate_ft_vector(FTVector(f), ctx)) == (f in realised), f


class TestWitness:
    def test_golden_vector(self):
        J = lex_ideal_from_ft_vector(FTVector((1, 6, 11, 18, 0)), EX)
        assert [str(g) for g in J.generators] == [
            "x1*x2", "x1*x3", "x1*x4", "x1*x5", "x1*x6^2",
            "x2*x3^2", "x2*x3*x4", "x2*x4^2*x6", "x3*x4^2*x6",
        ]

    def test_all_free_is_zero_ideal(self):
        f = FTVector(tuple(count_t_spread(EX, ell) for ell in range(EX.d + 1)))
        assert lex_ideal_from_ft_vector(f, EX).is_zero()

    def test_invalid_raises_with_diagnostics(self):
        with pytest.raises(ClassificationError) as info:
            lex_ideal_from_ft_vector(FTVector((1, 6, 11, 22, 0)), EX)
        assert info.value.diagnostics.first_violation.bound == 21

    def test_random(self, rng):
        for _ in range(60):
            ctx = random_context(rng, 7, full_support=True)
            f = random_valid_f(rng, ctx)
            J = lex_ideal_from_ft_vector(FTVector(f), ctx)
            assert ft_vector_brute([g.indices for g in J.generators], ctx.n, ctx.t) == f
            assert is_lex_ideal(J)
