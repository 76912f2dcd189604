"""Lattice membership, enumeration, and the exact JR minimum.

The expected s^2 values are frozen from the independent exhaustive oracle in
oracles.py (sympy factoring, raw valuation conditions, full window
enumeration), which also runs inside the tests.
"""

from fractions import Fraction as F

import pytest
from oracles import normalize_points, oracle_min

from jrnum import field, lattice
from jrnum.numeth import Surd


DESC = {abr: field.descriptor(*abr) for abr in [(3, 4, 2), (1, 4, 2), (15, 16, 2), (11, 12, 6)]}


class TestMembership:
    def test_examples(self):
        d = DESC[(3, 4, 2)]
        assert lattice.sk_membership(d, 0, F(4), F(-4))
        assert not lattice.sk_membership(d, 0, F(4), F(2))
        assert lattice.sk_membership(d, 0, F(0), F(0))

    def test_k_range_checked(self):
        with pytest.raises(ValueError):
            lattice.sk_membership(DESC[(3, 4, 2)], 1, F(0), F(0))

    def test_zero_coordinate_convention(self):
        d = DESC[(15, 16, 2)]
        assert lattice.sk_membership(d, 0, F(0), F(16))
        assert not lattice.sk_membership(d, 0, F(2), F(0))

    def test_denominator_blocked_by_integrality(self):
        d = DESC[(3, 4, 2)]
        assert not lattice.sk_membership(d, 0, F(1, 3), F(-1, 3))


class TestIntegerForm:
    def test_examples(self):
        spec = lattice.sk_integer_form(DESC[(3, 4, 2)], 0)
        assert (spec.dx, spec.dy) == (8, 8)
        spec = lattice.sk_integer_form(DESC[(15, 16, 2)], 1)
        assert (spec.dx, spec.dy) == (16, 16)
        spec = lattice.sk_integer_form(DESC[(11, 12, 6)], 0)
        assert (spec.dx, spec.dy) == (24, 24)

    @pytest.mark.parametrize("abr", [(3, 4, 2), (15, 16, 2), (11, 12, 6), (5, 44, 2)])
    def test_equivalent_to_membership(self, abr):
        d = field.descriptor(*abr)
        uv2 = 2 * d.u * d.v
        for k in range(d.big_n):
            spec = lattice.sk_integer_form(d, k)
            for X in range(-3 * spec.dx, 3 * spec.dx + 1, max(1, spec.dx // 4)):
                for Y in range(-3 * spec.dy, 3 * spec.dy + 1, max(1, spec.dy // 4)):
                    direct = lattice.sk_membership(d, k, F(X, uv2), F(Y, uv2))
                    assert direct == spec.contains(X, Y), (abr, k, X, Y)

    def test_equivalence_sweep_all_b200(self):
        # every good (a, b) with b <= 200, outermost k values, on- and off-grid
        seen = set()
        for triple in field.iter_good_triples(200):
            if (triple.a, triple.b) in seen:
                continue
            seen.add((triple.a, triple.b))
            d = field.describe(triple)
            uv2 = 2 * d.u * d.v
            for k in {0, d.big_n - 1}:
                spec = lattice.sk_integer_form(d, k)
                for i in range(-2, 3):
                    for j in range(-2, 3):
                        X, Y = i * spec.dx // 2, j * spec.dy // 2
                        direct = lattice.sk_membership(d, k, F(X, uv2), F(Y, uv2))
                        assert direct == spec.contains(X, Y), (triple, k, X, Y)

    def test_swap_symmetry(self):
        d = field.descriptor(15, 16, 2)
        vals = [F(0), F(4), F(8), F(-8), F(16), F(3, 2)]
        for k in range(d.big_n):
            for x in vals:
                for y in vals:
                    assert lattice.sk_membership(d, k, x, y) == lattice.sk_membership(
                        d, d.big_n - 1 - k, y, x
                    )


class TestQuadForm:
    def test_examples(self):
        d = DESC[(3, 4, 2)]
        assert lattice.quad_form(d, F(4), F(-4)) == 8
        assert lattice.quad_form(d, F(7), F(0)) == 49
        assert lattice.quad_form(d, F(1), F(1)) == F(7, 2)

    def test_positive_definite(self):
        d = DESC[(11, 12, 6)]
        floor = 1 - d.cos_theta
        for x in (F(-3), F(1, 2), F(5), F(0)):
            for y in (F(2), F(-7, 3), F(0)):
                q = lattice.quad_form(d, x, y)
                assert q >= floor * (x * x + y * y)
                assert (q == 0) == (x == 0 and y == 0)


class TestShortestVector:
    @pytest.mark.parametrize(
        "abr,s2,first_witness",
        [
            ((3, 4, 2), 8, (0, F(4), F(-4))),
            ((1, 4, 2), 16, (0, F(4), F(0))),
            ((15, 16, 2), 8, (1, F(8), F(-8))),
            ((11, 12, 6), 24, (0, F(12), F(-12))),
        ],
    )
    def test_examples(self, abr, s2, first_witness):
        res = lattice.shortest_vector(field.descriptor(*abr))
        assert res.s_squared == s2
        w = res.witnesses[0]
        assert (w.k, w.x, w.y) == first_witness
        assert all(wit.value == s2 for wit in res.witnesses)

    @pytest.mark.parametrize("abr", [(3, 4, 2), (1, 4, 2), (15, 16, 2), (11, 12, 6), (1, 20, 10), (23, 24, 3)])
    def test_against_oracle(self, abr):
        d = field.descriptor(*abr)
        res = lattice.shortest_vector(d)
        best, points = oracle_min(abr[0], abr[1])
        assert res.s_squared == best
        assert {(w.x, w.y) for w in res.witnesses} == normalize_points(points)

    def test_membership_of_witnesses(self):
        for d in DESC.values():
            for w in lattice.shortest_vector(d).witnesses:
                assert lattice.sk_membership(d, w.k, w.x, w.y)
                assert lattice.quad_form(d, w.x, w.y) == w.value

    def test_deterministic_under_reordering(self):
        d = field.descriptor(15, 16, 2)
        base = lattice.shortest_vector(d)
        assert base == lattice.shortest_vector(d, k_order=(2, 1, 0))
        assert base == lattice.shortest_vector(d, initial_cap=base.s_squared)

    def test_budget_error(self):
        with pytest.raises(lattice.EnumerationBudgetError):
            lattice.shortest_vector(field.descriptor(1, 20, 10), budget=3)


class TestJRNumber:
    def test_examples(self):
        assert lattice.jr_number(DESC[(3, 4, 2)]) == Surd(3, F(2), 2)
        assert lattice.jr_number(DESC[(1, 4, 2)]) == Surd(4, F(4), 1)
        assert lattice.jr_number(DESC[(11, 12, 6)]) == Surd(5, F(2), 6)

    def test_decimal(self):
        assert lattice.jr_number(DESC[(3, 4, 2)]).decimal(8) == "5.82842712"
        assert lattice.jr_number(DESC[(11, 12, 6)]).decimal(8) == "9.89897949"


class TestVerifyBounds:
    def test_examples_pass(self):
        for abr in [(3, 4, 2), (1, 4, 2), (15, 16, 2)]:
            d = field.descriptor(*abr)
            rep = lattice.verify_bounds(d, lattice.shortest_vector(d))
            assert rep.ok

    def test_conditional_applicability(self):
        d = field.descriptor(1, 4, 2)
        rep = lattice.verify_bounds(d, lattice.shortest_vector(d))
        cond = {c.name: c for c in rep.checks}
        assert cond["(b-a),(b+a) square-free and b >= 2t+a => s^2 = 16t^2"].applicable
        assert not cond["b-a square => s^2 = 8t"].applicable  # b - a = 3

    def test_even_exponent_triples_skip_midpoint_bounds(self):
        # (23, 24, 3): v2(b) - 1 = 2 is even, the midpoint lattice point does
        # not exist, and s^2 = 48 really exceeds 8t(b-a)/v^2 = 24.
        d = field.descriptor(23, 24, 3)
        res = lattice.shortest_vector(d)
        assert res.s_squared == 48
        rep = lattice.verify_bounds(d, res)
        byname = {c.name: c for c in rep.checks}
        assert not byname["s^2 <= 8t(b-a)/v^2"].applicable
        assert not byname["b-a square => s^2 = 8t"].applicable
        assert rep.ok  # the unconditional checks still hold

    def test_all_good_triples_small(self):
        seen = set()
        for triple in field.iter_good_triples(60):
            if (triple.a, triple.b) in seen:
                continue
            seen.add((triple.a, triple.b))
            d = field.describe(triple)
            rep = lattice.verify_bounds(d, lattice.shortest_vector(d))
            assert rep.ok, (triple, [c for c in rep.checks if c.applicable and not c.passed])
