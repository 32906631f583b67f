import pytest
from hypothesis import given, strategies as st

from bettishift import (InputError, Monomial, ParseError, divides, lcm_of,
                        minimalize, parse_ideal, polarize)
from bettishift.monomials import parse_ideal_verbose


def M(*exps):
    return Monomial(tuple(exps))


class TestParse:
    def test_showcase_example(self):
        I = parse_ideal("a^4*b*c; b^3*c^2; c^5*a^3")
        assert I.var_names == ("a", "b", "c")
        assert [g.exponents for g in I.gens] == [(4, 1, 1), (0, 3, 2), (3, 0, 5)]

    def test_minimalization_drops_multiple(self):
        I, dropped = parse_ideal_verbose("x; x*y")
        assert [g.exponents for g in I.gens] == [(1, 0)]
        assert dropped == 1

    def test_zero_exponent_rejected(self):
        with pytest.raises(ParseError):
            parse_ideal("x^0")

    def test_empty_rejected(self):
        with pytest.raises(ParseError):
            parse_ideal("   ")

    def test_syntax_error_reports_position(self):
        with pytest.raises(ParseError) as exc:
            parse_ideal("x*; y")
        assert exc.value.position == 2

    def test_vars_declaration_orders_and_pads(self):
        I = parse_ideal("vars a,b,c; b*c")
        assert I.n == 3
        assert I.gens[0].exponents == (0, 1, 1)

    def test_undeclared_variable_rejected(self):
        with pytest.raises(ParseError):
            parse_ideal("vars a,b; c")

    def test_repeated_factor_accumulates(self):
        I = parse_ideal("x*x*y")
        assert I.gens[0].exponents == (2, 1)

    def test_whitespace_ignored(self):
        assert parse_ideal(" a ^ 2 * b ;  b ^ 3 ").render() == "a^2*b; b^3"


class TestRender:
    def test_canonical_form(self):
        I = parse_ideal("a^4*b*c; c*b^3*c")
        # factors come out in variable order, exponent 1 omitted
        assert I.render() == "a^4*b*c; b^3*c^2"

    def test_unused_variable_kept_via_declaration(self):
        I = parse_ideal("vars x,y; x^2")
        assert I.render() == "vars x,y; x^2"
        assert parse_ideal(I.render()) == I

    @given(st.data())
    def test_parse_render_roundtrip(self, data):
        n = data.draw(st.integers(1, 4))
        r = data.draw(st.integers(1, 4))
        names = "wxyz"[:n]
        gens = [
            M(*data.draw(st.tuples(*[st.integers(0, 3)] * n)
                         .filter(lambda t: any(t))))
            for _ in range(r)
        ]
        I = minimalize(gens, n, names)
        assert parse_ideal(I.render()) == I


class TestArithmetic:
    def test_lcm_showcase_example(self):
        gens = parse_ideal("a^4*b*c; b^3*c^2; c^5*a^3").gens
        assert lcm_of(gens).exponents == (4, 3, 5)

    def test_lcm_empty_is_one(self):
        assert lcm_of([], n=3).exponents == (0, 0, 0)

    def test_lcm_componentwise(self):
        assert lcm_of([M(1, 1, 0), M(0, 1, 1)]).exponents == (1, 1, 1)

    @pytest.mark.parametrize("d,m,expect", [
        (M(1, 0), M(2, 0), True),
        (M(2, 0), M(1, 1), False),
        (M(0, 0), M(5, 7), True),
    ])
    def test_divides(self, d, m, expect):
        assert divides(d, m) is expect

    def test_divides_ambient_mismatch(self):
        with pytest.raises(InputError):
            divides(M(1), M(1, 0))

    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3),
                              st.integers(0, 3)), min_size=1, max_size=6))
    def test_lcm_divisible_by_members(self, exps):
        ms = [M(*e) for e in exps]
        big = lcm_of(ms)
        assert all(m.divides(big) for m in ms)


class TestMinimalize:
    def test_strict_divisor_removed(self):
        I = minimalize([M(1, 0), M(1, 1), M(0, 2)], 2, "xy")
        assert [g.exponents for g in I.gens] == [(1, 0), (0, 2)]

    def test_pairwise_incomparable_unchanged(self):
        gens = [M(1, 1, 0), M(0, 1, 1), M(1, 0, 1)]
        I = minimalize(gens, 3, "xyz")
        assert list(I.gens) == gens

    def test_duplicates_collapse(self):
        I = minimalize([M(1, 0), M(1, 0)], 2, "xy")
        assert len(I.gens) == 1

    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                    min_size=1, max_size=8))
    def test_idempotent(self, exps):
        ms = [M(*e) for e in exps if any(e)]
        if not ms:
            return
        once = minimalize(ms, 2, "xy")
        assert minimalize(list(once.gens), 2, "xy") == once


class TestPolarize:
    def test_power_splits(self):
        I = parse_ideal("x^2*y")
        J, dm = polarize(I)
        assert J.n == 3
        assert J.var_names == ("x_1", "x_2", "y_1")
        assert J.gens[0].exponents == (1, 1, 1)

    def test_squarefree_fixed_point(self):
        I = parse_ideal("x*y; y*z")
        J, _ = polarize(I)
        assert [g.exponents for g in J.gens] == [g.exponents for g in I.gens]

    def test_degree_preserved(self):
        I = parse_ideal("a^4*b*c; b^3*c^2; c^5*a^3")
        J, dm = polarize(I)
        assert J.n == 12
        assert [g.degree for g in J.gens] == [g.degree for g in I.gens]
        assert [dm.fold(g).exponents for g in J.gens] == \
               [g.exponents for g in I.gens]

    def test_rejects_zero_and_unit(self):
        from bettishift import MonomialIdeal
        zero = MonomialIdeal(2, ("x", "y"), ())
        with pytest.raises(InputError):
            polarize(zero)
