import random

import pytest
from hypothesis import given, settings, strategies as st

from gdnbasis.algebra import Alphabet, DVar, Monomial, Polynomial, weight_minus_one_monomials
from gdnbasis.errors import WeightError
from gdnbasis.groebner import RelationSet
from gdnbasis.novikov import (
    Circ,
    Gen,
    Tableau,
    check_gsb_gdn,
    check_identities,
    critical_multiples,
    embed,
    format_gdn,
    gdn_composition,
    gdn_reduce,
    member_gdn,
    nf_gdn,
    nonfree_witness,
    parse_gdn,
    span_oracle,
    tableau_enumerate,
    tableau_leading,
    tableau_to_poly,
)
from gdnbasis.parse import parse_poly
from gdnbasis.sampling import random_poly

import oracles

a = Gen(0)


def m(*pairs):
    return Monomial([DVar(b, g) for b, g in pairs])


def exprs(ngens, max_leaves=5):
    leaf = st.integers(0, ngens - 1).map(Gen)
    return st.recursive(leaf, lambda c: st.builds(Circ, c, c), max_leaves=max_leaves)


class TestEmbed:
    def test_square(self, A):
        assert A.format(embed(Circ(a, a))) == "a[0]*a[-1]"

    def test_left_normed_four(self, A):
        # frozen from the calculus oracle in tests/oracles.py
        e = Circ(Circ(Circ(a, a), a), a)
        assert A.format(embed(e)) == "a[2]*a[-1]^3 + 4*a[1]*a[0]*a[-1]^2 + a[0]^3*a[-1]"

    def test_right_nested(self, A):
        assert A.format(embed(Circ(a, Circ(a, a)))) == "a[0]^2*a[-1]"

    @settings(max_examples=60, deadline=None)
    @given(exprs(2, 6))
    def test_matches_calculus_oracle(self, e):
        AB = Alphabet(["a", "b"])

        def ev(node):
            if isinstance(node, Gen):
                return oracles.fn(AB.names[node.gen])
            return oracles.circ(ev(node.left), ev(node.right))

        assert oracles.same(embed(e), ev(e), AB)

    @settings(max_examples=60, deadline=None)
    @given(exprs(3, 7))
    def test_graded(self, e):
        from gdnbasis.novikov import leaves

        f = embed(e)
        assert f.weights() == {-1}
        assert f.lengths() == {leaves(e)}

    def test_parse_roundtrip(self, AB):
        e = parse_gdn("(a o b) o (b o a)", AB)
        assert e == Circ(Circ(Gen(0), Gen(1)), Circ(Gen(1), Gen(0)))
        assert parse_gdn(format_gdn(e, AB), AB) == e


class TestIdentities:
    def test_generators(self, A):
        x = A.var("a")
        assert check_identities(x, x, x) == (Polynomial(), Polynomial())

    def test_mixed(self, AB):
        d1, d2 = check_identities(AB.var("a", 0), AB.var("a"), AB.var("b"))
        assert d1.is_zero() and d2.is_zero()

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 2**32))
    def test_random(self, seed):
        rng = random.Random(seed)
        x, y, z = (random_poly(rng, 3) for _ in range(3))
        d1, d2 = check_identities(x, y, z)
        assert d1.is_zero() and d2.is_zero()

    def test_nonfree_witness(self):
        lhs, rhs = nonfree_witness()
        assert (lhs - rhs).is_zero()
        assert lhs.lengths() == {6}


class TestTableau:
    def test_single_box(self):
        assert tableau_enumerate(1, 1) == [Tableau(((0,),))]

    def test_degree_three(self, A):
        ts = tableau_enumerate(1, 3)
        polys = {A.format(tableau_to_poly(t)) for t in ts}
        assert polys == {"a[1]*a[-1]^2 + a[0]^2*a[-1]", "a[0]^2*a[-1]"}

    def test_one_row(self, A):
        t = Tableau(((0, 0, 0),))
        assert t.row_lengths == (2,) and t.degree == 3
        assert A.format(tableau_to_poly(t)) == "a[1]*a[-1]^2 + a[0]^2*a[-1]"
        assert tableau_leading(t) == m((1, 0), (-1, 0), (-1, 0))

    def test_two_rows(self, A):
        t = Tableau(((0, 0), (0,)))
        assert t.to_expr() == Circ(a, Circ(a, a))
        assert A.format(tableau_to_poly(t)) == "a[0]^2*a[-1]"

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6, 7, 8])
    def test_counts_one_generator(self, d):
        assert len(tableau_enumerate(1, d)) == oracles.partitions(d - 1)

    @pytest.mark.parametrize("ngens,d", [(n, d) for n in (1, 2) for d in range(1, 7)])
    def test_leading_bijection(self, ngens, d):
        ts = tableau_enumerate(ngens, d)
        leads = [tableau_leading(t) for t in ts]
        assert len(set(leads)) == len(leads)
        assert set(leads) == set(weight_minus_one_monomials(ngens, d))

    @pytest.mark.parametrize("ngens,d", [(1, 6), (2, 5), (3, 4)])
    def test_closed_form_leading(self, ngens, d):
        for t in tableau_enumerate(ngens, d):
            assert tableau_to_poly(t).lm == tableau_leading(t)

    def test_filling_rules(self):
        with pytest.raises(ValueError):
            Tableau(((0, 1, 0),))  # tail must not decrease
        with pytest.raises(ValueError):
            Tableau(((0, 0), (1,)))  # equal rows: first column must not increase
        with pytest.raises(ValueError):
            Tableau(((0,), (0,)))  # lone box above a row
        with pytest.raises(ValueError):
            Tableau(((0, 0), (0, 0, 0)))
        Tableau(((1, 0), (0,)))

    def test_bad_degree(self):
        with pytest.raises(ValueError):
            tableau_enumerate(1, 0)

    def test_serialization(self):
        t = Tableau(((1, 1, 1), (0, 0)))
        assert t.to_json() == {"row_lengths": [2, 2], "entries": [[1, 1, 1], [0, 0]]}


class TestCriticalMultiples:
    def test_case_ii(self, nov4):
        f21, f31 = nov4[4], nov4[8]
        cms = critical_multiples(f21, 0, f31, 0, 9, 4)
        assert [c.case for c in cms] == ["ii"]
        assert cms[0].w == m((0, 2), (0, 1), (-1, 0))

    def test_case_i_filters_disjoint_product(self, nov4):
        f21, f31 = nov4[4], nov4[8]
        cms = critical_multiples(f21, 1, f31, 0, 9, 4)
        L = m((1, 1), (0, 2), (-1, 0))
        assert all(c.lcm == L and c.case == "i" and len(c.negative) == 1 for c in cms)
        # padding by e1[-1] recreates lm(D f21) * lm(f31) and is dropped
        assert sorted(c.negative[0] for c in cms) == [1, 2, 3]

    def test_case_iii(self, nov4):
        f21, f23 = nov4[4], nov4[6]
        cms = critical_multiples(f21, 0, f23, 0, 8, 4)
        assert {c.case for c in cms} == {"iii"}
        assert sorted(c.positive for c in cms) == [(DVar(1, d),) for d in range(4)]
        assert all(c.negative == () for c in cms)
        more = critical_multiples(f21, 0, f23, 0, 9, 4)
        assert len(more) > len(cms)
        assert all(c.w.weight == -1 for c in more)

    def test_compositions_lie_in_ideal(self, nov4):
        f21, f23 = nov4[4], nov4[6]
        for c in critical_multiples(f21, 0, f23, 0, 7, 4):
            h = gdn_composition(f21, 0, f23, 0, c.w)
            assert h.weights() <= {-1}
            assert span_oracle(h, nov4, 7, gdn=True)


class TestCheckGsb:
    def test_novikov4(self, nov4):
        rep = check_gsb_gdn(nov4, 8)
        assert rep.clean and rep.checked > 0
        assert "bounded" in rep.note

    def test_single_generator_relation(self):
        E = Alphabet(["e1", "e2", "e3"])
        assert check_gsb_gdn(RelationSet(E, [E.var("e3")]), 6).clean

    def test_circle(self, circ_S):
        assert check_gsb_gdn(circ_S, 7).clean

    def test_weight_error(self, A):
        with pytest.raises(WeightError):
            check_gsb_gdn(RelationSet(A, [A.var("a", 0)]), 5)


class TestMembership:
    @pytest.mark.parametrize("d", range(2, 7))
    def test_circle_kills_everything_longer(self, circ_S, d):
        for w in weight_minus_one_monomials(1, d):
            assert member_gdn(Polynomial.monomial(w), circ_S)

    def test_novikov4_table(self, nov4):
        E = nov4.alphabet
        assert E.format(nf_gdn(parse_poly("e2 o e1", E), nov4)) == "e3[-1]"
        assert E.format(nf_gdn(parse_poly("(e2 o e1) o e1", E), nov4)) == "e4[-1]"
        assert gdn_reduce(parse_poly("e2 o e1", E), nov4).mode.startswith("bounded(")

    def test_length_one_not_member(self, circ_S):
        res = gdn_reduce(circ_S.alphabet.var("a"), circ_S)
        assert not res.member and res.mode == "exact"

    def test_weight_error(self, circ_S):
        with pytest.raises(WeightError):
            member_gdn(circ_S.alphabet.var("a", 0), circ_S)

    @pytest.mark.parametrize("d", range(1, 5))
    def test_commutator_agrees_with_oracle(self, d):
        AB = Alphabet(["a", "b"])
        S = RelationSet(AB, [parse_poly("a o b - b o a", AB)])
        for w in weight_minus_one_monomials(2, d):
            f = Polynomial.monomial(w)
            assert member_gdn(f, S) == span_oracle(f, S, w.dx_length, gdn=True)


class TestSpanOracle:
    def test_single_sword(self, A, circ_S):
        assert span_oracle(parse_poly("(a o a) o a", A), circ_S, 5)

    def test_generator_not_in_ideal(self, A, circ_S):
        assert not span_oracle(A.var("a"), circ_S, 8)

    def test_novikov4_square(self, nov4):
        E = nov4.alphabet
        assert span_oracle(parse_poly("e3^2", E), nov4, 6)

    def test_gdn_restriction(self, A, circ_S):
        # a[0]^3 has weight 0: in Id[S] but not produced by weight -1 S-words
        f = parse_poly("a[0]^3", A)
        assert span_oracle(f, circ_S, 6)
        assert not span_oracle(f, circ_S, 6, gdn=True)
