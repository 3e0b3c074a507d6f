import random

import pytest
from hypothesis import given, settings

from dualsym.partition import (DegreeError, Equivalence, ParseError, Partition,
                               Point, identity, is_ip, lam, multiply, parse,
                               rank, rank_checked, render, rho, serialize, star,
                               zero)

from conftest import cs_elements, ip_elements
from oracles import chain_product

GLUE_A_LEFT = "{1,2,1'|3,4|5,2'|3',4',5'|6,7,6',7',8'|8}"
GLUE_A_RIGHT = "{1,1'|2,3,4|2',3'|5,5'|6,4'|7|6',7'|8,8'}"
# as displayed, block order differs from canonical order
GLUE_A_PRODUCT_DISPLAYED = "{1,2,1'|3,4|2',3'|5,5'|6,7,4',8'|6',7'|8}"
GLUE_A_PRODUCT = "{1,2,1'|3,4|5,5'|6,7,4',8'|8|2',3'|6',7'}"
GLUE_B_LEFT = "{1,2'|2,3,1',4'|4,3'|5,6,5',6',7'|7,8,8'}"
GLUE_B_RIGHT = "{1,2'|2,1',3'|3,4,4'|5,6',8'|6,5'|7,8,7'}"
GLUE_B_PRODUCT = "{1,1',3'|2,3,4,2',4'|5,6,7,8,5',6',7',8'}"


class TestParse:
    def test_identity(self):
        assert parse("{1,1'|2,2'}") == identity(2)

    def test_zero(self):
        assert parse("{1,2,1',2'}") == zero(2)

    def test_degree8_factor(self):
        a = parse(GLUE_A_LEFT)
        assert a.degree == 8
        assert rank(a) == 6
        assert not is_ip(a)

    def test_point_order_inside_block_is_free(self):
        assert parse("{2',1,2,1'}") == zero(2)

    def test_degree_prefix(self):
        a = parse("3:{1,2,3,1',2',3'}")
        assert a == zero(3)
        assert serialize(a, with_degree=True) == "3:{1,2,3,1',2',3'}"

    @pytest.mark.parametrize("text", [
        "{1,1'|2,2'", "1,1'", "{1,1'||2,2'}", "{1,a}", "{}", "{1,1',}", "{1;1'}",
    ])
    def test_syntax_errors(self, text):
        with pytest.raises(ParseError):
            parse(text)

    def test_duplicate_point(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse("{1,1'|1,2'|2}")

    def test_missing_point(self):
        with pytest.raises(ParseError, match="missing"):
            parse("{1,1'|2}")

    def test_index_zero(self):
        with pytest.raises(ParseError):
            parse("{0,0'}")

    def test_index_above_degree(self):
        with pytest.raises(ParseError):
            parse("{1,1'|2,2'}", degree=1)
        with pytest.raises(ParseError):
            parse("1:{1,1'|2,2'}")


class TestSerialize:
    def test_identity_1(self):
        assert serialize(identity(1)) == "{1,1'}"

    def test_zero_2(self):
        assert serialize(zero(2)) == "{1,2,1',2'}"

    @given(cs_elements())
    def test_round_trip(self, a):
        s = serialize(a)
        assert serialize(parse(s)) == s
        assert parse(s) == a

    @given(cs_elements())
    def test_canonical_order(self, a):
        # blocks sorted by least point under 1<..<n<1'<..<n'
        firsts = [b[0] for b in a.blocks]
        assert firsts == sorted(firsts)
        assert all(list(b) == sorted(b) for b in a.blocks)
        again = Partition(a.degree, a.blocks)
        assert again.blocks == a.blocks


def test_point_blocks():
    a = parse("{1,2'|2,1'}")
    assert a.point_blocks() == [[Point(1), Point(2, True)], [Point(2), Point(1, True)]]
    assert Partition.from_points(2, a.point_blocks()) == a


def test_partition_is_immutable():
    a = identity(2)
    with pytest.raises(AttributeError):
        a.degree = 3


def test_invalid_blocks():
    with pytest.raises(ValueError):
        Partition(2, [[0, 1], [1, 2, 3]])
    with pytest.raises(ValueError):
        Partition(2, [[0, 1], [2]])


class TestMultiply:
    def test_gluing_degree8_a(self):
        p = multiply(parse(GLUE_A_LEFT), parse(GLUE_A_RIGHT))
        assert serialize(p) == GLUE_A_PRODUCT
        assert p == parse(GLUE_A_PRODUCT_DISPLAYED)

    def test_gluing_degree8_b(self):
        p = multiply(parse(GLUE_B_LEFT), parse(GLUE_B_RIGHT))
        assert serialize(p) == GLUE_B_PRODUCT
        assert rank(p) == 3

    def test_identity_law(self, ip3):
        e = identity(3)
        for a in ip3:
            assert multiply(a, e) == a
            assert multiply(e, a) == a

    def test_degree_mismatch(self):
        with pytest.raises(DegreeError):
            multiply(identity(2), identity(3))

    def test_operator(self):
        assert identity(2) * zero(2) == zero(2)

    def test_vanishing_middle_component(self):
        # {1'} of a meets {1} of b only: that component has no outer point
        a = parse("{1|2,2'|1'}")
        b = parse("{1|2,2'|1'}")
        assert multiply(a, b) == parse("{1|2,2'|1'}")

    def test_chain_oracle_cs2_all_pairs(self, cs2):
        for a in cs2:
            for b in cs2:
                assert multiply(a, b) == chain_product(a, b)

    @pytest.mark.slow
    def test_chain_oracle_ip3_all_pairs(self, ip3):
        for a in ip3:
            for b in ip3:
                assert multiply(a, b) == chain_product(a, b)

    def test_chain_oracle_cs3_all_pairs(self):
        from dualsym.enumeration import enumerate_cs
        cs3 = enumerate_cs(3)
        rng = random.Random(3)
        # all 203^2 pairs is ~41k oracle runs; every left factor with a
        # random sample of right factors keeps this quick
        for a in cs3:
            for b in rng.sample(cs3, 20):
                assert multiply(a, b) == chain_product(a, b)

    @settings(max_examples=300)
    @given(cs_elements(max_n=8), cs_elements(max_n=8))
    def test_chain_oracle_random(self, a, b):
        if a.degree != b.degree:
            b = Partition(a.degree, [range(2 * a.degree)])
        assert multiply(a, b) == chain_product(a, b)

    def test_associativity_cs2(self, cs2):
        for a in cs2:
            for b in cs2:
                ab = multiply(a, b)
                for c in cs2:
                    assert multiply(ab, c) == multiply(a, multiply(b, c))

    def test_associativity_ip3(self, ip3):
        for a in ip3:
            for b in ip3:
                ab = multiply(a, b)
                for c in ip3:
                    assert multiply(ab, c) == multiply(a, multiply(b, c))

    def test_closure_ip3(self, ip3):
        for a in ip3:
            for b in ip3:
                assert is_ip(multiply(a, b))

    @given(ip_elements(n=8), ip_elements(n=8), ip_elements(n=8))
    def test_random_ip8(self, a, b, c):
        ab = multiply(a, b)
        assert is_ip(ab)
        assert multiply(ab, c) == multiply(a, multiply(b, c))
        assert rank(ab) <= min(rank(a), rank(b))
        assert rho(a) <= rho(ab)
        assert lam(b) <= lam(ab)


class TestStar:
    def test_identity(self):
        assert star(identity(4)) == identity(4)

    def test_prime_swap(self):
        assert star(parse("{1,2,1'|3,2',3'}")) == parse("{1,1',2'|2,3,3'}")

    @given(cs_elements())
    def test_involution(self, a):
        assert star(star(a)) == a

    def test_inverse_ip3(self, ip3):
        for a in ip3:
            s = star(a)
            assert multiply(multiply(a, s), a) == a
            assert multiply(multiply(s, a), s) == s

    def test_unique_inverse_ip3(self, ip3):
        for a in ip3:
            inv = [x for x in ip3
                   if multiply(multiply(a, x), a) == a and multiply(multiply(x, a), x) == x]
            assert inv == [star(a)]

    def test_inverses_not_unique_outside_ip(self, cs2):
        # star stays a regular involution on CS_2, but some elements there
        # have more than one inverse
        for a in cs2:
            assert multiply(multiply(a, star(a)), a) == a
        u = parse("{1|2,1',2'}")
        inv = [x for x in cs2
               if multiply(multiply(u, x), u) == u and multiply(multiply(x, u), x) == x]
        assert star(u) in inv and len(inv) > 1

    @given(cs_elements(n=4), cs_elements(n=4))
    def test_anti_automorphism(self, a, b):
        assert star(multiply(a, b)) == multiply(star(b), star(a))


class TestRankAndProjections:
    def test_rank_identity(self):
        assert rank(identity(5)) == 5

    def test_rank_zero(self):
        assert rank(zero(5)) == 1

    def test_rank_checked(self):
        assert rank_checked(identity(3)) == (3, True)
        # Upsilon: two blocks, one rho-class and one lambda-class
        assert rank_checked(parse("{1,2|1',2'}")) == (2, False)

    def test_rho_identity(self):
        assert rho(identity(3)) == Equivalence(3, [[1], [2], [3]])

    def test_rho_zero(self):
        assert rho(zero(3)) == Equivalence(3, [[1, 2, 3]])

    def test_gluing_b_projections(self):
        p = parse(GLUE_B_PRODUCT)
        assert rho(p) == Equivalence(8, [[1], [2, 3, 4], [5, 6, 7, 8]])
        assert lam(p) == Equivalence(8, [[1, 3], [2, 4], [5, 6, 7, 8]])

    @given(ip_elements())
    def test_rank_counts_classes(self, a):
        assert rank(a) == len(rho(a)) == len(lam(a))

    def test_rank_subadditive_ip3(self, ip3):
        for a in ip3:
            for b in ip3:
                ab = multiply(a, b)
                assert rank(ab) <= min(rank(a), rank(b))
                assert rho(a) <= rho(ab) and lam(b) <= lam(ab)


class TestIsIP:
    def test_identity(self):
        assert is_ip(identity(3))

    def test_upsilon(self):
        assert not is_ip(parse("{1,2|1',2'}"))

    def test_gluing_b_factors(self):
        assert is_ip(parse(GLUE_B_LEFT)) and is_ip(parse(GLUE_B_RIGHT))


class TestEquivalence:
    def test_refines(self):
        fine = Equivalence(3, [[1], [2], [3]])
        coarse = Equivalence(3, [[1, 2], [3]])
        assert fine.refines(coarse) and not coarse.refines(fine)
        assert fine <= coarse and coarse >= fine

    def test_bad_classes(self):
        with pytest.raises(ValueError):
            Equivalence(3, [[1, 2]])

    def test_related(self):
        e = Equivalence(3, [[1, 3], [2]])
        assert e.related(1, 3) and not e.related(1, 2)


def test_render_rows():
    text = render(parse("{1,2,1'|3,2',3'}"))
    lines = text.splitlines()
    assert lines[0] == "1 [A]   [A] 1'"
    assert lines[1] == "2 [A]   [B] 2'"
    assert lines[2] == "3 [B]   [B] 3'"
    assert lines[3] == "A={1,2,1'}  B={3,2',3'}"
