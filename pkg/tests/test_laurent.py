import random
from fractions import Fraction

import pytest

from liftbank.errors import EmptySupport
from liftbank.laurent import LaurentPoly, is_dyadic

F = Fraction


def rand_poly(rng, lo=-4, hi=4):
    return LaurentPoly({n: F(rng.randint(-5, 5), rng.randint(1, 4))
                        for n in range(lo, hi)})


class TestRingOps:
    def test_add_cancellation(self):
        a = LaurentPoly({0: 1, 1: 1})
        b = LaurentPoly({1: -1})
        assert a + b == LaurentPoly({0: 1})

    def test_product(self):
        # (1 + z)(1 - z) = 1 - z^2
        a = LaurentPoly({0: 1, -1: 1})
        b = LaurentPoly({0: 1, -1: -1})
        assert a * b == LaurentPoly({0: 1, -2: -1})

    def test_zero_annihilates(self):
        rng = random.Random(0)
        for _ in range(20):
            assert LaurentPoly.zero() * rand_poly(rng) == LaurentPoly.zero()

    def test_no_stored_zeros(self):
        rng = random.Random(1)
        for _ in range(50):
            f, g = rand_poly(rng), rand_poly(rng)
            for res in (f + g, f - g, f * g, -f, f.scale(F(3, 7))):
                assert all(v != 0 for _, v in res.items())

    def test_support_endpoints_nonzero(self):
        rng = random.Random(2)
        for _ in range(50):
            f = rand_poly(rng) * rand_poly(rng)
            if f:
                a, b = f.support()
                assert f.coeff(a) != 0 and f.coeff(b) != 0

    def test_order_additivity(self):
        rng = random.Random(3)
        for _ in range(50):
            f, g = rand_poly(rng), rand_poly(rng)
            if f and g:
                assert (f * g).order() == f.order() + g.order()

    def test_shift_is_delay(self):
        # multiplying by z^-1 moves the tap at 0 to 1
        assert LaurentPoly({0: 1}).shift(1) == LaurentPoly({1: 1})


class TestMeasures:
    def test_support_examples(self):
        assert LaurentPoly({0: 1, 3: 1}).support() == (0, 3)
        haar_low = LaurentPoly({-1: F(1, 2), 0: F(1, 2)})
        assert haar_low.support() == (-1, 0)

    def test_support_of_zero(self):
        with pytest.raises(EmptySupport):
            LaurentPoly.zero().support()

    def test_order_examples(self):
        assert LaurentPoly({0: 1, 3: 1}).order() == 3
        assert LaurentPoly.constant(5).order() == 0
        assert LaurentPoly({-1: 1, 0: -1}).order() == 1

    def test_supprad(self):
        assert LaurentPoly({-1: 1, 2: 1}).supprad() == 2
        assert LaurentPoly({0: 7}).supprad() == 0
        assert LaurentPoly({-2: 1, 1: 1}).supprad() == 2


class TestEvaluate:
    def test_haar_dc(self):
        h0 = LaurentPoly({-1: F(1, 2), 0: F(1, 2)})
        h1 = LaurentPoly({-1: 1, 0: -1})
        assert h0(1) == 1
        assert h1(1) == 0

    def test_at_two(self):
        f = LaurentPoly({-1: 1, 1: -1})  # z - z^-1
        assert f(2) == F(3, 2)

    def test_rejects_zero_point(self):
        with pytest.raises(ZeroDivisionError):
            LaurentPoly.constant(1)(0)


class TestReflect:
    def test_examples(self):
        assert LaurentPoly({0: 1, 1: 1}).reflect() == LaurentPoly({0: 1, -1: 1})
        assert LaurentPoly.constant(3).reflect() == LaurentPoly.constant(3)
        f = LaurentPoly({-1: 1, 1: -1})
        assert f.reflect() == -f

    def test_involution(self):
        rng = random.Random(4)
        for _ in range(30):
            f = rand_poly(rng)
            assert f.reflect().reflect() == f


class TestSymmetry:
    def test_haar_filters(self):
        h0 = LaurentPoly({-1: F(1, 2), 0: F(1, 2)})
        tag = h0.symmetry()
        assert (tag.kind, tag.axis) == ("HS", F(-1, 2))
        h1 = LaurentPoly({-1: 1, 0: -1})
        tag = h1.symmetry()
        assert (tag.kind, tag.axis) == ("HA", F(-1, 2))

    def test_wa(self):
        tag = LaurentPoly({-1: 1, 1: -1}).symmetry()
        assert (tag.kind, tag.axis) == ("WA", 0)

    def test_ws(self):
        tag = LaurentPoly({-1: 1, 0: 5, 1: 1}).symmetry()
        assert (tag.kind, tag.axis) == ("WS", 0)

    def test_none(self):
        assert LaurentPoly({0: 1, 1: 2}).symmetry().kind == "NONE"

    def test_mirrored_halves_classify(self):
        # build filters by mirroring a random half about a chosen axis
        rng = random.Random(5)
        for _ in range(60):
            axis2 = rng.choice([-3, -1, 0, 1, 2, 4])  # twice the axis
            sign = rng.choice([1, -1])
            c = {}
            for k in range(1, rng.randint(2, 4)):
                v = F(rng.randint(1, 9))
                n = (axis2 + k) // 2 + k if axis2 % 2 else axis2 // 2 + k
                c[n] = v
                c[axis2 - n] = sign * v
            f = LaurentPoly(c)
            tag = f.symmetry()
            assert tag.axis == F(axis2, 2)
            if axis2 % 2 == 0:
                assert tag.kind == ("WS" if sign == 1 else "WA")
            else:
                assert tag.kind == ("HS" if sign == 1 else "HA")

    def test_reflect_negates_axis(self):
        f = LaurentPoly({0: 2, 1: 3, 2: 2})
        g = f.reflect()
        assert f.symmetry().kind == g.symmetry().kind
        assert f.symmetry().axis == -g.symmetry().axis


class TestDyadic:
    def test_predicate(self):
        assert is_dyadic(F(3, 8))
        assert is_dyadic(5)
        assert not is_dyadic(F(1, 3))

    def test_poly_flags(self):
        assert LaurentPoly({0: F(1, 4), 1: 2}).is_dyadic
        assert not LaurentPoly({0: F(1, 6)}).is_dyadic
        assert LaurentPoly({0: 3}).is_integer
