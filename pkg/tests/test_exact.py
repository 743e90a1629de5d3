import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordq.exact import (
    Comparison,
    IntPolynomial,
    QuadraticSurd,
    SturmChain,
    char_poly,
    compare_largest_root,
    compare_max_roots,
    count_roots_above,
    eval_sign,
    poly_divmod,
    poly_gcd,
    squarefree_part,
)


def prod_poly(roots):
    """Monic integer polynomial with the given integer roots."""
    return [int(round(c)) for c in np.poly(roots)]


class TestCharPoly:
    def test_small_known(self):
        # Q(K3) = 2I + A: eigenvalues 4, 1, 1
        assert char_poly([[2, 1, 1], [1, 2, 1], [1, 1, 2]]).coeffs == (1, -6, 9, -4)
        assert char_poly([]).coeffs == (1,)
        assert char_poly([[5]]).coeffs == (1, -5)

    def test_matches_numpy(self, rng):
        for n in range(1, 9):
            a = rng.integers(-3, 4, size=(n, n))
            a = a + a.T
            ours = char_poly(a.tolist()).coeffs
            ref = np.round(np.poly(a.astype(float))).astype(int)
            assert list(ours) == ref.tolist()

    def test_str(self):
        assert str(IntPolynomial((1, -6, 9, -4))) == "λ^3 - 6λ^2 + 9λ - 4"
        assert IntPolynomial((1, 0, -2)).to_json() == ["1", "0", "-2"]

    def test_not_monic_rejected(self):
        with pytest.raises(ValueError):
            IntPolynomial((2, 1))


class TestPolynomialArithmetic:
    def test_divmod(self):
        q, r = poly_divmod([1, -6, 11, -6], [1, -1])
        assert q == [1, -5, 6] and not any(r)

    def test_gcd_and_squarefree(self):
        p = prod_poly([1, 1, 2, 3])
        assert [Fraction(c) for c in poly_gcd(p, prod_poly([1, 5]))] == [1, -1]
        assert squarefree_part(p) == [Fraction(c) for c in prod_poly([1, 2, 3])]


class TestSurd:
    def test_make_extracts_squares(self):
        s = QuadraticSurd.make(1, 1, 12)
        assert (s.b, s.d) == (2, 3)
        assert QuadraticSurd.make(2, 3, 0).is_rational
        assert QuadraticSurd.make(0, 1, 9).is_rational
        assert float(QuadraticSurd.make(0, 1, 9)) == 3

    def test_sign_exact(self):
        # 1 - sqrt(2) < 0 ; 3 - sqrt(8) > 0 ; 3 - sqrt(9) = 0
        assert QuadraticSurd.make(1, -1, 2).sign() == -1
        assert QuadraticSurd.make(3, -1, 8).sign() == 1
        assert QuadraticSurd.make(3, -1, 9).sign() == 0

    @settings(max_examples=200, deadline=None)
    @given(st.integers(-50, 50), st.integers(-50, 50), st.integers(0, 200))
    def test_sign_matches_float(self, a, b, d):
        s = QuadraticSurd.make(a, b, d)
        v = a + b * math.sqrt(d)
        if abs(v) > 1e-9:
            assert s.sign() == (1 if v > 0 else -1)

    def test_eval_sign_at_root(self):
        t = QuadraticSurd.make(Fraction(5, 2), Fraction(1, 2), 17)  # root of x^2 - 5x + 2
        assert eval_sign([1, -5, 2], t) == 0
        assert eval_sign([1, -5, 3], t) == 1

    def test_minimal_polynomial(self):
        t = QuadraticSurd.make(Fraction(5, 2), Fraction(1, 2), 17)
        assert t.minimal_polynomial() == [1, -5, 2]


class TestRootComparison:
    def test_sturm_counts(self):
        p = prod_poly([-2, 1, 3, 7])
        chain = SturmChain(p)
        assert chain.count_between(Fraction(0), Fraction(5)) == 2
        assert count_roots_above(p, 3) == 1
        assert count_roots_above(p, Fraction(5, 2)) == 2

    @pytest.mark.parametrize("t, expected", [
        (7, Comparison.EQUAL), (6, Comparison.GREATER), (8, Comparison.LESS),
        (Fraction(13, 2), Comparison.GREATER),
    ])
    def test_compare_integer_roots(self, t, expected):
        assert compare_largest_root(prod_poly([-2, 1, 3, 7]), t) is expected

    def test_compare_surd_threshold(self):
        t = QuadraticSurd.make(Fraction(5, 2), Fraction(1, 2), 17)
        p = [1, -5, 2]
        assert compare_largest_root(p, t) is Comparison.EQUAL
        # times (x - 1): the largest root is unchanged
        assert compare_largest_root([1, -6, 7, -2], t) is Comparison.EQUAL
        assert compare_largest_root([1, -5, 3], t) is Comparison.LESS
        assert compare_largest_root([1, -5, 1], t) is Comparison.GREATER

    def test_repeated_roots(self):
        assert compare_largest_root(prod_poly([4, 4, 1]), 4) is Comparison.EQUAL

    def test_compare_max_roots(self):
        assert compare_max_roots(prod_poly([1, 5]), prod_poly([5, 2])) is Comparison.EQUAL
        assert compare_max_roots([1, 0, -2], [1, 0, -3]) is Comparison.LESS
        assert compare_max_roots([1, 0, -3], [1, 0, -2]) is Comparison.GREATER
        # nearly equal roots: sqrt(2) < 99/70 by about 7e-5
        assert compare_max_roots([1, 0, -2], [70, -99]) is Comparison.LESS

    def test_comparison_of(self):
        assert Comparison.of(1.0, 2.0) is Comparison.LESS
        assert Comparison.of(2.0, 2.0) is Comparison.EQUAL
        assert str(Comparison.GREATER) == "Greater"
