import pytest
from hypothesis import given, settings, strategies as st

from gesselwalks.series import (
    build_G,
    build_H,
    build_K,
    bump_coeff,
    make_series,
    monomial,
    section_y0,
    section_z0,
    series_add,
    series_mul,
    series_sub,
    series_to_json,
    substitute_x,
    verify_H_equation,
    verify_kernel_equation,
    verify_root_identity,
    x_of_yz,
)
from gesselwalks.walks import count_walks, f_tilde

CAPS = (6, 6, 6)

monos = st.tuples(
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=3),
)
series_st = st.dictionaries(monos, st.integers(min_value=-9, max_value=9), max_size=8).map(
    lambda d: make_series((3, 3, 3), d)
)


class TestSeriesRing:
    def test_storage_invariants(self):
        s = make_series((2, 2, 2), {(0, 0, 0): 3, (1, 1, 1): 0, (5, 0, 0): 7})
        assert (1, 1, 1) not in s.coeffs  # zero dropped
        assert (5, 0, 0) not in s.coeffs  # beyond cap dropped
        assert s.coeff((0, 0, 0)) == 3

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            make_series((2, 2, 2), {(-1, 0, 0): 1})

    def test_difference_of_squares(self):
        caps = (2, 0, 0)
        one_plus = make_series(caps, {(0, 0, 0): 1, (1, 0, 0): 1})
        one_minus = make_series(caps, {(0, 0, 0): 1, (1, 0, 0): -1})
        prod = series_mul(one_plus, one_minus)
        assert prod.coeffs == {(0, 0, 0): 1, (2, 0, 0): -1}

    def test_multiplication_by_zero(self):
        zero = make_series(CAPS, {})
        G = build_G(CAPS)
        assert series_mul(G, zero).coeffs == {}

    def test_multiplication_by_one(self):
        one = monomial(CAPS, 0, 0, 0)
        G = build_G(CAPS)
        assert series_mul(G, one).coeff((2, 0, 0)) == 2

    def test_cap_mismatch_rejected(self):
        a = make_series((2, 2, 2), {})
        b = make_series((3, 2, 2), {})
        with pytest.raises(ValueError):
            series_add(a, b)

    @settings(max_examples=40, deadline=None)
    @given(a=series_st, b=series_st, c=series_st)
    def test_addition_associative(self, a, b, c):
        assert series_add(series_add(a, b), c) == series_add(a, series_add(b, c))

    @settings(max_examples=40, deadline=None)
    @given(a=series_st, b=series_st)
    def test_multiplication_commutative(self, a, b):
        assert series_mul(a, b) == series_mul(b, a)

    @settings(max_examples=40, deadline=None)
    @given(a=series_st, b=series_st, c=series_st)
    def test_distributive(self, a, b, c):
        lhs = series_mul(a, series_add(b, c))
        rhs = series_add(series_mul(a, b), series_mul(a, c))
        assert lhs == rhs


class TestBuildG:
    def test_constant_term(self):
        assert build_G(CAPS).coeff((0, 0, 0)) == 1

    def test_single_east_step(self):
        assert build_G(CAPS).coeff((1, 1, 0)) == 1

    def test_two_step_vertical(self):
        assert build_G(CAPS).coeff((2, 0, 1)) == 1

    def test_every_coefficient_is_a_count(self):
        G = build_G((5, 5, 5))
        for m in range(6):
            for n1 in range(6):
                for n2 in range(6):
                    assert G.coeff((m, n1, n2)) == count_walks(m, n1, n2)


class TestKernel:
    def test_K_has_five_monomials(self):
        K = build_K(CAPS)
        assert K.coeffs == {
            (1, 0, 0): 1,
            (1, 0, 1): 1,
            (1, 2, 1): 1,
            (1, 2, 2): 1,
            (0, 1, 1): -1,
        }

    def test_kernel_equation_holds(self):
        report = verify_kernel_equation((8, 8, 8))
        assert report
        assert report.window == (7, 6, 6)
        assert report.compared > 0
        assert report.first_mismatch is None

    def test_kernel_equation_degenerate_caps(self):
        assert verify_kernel_equation((1, 1, 1))

    def test_kernel_equation_mutated_fails(self):
        caps = (8, 8, 8)
        bad = bump_coeff(build_G(caps), (4, 2, 1))
        report = verify_kernel_equation(caps, bad)
        assert not report
        assert report.first_mismatch is not None
        mono, lhs, rhs = report.first_mismatch
        assert lhs != rhs


class TestBuildH:
    def test_origin_diagonal(self):
        H = build_H((9, 4, 4))
        for n in range(4):
            assert H.coeff((2 * n + 1, 0, 0)) == count_walks(2 * n, 0, 0)

    def test_mixed_monomials_vanish(self):
        H = build_H((7, 7, 7))
        # mixed terms determined by the truncation: ey <= dy-2, ez <= dz-2
        for (ex, ey, ez), c in H.coeffs.items():
            if ey >= 1 and ez >= 1 and ex <= 6 and ey <= 5 and ez <= 5:
                assert c == 0

    def test_vertical_example(self):
        assert build_H((4, 4, 4)).coeff((3, 0, 1)) == 3

    def test_sections_match_f_tilde(self):
        H = build_H((7, 7, 7))
        for m in range(7):
            for n2 in range(6):
                assert section_y0(H).coeff((m, 0, n2)) == f_tilde(m, 0, n2)
            for n1 in range(6):
                assert section_z0(H).coeff((m, n1, 0)) == f_tilde(m, n1, 0)

    def test_H_equation_holds(self):
        report = verify_H_equation((8, 8, 8))
        assert report
        assert report.window == (7, 6, 6)

    def test_H_equation_mutated_fails(self):
        caps = (8, 8, 8)
        bad = bump_coeff(build_G(caps), (4, 2, 1))
        assert not verify_H_equation(caps, bad)


class TestRoot:
    def test_expansion_coefficients(self):
        X = x_of_yz((0, 6, 6))
        assert X.coeff((0, 1, 1)) == 1
        assert X.coeff((0, 2, 1)) == 0
        assert X.coeff((0, 1, 2)) == -1
        assert X.coeff((0, 0, 0)) == 0

    def test_only_odd_y_powers(self):
        X = x_of_yz((0, 8, 8))
        assert all(ey % 2 == 1 for (_, ey, _) in X.coeffs)

    def test_kills_the_kernel(self):
        # K(x(y,z), y, z) vanishes; the cancellation is exact on the full box
        X = x_of_yz((0, 8, 8))
        K = build_K((8, 8, 8))
        composed = substitute_x(K, X)
        assert composed.coeffs == {}

    def test_substitution_into_geometric_series(self):
        caps = (6, 6, 6)
        X = x_of_yz((0, 6, 6))
        geom = make_series(caps, {(m, 0, 0): 1 for m in range(1, 7)})
        via_compose = substitute_x(geom, X)
        acc = make_series((0, 6, 6), {})
        power = monomial((0, 6, 6), 0, 0, 0)
        for _ in range(1, 7):
            power = series_mul(power, X)
            acc = series_add(acc, power)
        assert via_compose == acc

    def test_root_identity_holds(self):
        report = verify_root_identity((10, 10, 10))
        assert report
        assert report.window == (0, 10, 10)

    def test_root_identity_lhs_coefficients(self):
        # passing means the left side is exactly the monomial y*z
        report = verify_root_identity((8, 8, 8))
        assert report.ok
        assert report.first_mismatch is None

    def test_root_identity_mutated_fails(self):
        caps = (8, 8, 8)
        bad = bump_coeff(build_G(caps), (2, 0, 1))
        assert not verify_root_identity(caps, bad)

    def test_substitution_requires_zero_constant(self):
        with pytest.raises(ValueError):
            substitute_x(build_G(CAPS), monomial((0, 2, 2), 0, 0, 0))


def test_series_json_dump():
    s = make_series((2, 2, 2), {(1, 0, 1): -3, (0, 0, 0): 2})
    assert series_to_json(s) == [
        {"ex": 0, "ey": 0, "ez": 0, "coef": "2"},
        {"ex": 1, "ey": 0, "ez": 1, "coef": "-3"},
    ]
