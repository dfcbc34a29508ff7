import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from symphot.fock import (
    FockVector,
    PolarizationAmplitude,
    apply_creation,
    basis_state,
    inner_product,
    product_state,
    tensor,
    vacuum,
    H,
    V,
)

from conftest import random_params

HPOL = PolarizationAmplitude.horizontal()
VPOL = PolarizationAmplitude.vertical()


class TestCreation:
    def test_on_vacuum(self):
        out = apply_creation(vacuum(1), 0, H)
        assert out.amplitude((1, 0)) == pytest.approx(1.0)
        assert len(out) == 1

    def test_bosonic_enhancement(self):
        one = apply_creation(vacuum(1), 0, H)
        two = apply_creation(one, 0, H)
        assert two.amplitude((2, 0)) == pytest.approx(math.sqrt(2))

    def test_independent_polarizations(self):
        one_h = apply_creation(vacuum(1), 0, H)
        hv = apply_creation(one_h, 0, V)
        assert hv.amplitude((1, 1)) == pytest.approx(1.0)

    def test_mode_out_of_range(self):
        with pytest.raises(ValueError):
            apply_creation(vacuum(1), 1, H)

    def test_distinct_slots_commute(self):
        a = apply_creation(apply_creation(vacuum(2), 0, H), 1, V)
        b = apply_creation(apply_creation(vacuum(2), 1, V), 0, H)
        assert dict(a.items()) == dict(b.items())


class TestProductState:
    def test_two_identical(self):
        st_ = product_state([HPOL, HPOL])
        assert st_.amplitude((2, 0)) == pytest.approx(math.sqrt(2))
        assert st_.norm_squared() == pytest.approx(2.0)  # = N!

    def test_orthogonal_pair(self):
        st_ = product_state([HPOL, VPOL])
        assert st_.amplitude((1, 1)) == pytest.approx(1.0)
        assert st_.norm_squared() == pytest.approx(1.0)  # = ((N/2)!)^2

    def test_diagonal_antidiagonal(self):
        s = 1 / math.sqrt(2)
        plus = PolarizationAmplitude(s, s)
        minus = PolarizationAmplitude(s, -s)
        st_ = product_state([plus, minus])
        # (a_H^2 - a_V^2)/2 |0> = (|2H> - |2V>)/sqrt(2)
        assert st_.amplitude((2, 0)) == pytest.approx(s)
        assert st_.amplitude((0, 2)) == pytest.approx(-s)
        assert abs(st_.amplitude((1, 1))) < 1e-14
        assert st_.norm_squared() == pytest.approx(1.0)

    def test_empty_params(self):
        with pytest.raises(ValueError):
            product_state([])

    def test_permutation_invariance(self, rng):
        params = random_params(4, rng)
        base = product_state(params)
        shuffled = product_state(params[::-1])
        for key, amp in base.items():
            assert shuffled.amplitude(key) == pytest.approx(amp)

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_norm_bounds_attained(self, n):
        assert product_state([HPOL] * n).norm_squared() == pytest.approx(math.factorial(n))
        half = [HPOL] * (n // 2) + [VPOL] * (n // 2)
        assert product_state(half).norm_squared() == pytest.approx(
            math.factorial(n // 2) ** 2
        )

    def test_norm_upper_bound(self, rng):
        # N! bounds the squared norm from above (identical photons); the
        # half-H/half-V value ((N/2)!)^2 is attained but is not a global
        # minimum over polarization configurations, so only positivity is
        # asserted below it
        for n in (2, 4, 6):
            hi = math.factorial(n)
            for _ in range(20):
                nsq = product_state(random_params(n, rng)).norm_squared()
                assert 0 < nsq <= hi + 1e-9


class TestInnerProduct:
    def test_vacuum(self):
        assert inner_product(vacuum(1), vacuum(1)) == pytest.approx(1.0)

    def test_orthogonal(self):
        h = basis_state(1, (1, 0))
        v = basis_state(1, (0, 1))
        assert inner_product(h, v) == 0

    def test_matches_norm(self):
        st_ = product_state([HPOL, HPOL])
        assert inner_product(st_, st_) == pytest.approx(2.0)

    def test_conjugate_linear_first_argument(self, rng):
        x = product_state(random_params(2, rng))
        y = product_state(random_params(2, rng))
        assert inner_product(x, y) == pytest.approx(np.conj(inner_product(y, x)))

    def test_mode_mismatch(self):
        with pytest.raises(ValueError):
            inner_product(vacuum(1), vacuum(2))


class TestTensor:
    def test_vacuum(self):
        out = tensor(vacuum(1), vacuum(1))
        assert out.modes == 2
        assert out.amplitude((0, 0, 0, 0)) == pytest.approx(1.0)

    def test_single_photons(self):
        out = tensor(basis_state(1, (1, 0)), basis_state(1, (0, 1)))
        assert out.amplitude((1, 0, 0, 1)) == pytest.approx(1.0)

    def test_bilinearity(self):
        s = 1 / math.sqrt(2)
        sup = FockVector(1, {(1, 0): s, (0, 1): s})
        out = tensor(sup, basis_state(1, (1, 0)))
        assert out.amplitude((1, 0, 1, 0)) == pytest.approx(s)
        assert out.amplitude((0, 1, 1, 0)) == pytest.approx(s)

    def test_norm_multiplies(self, rng):
        x = product_state(random_params(3, rng))
        y = product_state(random_params(2, rng))
        assert tensor(x, y).norm_squared() == pytest.approx(
            x.norm_squared() * y.norm_squared()
        )


class TestPolarizationAmplitude:
    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            PolarizationAmplitude(1.0, 1.0)

    def test_from_unnormalized(self):
        p = PolarizationAmplitude.from_unnormalized(3.0, 4.0)
        assert abs(p.alpha) ** 2 + abs(p.beta) ** 2 == pytest.approx(1.0)

    @given(st.floats(-10, 10), st.floats(-10, 10), st.floats(-10, 10), st.floats(-10, 10))
    @settings(max_examples=50, deadline=None)
    def test_overlap_hermitian(self, ar, ai, br, bi):
        za, zb = complex(ar, ai), complex(br, bi)
        if abs(za) < 1e-6 and abs(zb) < 1e-6:
            return
        p = PolarizationAmplitude.from_unnormalized(za, zb)
        q = PolarizationAmplitude.from_unnormalized(zb, za)
        assert p.overlap(q) == pytest.approx(np.conj(q.overlap(p)))


def test_fock_vector_prunes_tiny_amplitudes():
    st_ = FockVector(1, {(1, 0): 1e-16, (0, 1): 0.5})
    assert st_.amplitude((1, 0)) == 0
    assert len(st_) == 1


def test_fock_vector_immutable():
    st_ = vacuum(1)
    with pytest.raises(AttributeError):
        st_.modes = 2
