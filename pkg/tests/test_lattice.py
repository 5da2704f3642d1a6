import itertools
import random
from fractions import Fraction

import pytest

from vertexion.lattice import (
    FockVector,
    OrdinaryModel,
    SpinConfig,
    TriangularModel,
    apply_creation_operator,
    apply_two_site,
    domain_wall_partition_function,
    ordinary_state_vector,
    ordinary_wavefunction,
    triangular_state_vector,
    wavefunction_triangular,
)
from vertexion.scalars import distinct_rationals, random_rational
from vertexion.weights import KParams, LSiteParams, RParams, r_element

F = Fraction


def _tri_model(t, A, B, u, w):
    return TriangularModel(
        N=len(w), n=len(u), r=RParams(t), k=KParams(A, B), u=tuple(u), w=tuple(w)
    )


def _random_tri(rng, n, N):
    t = random_rational(rng, avoid={F(1)})
    A, B = random_rational(rng), random_rational(rng)
    u = distinct_rationals(rng, n)
    w = distinct_rationals(rng, N)
    return t, A, B, tuple(u), tuple(w)


def _random_ord(rng, n, N):
    t = random_rational(rng, avoid={F(1)})
    sites = tuple(
        LSiteParams.solve(*(random_rational(rng) for _ in range(4)), t=t)
        for _ in range(N)
    )
    u = tuple(distinct_rationals(rng, n))
    w = tuple(distinct_rationals(rng, N))
    return OrdinaryModel(N, n, RParams(t), sites, u, w)


class TestSpinConfig:
    def test_valid(self):
        cfg = SpinConfig(5, (1, 3, 5))
        assert cfg.m == 3
        assert cfg.basis_index() == 0b10101

    def test_rejects_unsorted_and_out_of_range(self):
        with pytest.raises(ValueError):
            SpinConfig(3, (2, 1))
        with pytest.raises(ValueError):
            SpinConfig(3, (1, 4))
        with pytest.raises(ValueError):
            SpinConfig(3, (0,))


class TestApplyTwoSite:
    def test_identity(self):
        rng = random.Random(0)
        v = FockVector(3)
        v.amplitudes = [random_rational(rng) for _ in range(8)]
        ident = lambda ga, gb, aa, ab: F(int((ga, gb) == (aa, ab)))
        assert apply_two_site(ident, 0, 2, v).amplitudes == v.amplitudes

    def test_matches_dense_matrix_on_two_sites(self):
        rng = random.Random(1)
        p = RParams(random_rational(rng))
        u, w = distinct_rationals(rng, 2)
        v = FockVector(2)
        v.amplitudes = [random_rational(rng) for _ in range(4)]
        el = lambda ga, gb, aa, ab: r_element(ga, gb, aa, ab, u, w, p)
        out = apply_two_site(el, 0, 1, v)
        dense = [
            sum(el(i >> 1, i & 1, j >> 1, j & 1) * v.amplitudes[j] for j in range(4))
            for i in range(4)
        ]
        assert out.amplitudes == dense

    def test_ice_rule_preserves_pair_weight(self):
        rng = random.Random(2)
        p = RParams(random_rational(rng))
        u, w = distinct_rationals(rng, 2)
        el = lambda ga, gb, aa, ab: r_element(ga, gb, aa, ab, u, w, p)
        for basis in range(4):
            v = FockVector(2)
            v.amplitudes[basis] = F(1)
            out = apply_two_site(el, 0, 1, v)
            weight = bin(basis).count("1")
            for idx, amp in enumerate(out.amplitudes):
                if amp != 0:
                    assert bin(idx).count("1") == weight

    def test_bad_sites(self):
        v = FockVector.vacuum(2)
        with pytest.raises(IndexError):
            apply_two_site(lambda *a: F(1), 0, 2, v)
        with pytest.raises(IndexError):
            apply_two_site(lambda *a: F(1), 1, 1, v)


class TestTriangular:
    def test_one_by_one_hand_contraction(self):
        # boundary then a single crossing, projected by hand
        rng = random.Random(3)
        t, A, B, (u,), (w,) = _random_tri(rng, 1, 1)
        psi = triangular_state_vector(_tri_model(t, A, B, (u,), (w,)))
        assert psi.amplitudes[0] == (B * u - A) * (u - t * w)
        assert psi.amplitudes[1] == (1 - t) * (u * u - 1)

    def test_n1_N2_empty_config_product(self):
        rng = random.Random(4)
        t, A, B, (u,), (w1, w2) = _random_tri(rng, 1, 2)
        value = wavefunction_triangular(
            _tri_model(t, A, B, (u,), (w1, w2)), SpinConfig(2, ())
        )
        assert value == (B * u - A) * (u - t * w1) * (u - t * w2)

    def test_u_permutation_invariance(self):
        rng = random.Random(5)
        t, A, B, u, w = _random_tri(rng, 3, 2)
        base = triangular_state_vector(_tri_model(t, A, B, u, w))
        for perm in itertools.permutations(u):
            psi = triangular_state_vector(_tri_model(t, A, B, perm, w))
            assert psi.amplitudes == base.amplitudes

    def test_N1_m0_closed_product(self):
        rng = random.Random(6)
        for n in (1, 2, 3):
            t, A, B, u, (w,) = _random_tri(rng, n, 1)
            value = wavefunction_triangular(
                _tri_model(t, A, B, u, (w,)), SpinConfig(1, ())
            )
            expected = F(1)
            for uj in u:
                expected *= (B * uj - A) * (uj - t * w)
            for j in range(n):
                for k in range(j + 1, n):
                    expected *= u[j] * u[k] - t
            assert value == expected

    def test_domain_wall_is_full_config_amplitude(self):
        rng = random.Random(7)
        t, A, B, u, w = _random_tri(rng, 3, 2)
        model = _tri_model(t, A, B, u, w)
        full = SpinConfig(2, (1, 2))
        assert domain_wall_partition_function(model) == wavefunction_triangular(model, full)

    def test_m_greater_than_n_computed_honestly(self):
        # row count does not bound the down-spin count; just read the amplitude
        rng = random.Random(8)
        t, A, B, u, w = _random_tri(rng, 1, 3)
        value = wavefunction_triangular(
            _tri_model(t, A, B, u, w), SpinConfig(3, (1, 2, 3))
        )
        psi = triangular_state_vector(_tri_model(t, A, B, u, w))
        assert value == psi.amplitudes[0b111]

    def test_rejects_zero_u(self):
        with pytest.raises(ZeroDivisionError):
            _tri_model(F(2), F(1), F(1), (F(0),), (F(1),))

    def test_frame_mismatch(self):
        rng = random.Random(9)
        t, A, B, u, w = _random_tri(rng, 1, 2)
        with pytest.raises(ValueError):
            wavefunction_triangular(_tri_model(t, A, B, u, w), SpinConfig(3, (1,)))


class TestOrdinary:
    def test_one_by_one_value(self):
        rng = random.Random(10)
        model = _random_ord(rng, 1, 1)
        value = ordinary_wavefunction(model, SpinConfig(1, (1,)))
        assert value == (1 - model.r.t) * model.sites[0].c * model.u[0]

    def test_creation_operators_commute(self):
        rng = random.Random(11)
        model = _random_ord(rng, 3, 4)
        reversed_model = OrdinaryModel(
            model.N, model.n, model.r, model.sites, tuple(reversed(model.u)), model.w
        )
        assert (
            ordinary_state_vector(model).amplitudes
            == ordinary_state_vector(reversed_model).amplitudes
        )

    def test_down_spin_sector_after_each_layer(self):
        rng = random.Random(12)
        model = _random_ord(rng, 3, 4)
        v = FockVector.vacuum(model.N)
        for layer, uj in enumerate(reversed(model.u), start=1):
            v = apply_creation_operator(model, uj, v)
            for idx, amp in enumerate(v.amplitudes):
                if amp != 0:
                    assert bin(idx).count("1") == layer

    def test_wrong_down_spin_count_gives_zero(self):
        rng = random.Random(13)
        model = _random_ord(rng, 2, 3)
        assert ordinary_wavefunction(model, SpinConfig(3, (1,))) == 0
        assert ordinary_wavefunction(model, SpinConfig(3, (1, 2, 3))) == 0

    def test_rejects_invalid_sites(self):
        from vertexion.weights import ConstraintViolation

        bad = LSiteParams(F(1), F(1), F(1), F(1), F(1), F(1))
        with pytest.raises(ConstraintViolation):
            OrdinaryModel(1, 1, RParams(F(2)), (bad,), (F(1),), (F(1),))

    def test_rejects_n_above_N(self):
        rng = random.Random(14)
        t = random_rational(rng, avoid={F(1)})
        site = LSiteParams.solve(F(1), F(1), F(1), F(1), t)
        with pytest.raises(ValueError):
            OrdinaryModel(1, 2, RParams(t), (site,), (F(1), F(2)), (F(3),))
