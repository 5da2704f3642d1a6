import itertools
import random
from fractions import Fraction

import pytest

from vertexion.scalars import distinct_rationals, random_rational
from vertexion.weights import (
    ConstraintViolation,
    KParams,
    LSiteParams,
    RParams,
    check_reflection,
    check_rll,
    check_yang_baxter,
    embed_one_site,
    embed_two_site,
    k_element,
    l_element,
    matmul_chain,
    r_element,
    six_vertex_site,
)

F = Fraction


def test_r_element_reference_values():
    p = RParams(F(5))
    assert r_element(0, 0, 0, 0, F(2), F(3), p) == -13
    assert r_element(0, 1, 1, 0, F(2), F(3), p) == -8
    assert r_element(0, 0, 1, 1, F(2), F(3), p) == 0


def test_r_ice_rule_all_violating_tuples():
    rng = random.Random(1)
    p = RParams(random_rational(rng))
    u, w = distinct_rationals(rng, 2)
    violating = [
        idx
        for idx in itertools.product((0, 1), repeat=4)
        if idx[0] + idx[1] != idx[2] + idx[3]
    ]
    assert len(violating) == 10
    for g, d, a, b in violating:
        assert r_element(g, d, a, b, u, w, p) == 0


def test_r_homogeneity():
    rng = random.Random(2)
    p = RParams(random_rational(rng))
    u, w, s = (random_rational(rng) for _ in range(3))
    for idx in itertools.product((0, 1), repeat=4):
        assert r_element(*idx, s * u, s * w, p) == s * r_element(*idx, u, w, p)


def test_k_element_reference_values():
    p = KParams(A=F(1), B=F(2))
    assert k_element(0, 0, F(3), p) == 5
    assert k_element(0, 1, F(3), p) == 0
    assert k_element(1, 0, F(2), KParams(F(0), F(0))) == F(3, 2)
    assert k_element(1, 1, F(2), p) == F(2) / 2 - 1


def test_k_triangularity_everywhere():
    rng = random.Random(3)
    for _ in range(20):
        p = KParams(random_rational(rng), random_rational(rng))
        assert k_element(0, 1, random_rational(rng), p) == 0


def test_l_element_reference_values():
    t = F(5)
    s = LSiteParams.solve(a=F(2), b=F(3), c=F(1), d=F(1), t=t)
    assert l_element(0, 0, 0, 0, F(1), F(1), s, RParams(t)) == 5
    s2 = LSiteParams(a=F(1), b=F(1), c=F(1), d=F(1), e=F(1), f=F(1))
    # (1,1,1,1) entry is eu + ftw regardless of constraints
    from vertexion.weights import _l_element_raw

    assert _l_element_raw(1, 1, 1, 1, F(2), F(3), s2, RParams(t)) == 17


def test_l_specializes_to_r():
    rng = random.Random(4)
    t = random_rational(rng, avoid={F(1)})
    u, w = distinct_rationals(rng, 2)
    s = six_vertex_site(t)
    p = RParams(t)
    for idx in itertools.product((0, 1), repeat=4):
        assert l_element(*idx, u, w, s, p) == r_element(*idx, u, w, p)


def test_l_constraint_validation():
    t = F(2)
    bad = LSiteParams(F(1), F(1), F(1), F(1), F(1), F(1))
    with pytest.raises(ConstraintViolation):
        bad.validate(t)
    with pytest.raises(ConstraintViolation):
        l_element(0, 0, 0, 0, F(1), F(1), bad, RParams(t))
    good = LSiteParams.solve(F(2), F(3), F(5), F(7), t)
    good.validate(t)  # does not raise
    assert good.is_valid(t)
    assert not good.is_valid(t + 1)


def test_yang_baxter_random_and_degenerate():
    rng = random.Random(5)
    for _ in range(5):
        t = random_rational(rng)
        u, v, w = distinct_rationals(rng, 3)
        assert check_yang_baxter(u, v, w, RParams(t))
    u = random_rational(rng)
    assert check_yang_baxter(u, u, u, RParams(random_rational(rng)))


def test_yang_baxter_mixed_parameter_violation():
    # put a different t in only the middle factor and expand both sides
    rng = random.Random(6)
    t = random_rational(rng)
    t2 = t + 1
    u, v, w = distinct_rationals(rng, 3)

    def r_op(site_a, site_b, x, y, tt):
        p = RParams(tt)
        return embed_two_site(
            lambda ga, gb, aa, ab: r_element(ga, gb, aa, ab, x, y, p), site_a, site_b, 3
        )

    lhs = matmul_chain(r_op(0, 1, u, v, t), r_op(0, 2, u, w, t2), r_op(1, 2, v, w, t))
    rhs = matmul_chain(r_op(1, 2, v, w, t), r_op(0, 2, u, w, t2), r_op(0, 1, u, v, t))
    assert lhs != rhs


def test_reflection_random_and_coincident():
    rng = random.Random(7)
    for _ in range(5):
        t, A, B = (random_rational(rng) for _ in range(3))
        u, w = distinct_rationals(rng, 2)
        assert check_reflection(u, w, RParams(t), KParams(A, B))
    u = random_rational(rng)
    assert check_reflection(u, u, RParams(random_rational(rng)), KParams(F(1), F(2)))


def test_reflection_rejects_zero_parameter():
    with pytest.raises(ZeroDivisionError):
        check_reflection(F(0), F(1), RParams(F(2)), KParams(F(1), F(1)))


def test_reflection_fails_for_non_triangular_boundary():
    # perturb the identically-zero (0, 1) entry and expand both sides
    rng = random.Random(8)
    t, A, B, eps = (random_rational(rng) for _ in range(4))
    u, w = distinct_rationals(rng, 2)
    p, k = RParams(t), KParams(A, B)

    def k_pert(g, a, x):
        if (g, a) == (0, 1):
            return eps
        return k_element(g, a, x, k)

    def r_ab(x):
        return embed_two_site(
            lambda ga, gb, aa, ab: r_element(ga, gb, aa, ab, x, F(1), p), 0, 1, 2
        )

    def r_ba(x):
        return embed_two_site(
            lambda ga, gb, aa, ab: r_element(gb, ga, ab, aa, x, F(1), p), 0, 1, 2
        )

    k_a = embed_one_site(lambda g, a: k_pert(g, a, w), 0, 2)
    k_b = embed_one_site(lambda g, a: k_pert(g, a, u), 1, 2)
    lhs = matmul_chain(r_ba(u / w), k_b, r_ab(u * w), k_a)
    rhs = matmul_chain(k_a, r_ba(u * w), k_b, r_ab(u / w))
    assert lhs != rhs


def test_rll_random_valid_sites():
    rng = random.Random(9)
    for _ in range(5):
        t = random_rational(rng, avoid={F(1)})
        s = LSiteParams.solve(*(random_rational(rng) for _ in range(4)), t=t)
        u1, u2 = distinct_rationals(rng, 2)
        w = random_rational(rng)
        assert check_rll(u1, u2, w, s, RParams(t))


def test_rll_fails_off_constraint_variety():
    rng = random.Random(10)
    t = random_rational(rng, avoid={F(1)})
    good = LSiteParams.solve(*(random_rational(rng) for _ in range(4)), t=t)
    # shift f so that cd + af = 1 instead of 0
    bad = LSiteParams(good.a, good.b, good.c, good.d, good.e, good.f + 1 / good.a)
    u1, u2 = distinct_rationals(rng, 2)
    w = random_rational(rng)
    assert not check_rll(u1, u2, w, bad, RParams(t))


def test_rll_six_vertex_specialization_matches_yang_baxter():
    rng = random.Random(11)
    t = random_rational(rng, avoid={F(1)})
    u1, u2, w = distinct_rationals(rng, 3)
    assert check_rll(u1, u2, w, six_vertex_site(t), RParams(t))
    assert check_yang_baxter(u1, u2, w, RParams(t))
