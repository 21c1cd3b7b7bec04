"""The seven polynomial orderings and the implication web."""

from fractions import Fraction as F

import pytest

from hardcore_lab.hardcore import var_of_polynomial
from hardcore_lab.orderings import (
    IMPLICATIONS,
    OrderingKind,
    compare,
    compare_all,
    implication_web_check,
    random_generating_pair,
    var_difference_certificate,
)
from hardcore_lab.polynomials import Poly
from hardcore_lab.sampler import SplitMix64

P_CUBE = Poly([1, 3, 1]) ** 3                       # 1+9x+30x^2+45x^3+30x^4+9x^5+x^6
Q_CLIQUES = Poly([1, 2]) ** 3 * Poly([1, 3])        # 1+9x+30x^2+44x^3+24x^4


def test_first_pair_fv_and_var():
    assert compare("FV", P_CUBE, Q_CLIQUES).holds
    assert compare("VAR", P_CUBE, Q_CLIQUES).holds


def test_first_pair_certificate_factored_form():
    cert = var_difference_certificate(P_CUBE, Q_CLIQUES)
    factored = (3 * Poly([0, 0, 0, 1]) * Poly([1, 2]) ** 4 * Poly([1, 3, 1]) ** 4
                * Poly([3, 32, 118, 176, 86]))
    assert cert == factored


def test_second_pair_var_without_fv():
    q = Poly([1, 9, 30, 44, 24, 9])
    v = compare("FV", P_CUBE, q)
    assert v.fails and v.witness == 4
    # the failing cross product: 24 * 9 < 30 * 9
    assert v.margin == 24 * 9 - 30 * 9
    assert compare("VAR", P_CUBE, q).holds


def test_second_pair_certificate_display():
    q = Poly([1, 9, 30, 44, 24, 9])
    cert = var_difference_certificate(P_CUBE, q)
    assert cert == Poly([
        0, 0, 0, 9, 276, 3651, 27864, 137304, 460512, 1074906, 1748244,
        1950525, 1472832, 864699, 739620, 926244, 887748, 554664, 223380,
        56373, 8136, 513,
    ])


def test_third_pair_var_without_coef():
    q = Poly([1, 9, 30, 44, 24, 10])
    v = compare("COEF", P_CUBE, q)
    assert v.fails and v.witness == 5
    assert compare("VAR", P_CUBE, q).holds


def test_fourth_lemma_pairs_fv_without_var():
    pairs = [
        (Poly([1, 4, 2, 2]), Poly([1, 2, 1, 1])),
        (Poly([1, 10, 210, 21, 21, 21]), Poly([1, 10, 10, 1, 1, 1])),
        (Poly([1, 10, 1, 20010, 2001, 2001]), Poly([1, 10, 1, 10, 1, 1])),
    ]
    values = [
        (F(26, 25), F(74, 81)),
        (F(53, 48), F(18619, 20164)),
        (F(293, 192), F(68604293, 192384192)),
    ]
    for (p, q), (vq, vp) in zip(pairs, values):
        assert compare("FV", p, q).holds
        v = compare("VAR", p, q)
        assert v.fails
        assert var_of_polynomial(q).evaluate(1) == vq
        assert var_of_polynomial(p).evaluate(1) == vp
        # the variance gap at the witness must indeed be negative
        assert var_of_polynomial(p).evaluate(v.witness) < var_of_polynomial(q).evaluate(v.witness)


def test_first_pair_var_witness_at_one():
    p, q = Poly([1, 4, 2, 2]), Poly([1, 2, 1, 1])
    v = compare("VAR", p, q)
    assert v.fails and v.witness == 1
    assert v.margin == F(74, 81) - F(26, 25)


def test_certificate_of_equal_polynomials_is_zero():
    assert var_difference_certificate(P_CUBE, P_CUBE).is_zero


def test_preconditions():
    with pytest.raises(ValueError):
        compare("COUNT", Poly([2, 1]), Poly([1, 1]))
    with pytest.raises(ValueError):
        compare("COUNT", Poly([1, -1]), Poly([1, 1]))


def test_padding_to_common_length():
    p = Poly([1, 1, 1])
    q = Poly([1, 2])
    # MAX compares the padded top coefficient: a_2 = 1 >= b_2 = 0
    assert compare("MAX", p, q).holds
    v = compare("MAX", q, p)
    assert v.fails and v.witness == 2


def test_count_witness_is_evaluation_at_one():
    v = compare("COUNT", Poly([1, 1]), Poly([1, 5]))
    assert v.fails and v.witness == 1 and v.margin == 2 - 6


def test_reflexivity_all_kinds():
    rng = SplitMix64(12)
    for _ in range(25):
        p, _ = random_generating_pair(rng)
        for kind in OrderingKind:
            assert compare(kind, p, p).holds, kind


def test_transitivity_where_links_hold():
    rng = SplitMix64(13)
    found = 0
    for _ in range(300):
        p, q = random_generating_pair(rng, max_degree=5, max_coeff=12)
        q2, r = random_generating_pair(rng, max_degree=5, max_coeff=12)
        for kind in OrderingKind:
            if compare(kind, p, q).holds and compare(kind, q, r).holds:
                found += 1
                assert compare(kind, p, r).holds, (kind, p, q, r)
    assert found > 50


def test_var_agrees_with_dense_sampling():
    rng = SplitMix64(14)
    for _ in range(60):
        p, q = random_generating_pair(rng, max_degree=5, max_coeff=12)
        v = compare("VAR", p, q)
        vp, vq = var_of_polynomial(p), var_of_polynomial(q)
        if v.holds:
            for i in range(1, 101):
                x = F(i, 1)
                assert vp.evaluate(x) >= vq.evaluate(x)
        else:
            x = v.witness
            assert vp.evaluate(x) < vq.evaluate(x)


def test_implication_web_reflexive_pair():
    report = implication_web_check(P_CUBE, P_CUBE)
    assert not report["violations"]
    assert all(v.holds for v in report["verdicts"].values())


def test_implication_web_random_pairs():
    rng = SplitMix64(15)
    for _ in range(500):
        p, q = random_generating_pair(rng)
        assert not implication_web_check(p, q)["violations"]


def test_implication_list_is_the_provable_seven():
    names = {(a.value, b.value) for a, b in IMPLICATIONS}
    assert names == {
        ("VAR", "OCC"), ("FV", "OCC"), ("FV", "COEF"), ("COEF", "PART"),
        ("OCC", "PART"), ("PART", "COUNT"), ("PART", "MAX"),
    }


def test_interior_zero_coefficients_break_fv_implications():
    # With an interior zero on both sides, FV holds vacuously while COEF and
    # OCC fail: the implications require positive support up to the degree,
    # which is the shape partition functions have and the generator draws.
    p = Poly([1, 0, 1])
    q = Poly([1, 0, 2])
    assert compare("FV", p, q).holds
    assert compare("COEF", p, q).fails
    assert compare("OCC", p, q).fails


def test_compare_all_returns_every_kind():
    verdicts = compare_all(P_CUBE, Q_CLIQUES)
    assert set(verdicts) == set(OrderingKind)
