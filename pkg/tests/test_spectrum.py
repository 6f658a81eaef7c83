from fractions import Fraction as F

import pytest

from inhomspec.quadfield import qnum
from inhomspec.ncf import make_alpha
from inhomspec.expansion import m_star, reflect
from inhomspec.spectrum import (
    ApplicabilityError,
    ClassId,
    ExcludedCaseError,
    SpectrumCatalog,
    class_tsequence,
    covered_pairs,
    delta_closed_form,
    equivalence_cases,
    euclidean_test,
    family_limit,
    isolation_gap,
    odd_params,
    regime,
    spectrum_catalog,
    verify_equivalence,
)


# ---------------------------------------------------------------- plumbing

def test_regimes():
    assert regime(make_alpha(4, 7)) == "even-odd"
    assert regime(make_alpha(4, 8)) == "even-even"
    assert regime(make_alpha(5, 8)) == "odd"
    assert regime(make_alpha(2, 5)) == "two"
    with pytest.raises(ExcludedCaseError):
        regime(make_alpha(2, 4))


def test_odd_params():
    p = odd_params(make_alpha(5, 10))
    assert (p.m, p.n, p.s, p.r) == (0, 2, -2, 10)
    p = odd_params(make_alpha(5, 7))
    assert (p.m, p.r) == (1, 2)
    p = odd_params(make_alpha(3, 4))
    assert (p.m, p.r) == (0, 4)
    p = odd_params(make_alpha(9, 13))
    assert (p.m, p.r) == (1, 4)
    with pytest.raises(ApplicabilityError):
        odd_params(make_alpha(4, 7))


def test_class_labels():
    assert ClassId("Sk1", k=3).label == "S_{3,1}"
    assert ClassId("Sk1", k=3).delta_label == "delta_{3,1}"
    assert ClassId("S-5").label == "S_{-5}"
    assert ClassId("S0t", t=4).label == "S_{0,4}"
    assert ClassId("S2k", k=2).label == "S_4"
    assert ClassId("S2k+1", k=2).label == "S_5"
    assert ClassId("Sk1").label == "S_{inf,1}"


# ------------------------------------------------------- class sequences

def test_sequences_match_block_strings():
    assert class_tsequence(ClassId("Sk1", k=0), make_alpha(4, 8)).period == (0, 0)
    assert class_tsequence(ClassId("S0"), make_alpha(5, 7)).period == (-1, 1)
    assert class_tsequence(ClassId("S-2"), make_alpha(2, 7)).period == (2, -3, 2, -1)
    assert class_tsequence(ClassId("Sk", k=1), make_alpha(4, 7)).period == (
        0, -1, 0, 1, 0, -1, 0, -1, 0, 1, 0, 1
    )
    assert class_tsequence(ClassId("Sk9", k=0), make_alpha(9, 11)).period == (
        1, -3, 3, -3, 1, 1
    )


def test_a2_alternate_periods_are_reflections():
    # each a = 2 class lists two periods; they are digit reflections
    al = make_alpha(2, 9)
    s = class_tsequence(ClassId("S2k+1", k=1), al)  # (a,-1,0,-1)(a,-3,a,-1)
    assert reflect(s, al).period == (2, -1, 0, -1, 2, -1, 2, -3)
    al = make_alpha(2, 8)
    s = class_tsequence(ClassId("S2k+1", k=1), al)  # (a,-2,0,0)(a,-2)
    assert reflect(s, al).period == (2, 0, 0, -2, 2, -2)
    s = class_tsequence(ClassId("S2k", k=1), al)  # (a,-4)(a,-2)
    assert reflect(s, al).period == (2, 0, 2, -2)


def test_s_minus4_uses_s_blocks_at_m1():
    # at m = 1 the class switches to B_s B'_s
    assert class_tsequence(ClassId("S-4"), make_alpha(5, 7)).period == (-1, -1, 1, 1)
    assert class_tsequence(ClassId("S-4"), make_alpha(5, 12)).period == (-1, 2, 1, -2)


def test_inapplicable_class_raises():
    with pytest.raises(ApplicabilityError):
        class_tsequence(ClassId("Sk3", k=1), make_alpha(4, 8))  # wrong regime
    with pytest.raises(ApplicabilityError):
        delta_closed_form(ClassId("S-5"), make_alpha(3, 8))  # needs a >= 5, m = 1
    with pytest.raises(ApplicabilityError):
        delta_closed_form(ClassId("Sk2", k=2), make_alpha(7, 16))  # m != 0


# ------------------------------------------------------- closed forms

def test_radical_anchor_8_12():
    # family limit at (8,12): (112387809/2209) sqrt138 - 1320256308/2209
    al = make_alpha(8, 12)
    expect = qnum(F(-1320256308, 2209), F(112387809, 2209), 138)
    assert family_limit("Sk6", al).same_value(expect)


def test_radical_anchors_6_10():
    al = make_alpha(6, 10)
    inf7 = qnum(F(6329319, 40), F(-6551443, 600), 210)
    d14 = qnum(F(703, 40), F(-703, 600), 210)
    assert family_limit("Sk7", al).same_value(inf7)
    assert delta_closed_form(ClassId("Sk4", k=1), al).same_value(d14)


def test_rho_star_even_even():
    al = make_alpha(4, 8)
    assert delta_closed_form(ClassId("Sk1", k=0), al) == (1 - al.eta) * (1 - al.beta)


def test_delta0_even_odd():
    al = make_alpha(4, 7)
    expect = (1 - al.beta - F(1, 7)) * (1 - al.eta + al.eta / 7)
    assert delta_closed_form(ClassId("Sk", k=0), al) == expect


def test_a2_values():
    al = make_alpha(2, 6)
    e, b = al.eta, al.beta
    assert delta_closed_form(ClassId("S0t", t=2), al) == e
    assert delta_closed_form(ClassId("S-1"), al) == e * (1 - b) ** 2
    assert family_limit("S2k", al) == e * ((1 - b) ** 2 - b**2)
    al = make_alpha(2, 5)
    assert delta_closed_form(ClassId("S0t", t=3), al) == al.eta * F(2, 3)
    al = make_alpha(2, 9)
    # the brute-force oracle confirms this closed form over eta*(1 - 1/(b^2-b))
    expect = al.eta * (1 - (al.beta / (1 - al.D)) ** 2)
    assert delta_closed_form(ClassId("S0t", t=3), al) == expect
    assert family_limit("S2k+1", al) == al.eta * ((1 - al.beta) ** 2 - al.beta**4 / 4)


def test_limit_equals_kterm_dropped():
    # family values converge to the limit from the declared side
    al = make_alpha(4, 8)
    lim = family_limit("Sk1", al)
    vals = [delta_closed_form(ClassId("Sk1", k=k), al) for k in range(0, 9)]
    assert all(v > lim for v in vals)
    diffs = [v - lim for v in vals]
    assert all(x > y for x, y in zip(diffs, diffs[1:]))


def test_delta_m2_overlap_branches_agree():
    # b = 3a/2 hits both branch conditions; they must agree there
    al = make_alpha(10, 15)
    delta_closed_form(ClassId("S-2"), al)  # BranchDisagreement would raise


def test_delta_m1_odd_boundary_branches_agree():
    # r = a + 1 satisfies both r <= a+1 and r >= a+1
    for ab in ((5, 6), (5, 16), (7, 22), (3, 7), (9, 10)):
        al = make_alpha(*ab)
        assert odd_params(al).r == al.a + 1
        delta_closed_form(ClassId("S-1"), al)


# ------------------------------------------------------- equivalence

def test_equivalence_spot_pairs():
    for ab in ((4, 7), (4, 8), (5, 7), (5, 10), (2, 6), (3, 5), (6, 10)):
        for res in verify_equivalence(make_alpha(*ab), kmax=3):
            assert res.ok, (ab, res.cls)


def test_equivalence_counts_something():
    cases = list(equivalence_cases(make_alpha(5, 10), kmax=4))
    labels = {c.label for c in cases}
    assert "S_0" in labels and "S_{-2}" in labels and "S_{4,2}" in labels


# ------------------------------------------------------- catalogue

def test_catalog_4_8():
    cat = spectrum_catalog(make_alpha(4, 8), kmax=6)
    labels = [p.label for p in cat.points]
    assert labels[:4] == ["delta_{0,1}", "delta_{0,5}", "delta_{1,1}", "delta_{2,1}"]
    assert "delta_{0,4}" not in labels  # needs 2a <= b <= 3a-6
    assert cat.points[-1].kind == "limit_point"
    assert cat.rho_star.cls == ClassId("Sk1", k=0)


def test_catalog_5_10_second_value_is_the_limit():
    cat = spectrum_catalog(make_alpha(5, 10), kmax=6)
    assert cat.rho_star.cls == ClassId("S-2")
    assert cat.points[1].kind == "limit_point"
    assert cat.points[1].cls.family == "Sk2"
    assert isolation_gap(cat) == cat.points[0].m_star - cat.points[1].m_star
    # increasing family sits below its limit
    fam = cat.families[0]
    assert fam.direction == "increasing"
    assert all(
        delta_closed_form(ClassId("Sk2", k=k), cat.alpha) < fam.limit
        for k in fam.k_listed
    )


def test_catalog_3_4():
    cat = spectrum_catalog(make_alpha(3, 4), kmax=4)
    labels = [p.label for p in cat.points]
    assert labels[0] == "delta_{-6}"
    assert "delta_{-8}" in labels
    assert all(
        p.m_star > cat.first_limit_point
        for p in cat.points
        if p.kind != "limit_point"
    )


def test_catalog_ordering_strict():
    for ab in ((4, 6), (6, 8), (8, 12), (2, 10), (7, 9), (3, 6)):
        cat = spectrum_catalog(make_alpha(*ab), kmax=5)
        for x, y in zip(cat.points, cat.points[1:]):
            assert x.m_star > y.m_star


def test_catalog_m_normalization():
    cat = spectrum_catalog(make_alpha(4, 8), kmax=3)
    for p in cat.points:
        assert p.m * cat.alpha.norm_factor == p.m_star


def test_catalog_rho_matches_expected_branch_on_grid():
    for a, b in covered_pairs():
        cat = spectrum_catalog(make_alpha(a, b), kmax=2)
        assert cat.rho_star.cls == cat.rho_star_class, (a, b)
        assert isolation_gap(cat).sign() > 0


def test_catalog_values_positive_below_one():
    for ab in ((4, 7), (5, 10), (2, 13), (8, 12), (3, 5)):
        cat = spectrum_catalog(make_alpha(*ab), kmax=4)
        for p in cat.points:
            assert 0 < p.m_star < 1


def test_catalog_json_schema():
    cat = spectrum_catalog(make_alpha(4, 8), kmax=2)
    d = cat.to_json_dict(digits=10)
    assert set(d) == {"a", "b", "N", "rho_star", "first_limit_point", "points", "kmax"}
    assert d["a"] == 4 and d["b"] == 8 and d["N"] == 896
    for pt in d["points"]:
        assert set(pt) == {"label", "k", "m_star", "m", "kind", "direction"}
        assert set(pt["m_star"]) == {"p", "q", "N", "approx"}


def test_catalog_csv_rows():
    rows = spectrum_catalog(make_alpha(4, 8), kmax=2).to_csv_rows(digits=8)
    assert rows[0] == ["label", "k", "kind", "direction", "m_star", "m"]
    assert all(len(r) == 6 for r in rows)


def test_catalog_kmax_validation():
    with pytest.raises(ValueError):
        spectrum_catalog(make_alpha(4, 8), kmax=0)


def test_isolation_gap_needs_two_points():
    cat = spectrum_catalog(make_alpha(4, 8), kmax=2)
    single = SpectrumCatalog(
        alpha=cat.alpha, kmax=1, points=cat.points[:1],
        first_limit_point=cat.first_limit_point,
        rho_star_class=cat.rho_star_class, families=(),
        odd_parameters=None,
    )
    with pytest.raises(ValueError):
        isolation_gap(single)


def test_tie_merged_at_2_10():
    # delta_{0,6} equals delta_{-1} exactly at (2,10); one point remains
    al = make_alpha(2, 10)
    d1 = delta_closed_form(ClassId("S0t", t=6), al)
    d2 = delta_closed_form(ClassId("S-1"), al)
    assert d1 == d2
    cat = spectrum_catalog(al, kmax=3)
    assert len([p for p in cat.points if p.m_star == d1]) == 1


# ------------------------------------------------------- euclid

def test_euclid_4_8():
    rep = euclidean_test(make_alpha(4, 8))
    assert rep.verdict is False
    assert rep.points_above == 1
    # threshold is 1/(2 sqrt14) exactly
    assert (rep.threshold * rep.threshold).same_value(qnum(F(1, 56), 0, 14))
    assert rep.min_poly == (F(-8), F(2))
    # rho = 5/(8 sqrt 14) exactly
    assert rep.rho.same_value(qnum(0, F(5, 112), 14))


def test_euclid_scaling_invariance():
    rep = euclidean_test(make_alpha(4, 8))
    thr = rep.threshold
    assert (rep.rho < thr) == (rep.rho * 56 < thr * 56)


def test_euclid_small_pairs_verdict_true():
    # small-discriminant pairs come out norm-Euclidean, large ones do not
    assert euclidean_test(make_alpha(2, 5)).verdict is True
    assert euclidean_test(make_alpha(3, 4)).verdict is True
    assert euclidean_test(make_alpha(8, 12)).verdict is False
    assert euclidean_test(make_alpha(6, 13)).verdict is False


# --------------------------------------------- off-grid regression anchors

def test_equivalence_off_grid_families():
    # classes whose side conditions never trigger inside the small grid
    cases = [
        ((10, 16), ClassId("Sk3", k=2)),   # b = 2a - 4, a >= 10
        ((10, 16), ClassId("Sk4", k=1)),
        ((12, 18), ClassId("Sk4", k=3)),   # a + 6 <= b <= 2a - 6
        ((13, 17), ClassId("S-5")),        # low branch r <= a - 9
        ((13, 17), ClassId("Sk5", k=2)),
        ((17, 21), ClassId("S-5")),        # b = a + 4 >= 17 catalogue case
    ]
    from inhomspec.expansion import m_star as _ms
    for ab, cls in cases:
        al = make_alpha(*ab)
        assert delta_closed_form(cls, al) == _ms(class_tsequence(cls, al), al), (ab, cls)


def test_catalog_b_a4_geq_17():
    # r = 4, b = a + 4 >= 17: delta_{-5} is the second largest value
    cat = spectrum_catalog(make_alpha(13, 17), kmax=3)
    assert [p.label for p in cat.points[:2]] == ["delta_0", "delta_{-5}"]


def test_random_words_never_beat_the_catalogue():
    # isolation and completeness, probed from below: no valid periodic word
    # exceeds rho*, and any word value above the first limit point is one of
    # the catalogued values
    import random
    from inhomspec.expansion import DigitRangeError, TSequence
    from inhomspec.expansion import m_star as _ms

    rng = random.Random(20260809)
    for ab in ((4, 8), (5, 7), (2, 7), (3, 5), (6, 10)):
        al = make_alpha(*ab)
        cat = spectrum_catalog(al, kmax=12)
        rho = cat.rho_star.m_star
        values = {p.m_star for p in cat.points}
        for _ in range(120):
            pairs = rng.choice((1, 2, 3))
            w = []
            for i in range(pairs):
                w.append(2 * rng.randrange(al.a) - (al.a - 2))
                w.append(2 * rng.randrange(al.b) - (al.b - 2))
            try:
                ms = _ms(TSequence(tuple(w)).validate(al), al)
            except DigitRangeError:
                continue  # reflection carries out of range: not a valid target
            assert not ms > rho, (ab, w)
            if ms > cat.first_limit_point:
                assert ms in values, (ab, w)


def test_a2_wide_b_off_grid():
    # isqrt boundary for the extra t-values at wide even/odd b
    for b, extras in ((16, [2, 4, 6]), (21, [3, 5, 7])):
        al = make_alpha(2, b)
        cat = spectrum_catalog(al, kmax=3)
        got = sorted(p.cls.t for p in cat.points if p.cls.family == "S0t")
        assert got == extras
        for res in verify_equivalence(al, kmax=2):
            assert res.ok
