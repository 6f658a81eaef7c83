import pytest

from inhomspec.ncf import make_alpha
from inhomspec.expansion import gamma_value, m_value
from inhomspec.spectrum import ClassId, class_tsequence, delta_closed_form
from inhomspec.oracle import DEFAULT_WINDOWS, brute_force_min, liminf_estimate

A48 = make_alpha(4, 8)


def _gamma_of(cls, alpha):
    return gamma_value(class_tsequence(cls, alpha), alpha)


def test_degenerate_gamma_in_lattice():
    # gamma = alpha: n = 1 already hits an exact zero
    rep = brute_force_min(A48, A48.eta, 1, 50, exact=True)
    assert rep.window_min == 0
    assert rep.argmin_n == 1


def test_each_term_exact():
    g = _gamma_of(ClassId("Sk1", k=0), A48)
    rep = brute_force_min(A48, g, 1000, 1400, exact=True)
    # the reported minimum is an exact QuadNum, reproducible term by term
    n = rep.argmin_n
    x = A48.eta * n - g
    d = x - (x + type(g)(1, 0, g.N) / 2).floor()
    if d.sign() < 0:
        d = -d
    assert d * n == rep.window_min


def test_hybrid_matches_exact_loop():
    g = _gamma_of(ClassId("Sk1", k=0), A48)
    fast = brute_force_min(A48, g, 1000, 4000)
    slow = brute_force_min(A48, g, 1000, 4000, exact=True)
    assert fast.window_min == slow.window_min
    assert fast.argmin_n == slow.argmin_n


def test_determinism():
    g = _gamma_of(ClassId("S0"), make_alpha(5, 7))
    al = make_alpha(5, 7)
    r1 = brute_force_min(al, g, 10**3, 10**5)
    r2 = brute_force_min(al, g, 10**3, 10**5)
    assert r1 == r2


def test_window_corroborates_exact_m():
    al = make_alpha(4, 8)
    cls = ClassId("Sk1", k=0)
    g = _gamma_of(cls, al)
    M = m_value(delta_closed_form(cls, al), al)
    rep = brute_force_min(al, g, 10**3, 10**6, target_m=M)
    assert rep.relative_gap < 1e-2


def test_reflection_symmetry_of_windows():
    g = _gamma_of(ClassId("Sk1", k=0), A48)
    r1 = brute_force_min(A48, g, 10**3, 10**5)
    r2 = brute_force_min(A48, 1 - A48.eta - g, 10**3, 10**5)
    assert r1.window_min == r2.window_min


def test_liminf_estimate_stabilizes():
    al = make_alpha(5, 7)
    cls = ClassId("S0")
    g = _gamma_of(cls, al)
    M = m_value(delta_closed_form(cls, al), al)
    tab = liminf_estimate(al, g, DEFAULT_WINDOWS, target_m=M)
    assert len(tab.windows) == 3
    assert tab.stabilized
    # minima agree with the exact value to 3 decimals by the last window
    assert abs(tab.stabilized_value - float(M)) < 1e-3


def test_liminf_estimate_lattice_gamma_dips_to_zero():
    # gamma = 5*alpha: the window containing n = 5 hits an exact zero
    g = A48.eta * 5
    tab = liminf_estimate(A48, g, ((1, 100), (100, 1000)))
    assert tab.windows[0].window_min == 0
    assert tab.windows[0].argmin_n == 5
    assert tab.windows[1].window_min > 0


def test_window_validation():
    with pytest.raises(ValueError):
        brute_force_min(A48, A48.eta, 100, 10)
    with pytest.raises(ValueError):
        liminf_estimate(A48, A48.eta, ((100, 200), (150, 300)))


def test_report_json():
    g = _gamma_of(ClassId("Sk1", k=0), A48)
    rep = brute_force_min(A48, g, 10**3, 10**4, target_m=g)
    d = rep.to_json_dict(10)
    assert {"n_lo", "n_hi", "window_min", "argmin_n", "target_m", "relative_gap"} <= set(d)


def test_hybrid_matches_exact_on_random_gammas():
    import random
    from fractions import Fraction as F
    from inhomspec.quadfield import QuadNum

    rng = random.Random(5)
    for _ in range(8):
        g = QuadNum(F(rng.randint(0, 999), 1000), F(rng.randint(-99, 99), 1000), A48.N)
        fast = brute_force_min(A48, g, 500, 2500)
        slow = brute_force_min(A48, g, 500, 2500, exact=True)
        assert (fast.window_min, fast.argmin_n) == (slow.window_min, slow.argmin_n)


def test_canonical_catalogue_phase_corroborates():
    # the transcribed phase of a catalogued period reconstructs a gamma whose
    # true constant matches; arbitrary rotations need not (admissibility is
    # deliberately unchecked), so this pins the canonical phase
    from inhomspec.spectrum import ClassId, class_tsequence, delta_closed_form

    al = make_alpha(3, 5)
    seq = class_tsequence(ClassId("S-9"), al)
    target = m_value(delta_closed_form(ClassId("S-9"), al), al)
    rep = brute_force_min(al, gamma_value(seq, al), 10**3, 10**6, target_m=target)
    assert rep.relative_gap < 1e-4


def test_two_sided_window_catches_one_sided_classes():
    # some classes attain their constant only on the n < 0 side
    from inhomspec.spectrum import ClassId, class_tsequence, delta_closed_form

    al = make_alpha(5, 8)
    cls = ClassId("S-2")
    g = gamma_value(class_tsequence(cls, al), al)
    M = m_value(delta_closed_form(cls, al), al)
    one = brute_force_min(al, g, 10**3, 10**6, target_m=M)
    two = brute_force_min(al, g, 10**3, 10**6, target_m=M, two_sided=True)
    assert one.relative_gap > 1e-1      # positive side alone misses
    assert two.relative_gap < 1e-2      # |n| sweep corroborates
    assert two.argmin_n < 0             # and reports the side
