from fractions import Fraction
from math import gcd

import pytest

from unicusp import (
    Candidate,
    asymptote_slopes,
    check_single,
    degree_for,
    enumerate_candidates,
    exceptional_family,
    fibonacci,
    mediant_bound,
    sector_bounds,
    sector_of,
)
from unicusp.classify import _tags_for

import oracles


def test_degree_for():
    assert degree_for(1, 8, 1) == 3
    assert degree_for(4, 7, 0) is None
    assert degree_for(5, 8, 7) == 8
    assert degree_for(8, 55, 1) == 21
    assert degree_for(4, 7, 6) == 7
    assert degree_for(3, 5, 1) is None


def test_enumerate_matches_brute_force():
    for g in (0, 1, 2, 3):
        for smooth in (False, True):
            report = enumerate_candidates(g, 25, allow_smooth=smooth)
            got = [(c.a, c.b, c.d) for c in report.candidates]
            assert got == oracles.brute_enumerate(g, 25, allow_smooth=smooth), (g, smooth)


def test_admissibility_matches_brute_force():
    report = enumerate_candidates(1, 20, allow_smooth=True)
    for c in report.candidates:
        ok, _ = oracles.brute_admissible(c.a, c.b, c.g, c.d)
        assert c.admissible == ok, c


def test_report_partition():
    for g in (0, 1, 2):
        rep = enumerate_candidates(g, 20, allow_smooth=True)
        adm = {(c.a, c.b) for c in rep.admissible}
        line = {(c.a, c.b) for c in rep.on_3d_line}
        exc = {(c.a, c.b) for c, _ in rep.exceptions}
        assert line | exc == adm
        assert not (line & exc)
        for c in rep.on_3d_line:
            assert c.element is not None
            assert c.element.norm() == 4 * (2 * g - 1)


def test_frozen_genus_one_sweep():
    rep = enumerate_candidates(1, 25, allow_smooth=True)
    adm = [(c.a, c.b, c.d) for c in rep.admissible]
    assert adm == [
        (1, 8, 3), (2, 5, 4), (2, 11, 5), (2, 19, 6), (3, 10, 6), (3, 28, 9),
        (4, 37, 12), (5, 46, 15), (6, 37, 15), (6, 55, 18), (7, 64, 21),
        (8, 55, 21), (8, 73, 24), (9, 64, 24),
    ]
    # every untagged exception sits at low degree except the lone (6,37)
    assert [(c.a, c.b, c.d) for c in rep.untagged] == [
        (2, 5, 4), (2, 11, 5), (3, 10, 6), (6, 37, 15)]
    assert rep.largest_exceptional_degree == 24
    assert max(c.d for c in rep.untagged) == 15
    assert [(c.a, c.b) for c in rep.on_3d_line] == [(1, 8), (8, 55)]


def test_jobs_do_not_change_results():
    one = enumerate_candidates(1, 30, allow_smooth=True, jobs=1)
    four = enumerate_candidates(1, 30, allow_smooth=True, jobs=4)
    key = lambda r: [(c.a, c.b, c.d, c.admissible, c.element) for c in r.candidates]
    assert key(one) == key(four)
    assert [(c.a, c.b) for c, _ in one.exceptions] == [(c.a, c.b) for c, _ in four.exceptions]


def test_exception_tags():
    assert _tags_for(Candidate(1, 2, 19, 6)) == ("(l,9l+1)",)
    assert _tags_for(Candidate(1, 3, 28, 9)) == ("(l,9l+1)",)
    assert _tags_for(Candidate(7, 5, 8, 8)) == ("(p,p+3)",)
    assert _tags_for(Candidate(6, 4, 7, 7)) == ("(p,p+3)", "(p,2p-1)")
    assert _tags_for(Candidate(12, 5, 9, 9)) == ("(p,2p-1)",)
    assert _tags_for(Candidate(1, 9, 64, 24)) == ("(3n,21n+1)",)
    assert _tags_for(Candidate(0, 3, 22, 8)) == ("(3n,21n+1)",)
    assert _tags_for(Candidate(1, 6, 37, 15)) == ()


def test_enumerate_validation():
    with pytest.raises(ValueError):
        enumerate_candidates(-1, 10)
    with pytest.raises(ValueError):
        enumerate_candidates(1, 0)
    with pytest.raises(ValueError):
        enumerate_candidates(1, 10, jobs=0)


def test_exceptional_family_generators():
    assert_tuple = lambda c, t: (c.a, c.b, c.d, c.g) == t
    c = exceptional_family(1, 5)
    assert assert_tuple(c, (5, 8, 8, 7)) and c.admissible
    c = exceptional_family(2, 4)
    assert assert_tuple(c, (4, 7, 7, 6)) and c.admissible
    assert c.a + c.b != 3 * c.d
    c = exceptional_family(3, 3)
    assert assert_tuple(c, (9, 64, 24, 1)) and c.admissible
    assert c.a + c.b != 3 * c.d
    for kind, bad in ((1, 1), (1, 6), (2, 1), (3, 2), (4, 2)):
        with pytest.raises(ValueError):
            exceptional_family(kind, bad)


def test_sector_of_examples():
    s = sector_of(2, 13)
    assert s.l == 2
    assert s.low == Fraction(25, 4) and s.high == Fraction(169, 25)
    assert s.puncture == (2, 13)
    assert sector_of(3, 19).l == 2
    assert sector_of(5, 34).l == 3
    assert sector_of(1, 8) is None       # slope above phi^4
    assert sector_of(1, 7) is None       # phi^4 < 7.0 as well
    assert sector_of(2, 5) is None       # below the first wall
    assert sector_of(4, 25) is None      # exactly on the first wall
    assert sector_of(25, 169) is None    # exactly on the l=2/3 wall
    with pytest.raises(ValueError):
        sector_of(3, 2)


def test_sector_walls_climb_to_phi4():
    prev = Fraction(0)
    for l in range(2, 12):
        s = sector_of(fibonacci(2 * l - 1), fibonacci(2 * l + 3))
        assert s is not None and s.l == l
        assert prev < s.low < s.high
        # the puncture slope sits strictly inside its own sector
        assert s.puncture == (fibonacci(2 * l - 1), fibonacci(2 * l + 3))
        slope = Fraction(s.puncture[1], s.puncture[0])
        assert s.low < slope < s.high
        prev = s.low
    # every wall stays below phi^4: w < (7+3*sqrt5)/2 iff (2w-7)^2 < 45
    for l in range(2, 12):
        w = Fraction(fibonacci(2 * l + 1) ** 2, fibonacci(2 * l - 1) ** 2)
        t = 2 * w - 7
        assert t < 0 or t * t < 45


def test_sector_bounds_formulas():
    assert sector_bounds(1, 2) == (12, 27)
    assert sector_bounds(1, 3) == (28, 70)
    assert sector_bounds(2, 2) == (32, 77)
    with pytest.raises(ValueError):
        sector_bounds(0, 2)
    with pytest.raises(ValueError):
        sector_bounds(1, 1)


def test_sectors_belong_to_genus_zero():
    # the open band between the first wall and phi^4 hosts the genus-0
    # puncture family; positive-genus admissible pairs avoid it entirely
    # at small degree, and when one does land there it must respect the
    # per-genus search box
    for g in (1, 2, 3):
        rep = enumerate_candidates(g, 25, allow_smooth=True)
        for c in rep.admissible:
            s = sector_of(c.a, c.b)
            if s is not None:
                a_max, b_max = sector_bounds(g, s.l)
                assert c.a <= a_max and c.b <= b_max, (g, c)
    inside = [c for c in enumerate_candidates(0, 15, allow_smooth=True).admissible
              if sector_of(c.a, c.b) is not None]
    assert [(c.a, c.b) for c in inside] == [(2, 13), (5, 34)]
    assert [sector_of(c.a, c.b).l for c in inside] == [2, 3]


def test_mediant_bound_examples():
    assert mediant_bound(25, 4, 13, 2) == (Fraction(19), Fraction(3))
    assert mediant_bound(1, 2, 2, 3) == (Fraction(3), Fraction(5))
    assert mediant_bound(13, 2, 169, 25) == (Fraction(14), Fraction(27, 13))
    with pytest.raises(ValueError):
        mediant_bound(2, 4, 13, 2)       # not reduced
    with pytest.raises(ValueError):
        mediant_bound(13, 2, 25, 4)      # wrong order
    with pytest.raises(ValueError):
        mediant_bound(0, 1, 1, 2)


def test_mediant_bound_is_sharp():
    # any rational strictly between the fractions has numerator and
    # denominator at least the stated bounds
    cases = [(25, 4, 13, 2), (1, 2, 2, 3), (13, 2, 169, 25), (3, 7, 5, 11)]
    for m1, n1, m2, n2 in cases:
        if gcd(m1, n1) != 1 or gcd(m2, n2) != 1:
            continue
        if Fraction(m1, n1) >= Fraction(m2, n2):
            m1, n1, m2, n2 = m2, n2, m1, n1
        b_min, a_min = mediant_bound(m1, n1, m2, n2)
        for den in range(1, 40):
            for num in range(1, 260):
                if Fraction(m1, n1) < Fraction(num, den) < Fraction(m2, n2):
                    assert num >= b_min and den >= a_min, (m1, n1, m2, n2, num, den)


def test_asymptote_slopes():
    sp = asymptote_slopes(Fraction(1, 3), Fraction(1, 3))
    assert (sp.rational_part, sp.surd_coeff, sp.radicand) == (
        Fraction(7, 2), Fraction(3, 2), 5)
    assert not sp.vertical
    lo, hi = sp.approx()
    assert abs(hi - 6.854101966) < 1e-8
    assert abs(lo * hi - 1.0) < 1e-12    # phi^4 * phi^-4

    assert asymptote_slopes(0, 2).rational_part == 4
    assert asymptote_slopes(0, 2).vertical
    assert asymptote_slopes(0, Fraction(5, 2)).rational_part == Fraction(25, 4)
    with pytest.raises(ValueError):
        asymptote_slopes(Fraction(1, 2), Fraction(1, 2))


def test_asymptote_perfect_square_disc():
    # 1 - 4pq = 9/25 is a rational square: radicand collapses to 1
    sp = asymptote_slopes(Fraction(2, 5), Fraction(2, 5))
    assert sp.radicand == 1
    lo, hi = sp.approx()
    assert lo < hi
