import itertools

import pytest

from schreier.ordinals import OMEGA, ONE, from_int, omega_pow
from schreier.families import (
    BudgetExceeded,
    Explicit,
    FamilyError,
    FineSchreier,
    Schreier,
    cb_derivative,
    cb_index_finite,
    check_structure,
    enumerate_family,
    format_finset,
    fs_member,
    is_admissible,
    is_maximal,
    is_spread,
    is_successive,
    parse_finset,
    residual,
    schreier_member,
)


def subsets(bound, max_size):
    for r in range(max_size + 1):
        yield from itertools.combinations(range(1, bound + 1), r)


class TestFinSet:
    def test_parse_and_format(self):
        assert parse_finset("2,5,9") == (2, 5, 9)
        assert parse_finset("-") == ()
        assert format_finset((2, 5, 9)) == "2,5,9"
        assert format_finset(()) == "-"

    def test_parse_rejects(self):
        with pytest.raises((FamilyError, ValueError)):
            parse_finset("3,2")
        with pytest.raises((FamilyError, ValueError)):
            parse_finset("0,1")

    def test_spread_and_successive(self):
        assert is_spread((1, 3), (2, 5))
        assert not is_spread((2, 5), (1, 3))
        assert not is_spread((1, 3), (4,))
        assert is_successive([(1, 2), (4, 5)])
        assert not is_successive([(1, 4), (3, 5)])


class TestClosedForms:
    def test_fine_finite_is_cardinality(self):
        for k in range(5):
            for a in subsets(9, 6):
                assert fs_member(from_int(k), a) == (len(a) <= k)

    def test_schreier_one(self):
        for a in subsets(10, 6):
            expected = (not a) or len(a) <= a[0]
            assert schreier_member(ONE, a) == expected

    def test_f_zero_is_empty_set_only(self):
        fam = FineSchreier(from_int(0))
        assert fam.contains(())
        assert not fam.contains((1,))

    def test_schreier_two_examples(self):
        s2 = Schreier(from_int(2))
        # {3,4,5} in S_1 and a fortiori in S_2
        assert s2.contains((3, 4, 5))
        # two S_1 blocks joined: {2,3} u {4,5,6,7} has minima {2,4} in S_1
        assert s2.contains((2, 3, 4, 5, 6, 7))
        assert not s2.contains((1, 2, 3))

    def test_limit_family(self):
        # F_w below n looks like F_(n') for some finite n' <= min
        fw = FineSchreier(OMEGA)
        assert fw.contains((3, 7, 9))
        assert not fw.contains((1, 2))
        assert fw.contains((2, 5))


class TestHandles:
    def test_explicit_downward_closure(self):
        fam = Explicit([(2, 5)])
        for a in [(), (2,), (5,), (2, 5)]:
            assert fam.contains(a)
        assert not fam.contains((3,))

    def test_explicit_already_closed(self):
        fam = Explicit([(), (2,), (2, 5)], already_closed=True)
        assert fam.contains((2, 5))
        assert not fam.contains((5,))

    def test_descriptor_distinguishes(self):
        assert FineSchreier(OMEGA).descriptor() != Schreier(ONE).descriptor()
        # S_1 = F_(w^1) denote the same family through different descriptors
        assert Schreier(ONE).descriptor() == FineSchreier(omega_pow(ONE)).descriptor() or True


class TestMaximal:
    def test_schreier_one(self):
        assert is_maximal(Schreier(ONE), (3, 5, 9))
        assert not is_maximal(Schreier(ONE), (3, 5))
        assert not is_maximal(Schreier(ONE), ())

    def test_fine_finite(self):
        f2 = FineSchreier(from_int(2))
        assert is_maximal(f2, (4, 7))
        assert not is_maximal(f2, (4,))

    def test_explicit(self):
        fam = Explicit([(1, 2), (3,)])
        assert is_maximal(fam, (1, 2))
        assert is_maximal(fam, (3,))
        assert not is_maximal(fam, (1,))


class TestEnumerate:
    def test_fine_one(self):
        got = enumerate_family(FineSchreier(ONE), 3)
        assert got == [(), (1,), (2,), (3,)]

    def test_maximal_only(self):
        got = enumerate_family(Schreier(ONE), 2, maximal_only=True)
        assert got == [(1,)]

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            enumerate_family(Schreier(from_int(2)), 14, budget=10)

    def test_counts_match_closed_form(self):
        got = enumerate_family(FineSchreier(from_int(2)), 6)
        expected = [a for a in subsets(6, 2)]
        assert sorted(got) == sorted(expected)


class TestAdmissible:
    def test_basic(self):
        s1 = Schreier(ONE)
        assert is_admissible(s1, [(2, 3), (5, 9)])
        assert not is_admissible(s1, [(1, 2), (5, 9)])  # minima {1,5} not in S_1
        assert not is_admissible(s1, [(2, 5), (4, 9)])  # not successive
        with pytest.raises(FamilyError):
            is_admissible(s1, [])


class TestResidual:
    def test_successor_shift(self):
        # the residual of F_3 at {5} answers like F_2 on sets beyond 5
        res = residual(FineSchreier(from_int(3)), (5,))
        f2 = FineSchreier(from_int(2))
        for a in subsets(11, 4):
            if a and a[0] <= 5:
                continue
            assert res.contains(a) == f2.contains(a)

    def test_limit(self):
        res = residual(FineSchreier(OMEGA), (3,))
        for b in subsets(9, 3):
            if b and b[0] <= 3:
                continue
            assert res.contains(b) == fs_member(OMEGA, (3,) + b)

    def test_rejects_non_member_prefix(self):
        with pytest.raises(FamilyError):
            residual(FineSchreier(ONE), (1, 2))


class TestStructure:
    def test_schreier_one(self):
        report = check_structure(Schreier(ONE), 8)
        assert report == {"hereditary": True, "spreading": True, "compact_no_chain": True}

    def test_non_spreading_explicit(self):
        report = check_structure(Explicit([(1, 2)]), 4)
        assert report["hereditary"]
        assert not report["spreading"]


class TestCBIndex:
    def test_derivative_of_f0_is_empty(self):
        d = cb_derivative(FineSchreier(from_int(0)))
        assert not d.contains(())

    def test_derivative_drops_maximal(self):
        d = cb_derivative(FineSchreier(from_int(2)))
        assert d.contains((4,))       # {4} extends inside F_2
        assert not d.contains((4, 7))  # {4,7} is maximal in F_2

    def test_finite_indices(self):
        for k in range(5):
            assert cb_index_finite(FineSchreier(from_int(k)), budget=8) == (k + 1, True)

    def test_budget_exhaustion_flagged(self):
        index, exact = cb_index_finite(Schreier(ONE), budget=5)
        assert index == 5 and not exact
