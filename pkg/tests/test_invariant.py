"""Crossing weights, weight-sum multisets and the RII-move certificates."""

import pytest

import updown as ud
from helpers import (
    DELTA,
    F6,
    KINK,
    KNOT_CODES,
    TREFOIL,
    UNKNOT,
    VIRTUAL_TWO,
    brute_phi,
    tangle,
)

F = ud.builtin_table("example-f")
G = ud.builtin_table("example-g")

# a valid but non-shiftable cocycle over Z_2: entries (1,0,+) and (1,0,-)
NONSHIFT = ud.CocycleTable.from_function(
    2, 2, lambda a, b, s: 1 if (a, b) == (1, 0) else 0)


def base_coloring(code, n=4):
    return ud.solve_colorings(ud.parse(code), ud.ColoringSpec(n))[0]


class TestCrossingWeight:
    def test_delta_negative_crossing(self):
        d = ud.parse(DELTA)
        assert ud.crossing_weight(d, base_coloring(DELTA), 1, F) == 1

    def test_delta_positive_crossing(self):
        d = ud.parse(DELTA)
        assert ud.crossing_weight(d, base_coloring(DELTA), 2, F) == 0

    @pytest.mark.parametrize("code", ["O1+ U1+", "U1+ O1+", "O1- U1-", "U1- O1-"])
    def test_kinks_weigh_nothing(self, code):
        # both weight arguments coincide on a kink, and diagonal entries are 0
        d = ud.parse(code)
        for c in ud.solve_colorings(d, ud.ColoringSpec(4)):
            assert ud.crossing_weight(d, c, 1, F) == 0

    def test_modulus_mismatch(self):
        d = ud.parse(KINK)
        c = base_coloring(KINK, n=3)
        with pytest.raises(ud.InvariantError, match="modulus"):
            ud.crossing_weight(d, c, 1, F)

    def test_unknown_crossing(self):
        d = ud.parse(KINK)
        with pytest.raises(ud.UpDownError):
            ud.crossing_weight(d, base_coloring(KINK), 9, F)


class TestWeightSum:
    def test_delta(self):
        d = ud.parse(DELTA)
        assert ud.weight_sum(d, base_coloring(DELTA), F) == 1

    def test_unknot(self):
        d = ud.parse(UNKNOT)
        assert ud.weight_sum(d, base_coloring(UNKNOT), F) == 0

    def test_delta_sharp_delta(self):
        d = ud.connected_sum(ud.parse(DELTA), ud.parse(DELTA),
                             ud.SemiArcId(0, 0), ud.SemiArcId(0, 0))
        c = ud.solve_colorings(d, ud.ColoringSpec(4))[0]
        assert ud.weight_sum(d, c, F) == 2


class TestPhiMultiset:
    def test_delta(self):
        assert ud.phi_multiset(ud.parse(DELTA), F).elements == (1, 1, 1, 1)

    def test_unknot(self):
        assert ud.phi_multiset(ud.parse(UNKNOT), F).elements == (0, 0, 0, 0)

    def test_kink(self):
        assert ud.phi_multiset(ud.parse(KINK), F).elements == (0, 0, 0, 0)

    def test_virtual_two_crossing(self):
        assert ud.phi_multiset(ud.parse(VIRTUAL_TWO), F).elements == (2, 2, 2, 2)

    @pytest.mark.parametrize("code", KNOT_CODES)
    @pytest.mark.parametrize("table", [F, G, NONSHIFT], ids=["f", "g", "nonshift"])
    def test_matches_brute_force(self, code, table):
        d = ud.parse(code)
        assert ud.phi_multiset(d, table).elements == brute_phi(d, table)

    def test_rejects_links_without_flag(self):
        with pytest.raises(ud.InvariantError, match="single-component"):
            ud.phi_multiset(ud.parse(tangle(1)), F)

    def test_permissive_link_mode(self):
        ms = ud.phi_multiset(ud.parse(tangle(2)), F, allow_links=True)
        assert len(ms.elements) == 16

    def test_rejects_non_cocycles(self):
        bad = ud.CocycleTable.from_function(4, 4, lambda a, b, s: (a + b) % 4)
        with pytest.raises(ud.InvariantError, match="not an up-down cocycle"):
            ud.phi_multiset(ud.parse(DELTA), bad)

    def test_multiset_formatting(self):
        assert str(ud.phi_multiset(ud.parse(DELTA), F)) == "{1,1,1,1}"


class TestPhiShift:
    def test_trivial_knot_pair_values(self):
        assert ud.phi_shift(ud.parse(DELTA), F) == 1
        assert ud.phi_shift(ud.parse(UNKNOT), F) == 0

    def test_classical_trefoil_vanishes(self):
        assert ud.phi_shift(ud.parse(TREFOIL), F) == 0

    def test_virtual_two_crossing(self):
        assert ud.phi_shift(ud.parse(VIRTUAL_TWO), F) == 2

    def test_needs_shiftable(self):
        with pytest.raises(ud.InvariantError, match="shiftable"):
            ud.phi_shift(ud.parse(DELTA), NONSHIFT)

    def test_rejects_links(self):
        with pytest.raises(ud.InvariantError):
            ud.phi_shift(ud.parse(tangle(1)), F)

    @pytest.mark.parametrize("code", KNOT_CODES)
    def test_delta_prepend_adds_one(self, code):
        d = ud.parse(code)
        summed = ud.connected_sum(ud.parse(DELTA), d,
                                  ud.SemiArcId(0, 1), ud.SemiArcId(0, 0))
        assert ud.phi_shift(summed, F) == (1 + ud.phi_shift(d, F)) % 4


class TestMaxordBound:
    def test_stand_in_pair(self):
        b = ud.rii_bound_maxord(ud.parse(tangle(5)), ud.parse(F6))
        assert b.bound == 2
        assert b.certificate == ud.CERT_MAXORD
        assert str(b) == "bound=2 certificate=maxord-difference detail=|10-6|/2"

    @pytest.mark.parametrize("i", range(0, 7))
    @pytest.mark.parametrize("j", range(0, 7))
    def test_tangle_family(self, i, j):
        b = ud.rii_bound_maxord(ud.parse(tangle(i)), ud.parse(tangle(j)))
        assert b.bound == abs(i - j)

    def test_identical(self):
        d = ud.parse(tangle(3))
        assert ud.rii_bound_maxord(d, d).bound == 0

    def test_needs_two_components(self):
        with pytest.raises(ud.InvariantError):
            ud.rii_bound_maxord(ud.parse(DELTA), ud.parse(DELTA))


class TestColcountWitness:
    def test_tangle_one_vs_two(self):
        w = ud.rii_necessity_colcount(ud.parse(tangle(1)), ud.parse(tangle(2)))
        assert w == 4
        # sanity: the counts really differ there
        assert ud.count_colorings(ud.parse(tangle(1)), ud.ColoringSpec(4)) == 0
        assert ud.count_colorings(ud.parse(tangle(2)), ud.ColoringSpec(4)) == 16

    def test_identical(self):
        d = ud.parse(tangle(2))
        assert ud.rii_necessity_colcount(d, d) is None

    def test_zero_gcd_side(self):
        w = ud.rii_necessity_colcount(ud.parse(tangle(0)), ud.parse(tangle(1)))
        assert w == 3

    @pytest.mark.parametrize("i,j", [(0, 1), (1, 2), (2, 3), (1, 3), (0, 3), (2, 5)])
    def test_witness_matches_direct_counting(self, i, j):
        d1, d2 = ud.parse(tangle(i)), ud.parse(tangle(j))
        w = ud.rii_necessity_colcount(d1, d2)
        direct = next(
            (n for n in range(1, 11)
             if ud.count_colorings(d1, ud.ColoringSpec(n))
             != ud.count_colorings(d2, ud.ColoringSpec(n))), None)
        assert w == direct

    def test_component_mismatch(self):
        with pytest.raises(ud.InvariantError):
            ud.rii_necessity_colcount(ud.parse(DELTA), ud.parse(tangle(1)))


class TestPhiNecessity:
    def test_delta_vs_unknot(self):
        assert ud.rii_necessity_phi(ud.parse(DELTA), ud.parse(UNKNOT), F)

    def test_identical(self):
        d = ud.parse(TREFOIL)
        assert not ud.rii_necessity_phi(d, d, F)

    @pytest.mark.parametrize("code", KNOT_CODES)
    def test_delta_summand_is_detected(self, code):
        d = ud.parse(code)
        summed = ud.connected_sum(ud.parse(DELTA), d,
                                  ud.SemiArcId(0, 2), ud.SemiArcId(0, 0))
        assert ud.rii_necessity_phi(d, summed, F)


class TestNonselfBound:
    @pytest.mark.parametrize("i,j", [(0, 1), (2, 5), (4, 4)])
    def test_tangle_family(self, i, j):
        b = ud.rii_bound_nonself(ud.parse(tangle(i)), ud.parse(tangle(j)))
        assert b.bound == abs(i - j)
        assert b.certificate == ud.CERT_NONSELF

    def test_weaker_than_maxord_on_stand_in(self):
        d1, d2 = ud.parse(tangle(5)), ud.parse(F6)
        assert ud.rii_bound_nonself(d1, d2).bound == 1
        assert ud.rii_bound_maxord(d1, d2).bound == 2

    def test_identical(self):
        d = ud.parse(tangle(2))
        assert ud.rii_bound_nonself(d, d).bound == 0


class TestReport:
    def test_maxord_certificate_wins(self):
        r = ud.rii_report(ud.parse(tangle(5)), ud.parse(F6))
        assert (r.bound, r.certificate) == (2, ud.CERT_MAXORD)

    def test_phi_certificate(self):
        r = ud.rii_report(ud.parse(DELTA), ud.parse(UNKNOT), F)
        assert (r.bound, r.certificate) == (1, ud.CERT_PHI)

    def test_identical_diagrams(self):
        d = ud.parse(tangle(2))
        assert ud.rii_report(d, d).bound == 0

    def test_spec_compare_line(self):
        r = ud.rii_report(ud.parse("O1+ O2+ ; U1+ U2+"), ud.parse("() ; ()"))
        assert str(r) == "bound=1 certificate=maxord-difference detail=|2-0|/2"

    def test_component_mismatch(self):
        with pytest.raises(ud.InvariantError):
            ud.rii_report(ud.parse(DELTA), ud.parse(tangle(1)))

    def test_knots_without_cocycle(self):
        r = ud.rii_report(ud.parse(DELTA), ud.parse(UNKNOT))
        assert r.bound == 0


class TestOrientationIndependence:
    @pytest.mark.parametrize("code", KNOT_CODES)
    def test_example_g_ignores_orientation(self, code):
        d = ud.parse(code)
        reversed_d = ud.reverse_orientation(d)
        assert ud.phi_shift(d, G) == ud.phi_shift(reversed_d, G)

    def test_example_g_separates_delta_from_unknot(self):
        assert ud.phi_shift(ud.parse(DELTA), G) == 1
        assert ud.phi_shift(ud.parse(UNKNOT), G) == 0


class TestBoundSoundness:
    @pytest.mark.parametrize("seed", range(5))
    def test_nonself_bound_never_exceeds_known_poke_count(self, seed):
        # ground truth by construction: k poke moves separate d from d'
        d = ud.parse(tangle(2))
        current, pokes = d, 0
        for mv, nxt in ud.random_walk(d, 30, {ud.RII_ADD, ud.RII_REMOVE}, seed=seed):
            if mv is not None:
                pokes += 1
                current = nxt
                assert ud.rii_bound_nonself(d, current).bound <= pokes
                assert ud.rii_bound_maxord(d, current).bound <= pokes

    @pytest.mark.parametrize("seed", range(3))
    def test_bounds_stay_zero_along_free_moves(self, seed):
        d = ud.parse(tangle(2))
        kinds = {ud.RI_ADD, ud.RI_REMOVE, ud.RIII}
        for mv, nxt in ud.random_walk(d, 30, kinds, seed=seed):
            assert ud.rii_report(d, nxt).bound == 0
