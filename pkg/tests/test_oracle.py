"""Brute-force verifier tests: window enumeration, containment
certificates, density counting, and engine agreement."""

import random
from fractions import Fraction

import pytest

from simiso import oracle as orc, packings as pk
from simiso.lattices import Lattice
from simiso.packings import PointPacking
from simiso.presets import preset
from simiso.rings import EISENSTEIN, GAUSSIAN, FieldElem, RingElem
from simiso.similarity import Direction, Similarity

F = Fraction


def fe(ring, a, b):
    return FieldElem(ring, F(a), F(b))


def simw(ring, a, b, conjugate=False):
    return Similarity(fe(ring, a, b), conjugate)


WINDOW = (F(0), F(0), F(3), F(3))


class TestPointsInWindow:
    def test_square_lattice(self):
        packing = PointPacking(Lattice.ring_lattice(GAUSSIAN), (fe(GAUSSIAN, 0, 0),))
        assert len(orc.points_in_window(packing, WINDOW)) == 9

    def test_hexagonal(self):
        pts = orc.points_in_window(preset("hex"), WINDOW)
        assert len(pts) == 18

    def test_shifted_hexagonal_omits_origin(self):
        pts = orc.points_in_window(preset("hex-shifted"), WINDOW)
        assert len(pts) == 18
        assert all(not p.is_zero() for p in pts)

    def test_points_really_belong(self):
        packing = preset("rect12")
        for p in orc.points_in_window(packing, (F(-2), F(-2), F(2), F(2))):
            assert packing.contains(p)
            assert -2 <= p.a < 2 and -2 <= p.b < 2

    def test_density(self):
        # Count in a window of area A is m·A/det(B) up to boundary terms.
        packing = preset("ex34")
        for size in (6, 12, 24):
            pts = orc.points_in_window(packing, (F(0), F(0), F(size), F(size)))
            expected = packing.m * size * size / float(packing.lattice.det)
            assert abs(len(pts) - expected) <= 4 * size + 4

    def test_empty_window_rejected(self):
        with pytest.raises(ValueError):
            orc.points_in_window(preset("hex"), (F(0), F(0), F(0), F(3)))


class TestCertifySubpacking:
    def test_rect12_octagonal_scaling(self):
        ok, witness = orc.certify_subpacking(preset("rect12"), simw(GAUSSIAN, 2, 2))
        assert ok and witness is None

    def test_hexagonal_doubled_rotation(self):
        ok, _ = orc.certify_subpacking(preset("hex"), simw(EISENSTEIN, 2, 2))
        assert ok

    def test_hexagonal_unit_rotation_refuted(self):
        packing = preset("hex")
        s = simw(EISENSTEIN, 1, 1)
        ok, witness = orc.certify_subpacking(packing, s)
        assert not ok
        # The counterexample is a genuine point of s(L) outside L.
        assert witness is not None
        assert not packing.contains(witness)
        assert packing.image(s).contains(witness)

    def test_shifted_hexagonal_symmetry(self):
        ok, _ = orc.certify_subpacking(preset("hex-shifted"), simw(EISENSTEIN, 1, 1))
        assert ok


class TestIndexByCounting:
    def test_hexagonal_doubled_rotation(self):
        # β = 2 for w = 2(1+ω): the density ratio equals β² = norm(w) = 4.
        s = simw(EISENSTEIN, 2, 2)
        assert orc.index_by_counting(preset("hex"), s) == 4 == s.scale_sq()

    def test_symmetry_has_index_one(self):
        assert orc.index_by_counting(preset("ex34"), simw(GAUSSIAN, 0, 1)) == 1

    def test_requires_containment(self):
        with pytest.raises(ValueError):
            orc.index_by_counting(preset("hex"), simw(EISENSTEIN, 1, 1))

    def test_matches_norm_on_random_accepted_cases(self):
        rng = random.Random(31)
        checked = 0
        while checked < 12:
            case = orc.random_case(
                rng,
                rng.choice((GAUSSIAN, EISENSTEIN)),
                max_norm=20,
                p_bound=3,
                q_bound=2,
            )
            ok, _ = orc.certify_subpacking(case.packing, case.similarity)
            if not ok:
                continue
            got = orc.index_by_counting(case.packing, case.similarity)
            assert got == case.similarity.scale_sq()
            checked += 1


class TestScalSetBruteforce:
    def test_hexagonal_unit_direction(self):
        got = orc.scal_set_bruteforce(preset("hex"), Direction(RingElem(EISENSTEIN, 1, 1)), 9, 1)
        assert got == {F(2), F(3), F(5), F(6), F(8), F(9)}

    def test_rect12_all_integers(self):
        got = orc.scal_set_bruteforce(preset("rect12"), Direction(RingElem(GAUSSIAN, 1, 2)), 4, 1)
        assert got == {F(1), F(2), F(3), F(4)}

    def test_identity_direction(self):
        got = orc.scal_set_bruteforce(preset("hex"), Direction(RingElem(EISENSTEIN, 1, 0)), 3, 1)
        assert F(1) in got

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            orc.scal_set_bruteforce(preset("hex"), Direction(RingElem(EISENSTEIN, 1, 0)), 0, 1)

    def test_matches_engine_classes(self):
        packing = preset("hex-shifted")
        for coords in ((1, 0), (1, 1), (2, 1)):
            d = Direction(RingElem(EISENSTEIN, *coords))
            full = pk.scal_set_packing(packing, d)
            brute = orc.scal_set_bruteforce(packing, d, 7, 2)
            from math import gcd

            engine = {
                F(p, q)
                for p in range(1, 8)
                for q in range(1, 3)
                if gcd(p, q) == 1 and full.contains_ratio(F(p, q))
            }
            assert brute == engine


class TestEngineOracleAgreement:
    def test_randomized(self):
        rng = random.Random(47)
        for _ in range(60):
            case = orc.random_case(rng, rng.choice((GAUSSIAN, EISENSTEIN)))
            engine = pk.check_similarity(case.packing, case.similarity).accepted
            contained, witness = orc.certify_subpacking(case.packing, case.similarity)
            assert engine == contained, (case.packing, case.similarity)
            if witness is not None:
                assert not case.packing.contains(witness)

    def test_nonring_lattice_with_reflections(self):
        # ex34 sits over {3a+bi}, exercising conjugation on a basis the
        # random sweep never produces.
        packing = preset("ex34")
        rng = random.Random(53)
        for _ in range(30):
            a, b = rng.randint(-4, 4), rng.randint(-4, 4)
            if a == 0 and b == 0:
                continue
            q = rng.randint(1, 3)
            s = Similarity(
                FieldElem(GAUSSIAN, F(a, q), F(b, q)), rng.random() < 0.5
            )
            engine = pk.check_similarity(packing, s).accepted
            oracle_ok, _ = orc.certify_subpacking(packing, s)
            assert engine == oracle_ok, s

    def test_table_derived_cases(self):
        cases = [
            ("rect12", simw(GAUSSIAN, 1, 2), True),
            ("rect12", simw(GAUSSIAN, 2, 4), True),
            ("rect12", simw(GAUSSIAN, 0, 1), False),
            ("rect12", simw(GAUSSIAN, 0, 2), True),
            ("hex", simw(EISENSTEIN, 3, 0), True),
            ("hex", simw(EISENSTEIN, 1, 1), False),
            ("hex", simw(EISENSTEIN, 2, 2), True),
            ("hex", simw(EISENSTEIN, 2, 1), True),
            ("hex", simw(EISENSTEIN, 1, 0, True), False),
            ("hex", simw(EISENSTEIN, 2, 0, True), True),
            ("hex-shifted", simw(EISENSTEIN, 1, 1), True),
            ("hex-shifted", simw(EISENSTEIN, 3, 3), False),
            ("hex-shifted", simw(EISENSTEIN, 2, 1), False),
            ("ex34", simw(GAUSSIAN, 0, 1), True),
            ("ex22", simw(GAUSSIAN, 1, 1), True),
        ]
        for name, s, expected in cases:
            packing = preset(name)
            engine = pk.check_similarity(packing, s).accepted
            oracle_ok, _ = orc.certify_subpacking(packing, s)
            assert engine == oracle_ok == expected, (name, s)
