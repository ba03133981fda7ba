"""Packing engine tests: the component-counting decision, τ, scal sets,
periods and reduction, corollaries, and closure diagnostics."""

import math
import random
from fractions import Fraction

import pytest

from simiso import lattices as lat, packings as pk, similarity as sim
from simiso.lattices import Lattice
from simiso.packings import PointPacking, UnsupportedLatticeError
from simiso.presets import preset
from simiso.rings import EISENSTEIN, GAUSSIAN, FieldElem, RingElem
from simiso.similarity import Direction, Similarity

F = Fraction


def fe(ring, a, b):
    return FieldElem(ring, F(a), F(b))


def simw(ring, a, b, conjugate=False):
    return Similarity(fe(ring, a, b), conjugate)


HEX_SHIFT = FieldElem(EISENSTEIN, F(2, 3), F(1, 3))


class TestPointPacking:
    def test_shift_normalization(self):
        p = PointPacking(
            Lattice.ring_lattice(GAUSSIAN),
            (fe(GAUSSIAN, 0, 0), FieldElem(GAUSSIAN, F(5, 2), F(3))),
        )
        assert p.shifts[1] == FieldElem(GAUSSIAN, F(1, 2), F(0))

    def test_congruent_shifts_rejected(self):
        with pytest.raises(ValueError):
            PointPacking(
                Lattice.ring_lattice(GAUSSIAN),
                (fe(GAUSSIAN, 0, 0), fe(GAUSSIAN, 1, 1)),
            )

    def test_contains(self):
        hexp = preset("hex")
        assert hexp.contains(fe(EISENSTEIN, 2, -1))
        assert hexp.contains(HEX_SHIFT + fe(EISENSTEIN, 4, 1))
        assert not hexp.contains(FieldElem(EISENSTEIN, F(1, 3), F(2, 3)))


class TestComponentIntersection:
    def test_sublattice_case(self):
        base = Lattice.ring_lattice(GAUSSIAN)
        zero = FieldElem.zero(GAUSSIAN)
        got = pk.component_intersection(base, zero, zero, simw(GAUSSIAN, 1, 2))
        assert got is not None
        offset, lattice = got
        assert base.contains(offset)
        assert lattice == lat.scale_by(base, fe(GAUSSIAN, 1, 2))

    def test_incongruent_shifts_miss(self):
        base = Lattice.ring_lattice(EISENSTEIN)
        got = pk.component_intersection(
            base, HEX_SHIFT, FieldElem.zero(EISENSTEIN), simw(EISENSTEIN, 1, 0)
        )
        assert got is None

    def test_ex34_all_pairs_meet(self):
        packing = preset("ex34")
        s = simw(GAUSSIAN, 0, 1)
        for x_k in packing.shifts:
            for x_j in packing.shifts:
                got = pk.component_intersection(packing.lattice, x_k, x_j, s)
                assert got is not None
                offset, inter = got
                # The offset witnesses a point of both components.
                assert packing.lattice.contains(offset - x_j)
                assert s.image_lattice(packing.lattice).contains(
                    offset - s.apply(x_k)
                )

    def test_offset_coset_is_the_intersection(self):
        # Sample points of the returned coset and confirm each lies in both
        # components; sample nearby non-coset points of x_j+Γ and confirm
        # they avoid the image component.
        packing = preset("rect12")
        base = packing.lattice
        s = simw(GAUSSIAN, 2, 2)
        x_k = packing.shifts[1]
        x_j = packing.shifts[0]
        offset, inter = pk.component_intersection(base, x_k, x_j, s)
        img = s.image_lattice(base)
        for t0 in range(-2, 3):
            for t1 in range(-2, 3):
                pt = offset + inter.point(t0, t1)
                assert base.contains(pt - x_j)
                assert img.contains(pt - s.apply(x_k))
        stray = offset + base.point(1, 0)
        if not inter.contains(stray - offset):
            assert not img.contains(stray - s.apply(x_k))


class TestCheckSimilarity:
    def test_rect12_table_row(self):
        packing = preset("rect12")
        report = pk.check_similarity(packing, simw(GAUSSIAN, 1, 2))
        assert report.accepted and report.n == 1
        assert report.tau == ((0, 0), (1, 1))

    def test_ex34_quarter_turn(self):
        packing = preset("ex34")
        report = pk.check_similarity(packing, simw(GAUSSIAN, 0, 1))
        assert report.accepted and report.n == 3
        assert len(report.tau) == 9
        assert set(report.tau) == {(k, j) for k in range(3) for j in range(3)}

    def test_identity_is_diagonal(self):
        packing = preset("hex")
        report = pk.check_similarity(packing, simw(EISENSTEIN, 1, 0))
        assert report.accepted and report.n == 1
        assert report.tau == ((0, 0), (1, 1))

    def test_rejection_reports_component(self):
        packing = preset("hex")
        report = pk.check_similarity(packing, simw(EISENSTEIN, 1, 1))
        assert not report.accepted
        # β = 1 maps the origin component into Γ but strands the second.
        assert report.failing_k == 1
        assert report.tau == ()

    def test_tau_size_law(self):
        rng = random.Random(21)
        from simiso import oracle as orc

        for _ in range(40):
            case = orc.random_case(rng, rng.choice((GAUSSIAN, EISENSTEIN)))
            report = pk.check_similarity(case.packing, case.similarity)
            if report.accepted:
                assert len(report.tau) == case.packing.m * report.n
                assert report.n <= case.packing.m
                per_k = {}
                for k, _ in report.tau:
                    per_k[k] = per_k.get(k, 0) + 1
                assert all(c == report.n for c in per_k.values())

    def test_witness_offsets_lie_in_both_components(self):
        packing = preset("ex34")
        s = simw(GAUSSIAN, 0, 1)
        report = pk.check_similarity(packing, s)
        img = s.image_lattice(packing.lattice)
        for k, j, offset in report.witness:
            assert packing.lattice.contains(offset - packing.shifts[j])
            assert img.contains(offset - s.apply(packing.shifts[k]))


class TestScalSetPacking:
    def test_rect12_classes(self):
        packing = preset("rect12")
        ss = pk.scal_set_packing(packing, Direction(RingElem(GAUSSIAN, 1, 2)))
        # √5·2Z ∪ √5·(1+2Z) merges to √5·Z.
        assert ss.display() == "√5·Z"
        ss2 = pk.scal_set_packing(packing, Direction(RingElem(GAUSSIAN, 1, 1)))
        assert ss2.display(symbolic=True) == "den·2Z"

    def test_hexagonal_classes(self):
        packing = preset("hex")
        ss = pk.scal_set_packing(packing, Direction(RingElem(EISENSTEIN, 1, 1)))
        assert ss.display() == "3Z ∪ (2+3Z)"
        assert ss.min_positive_ratio() == 2

    def test_shifted_hexagonal_empty_class(self):
        packing = preset("hex-shifted")
        ss = pk.scal_set_packing(packing, Direction(RingElem(EISENSTEIN, 2, 1)))
        assert ss.is_empty()

    def test_requires_ring_lattice(self):
        with pytest.raises(UnsupportedLatticeError):
            pk.scal_set_packing(preset("ex34"), Direction(RingElem(GAUSSIAN, 0, 1)))

    def test_membership_matches_engine(self):
        # Spot-check ratios inside and outside the returned classes against
        # direct accept/reject decisions.
        rng = random.Random(9)
        for packing_name, ring in (("rect12", GAUSSIAN), ("hex", EISENSTEIN), ("hex-shifted", EISENSTEIN)):
            packing = preset(packing_name)
            for _ in range(4):
                while True:
                    z = RingElem(ring, rng.randint(-4, 4), rng.randint(-4, 4))
                    if not z.is_zero() and math.gcd(z.a, z.b) == 1:
                        break
                d = Direction(z, rng.random() < 0.5)
                ss = pk.scal_set_packing(packing, d)
                for _ in range(50):
                    p = rng.randint(-10, 10)
                    q = rng.randint(1, 4)
                    if p == 0 or math.gcd(p, q) != 1:
                        continue
                    ratio = F(p, q)
                    engine = pk.check_similarity(packing, d.similarity(ratio)).accepted
                    assert ss.contains_ratio(ratio) == engine, (packing_name, d, ratio)

    def test_hexagonal_n_is_one(self):
        # Every accepted similarity of the honeycomb (shifted or not) has
        # each image component inside a single packing component.
        rng = random.Random(13)
        for name in ("hex", "hex-shifted"):
            packing = preset(name)
            for _ in range(20):
                while True:
                    z = RingElem(EISENSTEIN, rng.randint(-5, 5), rng.randint(-5, 5))
                    if not z.is_zero() and math.gcd(z.a, z.b) == 1:
                        break
                d = Direction(z, rng.random() < 0.5)
                p, q = rng.randint(1, 9), rng.randint(1, 3)
                if math.gcd(p, q) != 1:
                    continue
                report = pk.check_similarity(packing, d.similarity(F(p, q)))
                if report.accepted:
                    assert report.n == 1


class TestProposition41Witness:
    def test_rational_shift_packings_admit_the_lcm_witness(self):
        rng = random.Random(17)
        from simiso import oracle as orc

        for _ in range(60):
            ring = rng.choice((GAUSSIAN, EISENSTEIN))
            case = orc.random_case(rng, ring, p_bound=1, q_bound=1)
            packing = case.packing
            z = orc._random_primitive(rng, ring, 60)
            conjugate = rng.random() < 0.5
            lcm_den = 1
            for x in packing.shifts:
                lcm_den = math.lcm(lcm_den, x.a.denominator, x.b.denominator)
            d = Direction(z, conjugate)
            witness = d.similarity(lcm_den * sim.denominator(packing.lattice, d))
            assert pk.check_similarity(packing, witness).accepted


class TestInversionSymmetry:
    def test_symmetric_packings(self):
        # For packings with -L = L, acceptance of w implies acceptance of -w.
        rng = random.Random(23)
        for name in ("rect12", "ex34", "ex22"):
            packing = preset(name)
            assert all(
                packing.contains(-x) for x in packing.shifts
            ), f"{name} should be inversion symmetric"
            ring = packing.ring
            for _ in range(25):
                a, b = rng.randint(-5, 5), rng.randint(-5, 5)
                if a == 0 and b == 0:
                    continue
                q = rng.randint(1, 3)
                w = FieldElem(ring, F(a, q), F(b, q))
                s = Similarity(w, rng.random() < 0.5)
                if pk.check_similarity(packing, s).accepted:
                    neg = Similarity(-w, s.conjugate)
                    assert pk.check_similarity(packing, neg).accepted


class TestCorollaries:
    def test_ex34(self):
        packing = preset("ex34")
        report = pk.check_similarity(packing, simw(GAUSSIAN, 0, 1))
        diag = pk.check_corollaries(report, packing)
        assert diag.shift_pair_in_nth_lattice is True
        assert diag.singleton_when_lattice_scaling is None  # β ∉ Scal(Γ,R)
        assert diag.n_beta_in_lattice_scal is True
        assert diag.all_pass()

    def test_hexagonal_vacuous_pair_check(self):
        packing = preset("hex")
        report = pk.check_similarity(packing, simw(EISENSTEIN, 2, 2))
        diag = pk.check_corollaries(report, packing)
        assert diag.shift_pair_in_nth_lattice is None  # n = 1
        assert diag.singleton_when_lattice_scaling is True
        assert diag.all_pass()

    def test_identity(self):
        packing = preset("rect12")
        report = pk.check_similarity(packing, simw(GAUSSIAN, 1, 0))
        assert pk.check_corollaries(report, packing).all_pass()

    def test_rejected_report_refused(self):
        packing = preset("hex")
        report = pk.check_similarity(packing, simw(EISENSTEIN, 1, 1))
        with pytest.raises(ValueError):
            pk.check_corollaries(report, packing)


class TestPeriodsReduce:
    def test_checkerboard(self):
        packing = preset("ex22")
        per = pk.periods(packing)
        assert per.contains(FieldElem(GAUSSIAN, F(1, 2), F(1, 2)))
        assert lat.index(packing.lattice, per) == 2
        reduced = pk.reduce(packing)
        assert reduced.m == 1
        assert reduced.lattice.det == F(1, 2)

    def test_hexagonal_irreducible(self):
        packing = preset("hex")
        assert pk.periods(packing) == packing.lattice
        assert pk.reduce(packing).m == 2

    def test_ex34_reduces_to_square_lattice(self):
        packing = preset("ex34")
        reduced = pk.reduce(packing)
        assert reduced.m == 1
        assert reduced.lattice == Lattice.ring_lattice(GAUSSIAN)

    def test_single_component(self):
        packing = PointPacking(
            Lattice.ring_lattice(EISENSTEIN), (FieldElem.zero(EISENSTEIN),)
        )
        assert pk.periods(packing) == packing.lattice
        assert pk.reduce(packing).m == 1


class TestShift:
    def test_hexagonal_shift(self):
        packing = preset("hex")
        shifted = pk.shift(packing, HEX_SHIFT)
        assert shifted.shifts[0] == HEX_SHIFT
        # (4+2ω)/3 normalizes to the congruent representative (1+2ω)/3.
        second = shifted.shifts[1]
        assert shifted.lattice.contains(
            second - FieldElem(EISENSTEIN, F(4, 3), F(2, 3))
        )
        assert shifted == preset("hex-shifted")

    def test_zero_shift(self):
        packing = preset("rect12")
        assert pk.shift(packing, FieldElem.zero(GAUSSIAN)) == packing

    def test_lattice_period_shift(self):
        packing = preset("rect12")
        assert pk.shift(packing, fe(GAUSSIAN, 2, -1)) == packing


class TestClosure:
    def test_hexagonal_monoid(self):
        packing = preset("hex")
        pairs = [
            (simw(EISENSTEIN, 2, 2), simw(EISENSTEIN, 3, 0)),
            (simw(EISENSTEIN, 2, 2), simw(EISENSTEIN, 2, 2)),
            (simw(EISENSTEIN, 2, 1), simw(EISENSTEIN, 3, 0, True)),
        ]
        diag = pk.closure_check(packing, pairs)
        assert diag.all_compositions_accepted()
        assert diag.hypothesis_holds()

    def test_ex34_converse_failure(self):
        # The square lattice over {3a+bi}: compositions stay accepted while
        # Scal(L,R) = Z is not a subset of Scal(Γ,R) = 3Z.
        packing = preset("ex34")
        quarter = simw(GAUSSIAN, 0, 1)
        diag = pk.closure_check(packing, [(quarter, quarter)])
        assert diag.all_compositions_accepted()
        assert not diag.hypothesis_holds()

    def test_identity_pairs(self):
        packing = preset("rect12")
        ident = simw(GAUSSIAN, 1, 0)
        diag = pk.closure_check(packing, [(ident, ident)])
        assert diag.all_compositions_accepted()

    def test_unaccepted_sample_rejected(self):
        packing = preset("hex")
        with pytest.raises(ValueError):
            pk.closure_check(packing, [(simw(EISENSTEIN, 1, 1), simw(EISENSTEIN, 3, 0))])

    def test_inverse_probe(self):
        packing = preset("hex")
        assert pk.inverse_probe(packing, simw(EISENSTEIN, 2, 2)) is True
        assert pk.inverse_probe(preset("ex34"), simw(GAUSSIAN, 0, 1)) is None
