"""Point packings and their similarity isometries.

The decision engine follows the component-counting characterization: a
similarity s with image lattice sΓ maps the packing into itself exactly
when every component image meets n = [sΓ : Γ ∩ sΓ] components, recorded in
the correspondence set τ.  Scaling-factor sets of packings over full ring
lattices are computed by a residue sweep over candidate rationals p/q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import lattices, similarity as sim
from .lattices import Lattice
from .rings import FieldElem
from .similarity import Direction, ResidueClass, ScalSet, Similarity


class UnsupportedLatticeError(ValueError):
    """Raised when a whole-set computation needs a full ring lattice."""


@dataclass(frozen=True)
class PointPacking:
    """A finite union of shifted copies x_k + Γ of one generating lattice.

    Shifts are normalized into the fundamental domain of Γ and must be
    pairwise incongruent mod Γ.  A packing whose shifts include 0 models L;
    one without models a shifted packing x + L.
    """

    lattice: Lattice
    shifts: tuple[FieldElem, ...]

    def __post_init__(self):
        normalized = tuple(self.lattice.reduce_point(x) for x in self.shifts)
        object.__setattr__(self, "shifts", normalized)
        for i in range(len(normalized)):
            for j in range(i + 1, len(normalized)):
                if self.lattice.contains(normalized[i] - normalized[j]):
                    raise ValueError(
                        f"shifts {self.shifts[i]} and {self.shifts[j]} are "
                        "congruent mod the generating lattice"
                    )
        if not normalized:
            raise ValueError("a packing needs at least one component")

    @property
    def ring(self) -> str:
        return self.lattice.ring

    @property
    def m(self) -> int:
        return len(self.shifts)

    def contains(self, x: FieldElem) -> bool:
        return any(self.lattice.contains(x - s) for s in self.shifts)

    def translated(self, x: FieldElem) -> PointPacking:
        return PointPacking(self.lattice, tuple(s + x for s in self.shifts))

    def image(self, s: Similarity) -> PointPacking:
        """The packing s(L) over the image lattice sΓ."""
        return PointPacking(
            s.image_lattice(self.lattice), tuple(s.apply(x) for x in self.shifts)
        )

    def __str__(self) -> str:
        comps = " ∪ ".join(f"({x}+Γ)" for x in self.shifts)
        return f"{comps} over Γ={self.lattice}"


@dataclass(frozen=True)
class SimilarityReport:
    """Outcome of the component-counting test for one similarity."""

    accepted: bool
    n: int
    tau: tuple[tuple[int, int], ...]
    witness: tuple[tuple[int, int, FieldElem], ...]
    similarity: Similarity
    image_lattice: Lattice
    intersection: Lattice
    failing_k: int | None = None

    def tau_pairs(self, packing: PointPacking) -> list[tuple[FieldElem, FieldElem]]:
        return [(packing.shifts[k], packing.shifts[j]) for k, j in self.tau]


def component_intersection(
    lattice: Lattice, x_k: FieldElem, x_j: FieldElem, s: Similarity
) -> tuple[FieldElem, Lattice] | None:
    """The coset s(x_k + Γ) ∩ (x_j + Γ), or None when the components miss.

    A nonempty intersection is offset + (Γ ∩ sΓ) where offset lies in both
    components; it exists iff s(x_k) - x_j ∈ Γ + sΓ.
    """
    img = s.image_lattice(lattice)
    v = s.apply(x_k) - x_j
    ell = lattices.coset_intersection_point(lattice, img, v)
    if ell is None:
        return None
    return x_j + ell, lattices.intersect(lattice, img)


def check_similarity(packing: PointPacking, s: Similarity) -> SimilarityReport:
    """Decide whether s maps the packing into itself; report n and τ.

    Accepted iff every index set J_k = {j : s(x_k) - x_j ∈ Γ + sΓ} has size
    exactly n = [sΓ : Γ ∩ sΓ].  |J_k| never exceeds n, so rejection reports
    the first k with |J_k| < n.
    """
    gamma = packing.lattice
    img = s.image_lattice(gamma)
    inter = lattices.intersect(gamma, img)
    n = lattices.integer_index(inter, img)

    tau: list[tuple[int, int]] = []
    witness: list[tuple[int, int, FieldElem]] = []
    failing_k = None
    accepted = True
    for k, x_k in enumerate(packing.shifts):
        sx = s.apply(x_k)
        hits = 0
        for j, x_j in enumerate(packing.shifts):
            v = sx - x_j
            ell = lattices.coset_intersection_point(gamma, img, v)
            if ell is None:
                continue
            hits += 1
            tau.append((k, j))
            witness.append((k, j, x_j + ell))
        if hits != n:
            accepted = False
            failing_k = k
            break
    if not accepted:
        tau, witness = [], []
    return SimilarityReport(
        accepted=accepted,
        n=n,
        tau=tuple(tau),
        witness=tuple(witness),
        similarity=s,
        image_lattice=img,
        intersection=inter,
        failing_k=failing_k,
    )


def _sweep_direction(
    packing: PointPacking, d: Direction
) -> list[tuple[int, int, dict[int, SimilarityReport]]]:
    """Accepted residues per admissible q for β = (p/q)|z| candidates.

    Sweeps q with q²/|gcd(z,q)|² ≤ m and, for each q, a full residue system
    of p modulo M = q·|z|²·lcm(shift denominators); acceptance and τ are
    periodic in p with period dividing M, so each tested residue labels its
    whole class.
    """
    gamma = packing.lattice
    if not gamma.is_ring_lattice():
        raise UnsupportedLatticeError(
            "whole-set computation needs the full ring lattice; use "
            "check_similarity per candidate scaling factor instead"
        )
    m = packing.m
    norm_z = d.norm()
    lcm_shift = 1
    for x in packing.shifts:
        lcm_shift = math.lcm(lcm_shift, x.a.denominator, x.b.denominator)

    out = []
    q_max = math.isqrt(m * norm_z)
    for q in range(1, q_max + 1):
        trial = d.similarity(Fraction(1, q))
        img = trial.image_lattice(gamma)
        inter = lattices.intersect(gamma, img)
        n = lattices.integer_index(inter, img)
        if n > m:
            continue
        modulus = q * norm_z * lcm_shift
        accepted: dict[int, SimilarityReport] = {}
        for r in range(modulus):
            if math.gcd(r, q) != 1:
                continue
            p = r if r != 0 else modulus
            report = check_similarity(packing, d.similarity(Fraction(p, q)))
            if report.accepted:
                accepted[r] = report
        out.append((q, modulus, accepted))
    return out


def scal_set_packing(packing: PointPacking, d: Direction) -> ScalSet:
    """The full set Scal(L, R) for a packing over a ring lattice.

    Residue classes are merged to the smallest modulus that still matches
    the sweep, which restores the compact union-of-classes form.
    """
    classes: list[ResidueClass] = []
    for q, modulus, accepted in _sweep_direction(packing, d):
        if accepted:
            mod, residues = _minimal_modulus(set(accepted), modulus, q)
            classes.append(ResidueClass(q=q, modulus=mod, residues=residues))
    return ScalSet(d, tuple(classes))


def scal_classes_by_tau(
    packing: PointPacking, d: Direction
) -> list[tuple[ResidueClass, tuple[tuple[int, int], ...]]]:
    """Scal(L, R) split into maximal classes of constant τ.

    This is the shape of the published tables: one line per scaling-factor
    class together with the component correspondences it produces.
    """
    rows = []
    for q, modulus, accepted in _sweep_direction(packing, d):
        by_tau: dict[tuple[tuple[int, int], ...], set[int]] = {}
        for r, report in accepted.items():
            by_tau.setdefault(report.tau, set()).add(r)
        for tau, residues in by_tau.items():
            mod, folded = _minimal_modulus(residues, modulus, q)
            rows.append((ResidueClass(q=q, modulus=mod, residues=folded), tau))
    rows.sort(key=lambda rt: (rt[0].q, rt[0].modulus, min(rt[0].residues)))
    return rows


def _minimal_modulus(
    accepted: set[int], modulus: int, q: int
) -> tuple[int, frozenset[int]]:
    """Smallest divisor of modulus expressing the accepted residues.

    Residues r with gcd(r, q) ≠ 1 are unconstrained (they belong to other
    q sweeps), so consistency is only required on the coprime ones.
    """
    universe = [r for r in range(modulus) if math.gcd(r, q) == 1]
    for div in sorted(d for d in range(1, modulus + 1) if modulus % d == 0):
        folded = {r % div for r in accepted}
        if all((r % div in folded) == (r in accepted) for r in universe):
            return div, frozenset(folded)
    return modulus, frozenset(accepted)


@dataclass(frozen=True)
class CorollaryDiagnostics:
    """Per-assertion results for the consequences of an accepted report."""

    shift_pair_in_nth_lattice: bool | None
    singleton_when_lattice_scaling: bool | None
    n_beta_in_lattice_scal: bool

    def all_pass(self) -> bool:
        return all(v is not False for v in (
            self.shift_pair_in_nth_lattice,
            self.singleton_when_lattice_scaling,
            self.n_beta_in_lattice_scal,
        ))


def check_corollaries(report: SimilarityReport, packing: PointPacking) -> CorollaryDiagnostics:
    """Verify the structural consequences of an accepted similarity.

    (i) for n ≥ 2 some pair of distinct shifts differs by a point of
    (1/n)Γ; (ii) when βRΓ ⊆ Γ each component lands in exactly one
    component; (iii) n·β is a lattice scaling factor.
    """
    if not report.accepted:
        raise ValueError("corollary checks need an accepted report")
    gamma = packing.lattice
    s = report.similarity
    n = report.n

    pair_ok: bool | None = None
    if n >= 2:
        nth = lattices.scale_by(gamma, FieldElem(gamma.ring, Fraction(1, n), Fraction(0)))
        pair_ok = any(
            nth.contains(packing.shifts[j] - packing.shifts[i])
            for i in range(packing.m)
            for j in range(packing.m)
            if i != j
        )

    singleton_ok: bool | None = None
    if gamma.contains_lattice(report.image_lattice):
        counts: dict[int, int] = {}
        for k, _ in report.tau:
            counts[k] = counts.get(k, 0) + 1
        singleton_ok = all(c == 1 for c in counts.values()) and len(counts) == packing.m

    scaled = Similarity(s.w.scale(n), s.conjugate)
    n_beta_ok = gamma.contains_lattice(scaled.image_lattice(gamma))
    return CorollaryDiagnostics(pair_ok, singleton_ok, n_beta_ok)


def periods(packing: PointPacking) -> Lattice:
    """The lattice per(L) of translations mapping the point set to itself."""
    gamma = packing.lattice
    gens = [(g.a, g.b) for g in gamma.generators()]
    for j in range(packing.m):
        for k in range(packing.m):
            t = gamma.reduce_point(packing.shifts[j] - packing.shifts[k])
            if t.is_zero():
                continue
            if _is_period(packing, t):
                gens.append((t.a, t.b))
    return Lattice.from_generators(gamma.ring, gens)


def _is_period(packing: PointPacking, t: FieldElem) -> bool:
    gamma = packing.lattice
    return all(
        any(gamma.contains(t + x_k - x_j) for x_j in packing.shifts)
        for x_k in packing.shifts
    )


def reduce(packing: PointPacking) -> PointPacking:
    """Re-express the same point set over its maximal generating lattice."""
    maximal = periods(packing)
    seen: list[FieldElem] = []
    for x in packing.shifts:
        r = maximal.reduce_point(x)
        if r not in seen:
            seen.append(r)
    reduced = PointPacking(maximal, tuple(seen))
    _assert_same_point_set(packing, reduced)
    return reduced


def _assert_same_point_set(packing: PointPacking, reduced: PointPacking) -> None:
    factor = lattices.integer_index(packing.lattice, reduced.lattice)
    assert reduced.m * factor == packing.m, "component count mismatch"
    reps = lattices.quotient_representatives(packing.lattice, reduced.lattice)
    covered = []
    for x in reduced.shifts:
        for rep in reps:
            point = x + rep
            matches = [
                k
                for k, x_k in enumerate(packing.shifts)
                if packing.lattice.contains(point - x_k)
            ]
            assert len(matches) == 1, "reduced packing is not the same point set"
            covered.append(matches[0])
    assert sorted(covered) == list(range(packing.m))


def shift(packing: PointPacking, x: FieldElem) -> PointPacking:
    """The shifted packing x + L (rotation about -x moved to the origin)."""
    return packing.translated(x)


@dataclass(frozen=True)
class PairClosureResult:
    composed_accepted: bool
    composed: Similarity


@dataclass(frozen=True)
class ClosureDiagnostics:
    """Composition closure over sampled similarity pairs, plus the monoid
    hypothesis Scal(L,R) ⊆ Scal(Γ,R) checked per distinct direction."""

    pairs: tuple[PairClosureResult, ...]
    hypothesis_by_direction: tuple[tuple[Direction, bool], ...]

    def all_compositions_accepted(self) -> bool:
        return all(p.composed_accepted for p in self.pairs)

    def hypothesis_holds(self) -> bool:
        return all(ok for _, ok in self.hypothesis_by_direction)


def closure_check(
    packing: PointPacking,
    pairs: list[tuple[Similarity, Similarity]],
    sample_bound: int = 6,
) -> ClosureDiagnostics:
    """Check closure under composition on sampled accepted pairs.

    Every sampled similarity must be individually accepted.  The monoid
    hypothesis is decided exactly through scal_set_packing when the
    generating lattice is the full ring, and by bounded sampling of
    β = (p/q)|z| otherwise.
    """
    results = []
    directions: list[Direction] = []
    for s1, s2 in pairs:
        for s in (s1, s2):
            if not check_similarity(packing, s).accepted:
                raise ValueError(f"sampled similarity {s} is not accepted")
            _, d = sim.decompose(s)
            if d not in directions:
                directions.append(d)
        composed = sim.compose(s2, s1)
        ok = check_similarity(packing, composed).accepted
        results.append(PairClosureResult(ok, composed))

    hypo = []
    for d in directions:
        hypo.append((d, _scal_subset_of_lattice_scal(packing, d, sample_bound)))
    return ClosureDiagnostics(tuple(results), tuple(hypo))


def _scal_subset_of_lattice_scal(
    packing: PointPacking, d: Direction, sample_bound: int
) -> bool:
    gamma = packing.lattice
    den_ratio = sim.denominator(gamma, d)
    if gamma.is_ring_lattice():
        full = scal_set_packing(packing, d)
        for c in full.classes:
            if c.q != 1:
                return False
            for r in c.residues:
                p = r if r != 0 else c.modulus
                if Fraction(p) % den_ratio != 0:
                    return False
        return True
    for q in range(1, sample_bound + 1):
        for p in range(1, sample_bound + 1):
            if math.gcd(p, q) != 1:
                continue
            ratio = Fraction(p, q)
            if not check_similarity(packing, d.similarity(ratio)).accepted:
                continue
            if ratio % den_ratio != 0:
                return False
    return True


def inverse_probe(packing: PointPacking, s: Similarity) -> bool | None:
    """Whether the inverse isometry admits any scaling factor for L.

    Informational only: group closure of the similarity isometries under
    inverses is an open question, so nothing is asserted from this.
    Returns None when the generating lattice is not a ring lattice (the
    exact sweep is unavailable there).
    """
    _, d = sim.decompose(s)
    if d.conjugate:
        inverse_dir = d  # reflections are involutions
    else:
        inverse_dir = Direction(d.z.conj(), False)
    try:
        return not scal_set_packing(packing, inverse_dir).is_empty()
    except UnsupportedLatticeError:
        return None
