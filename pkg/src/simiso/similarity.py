"""Similarity maps of the plane as ring-field multipliers.

A map is x ↦ w·x, or x ↦ w·conj(x) for the reflection family T = R·T_r.
Its scaling factor β = |w| is never stored as a real number: it lives as a
rational multiple of the symbolic surd |z| of a primitive direction z, and
scaling-factor sets are finite unions of residue classes of such rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import lattices
from .rings import (
    FieldElem,
    RingElem,
    conj_matrix,
    content_and_primitive,
    mul_matrix,
)
from .lattices import Lattice


@dataclass(frozen=True)
class Similarity:
    """The map x ↦ w·x (or x ↦ w·conj(x) when conjugate is set)."""

    w: FieldElem
    conjugate: bool = False

    def __post_init__(self):
        if self.w.is_zero():
            raise ValueError("similarity multiplier must be nonzero")

    @property
    def ring(self) -> str:
        return self.w.ring

    def apply(self, x: FieldElem) -> FieldElem:
        return self.w * (x.conj() if self.conjugate else x)

    def image_lattice(self, lattice: Lattice) -> Lattice:
        base = lattice.conjugated() if self.conjugate else lattice
        return lattices.scale_by(base, self.w)

    def scale_sq(self) -> Fraction:
        """β² as an exact rational."""
        return self.w.norm()

    def __str__(self) -> str:
        return f"x ↦ ({self.w})·{'conj(x)' if self.conjugate else 'x'}"


@dataclass(frozen=True)
class Direction:
    """An isometry z/|z| (optionally composed with conjugation), z primitive.

    No unit normalization is applied: z and iz are distinct rotations.
    """

    z: RingElem
    conjugate: bool = False

    def __post_init__(self):
        if self.z.is_zero():
            raise ValueError("direction element must be nonzero")
        if math.gcd(self.z.a, self.z.b) != 1:
            raise ValueError(f"direction element {self.z} is not primitive")

    @property
    def ring(self) -> str:
        return self.z.ring

    def norm(self) -> int:
        return self.z.norm()

    def similarity(self, ratio: Fraction | int) -> Similarity:
        """The similarity with β = ratio·|z| along this direction."""
        return Similarity(self.z.to_field().scale(Fraction(ratio)), self.conjugate)

    def __str__(self) -> str:
        base = f"({self.z})/|{self.z}|"
        return base + ("·conj" if self.conjugate else "")


def decompose(s: Similarity) -> tuple[Fraction, Direction]:
    """Split s as w = r·z with r = p/q > 0 in lowest terms and z primitive."""
    n, y = s.w.clear_denominators()
    c, z0 = content_and_primitive(y)
    return Fraction(c, n), Direction(z0, s.conjugate)


def compose(s2: Similarity, s1: Similarity) -> Similarity:
    """The map x ↦ s2(s1(x))."""
    w1 = s1.w.conj() if s2.conjugate else s1.w
    return Similarity(s2.w * w1, s2.conjugate != s1.conjugate)


def denominator(lattice: Lattice, d: Direction) -> Fraction:
    """den(Γ, R) as the rational r in den = r·|z|.

    r is the least positive rational making r·B⁻¹·M_z·(M_conj)·B integral,
    i.e. the least β = r|z| with βRΓ ⊆ Γ.  For full ring lattices r = 1.
    """
    m = mul_matrix(d.z.to_field())
    if d.conjugate:
        c = conj_matrix(lattice.ring)
        m = (
            m[0] * c[0] + m[1] * c[2],
            m[0] * c[1] + m[1] * c[3],
            m[2] * c[0] + m[3] * c[2],
            m[2] * c[1] + m[3] * c[3],
        )
    entries = []
    for x, y in (
        (m[0] * lattice.b00, m[2] * lattice.b00),
        (m[0] * lattice.b01 + m[1] * lattice.b11, m[2] * lattice.b01 + m[3] * lattice.b11),
    ):
        t1 = Fraction(y) / lattice.b11
        t0 = (Fraction(x) - lattice.b01 * t1) / lattice.b00
        entries += [t0, t1]
    big_d = math.lcm(*(e.denominator for e in entries))
    g = math.gcd(*(int(e * big_d) for e in entries))
    return Fraction(big_d, g)


@dataclass(frozen=True)
class ResidueClass:
    """The rationals {p/q : p ≡ r (mod modulus) for r ∈ residues, gcd(p,q)=1}."""

    q: int
    modulus: int
    residues: frozenset[int]

    def contains_ratio(self, ratio: Fraction) -> bool:
        if ratio == 0:
            return self.q == 1 and 0 in self.residues
        return (
            ratio.denominator == self.q
            and ratio.numerator % self.modulus in self.residues
        )

    def sorted_residues(self) -> list[int]:
        return sorted(self.residues)


@dataclass(frozen=True)
class ScalSet:
    """A scaling-factor set: rational multiples of the symbolic surd |z|.

    classes describe which ratios p/q occur; an element of the set is
    (p/q)·|z| for any admitted reduced fraction.  Empty classes mean the
    direction admits no scaling factor at all.
    """

    direction: Direction
    classes: tuple[ResidueClass, ...]

    def is_empty(self) -> bool:
        return not self.classes

    def contains_ratio(self, ratio: Fraction | int) -> bool:
        ratio = Fraction(ratio)
        return any(c.contains_ratio(ratio) for c in self.classes)

    def min_positive_ratio(self) -> Fraction | None:
        """The ratio of den(L, R) = ratio·|z|, or None when empty."""
        best = None
        for c in self.classes:
            for r in c.residues:
                start = r if r > 0 else c.modulus
                for k in range(c.q):
                    p = start + k * c.modulus
                    if math.gcd(p, c.q) == 1:
                        cand = Fraction(p, c.q)
                        if best is None or cand < best:
                            best = cand
                        break
        return best

    def display(self, symbolic: bool = False) -> str:
        """Union-of-residue-classes display.

        Symbolic form writes classes against the symbol "den" (table rows);
        the concrete form substitutes |z| as a surd or collapsed integer.
        """
        if not self.classes:
            return "∅"
        parts = []
        for c in sorted(self.classes, key=lambda c: (c.q, c.modulus, min(c.residues))):
            for r in c.sorted_residues():
                if symbolic:
                    parts.append(_symbolic_class(c.q, c.modulus, r))
                else:
                    parts.append(_concrete_class(c.q, c.modulus, r, self.direction.norm()))
        return " ∪ ".join(parts)


def _symbolic_class(q: int, modulus: int, r: int) -> str:
    if r == 0:
        body = "den·Z" if modulus == 1 else f"den·{modulus}Z"
    else:
        body = f"den·({r}+{modulus}Z)"
    return body if q == 1 else f"(1/{q})·{body}"


def format_scale(ratio: Fraction, norm_z: int) -> str:
    """Display of β = ratio·√norm_z, collapsing perfect squares."""
    s = math.isqrt(norm_z)
    if s * s == norm_z:
        return str(ratio * s)
    if ratio == 1:
        return f"√{norm_z}"
    return f"{ratio}·√{norm_z}"


def _concrete_class(q: int, modulus: int, r: int, norm_z: int) -> str:
    s = math.isqrt(norm_z)
    square = s * s == norm_z
    if r == 0:
        if square:
            coeff = Fraction(modulus * s, q)
            return "Z" if coeff == 1 else f"{coeff}Z"
        lead = format_scale(Fraction(1, q), norm_z)
        return f"{lead}·Z" if modulus == 1 else f"{lead}·{modulus}Z"
    body = f"({r}+{modulus}Z)"
    if square and Fraction(s, q) == 1:
        return body
    return f"{format_scale(Fraction(1, q), norm_z)}·{body}"


def _den_ratio_classes(ratio: Fraction) -> tuple[ResidueClass, ...]:
    """Classes describing the set ratio·Z of rationals, ratio = a/b reduced."""
    a, b = ratio.numerator, ratio.denominator
    out = []
    for d in range(1, b + 1):
        if b % d == 0:
            out.append(ResidueClass(q=b // d, modulus=a, residues=frozenset({0})))
    return tuple(out)


def scal_lattice(lattice: Lattice, d: Direction) -> ScalSet:
    """Scal(Γ, R) = den(Γ, R)·Z, as residue classes of ratios of |z|."""
    return ScalSet(d, _den_ratio_classes(denominator(lattice, d)))


def in_scal_rational(lattice: Lattice, d: Direction, ratio: Fraction | int) -> bool:
    """β = ratio·|z| ∈ scal(Γ, R) = den(Γ, R)·Q*, i.e. any nonzero ratio."""
    del lattice, d
    return Fraction(ratio) != 0
