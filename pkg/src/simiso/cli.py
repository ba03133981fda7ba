"""Command-line surface: analyze, table, render, verify, periods.

Exit codes partition outcomes: 0 accepted/agreement, 1 rejected,
2 input error, 3 engine/oracle discrepancy.  All output is deterministic
for fixed inputs: canonical JSON key order, canonical rational and surd
display, stable CSV and SVG bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
from fractions import Fraction

from . import lattices, oracle, packings, similarity as sim
from .lattices import Lattice
from .packings import PointPacking
from .presets import PRESETS, preset
from .render import render_svg
from .rings import EISENSTEIN, GAUSSIAN, FieldElem, RingElem
from .similarity import Direction, ScalSet, Similarity, format_scale

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INPUT = 2
EXIT_DISCREPANCY = 3


class InputError(Exception):
    """Malformed document or argument; maps to exit code 2."""


# ---------------------------------------------------------------------------
# document parsing


def _fraction(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {text!r}: {exc}") from None


def _load_doc(source: str) -> dict:
    """JSON from an inline string (leading '{') or from a file path."""
    text = source
    if not source.lstrip().startswith("{"):
        try:
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError("document must be a JSON object")
    return doc


def parse_packing_doc(doc: dict) -> PointPacking:
    ring = doc.get("ring")
    if ring not in (GAUSSIAN, EISENSTEIN):
        raise InputError('packing document needs "ring": "gaussian"|"eisenstein"')
    if "basis" in doc:
        basis = doc["basis"]
        if len(basis) != 2 or any(len(row) != 2 for row in basis):
            raise InputError('"basis" must be two generator vectors')
        gens = [(_fraction(row[0]), _fraction(row[1])) for row in basis]
        try:
            base = Lattice.from_generators(ring, gens)
        except lattices.DegenerateLatticeError as exc:
            raise InputError(str(exc)) from None
    else:
        base = Lattice.ring_lattice(ring)
    shifts_doc = doc.get("shifts")
    if not shifts_doc:
        raise InputError('packing document needs a non-empty "shifts" list')
    shifts = []
    for entry in shifts_doc:
        if len(entry) != 2:
            raise InputError(f"shift {entry!r} must be a coordinate pair")
        shifts.append(FieldElem(ring, _fraction(entry[0]), _fraction(entry[1])))
    try:
        return PointPacking(base, tuple(shifts))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_similarity_doc(doc: dict, ring: str) -> Similarity:
    ring = doc.get("ring", ring)
    if ring not in (GAUSSIAN, EISENSTEIN):
        raise InputError(f"bad similarity ring {ring!r}")
    z = doc.get("z")
    if not isinstance(z, list) or len(z) != 2:
        raise InputError('similarity document needs "z": [a, b]')
    try:
        elem = RingElem(ring, int(z[0]), int(z[1]))
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad z: {exc}") from None
    scale = _fraction(doc.get("scale", "1"))
    w = elem.to_field().scale(scale)
    if w.is_zero():
        raise InputError("similarity multiplier is zero")
    return Similarity(w, bool(doc.get("conj", False)))


def parse_direction_doc(doc: dict, ring: str) -> Direction:
    ring = doc.get("ring", ring)
    z = doc.get("z")
    if not isinstance(z, list) or len(z) != 2:
        raise InputError('direction document needs "z": [a, b]')
    try:
        return Direction(RingElem(ring, int(z[0]), int(z[1])), bool(doc.get("conj", False)))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _load_packing(args) -> PointPacking:
    if getattr(args, "preset", None):
        return preset(args.preset)
    if getattr(args, "packing", None):
        return parse_packing_doc(_load_doc(args.packing))
    raise InputError("provide a packing document or --preset")


# ---------------------------------------------------------------------------
# display


def _tau_display(packing: PointPacking, tau) -> str:
    pairs = ",".join(
        f"({packing.shifts[k]},{packing.shifts[j]})" for k, j in sorted(tau)
    )
    return "{" + pairs + "}"


def _beta_display(s: Similarity) -> str:
    ratio, d = sim.decompose(s)
    return format_scale(ratio, d.norm())


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(doc: dict, out: str | None) -> None:
    _write(json.dumps(doc, ensure_ascii=False, sort_keys=True, indent=2) + "\n", out)


# ---------------------------------------------------------------------------
# analyze


def run_analyze(args) -> int:
    packing = _load_packing(args)
    s = parse_similarity_doc(_load_doc(args.similarity), packing.ring)
    report = packings.check_similarity(packing, s)
    ratio, d = sim.decompose(s)
    doc = {
        "accepted": report.accepted,
        "n": report.n,
        "m": packing.m,
        "beta": _beta_display(s),
        "direction": str(d),
        "den_lattice": format_scale(sim.denominator(packing.lattice, d), d.norm()),
    }
    if report.accepted:
        doc["tau"] = [
            [str(packing.shifts[k]), str(packing.shifts[j])] for k, j in report.tau
        ]
        doc["witness"] = [
            {"component": k, "target": j, "offset": str(off)}
            for k, j, off in report.witness
        ]
        cor = packings.check_corollaries(report, packing)
        doc["corollaries"] = {
            "shift_pair_in_nth_lattice": cor.shift_pair_in_nth_lattice,
            "singleton_when_lattice_scaling": cor.singleton_when_lattice_scaling,
            "n_beta_in_lattice_scal": cor.n_beta_in_lattice_scal,
            "all_pass": cor.all_pass(),
        }
    else:
        doc["failing_component"] = report.failing_k
    _emit_json(doc, args.out)
    return EXIT_OK if report.accepted else EXIT_REJECTED


# ---------------------------------------------------------------------------
# table


def _gaussian_class(z: RingElem) -> tuple[int, int]:
    return z.a % 2, z.b % 2


def _eisenstein_class(z: RingElem) -> int:
    return (z.a + z.b) % 3


TABLE_SPECS = {
    "t1": ("rect12", False, GAUSSIAN),
    "t2": ("hex", False, EISENSTEIN),
    "t3": ("hex", True, EISENSTEIN),
    "t4": ("hex-shifted", False, EISENSTEIN),
    "t5": ("hex-shifted", True, EISENSTEIN),
}

GAUSSIAN_CLASSES = ((1, 0), (0, 1), (1, 1))
EISENSTEIN_CLASSES = (1, 2, 0)


def class_label(ring: str, key) -> str:
    if ring == GAUSSIAN:
        return f"(a,b)≡({key[0]},{key[1]}) mod 2"
    return f"a+b≡{key} mod 3"


def sample_directions(ring: str, key, count: int) -> list[RingElem]:
    """The first `count` primitive z of a congruence class, ordered by
    (norm, a, b) over the sector a ≥ 1, b ≥ 0."""
    classify = _gaussian_class if ring == GAUSSIAN else _eisenstein_class
    found = []
    bound = 2
    while len(found) < count:
        bound *= 2
        found = []
        candidates = [
            RingElem(ring, a, b)
            for a in range(1, bound)
            for b in range(0, bound)
            if math.gcd(a, b) == 1 and classify(RingElem(ring, a, b)) == key
        ]
        candidates.sort(key=lambda z: (z.norm(), z.a, z.b))
        found = candidates[:count]
    return found


def table_rows(
    name: str, samples: int = 2, explicit: list[RingElem] | None = None
) -> list[dict]:
    """Rows (class, z, scal, tau) reproducing the published tables."""
    preset_name, conjugate, ring = TABLE_SPECS[name]
    packing = preset(preset_name)
    classes = GAUSSIAN_CLASSES if ring == GAUSSIAN else EISENSTEIN_CLASSES
    classify = _gaussian_class if ring == GAUSSIAN else _eisenstein_class
    rows = []
    for key in classes:
        if explicit is not None:
            zs = [z for z in explicit if classify(z) == key]
        else:
            zs = sample_directions(ring, key, samples)
        for z in zs:
            d = Direction(z, conjugate)
            tau_classes = packings.scal_classes_by_tau(packing, d)
            if not tau_classes:
                rows.append(
                    {
                        "table": name,
                        "class": class_label(ring, key),
                        "z": str(z),
                        "scal": "∅",
                        "tau": "∅",
                    }
                )
                continue
            for residue_class, tau in tau_classes:
                rows.append(
                    {
                        "table": name,
                        "class": class_label(ring, key),
                        "z": str(z),
                        "scal": ScalSet(d, (residue_class,)).display(symbolic=True),
                        "tau": _tau_display(packing, tau),
                    }
                )
    return rows


def run_table(args) -> int:
    if args.name not in TABLE_SPECS:
        raise InputError(f"unknown table {args.name!r}; choose t1..t5")
    explicit = None
    if args.z:
        _, _, ring = TABLE_SPECS[args.name]
        explicit = []
        for text in args.z:
            try:
                a, b = (int(part) for part in text.split(","))
            except ValueError:
                raise InputError(f"bad --z {text!r}; expected a,b") from None
            z = RingElem(ring, a, b)
            if z.is_zero() or math.gcd(a, b) != 1:
                raise InputError(f"--z {text!r} is not a primitive direction")
            explicit.append(z)
    rows = table_rows(args.name, samples=args.samples, explicit=explicit)
    if args.format == "json":
        _write(
            json.dumps(rows, ensure_ascii=False, sort_keys=True, indent=2) + "\n",
            args.out,
        )
        return EXIT_OK
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf, fieldnames=["table", "class", "z", "scal", "tau"], lineterminator="\n"
    )
    writer.writeheader()
    writer.writerows(rows)
    _write(buf.getvalue(), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# render


def _parse_window(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise InputError("window must be x0,y0,x1,y1")
    x0, y0, x1, y1 = (_fraction(p) for p in parts)
    if x1 <= x0 or y1 <= y0:
        raise InputError("window must have positive area")
    return x0, y0, x1, y1


def run_render(args) -> int:
    packing = _load_packing(args)
    window = _parse_window(args.window)
    s = None
    if not args.packing_only:
        if not args.similarity:
            raise InputError("render needs --similarity or --packing-only")
        s = parse_similarity_doc(_load_doc(args.similarity), packing.ring)
        if not packings.check_similarity(packing, s).accepted:
            sys.stderr.write("similarity rejected; use --packing-only to draw L\n")
            return EXIT_REJECTED
    _write(render_svg(packing, s, window), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def run_verify(args) -> int:
    if args.random:
        return _verify_random(args)
    packing = _load_packing(args)
    if args.similarity:
        return _verify_similarity(packing, args)
    if args.direction:
        return _verify_direction(packing, args)
    raise InputError("verify needs --similarity, --direction, or --random")


def _verify_similarity(packing: PointPacking, args) -> int:
    s = parse_similarity_doc(_load_doc(args.similarity), packing.ring)
    report = packings.check_similarity(packing, s)
    contained, counterexample = oracle.certify_subpacking(packing, s)
    doc = {
        "engine_accepted": report.accepted,
        "oracle_contained": contained,
        "agree": report.accepted == contained,
    }
    if counterexample is not None:
        doc["counterexample"] = str(counterexample)
    if contained:
        idx = oracle.index_by_counting(packing, s)
        doc["oracle_index"] = str(idx)
        doc["beta_squared"] = str(s.scale_sq())
        doc["agree"] = doc["agree"] and idx == s.scale_sq()
    _emit_json(doc, args.out)
    return EXIT_OK if doc["agree"] else EXIT_DISCREPANCY


def _verify_direction(packing: PointPacking, args) -> int:
    d = parse_direction_doc(_load_doc(args.direction), packing.ring)
    brute = oracle.scal_set_bruteforce(packing, d, args.p_bound, args.q_bound)
    engine: set[Fraction] = set()
    if packing.lattice.is_ring_lattice():
        full = packings.scal_set_packing(packing, d)
        for q in range(1, args.q_bound + 1):
            for p in range(1, args.p_bound + 1):
                if math.gcd(p, q) == 1 and full.contains_ratio(Fraction(p, q)):
                    engine.add(Fraction(p, q))
    else:
        for q in range(1, args.q_bound + 1):
            for p in range(1, args.p_bound + 1):
                if math.gcd(p, q) != 1:
                    continue
                if packings.check_similarity(packing, d.similarity(Fraction(p, q))).accepted:
                    engine.add(Fraction(p, q))
    doc = {
        "direction": str(d),
        "bounds": {"p": args.p_bound, "q": args.q_bound},
        "bruteforce": sorted(str(r) for r in brute),
        "engine": sorted(str(r) for r in engine),
        "agree": brute == engine,
    }
    _emit_json(doc, args.out)
    return EXIT_OK if doc["agree"] else EXIT_DISCREPANCY


def _verify_random(args) -> int:
    rng = random.Random(args.seed)
    disagreements = []
    for _ in range(args.random):
        ring = rng.choice((GAUSSIAN, EISENSTEIN))
        case = oracle.random_case(rng, ring)
        accepted = packings.check_similarity(case.packing, case.similarity).accepted
        contained, _ = oracle.certify_subpacking(case.packing, case.similarity)
        if accepted != contained:
            disagreements.append(
                {"packing": str(case.packing), "similarity": str(case.similarity)}
            )
    doc = {
        "cases": args.random,
        "seed": args.seed,
        "disagreements": disagreements,
        "agree": not disagreements,
    }
    _emit_json(doc, args.out)
    return EXIT_OK if not disagreements else EXIT_DISCREPANCY


# ---------------------------------------------------------------------------
# periods


def run_periods(args) -> int:
    packing = _load_packing(args)
    maximal = packings.periods(packing)
    reduced = packings.reduce(packing)
    g1, g2 = maximal.generators()
    doc = {
        "periods_basis": [str(g1), str(g2)],
        "covolume_ratio": str(lattices.index(packing.lattice, maximal)),
        "components_before": packing.m,
        "components_after": reduced.m,
        "reduced_shifts": [str(x) for x in reduced.shifts],
    }
    _emit_json(doc, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument wiring


def _add_packing_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("packing", nargs="?", help="packing document (JSON or path)")
    parser.add_argument(
        "--preset", choices=sorted(PRESETS), help="use a built-in packing"
    )
    parser.add_argument("--out", help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simiso",
        description="Exact similarity isometries of planar point packings.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("analyze", help="decide one similarity against a packing")
    _add_packing_args(p)
    p.add_argument("--similarity", required=True, help="similarity document")
    p.set_defaults(func=run_analyze)

    p = subs.add_parser("table", help="reproduce a published table as CSV")
    p.add_argument("name", help="t1, t2, t3, t4, or t5")
    p.add_argument("--samples", type=int, default=2, help="directions per class")
    p.add_argument("--z", action="append", help="explicit direction a,b (repeatable)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write output to a file instead of stdout")
    p.set_defaults(func=run_table)

    p = subs.add_parser("render", help="draw a packing and an accepted image")
    _add_packing_args(p)
    p.add_argument("--similarity", help="similarity document")
    p.add_argument(
        "--window",
        required=True,
        help="x0,y0,x1,y1 in ring coordinates (use --window=-4,-4,4,4 "
        "when bounds are negative)",
    )
    p.add_argument("--packing-only", action="store_true", help="draw L alone")
    p.set_defaults(func=run_render)

    p = subs.add_parser("verify", help="cross-check the engine against the oracle")
    _add_packing_args(p)
    p.add_argument("--similarity", help="similarity document")
    p.add_argument("--direction", help="direction document for a set sweep")
    p.add_argument("--p-bound", type=int, default=9)
    p.add_argument("--q-bound", type=int, default=1)
    p.add_argument("--random", type=int, default=0, help="randomized sweep size")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=run_verify)

    p = subs.add_parser("periods", help="maximal generating lattice and reduction")
    _add_packing_args(p)
    p.set_defaults(func=run_periods)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
