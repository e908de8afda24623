"""Command-line front end: ``staralg <command> ...``.

Every command prints ``key: value`` lines (``key=value`` with
``--machine``) and exits 0 iff all of its checks pass.
"""
from __future__ import annotations

import argparse
import functools
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog
from .algebra import Field, PropertyReport, StructureConstants, find_unit, is_associative, is_commutative, multiply
from .conjugation import ConjugationSpec, check_conjugation, conjugate
from .cstar import (
    InvolutionReport,
    check_involution,
    conjugate_transpose_involution,
    cstar_identity_check,
    transpose_operator,
    unvec2x2,
    vec2x2,
)
from .descriptor import DescriptorError, describe, parse_descriptor, serialize_descriptor
from .maps import (
    AntilinearHomReport,
    Classification,
    MapKind,
    MapMatrix,
    apply_map,
    complex_form,
    decompose_additive,
    is_homomorphism,
)
from .quaternion import (
    AutomorphismReport,
    enumerate_signed_perm_automorphisms,
    inner_automorphism,
    signed_perm_candidates,
    verify_automorphism,
)
from .realification import embed_coords, realify
from .scalars import GaussianRational, format_scalar


def _yn(flag) -> str:
    return "yes" if flag else "no"


def _fmt(value) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    if isinstance(value, MapMatrix):
        return "[" + "; ".join(" ".join(format_scalar(v) for v in row) for row in value.entries) + "]"
    if isinstance(value, (Fraction, GaussianRational)):
        return format_scalar(value)
    if isinstance(value, bool):
        return _yn(value)
    return str(value)


@functools.singledispatch
def report_fields(report, label: str) -> list[tuple[str, str]]:
    return [(label, _fmt(report))]


@report_fields.register
def _(report: PropertyReport, label: str):
    fields = [(label, _yn(report.holds))]
    if not report.holds:
        fields.append((f"{label}.witness", _fmt(report.witness)))
        fields.append((f"{label}.lhs", _fmt(report.lhs)))
        fields.append((f"{label}.rhs", _fmt(report.rhs)))
    return fields


@report_fields.register
def _(report: AntilinearHomReport, label: str):
    return report_fields(report.forward, label) + report_fields(report.reversed, f"{label}.reversed")


@report_fields.register
def _(report: AutomorphismReport, label: str):
    fields = [(label, _yn(report.is_automorphism)),
              (f"{label}.vector_block_det", _fmt(report.determinant_of_vector_block))]
    if not report.is_automorphism:
        fields.append((f"{label}.reason", report.reason))
        fields.append((f"{label}.witness", _fmt(report.residual_witness)))
    return fields


@report_fields.register
def _(report: InvolutionReport, label: str):
    fields = []
    for axiom in ("antilinear", "antimultiplicative", "involutive"):
        ok = getattr(report, f"{axiom}_ok")
        fields.append((f"{label}.{axiom}", _yn(ok)))
        if not ok:
            fields.append((f"{label}.{axiom}.witness", _fmt(report.witnesses[axiom])))
    fields.append((label, _yn(report.holds)))
    return fields


@report_fields.register
def _(report: Classification, label: str):
    fields = [(label, report.tag.value)]
    if report.complex_form is not None:
        fields.append((f"{label}.complex_form", _fmt(report.complex_form)))
    return fields


def render(fields, machine: bool = False) -> str:
    sep = "=" if machine else ": "
    return "".join(f"{k}{sep}{v}\n" for k, v in fields)


def format_report(report, label: str, machine: bool = False) -> str:
    """Text for one report, e.g. ``associative: yes``."""
    return render(report_fields(report, label), machine)


class Run:
    """Collects report lines and whether every gating check passed."""

    def __init__(self):
        self.fields: list[tuple[str, str]] = []
        self.ok = True

    def check(self, label: str, report, gate: bool = True):
        self.fields.extend(report_fields(report, label))
        if gate and not bool(report):
            self.ok = False

    def info(self, key: str, value):
        self.fields.append((key, _fmt(value)))


def _read_descriptor(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_descriptor(text)


def _structure_checks(run: Run, A: StructureConstants, conjugation: bool):
    run.info("dim", A.dim)
    run.info("field", A.field.name)
    run.check("associative", is_associative(A))
    unit = find_unit(A)
    run.check("unit", unit is not None)
    if unit is not None:
        run.info("unit.element", unit)
    run.check("commutative", is_commutative(A), gate=False)
    spec = None
    if conjugation:
        try:
            spec = ConjugationSpec(A)
        except ValueError as exc:
            run.check("conjugation", False)
            run.info("conjugation.error", exc)
        else:
            run.check("conjugation", check_conjugation(spec))
    return spec


def _rand_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


def _rand_element(rng: random.Random, A: StructureConstants):
    if A.field is Field.REAL:
        return tuple(_rand_rational(rng) for _ in range(A.dim))
    return tuple(GaussianRational(_rand_rational(rng), _rand_rational(rng)) for _ in range(A.dim))


def cmd_check(args) -> Run:
    d = _read_descriptor(args.file)
    run = Run()
    run.info("name", d.name)
    A = d.algebra()
    _structure_checks(run, A, d.conjugation)
    return run


def cmd_classify_map(args) -> Run:
    d = _read_descriptor(args.file)
    if d.map is None:
        raise DescriptorError("descriptor has no 'map:' section", 1)
    M = d.map.matrix()
    run = Run()
    run.info("shape", f"{M.rows}x{M.cols}")
    run.check("classification", complex_form(M), gate=False)
    L, Aa = decompose_additive(M)
    run.info("linear_part", L)
    run.info("antilinear_part", Aa)
    if d.dim is not None:
        A = d.algebra()
        try:
            run.check("homomorphism", is_homomorphism(M, A, A), gate=False)
        except ValueError as exc:
            run.info("homomorphism", f"n/a ({exc})")
    return run


def cmd_realify(args) -> str:
    d = _read_descriptor(args.file)
    A = d.algebra()
    R = realify(A)
    return serialize_descriptor(describe(f"{d.name}_real" if d.name else "realified", R.real))


def cmd_automorphisms(args) -> Run:
    run = Run()
    autos = enumerate_signed_perm_automorphisms()
    total = sum(1 for _ in signed_perm_candidates())
    run.info("automorphisms", f"{len(autos)}/{total}")
    dets = {verify_automorphism(m).determinant_of_vector_block for m in autos}
    run.check("all_det_plus_one", dets == {1})
    if args.verbose:
        for n, m in enumerate(autos):
            run.info(f"automorphism.{n}", m)
    return run


def cmd_involution(args) -> Run:
    d = _read_descriptor(args.file)
    if d.map is None:
        raise DescriptorError("descriptor has no 'map:' section", 1)
    A = d.algebra()
    spec = ConjugationSpec(A) if d.conjugation else None
    run = Run()
    run.check("involution", check_involution(A, d.map.matrix(), spec))
    return run


def _demo_complex(run: Run, rng: random.Random, samples: int):
    A = catalog.complex_as_real()
    spec = _structure_checks(run, A, conjugation=True)
    run.check("involution", check_involution(A, spec.matrix, spec))
    bad = sum(
        conjugate(spec, multiply(A, x, y)) != multiply(A, conjugate(spec, y), conjugate(spec, x))
        for x, y in ((_rand_element(rng, A), _rand_element(rng, A)) for _ in range(samples))
    )
    run.check("sample.conjugation_reverses_products", bad == 0)
    B = catalog.complex_line()
    R = realify(B)
    bad = 0
    for _ in range(samples):
        x, y = _rand_element(rng, B), _rand_element(rng, B)
        bad += embed_coords(R, multiply(B, x, y)) != multiply(R.real, embed_coords(R, x), embed_coords(R, y))
    run.check("sample.realification_homomorphism", bad == 0)


def _demo_quaternion(run: Run, rng: random.Random, samples: int):
    A = catalog.quaternion_constants()
    spec = _structure_checks(run, A, conjugation=True)
    run.check("involution", check_involution(A, spec.matrix, spec))
    autos = enumerate_signed_perm_automorphisms()
    run.info("automorphisms", f"{len(autos)}/48")
    run.check("automorphisms.count", len(autos) == 24)
    bad_assoc = bad_conj = bad_inner = 0
    for _ in range(samples):
        x, y, z = (_rand_element(rng, A) for _ in range(3))
        xy = multiply(A, x, y)
        bad_assoc += multiply(A, xy, z) != multiply(A, x, multiply(A, y, z))
        bad_conj += conjugate(spec, xy) != multiply(A, conjugate(spec, y), conjugate(spec, x))
    inner_samples = min(samples, 100)
    for _ in range(inner_samples):
        q = _rand_element(rng, A)
        if not any(q):
            q = A.basis(0)
        bad_inner += not verify_automorphism(inner_automorphism(q))
    run.check("sample.associative", bad_assoc == 0)
    run.check("sample.conjugation_reverses_products", bad_conj == 0)
    run.check("sample.inner_automorphisms", bad_inner == 0)
    run.info("samples", samples)
    run.info("inner_samples", inner_samples)


def _demo_matrix2x2(run: Run, rng: random.Random, samples: int):
    A = catalog.matrix2x2_algebra()
    _structure_checks(run, A, conjugation=False)
    run.check("involution.conjugate_transpose", check_involution(A, conjugate_transpose_involution()))
    run.check("involution.transpose", check_involution(A, transpose_operator()), gate=False)
    R = realify(A)
    bad_real = bad_direct = 0
    for _ in range(samples):
        x, y = _rand_element(rng, A), _rand_element(rng, A)
        xy = multiply(A, x, y)
        bad_real += embed_coords(R, xy) != multiply(R.real, embed_coords(R, x), embed_coords(R, y))
        a, b = unvec2x2(x), unvec2x2(y)
        direct = tuple(
            sum((a[i][t] * b[t][j] for t in range(2)), GaussianRational(0))
            for i in range(2) for j in range(2)
        )
        bad_direct += xy != direct
    run.check("sample.realification_homomorphism", bad_real == 0)
    run.check("sample.matrix_product_oracle", bad_direct == 0)
    worst = 0.0
    for _ in range(samples):
        m = [[complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(2)] for _ in range(2)]
        worst = max(worst, cstar_identity_check(m)[2])
    run.info("cstar.max_relative_gap", f"{worst:.3e}")
    run.check("cstar.identity", worst <= 1e-9)


_DEMOS = {
    "complex": _demo_complex,
    "quaternion": _demo_quaternion,
    "matrix2x2": _demo_matrix2x2,
}


def cmd_demo(args) -> Run:
    run = Run()
    run.info("demo", args.name)
    run.info("seed", args.seed)
    _DEMOS[args.name](run, random.Random(args.seed), args.samples)
    return run


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="key=value output")
    common.add_argument("--seed", type=int, default=0, help="seed for random sample batches")
    common.add_argument("--samples", type=int, default=1000, help="random samples per property")

    parser = argparse.ArgumentParser(prog="staralg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", parents=[common], help="associativity, unit, commutativity, conjugation")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("classify-map", parents=[common], help="Cauchy-Riemann classification of a map")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify_map)
    p = sub.add_parser("realify", parents=[common], help="print the realified descriptor")
    p.add_argument("file")
    p.set_defaults(func=cmd_realify)
    p = sub.add_parser("automorphisms", parents=[common], help="signed-permutation quaternion automorphisms")
    p.add_argument("-v", "--verbose", action="store_true", help="list the matrices")
    p.set_defaults(func=cmd_automorphisms)
    p = sub.add_parser("involution", parents=[common], help="check involution axioms of the descriptor's map")
    p.add_argument("file")
    p.set_defaults(func=cmd_involution)
    p = sub.add_parser("demo", parents=[common], help="run a built-in demo")
    p.add_argument("name", choices=sorted(_DEMOS))
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (DescriptorError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        sys.stdout.write(result)
        return 0
    sys.stdout.write(render(result.fields, args.machine))
    return 0 if result.ok else 1


if __name__ == "__main__":
    sys.exit(main())
