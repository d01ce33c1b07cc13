"""Command-line front end: ``twistlab <command> [options]``."""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import crystal, hecke, rmatrix, symfunc
from .bialgebra import (FinBialgebra, FiniteGroup, amitsur_complex, bar_complex, cobar_complex, field_extension,
                        group_algebra, group_likes, sweedler_cohomology, twist_search_and_apply, unit_cohomology)
from .cosimplicial import CosimplicialComplex, differential, tangent_cohomology
from .exact.fields import GF
from .exact.matrix import Matrix

STATUSES = ("pass", "fail", "error")


@dataclass
class Report:
    command: list
    checks: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    def check(self, name: str, ok: bool, witness=None):
        entry = {"status": "pass" if ok else "fail"}
        if not ok:
            entry["witness"] = witness if witness is not None else "no witness recorded"
        self.checks[name] = entry

    def error(self, name: str, exc: Exception):
        self.checks[name] = {"status": "error", "witness": f"{type(exc).__name__}: {exc}"}

    @property
    def ok(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks.values())

    def to_json(self) -> dict:
        return {"command": self.command, "checks": self.checks, "values": self.values, "timing": self.timing}

    @classmethod
    def from_json(cls, obj: dict) -> "Report":
        return cls(obj["command"], obj.get("checks", {}), obj.get("values", {}), obj.get("timing", {}))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def render(self, decimal: bool = False) -> str:
        lines = ["$ twistlab " + " ".join(self.command)]
        for name in sorted(self.values):
            v = self.values[name]
            line = f"  {name}: {_fmt(v)}"
            if decimal:
                approx = _decimal(v)
                if approx is not None:
                    line += f"    ~ {approx}"
            lines.append(line)
        for name in sorted(self.checks):
            c = self.checks[name]
            tail = f"  ({c['witness']})" if "witness" in c else ""
            lines.append(f"  [{c['status']}] {name}{tail}")
        for name in sorted(self.timing):
            lines.append(f"  time {name}: {self.timing[name]:.3f}s")
        return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_fmt(x)}" for k, x in sorted(v.items())) + "}"
    return str(v)


def _decimal(v):
    """Advisory floats for exact rational strings; None if nothing converts."""
    if isinstance(v, list):
        out = [_decimal(x) for x in v]
        return None if all(x is None for x in out) else [x for x in out]
    if isinstance(v, str):
        try:
            return float(Fraction(v))
        except (ValueError, ZeroDivisionError):
            return None
    return None


def _exact(x) -> str:
    return str(Fraction(x)) if isinstance(x, (int, Fraction)) else str(x)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


class InputError(ValueError):
    pass


def _checks(arg: str | None, allowed: tuple, default: tuple) -> list[str]:
    if not arg:
        return list(default)
    names = [c.strip() for c in arg.split(",") if c.strip()]
    unknown = [c for c in names if c not in allowed]
    if unknown:
        raise InputError(f"unknown check(s) {unknown}; choose from {list(allowed)}")
    return names


def parse_group(text: str) -> FiniteGroup:
    """'Z3', 'S3' or products like 'Z2xZ2'."""
    out = None
    for part in text.split("x"):
        part = part.strip()
        try:
            if part[0] in "ZC":
                G = FiniteGroup.cyclic(int(part[1:]))
            elif part[0] == "S":
                G = FiniteGroup.symmetric(int(part[1:]))
            else:
                raise ValueError
        except (ValueError, IndexError):
            raise InputError(f"cannot parse group {text!r}; use Zn, Sn or products like Z2xZ2") from None
        out = G if out is None else out.product(G)
    return out


def _timed(report: Report, name: str, fn):
    t0 = time.perf_counter()
    try:
        return fn()
    finally:
        report.timing[name] = round(time.perf_counter() - t0, 6)


# -- subcommands ---------------------------------------------------------------------

def cmd_rmatrix(args, report: Report):
    obj = _load_json(args.input)
    try:
        R = rmatrix.RMatrix.from_json(obj)
    except ValueError as exc:
        raise InputError(f"{args.input}: {exc}") from None
    N = args.order
    for name in _checks(args.check, ("qybe", "hilbert", "duality"), ("qybe", "hilbert", "duality")):
        try:
            if name == "qybe":
                v = _timed(report, name, lambda: rmatrix.check_unitary_qybe(R))
                report.check("qybe", v.ok, v.witness)
            elif name == "hilbert":
                H = _timed(report, name, lambda: rmatrix.hilbert_series(R, N))
                report.values["psi"] = [_exact(x) for x in rmatrix.psi_series(R, N)]
                report.values["hilbert"] = [_exact(x) for x in H]
                report.check("hilbert", True)
            else:
                ok = _timed(report, name, lambda: rmatrix.negation_duality_check(R, N))
                report.check("duality", ok, None if ok else f"H_(-R)(t) H_R(-t) != 1 up to t^{N}")
        except (ValueError, AssertionError) as exc:
            report.error(name, exc)


def _bialgebra_from_args(args) -> FinBialgebra:
    if args.input:
        try:
            return FinBialgebra.from_json(_load_json(args.input))
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{args.input}: {exc}") from None
    if args.group:
        return group_algebra(parse_group(args.group), GF(args.p))
    raise InputError("give --input H.json or --group G with --p")


def cmd_bialg(args, report: Report):
    n = args.n
    op = args.op
    try:
        if op == "sweedler":
            if not args.group:
                raise InputError("--op sweedler needs --group and --p")
            G = parse_group(args.group)
            h = _timed(report, op, lambda: sweedler_cohomology(G, args.p, n))
            report.values[f"h^{n}"] = str(h)
            report.check("sweedler", True)
            return
        if op == "amitsur":
            C = amitsur_complex(field_extension(args.p, args.m), n + 1)
            res = _timed(report, op, lambda: unit_cohomology(C, n))
            report.values[f"h^{n}"] = str(res.group)
            report.values["cocycles"], report.values["coboundaries"] = res.cocycles, res.coboundaries
            report.check("amitsur", True)
            return
        H = _bialgebra_from_args(args)
        if op in ("bar", "cobar"):
            C = (bar_complex if op == "bar" else cobar_complex)(H, n)
            bad = _timed(report, op, lambda: C.check_identities() + C.check_homomorphisms())
            report.values["level_dims"] = [lv.dim for lv in C.levels]
            report.check("cosimplicial identities", not bad, bad[:5])
        elif op == "tangent":
            C = (bar_complex if args.complex == "bar" else cobar_complex)(H, n + 1)
            dim = _timed(report, op, lambda: tangent_cohomology(C, n))
            report.values[f"tangent H^{n}"] = dim
            report.check("tangent", True)
        elif op == "groupl":
            gl = _timed(report, op, lambda: group_likes(H))
            report.values["group_likes"] = [[int(x) for x in g] for g in gl]
            report.check("groupl", True)
        elif op == "twist":
            tw = _timed(report, op, lambda: twist_search_and_apply(H))
            report.values["twists"] = [[int(x) for x in t.x] for t in tw]
            report.check("twist", all(not t.bialgebra.check_axioms() for t in tw), "a twisted bialgebra fails its axioms")
    except InputError:
        raise
    except (ValueError, AssertionError) as exc:
        report.error(op, exc)


def cmd_hecke(args, report: Report):
    n = args.n
    for name in _checks(args.check, ("relations", "idempotent", "a-invariant"), ("relations", "idempotent", "a-invariant")):
        try:
            if name == "relations":
                bad = _timed(report, name, lambda: hecke.check_relations(hecke.regular_representation(n)))
                report.check("relations", not bad, bad)
            elif name == "idempotent":
                p = _timed(report, name, lambda: hecke.q_antisymmetrizer(n))
                report.values[f"p_Lambda^{n}"] = str(p)
                report.check("idempotent", p * p == p)
            else:
                res = _timed(report, name, hecke.compute_a_invariant)
                report.values["a"] = str(res.value)
                report.check("a-invariant", res.proportional, "P1 P2 P1 - a P1 is nonzero")
        except (ValueError, AssertionError) as exc:
            report.error(name, exc)


def cmd_crystal(args, report: Report):
    N, n, op = args.N, args.n, args.op
    try:
        if op == "decompose":
            comps = _timed(report, op, lambda: crystal.decompose(N, n))
            report.values["components"] = [{"highest_weight": list(c.highest_weight), "shape": c.shape.to_json(),
                                            "size": c.size} for c in comps]
            report.check("one highest weight per component", True)
        elif op == "lambda":
            ok = _timed(report, op, lambda: crystal.lambda_check(N, n))
            report.check("lambda", ok, "increasing words do not form a component")
        elif op == "a-invariant":
            res = _timed(report, op, lambda: crystal.compute_a_invariant_crystal(N))
            report.values["a"] = str(res.value)
            report.check("a-invariant", res.proportional and res.value == 0, f"a = {res.value}")
        elif op == "compare":
            v = _timed(report, op, lambda: crystal.multiplicity_compare(n, N))
            report.values["crystal"] = {str(k): m for k, m in v.crystal.items()}
            report.values["pieri"] = {str(k): m for k, m in v.pieri.items()}
            report.values["sizes"] = v.sizes
            report.check("compare", v.ok, {"crystal": report.values["crystal"], "pieri": report.values["pieri"]})
    except (ValueError, AssertionError) as exc:
        report.error(op, exc)


def cmd_symfunc(args, report: Report):
    op = args.op
    try:
        if op == "decompose":
            dec = _timed(report, op, lambda: symfunc.power_decompose(args.n))
            report.values["multiplicities"] = {str(k): m for k, m in dec.items()}
            total = sum(m * m for m in dec.values())
            report.check("sum of squared multiplicities = n!", total == math.factorial(args.n))
        elif op == "positivity":
            if not args.seq:
                raise InputError("--op positivity needs --seq a0,a1,...")
            seq = [int(x) for x in args.seq.split(",")]
            v = _timed(report, op, lambda: symfunc.toeplitz_minors_nonneg(seq, args.order))
            witness = None if v.ok else {"rows": list(v.witness.rows), "cols": list(v.witness.cols),
                                         "value": v.witness.value}
            report.check("total positivity", v.ok, witness)
        elif op == "binomial":
            f = symfunc.HilbertHom.binomial(args.n, args.order)
            report.values["lambda_values"] = list(f.values)
            v = symfunc.toeplitz_minors_nonneg(f.values, args.order)
            report.check("total positivity", v.ok, None if v.ok else v.witness.value)
    except InputError:
        raise
    except (ValueError, AssertionError) as exc:
        report.error(op, exc)


def cmd_cosimp(args, report: Report):
    if args.input:
        try:
            C = CosimplicialComplex.from_json(_load_json(args.input))
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{args.input}: {exc}") from None
    else:
        H = _bialgebra_from_args(args)
        C = (bar_complex if args.complex == "bar" else cobar_complex)(H, args.levels)
    for name in _checks(args.check, ("identities", "homomorphisms", "dd", "commutative", "tangent"),
                        ("identities", "dd")):
        try:
            if name == "identities":
                bad = _timed(report, name, C.check_identities)
                report.check(name, not bad, bad[:5])
            elif name == "homomorphisms":
                bad = _timed(report, name, C.check_homomorphisms)
                report.check(name, not bad, bad[:5])
            elif name == "dd":
                fails = []
                for n in range(C.top - 1):
                    dd = differential(C, n + 1) @ differential(C, n)
                    if dd != Matrix.zeros(*dd.shape, dd.field):
                        fails.append(n)
                report.check(name, not fails, {"degrees": fails})
            elif name == "commutative":
                v = _timed(report, name, lambda: C.is_n_commutative(args.n))
                report.values[f"{args.n}-commutative"] = bool(v.ok)
                report.check(name, True)
            else:
                report.values["tangent"] = [tangent_cohomology(C, n) for n in range(C.top)]
                report.check(name, True)
        except (ValueError, AssertionError) as exc:
            report.error(name, exc)


def cmd_suite(args, report: Report):
    from .suite import run_suite

    for name, ok, values, seconds in run_suite():
        report.values[name] = values
        report.timing[name] = round(seconds, 3)
        report.check(name, ok, values)


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="also write the report as JSON")
    common.add_argument("--cap", type=int, metavar="SCALARS", help="tensor-size guard (overrides TWISTLAB_CAP)")
    common.add_argument("--decimal", action="store_true", help="add an advisory float column")

    parser = argparse.ArgumentParser(prog="twistlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rmatrix", parents=[common], help="QYBE, Hilbert series and duality of an R-matrix")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--check")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("bialg", parents=[common], help="bialgebra complexes, twists and cohomology")
    p.add_argument("--input", metavar="PATH")
    p.add_argument("--group", help="group algebra of Zn, Sn or a product such as Z2xZ2")
    p.add_argument("--p", type=int, default=3, help="prime for --group and the Amitsur base field")
    p.add_argument("--m", type=int, default=2, help="degree of the Amitsur extension")
    p.add_argument("--op", required=True, choices=("bar", "cobar", "tangent", "groupl", "twist", "sweedler", "amitsur"))
    p.add_argument("--complex", choices=("bar", "cobar"), default="cobar")
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=cmd_bialg)

    p = sub.add_parser("hecke", parents=[common], help="Hecke algebra relations, antisymmetrizers, a-invariant")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--check")
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("crystal", parents=[common], help="crystal tensor powers of the standard crystal")
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--op", choices=("decompose", "lambda", "a-invariant", "compare"), default="decompose")
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("symfunc", parents=[common], help="Pieri multiplicities and total positivity")
    p.add_argument("--op", choices=("decompose", "positivity", "binomial"), default="decompose")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--seq")
    p.add_argument("--order", type=int, default=4)
    p.set_defaults(func=cmd_symfunc)

    p = sub.add_parser("cosimp", parents=[common], help="checks on a cosimplicial complex")
    p.add_argument("--input", metavar="PATH", help="complex JSON")
    p.add_argument("--group")
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--complex", choices=("bar", "cobar"), default="bar")
    p.add_argument("--levels", type=int, default=2)
    p.add_argument("--n", type=int, default=1, help="order for the commutativity check")
    p.add_argument("--check")
    p.set_defaults(func=cmd_cosimp)

    p = sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    p.set_defaults(func=cmd_suite)
    return parser


def run(argv=None) -> tuple[int, Report]:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    report = Report(argv)
    old_cap = os.environ.get("TWISTLAB_CAP")
    if args.cap is not None:
        os.environ["TWISTLAB_CAP"] = str(args.cap)
    try:
        args.func(args, report)
    except InputError as exc:
        report.checks["input"] = {"status": "error", "witness": str(exc)}
    finally:
        if args.cap is not None:
            if old_cap is None:
                os.environ.pop("TWISTLAB_CAP", None)
            else:
                os.environ["TWISTLAB_CAP"] = old_cap
    if not report.checks:
        report.checks["run"] = {"status": "error", "witness": "no checks were requested"}
    print(report.render(decimal=args.decimal))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.dumps() + "\n")
    return (0 if report.ok else 1), report


def main(argv=None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
