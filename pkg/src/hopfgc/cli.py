"""Command-line front end: ``hopfgc check|double|verify|demo``.

Exit codes: 0 when every check passes, 1 when some check fails, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

from . import io
from .discrete import DiscreteError, group_by_name, validate_discrete
from .doihopf import DoiHopfDatumTk, check_doihopf_datum
from .double import (
    DrinfeldDouble,
    YDModule,
    adjoint_yd_module,
    braiding_from_R,
    build_double,
    check_braiding,
    check_crossed_indices,
    check_graded_bialgebra,
    check_graded_hopf,
    check_koppinen_comult,
    check_quasitriangular,
    check_yd_module,
    extract_RQ_from_braiding,
    graded_to_yd,
    inverse_from_Q,
    same_tensor_family,
    same_yd_module,
    yd_braiding,
    yd_to_graded,
)
from .graded import (
    GradedAlgebra,
    GradedModule,
    alpha_iso,
    check_alpha,
    check_graded_algebra,
    check_graded_module,
    local_units_report,
    orbit_subset,
    regular_graded_module,
    restrict_module,
)
from .hopf import AntipodeMissing, HopfGC, check_hopf, check_semi_hopf, constant_family, derive_twisted_antipode
from .hopf import kc2_hopf, sweedler_hopf, trivial_family
from .linalg import LinalgError, ModP, ScalarField, add_term, vec_equal
from .report import Report, ValidationReport

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 64
SUITES = ("bialgebra", "hopf", "qt", "modules", "all")


class InputError(Exception):
    """Anything that makes the input unusable; maps to exit code 2."""


class UnsupportedSuite(InputError):
    pass


class CharacteristicConflict(InputError):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: List[str]
    out: Optional[str] = None
    field: str = "rational"
    suite: str = "all"
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    fmt: str = "human"
    full: bool = False
    form: str = "smash"
    group: str = "c2"

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        file = getattr(args, "file", None)
        return cls(
            command=args.command,
            inputs=[file] if file else [getattr(args, "name", "")],
            out=args.out,
            field=getattr(args, "field", "rational"),
            suite=getattr(args, "suite", "all"),
            seed=args.seed,
            samples=getattr(args, "samples", DEFAULT_SAMPLES),
            fmt=args.fmt,
            full=args.full,
            form=getattr(args, "form", "smash"),
            group=getattr(args, "group", "c2"),
        )


# ---------------------------------------------------------------- rendering witnesses


def render(x) -> str:
    """Stable text for witness values: scalars as a/b, dicts sorted by rendered key."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, ModP):
        return str(x.v)
    if isinstance(x, dict):
        items = sorted((render(k), render(v)) for k, v in x.items())
        return "{" + ", ".join(f"{k}: {v}" for k, v in items) + "}"
    if isinstance(x, (list, tuple)):
        inner = ", ".join(render(t) for t in x)
        return f"({inner})" if isinstance(x, tuple) else f"[{inner}]"
    if isinstance(x, str):
        return x
    return repr(x)


def _add(report: Report, rep: ValidationReport, prefix: str = "") -> None:
    report.add(rep, prefix, fmt=render)


def _agree(report: Report, check: str, ok: bool, what: str) -> None:
    """Record a whole-structure equality; a mismatch cites what was compared."""
    witnesses = [] if ok else [{"where": [what], "lhs": "differs", "rhs": "equal"}]
    report.add_record(check, ok, witnesses)


def _guarded(report: Report, step: str, fn: Callable[[], None]) -> None:
    """Run one suite step; a crash inside a checker on corrupted data counts as a failed check."""
    try:
        fn()
    except AntipodeMissing as exc:
        report.add_record("graded-hopf:antipode-missing", False,
                          [{"where": [step], "lhs": "AntipodeMissing", "rhs": str(exc)}])
    except (KeyError, IndexError, ValueError, TypeError, ZeroDivisionError, LinalgError, DiscreteError) as exc:
        report.add_record(f"{step}:error", False,
                          [{"where": [step], "lhs": type(exc).__name__, "rhs": str(exc)}], tag="")


# ---------------------------------------------------------------- check


def _check_hopf_gc(H: HopfGC, report: Report) -> None:
    if H.antipode:
        if not H.twisted:
            H = derive_twisted_antipode(H)
        _add(report, check_hopf(H))
    else:
        report.notes["antipode"] = "absent; checked as a semi-Hopf group-coalgebra"
        _add(report, check_semi_hopf(H))


def _check_graded_algebra(A: GradedAlgebra, report: Report) -> None:
    _add(report, validate_discrete(A.datum))
    _add(report, check_graded_algebra(A))


def _check_double(D: DrinfeldDouble, report: Report) -> None:
    _check_graded_algebra(D.core, report)
    _guarded(report, "local-units", lambda: _add(report, local_units_report(D.core)["report"]))
    _guarded(report, "graded-bialgebra", lambda: _add(report, check_graded_bialgebra(D)))
    report.notes["form"] = D.form


def cmd_check(obj, report: Report) -> None:
    if isinstance(obj, DrinfeldDouble):
        _check_double(obj, report)
    elif isinstance(obj, HopfGC):
        _check_hopf_gc(obj, report)
    elif isinstance(obj, GradedAlgebra):
        _check_graded_algebra(obj, report)
    elif isinstance(obj, GradedModule):
        _add(report, check_graded_module(obj))
    elif isinstance(obj, YDModule):
        _add(report, check_yd_module(obj))
    elif isinstance(obj, DoiHopfDatumTk):
        _add(report, check_doihopf_datum(obj))
    report.notes["kind"] = io.kind_of(obj)


# ---------------------------------------------------------------- verify


def _random_element(core: GradedAlgebra, rng: random.Random, terms: int = 3) -> dict:
    basis = list(core.basis_elements())
    out: dict = {}
    for _ in range(terms):
        add_term(out, rng.choice(basis), core.field(rng.randint(-3, 3) or 1))
    return out


def mixed_associativity(core: GradedAlgebra, seed: int, samples: int) -> ValidationReport:
    """(uv)w = u(vw) on random sums of basis elements drawn from several components."""
    rep = ValidationReport()
    rng = random.Random(seed)
    for s in range(samples):
        u, v, w = (_random_element(core, rng) for _ in range(3))
        lhs = core.gmul(core.gmul(u, v), w)
        rhs = core.gmul(u, core.gmul(v, w))
        rep.expect("mixed-assoc:sample", (s,), lhs, rhs, vec_equal)
    return rep


def _suite_bialgebra(D: DrinfeldDouble, report: Report) -> None:
    _guarded(report, "graded-algebra", lambda: _add(report, check_graded_algebra(D.core)))
    _guarded(report, "graded-bialgebra", lambda: _add(report, check_graded_bialgebra(D)))


def _suite_hopf(D: DrinfeldDouble, report: Report) -> None:
    _guarded(report, "graded-hopf", lambda: _add(report, check_graded_hopf(D)))


def _suite_qt(D: DrinfeldDouble, report: Report) -> None:
    _guarded(report, "quasitriangular", lambda: _add(report, check_quasitriangular(D)))


def _suite_modules(D: DrinfeldDouble, report: Report) -> None:
    G = D.datum.Lam

    def regular():
        reg = regular_graded_module(D.core)
        _add(report, check_graded_module(reg), "regular/")
        sub = restrict_module(reg, orbit_subset(D.datum, G.elements[-1]))
        _add(report, check_graded_module(sub), "restricted/")

    def yd():
        M = adjoint_yd_module(D)
        M0 = adjoint_yd_module(D, G.identity)
        _add(report, check_yd_module(M))
        N, N0 = yd_to_graded(M, D), yd_to_graded(M0, D)
        _add(report, check_graded_module(N, cross_check=False), "yd-image/")
        _agree(report, "roundtrip:yd-graded-yd", same_yd_module(graded_to_yd(N, D), M), "graded_to_yd(yd_to_graded(M))")
        t, q = yd_braiding(M, M0)
        _add(report, check_braiding(t, q))
        _add(report, check_crossed_indices(t, M, M0))
        _agree(report, "braiding:from-R", braiding_from_R(D, N, N0).same_as(t), "R-braiding vs YD braiding")
        _agree(report, "braiding:from-Q", inverse_from_Q(D, N, N0).same_as(q), "Q-inverse vs YD inverse braiding")

    def extraction():
        reg = regular_graded_module(D.core)
        R, Q = extract_RQ_from_braiding(D, braiding_from_R(D, reg, reg), inverse_from_Q(D, reg, reg))
        _agree(report, "braiding:extract-R", same_tensor_family(R, D.R), "R recovered from the regular braiding")
        _agree(report, "braiding:extract-Q", same_tensor_family(Q, D.Q), "Q recovered from the regular inverse braiding")

    _guarded(report, "regular", regular)
    _guarded(report, "yd", yd)
    _guarded(report, "braiding", extraction)


def cmd_verify(D, suite: str, seed: int, report: Report, samples: int = DEFAULT_SAMPLES) -> None:
    if suite not in SUITES:
        raise UnsupportedSuite(f"unknown suite {suite!r}")
    if not isinstance(D, DrinfeldDouble):
        raise UnsupportedSuite(f"suite {suite!r} needs a drinfeld_double file, got {io.kind_of(D)}")
    report.notes["suite"] = suite
    report.notes["form"] = D.form
    if suite in ("bialgebra", "all"):
        _suite_bialgebra(D, report)
    if suite in ("hopf", "all"):
        _suite_hopf(D, report)
    if suite in ("qt", "all"):
        _suite_qt(D, report)
    if suite in ("modules", "all"):
        _suite_modules(D, report)
    if suite == "all":
        _guarded(report, "koppinen-comult", lambda: _add(report, check_koppinen_comult(D)))
        _guarded(report, "mixed-assoc", lambda: _add(report, mixed_associativity(D.core, seed, samples)))
        report.notes["seed"] = seed
        report.notes["samples"] = samples


# ---------------------------------------------------------------- double and demo


def cmd_double(H, form: str, report: Report):
    """Build the double(s); returns {form: DrinfeldDouble} or None when the input is not Hopf."""
    if not isinstance(H, HopfGC) or isinstance(H, DrinfeldDouble):
        raise InputError(f"double needs a hopf_gc file, got {io.kind_of(H)}")
    if form not in ("smash", "koppinen", "both"):
        raise InputError(f"unknown form {form!r}")
    try:
        G = H.group
        G.inv(G.identity)
    except (AttributeError, DiscreteError):
        raise InputError("the index monoid must be a group") from None
    if not H.antipode:
        report.add_record("hopf:antipode-missing", False, [{"where": [], "lhs": "AntipodeMissing", "rhs": "S_g"}])
        return None
    if not H.twisted:
        try:
            H = derive_twisted_antipode(H)
        except LinalgError as exc:
            report.add_record("hopf:twisted-inverse", False, [{"where": [], "lhs": "singular", "rhs": str(exc)}])
            return None
    rep = check_hopf(H)
    _add(report, rep, "input/")
    if not rep.ok:
        return None
    forms = ("smash", "koppinen") if form == "both" else (form,)
    built = {f: build_double(H, f, validate=False) for f in forms}
    if form == "both":
        S, K = built["smash"], built["koppinen"]
        alpha, alpha_inv = alpha_iso(S.doihopf)
        _add(report, check_alpha(S.doihopf, S.core, K.core, alpha, alpha_inv))
        for f, D in built.items():
            sub = Report("")
            _check_double(D, sub)
            _agree(report, f"verdict:{f}", sub.status == "pass", f"check suite on the {f} form")
    report.notes["form"] = form
    return built


def cmd_demo(name: str, group: str, field: str):
    try:
        F = ScalarField.from_spec(field)
    except (LinalgError, ValueError) as exc:
        raise InputError(f"bad field {field!r}: {exc}") from None
    try:
        G = group_by_name(group)
    except DiscreteError as exc:
        raise InputError(str(exc)) from None
    if name == "trivial":
        return trivial_family(G, F)
    if name == "kc2":
        return constant_family(kc2_hopf(F), G)
    if name == "sweedler4":
        if F.characteristic == 2:
            raise CharacteristicConflict("sweedler4 needs a field of characteristic other than 2")
        return constant_family(sweedler_hopf(F), G)
    raise InputError(f"unknown demo {name!r}")


# ---------------------------------------------------------------- plumbing


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("human", "json"), default="human")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--full", action="store_true", help="print every witness of a failed check")
    common.add_argument("--out", help="output path")

    p = argparse.ArgumentParser(prog="hopfgc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", parents=[common], help="validate a file according to its kind")
    c.add_argument("file")
    d = sub.add_parser("double", parents=[common], help="build the Drinfeld double of a hopf_gc file")
    d.add_argument("file")
    d.add_argument("--form", choices=("smash", "koppinen", "both"), default="smash")
    v = sub.add_parser("verify", parents=[common], help="run verification suites on a double")
    v.add_argument("file")
    v.add_argument("--suite", default="all", help="|".join(SUITES))
    v.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    m = sub.add_parser("demo", parents=[common], help="write a generated hopf_gc file")
    m.add_argument("name", help="trivial|kc2|sweedler4")
    m.add_argument("--group", default="c2", help="c2|c3|s3|e")
    m.add_argument("--field", default="rational", help="rational|fp:p")
    return p


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_report(report: Report, cfg: RunConfig, path: Optional[str], stream=None) -> int:
    text = report.to_json() if cfg.fmt == "json" else report.to_human(cfg.full)
    if stream is not None:
        stream.write(text)
    else:
        _write(text, path)
    return 0 if report.status == "pass" else 1


def _both_paths(out: str):
    stem = out[:-5] if out.endswith(".json") else out
    return {"smash": f"{stem}.smash.json", "koppinen": f"{stem}.koppinen.json"}


def _dispatch(cfg: RunConfig) -> int:
    if cfg.command == "demo":
        _write(io.emit(cmd_demo(cfg.inputs[0], cfg.group, cfg.field)), cfg.out)
        return 0
    if cfg.command == "double" and cfg.form == "both" and not cfg.out:
        raise InputError("--form both needs --out")
    obj, dig = io.load(cfg.inputs[0])
    report = Report(dig)
    if cfg.command == "check":
        cmd_check(obj, report)
        return _emit_report(report, cfg, cfg.out)
    if cfg.command == "verify":
        cmd_verify(obj, cfg.suite, cfg.seed, report, cfg.samples)
        return _emit_report(report, cfg, cfg.out)
    built = cmd_double(obj, cfg.form, report)
    if built is None:
        return _emit_report(report, cfg, None)
    if cfg.form == "both":
        paths = _both_paths(cfg.out)
    elif cfg.out:
        paths = {cfg.form: cfg.out}
    else:
        # the double goes to stdout, so the report moves to stderr
        sys.stdout.write(io.emit(built[cfg.form]))
        return _emit_report(report, cfg, None, sys.stderr)
    for f, D in built.items():
        io.dump(D, paths[f])
    report.notes["outputs"] = ", ".join(paths[f] for f in built)
    return _emit_report(report, cfg, None)


def run(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return _dispatch(RunConfig.from_args(args))
    except io.SchemaError as exc:
        print(f"hopfgc: schema error at {exc.path}: {exc.message}", file=sys.stderr)
    except InputError as exc:
        print(f"hopfgc: {type(exc).__name__}: {exc}", file=sys.stderr)
    except (DiscreteError, LinalgError, KeyError, IndexError, ValueError, TypeError, RecursionError) as exc:
        print(f"hopfgc: unusable input: {type(exc).__name__}: {exc}", file=sys.stderr)
    return 2


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
