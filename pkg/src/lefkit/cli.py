"""Command-line front end: build families, run verifications, emit reports.

Exit codes: 0 pass, 1 verified-false, 2 input error, 3 resource limit.
Reports are byte-stable for a fixed configuration and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import LefkitError, TooLargeError
from .families import (
    FamilySpec,
    canonical_lefschetz,
    kind_from_name,
    make_invariant,
)
from .lefschetz import (
    hessian_determinants_at,
    random_linear_form,
    slp_check,
    verify_theorem,
)
from .macaulay import (
    annihilator_basis,
    ensure_within_budget,
    hilbert_function,
    hilbert_report_rows,
)
from .polyring import Poly, dim_of_degree, format_poly
from .reptheory import predicted_hilbert_typeC

EXIT_PASS = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_TOO_LARGE = 3


@dataclass
class RunConfig:
    command: str
    family: str
    n: int
    power: int
    fmt: str
    out: str | None
    seed: int
    samples: int
    budget: int | None
    weights_arg: str | None
    lefschetz_source: str
    lefschetz_file: str | None
    degree: int | None

    def spec(self) -> FamilySpec:
        return FamilySpec(kind_from_name(self.family), self.n, self.power)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefkit",
        description="Exact strong-Lefschetz verification for determinantal "
        "and quadric Gorenstein algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", required=True,
                        choices=["generic-det", "sym-det", "pfaffian", "quadric"])
    common.add_argument("--n", type=int, required=True, help="matrix size / dimension")
    common.add_argument("--power", type=int, default=1, help="power s of the invariant")
    common.add_argument("--format", dest="fmt", default="text",
                        choices=["json", "csv", "text"])
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=50)
    common.add_argument("--budget", type=int, default=None,
                        help="catalecticant cell budget (default 4e6, env LEFKIT_BUDGET)")
    common.add_argument("--weights", default=None,
                        help="apolarity weight override: JSON object or path, "
                             "variable name -> positive rational")

    lef = argparse.ArgumentParser(add_help=False)
    lef.add_argument("--lefschetz", default="canonical", choices=["canonical", "random"])
    lef.add_argument("--lefschetz-file", default=None,
                     help="JSON file mapping layout variable names to rationals")

    sub.add_parser("hilbert", parents=[common],
                   help="Hilbert function via catalecticant ranks")
    sub.add_parser("slp", parents=[common, lef],
                   help="per-degree strong Lefschetz check for one linear form")
    sub.add_parser("verify", parents=[common],
                   help="cross-check Lefschetz verdicts against open-orbit membership")
    sub.add_parser("predict", parents=[common],
                   help="predicted vs computed Hilbert function (sym-det only)")
    sub.add_parser("hessian", parents=[common, lef],
                   help="higher-Hessian determinants evaluated at a point")
    ann = sub.add_parser("annihilator", parents=[common],
                         help="basis of one graded piece of the annihilator")
    ann.add_argument("--degree", type=int, required=True)
    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        family=args.family,
        n=args.n,
        power=args.power,
        fmt=args.fmt,
        out=args.out,
        seed=args.seed,
        samples=args.samples,
        budget=args.budget,
        weights_arg=args.weights,
        lefschetz_source=getattr(args, "lefschetz", "canonical"),
        lefschetz_file=getattr(args, "lefschetz_file", None),
        degree=getattr(args, "degree", None),
    )


def _load_name_map(source: str, what: str) -> dict:
    text = source
    if not source.lstrip().startswith("{"):
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    if not isinstance(data, dict):
        raise LefkitError(f"{what} must be a JSON object")
    return data

def _resolve_weights(arg: str | None, spec: FamilySpec) -> tuple[Fraction, ...] | None:
    if arg is None:
        return None
    data = _load_name_map(arg, "weights")
    names = spec.layout
    index = {name: k for k, name in enumerate(names)}
    weights = [Fraction(1)] * spec.nvars
    for name, value in data.items():
        if name not in index:
            raise LefkitError(f"unknown variable {name!r} in weights")
        w = Fraction(str(value))
        if w <= 0:
            raise LefkitError("weights must be positive rationals")
        weights[index[name]] = w
    if all(w == 1 for w in weights):
        return None
    return tuple(weights)


def _lefschetz_from(config: RunConfig, spec: FamilySpec) -> Poly:
    if config.lefschetz_file is not None:
        data = _load_name_map(config.lefschetz_file, "Lefschetz coefficients")
        index = {name: k for k, name in enumerate(spec.layout)}
        terms = {}
        for name, value in data.items():
            if name not in index:
                raise LefkitError(f"unknown variable {name!r} in Lefschetz file")
            coeff = Fraction(str(value))
            if coeff:
                expo = [0] * spec.nvars
                expo[index[name]] = 1
                terms[tuple(expo)] = coeff
        L = Poly(spec.nvars, terms)
        if L.is_zero():
            raise LefkitError("Lefschetz file defines the zero form")
        return L
    if config.lefschetz_source == "random":
        return random_linear_form(spec.nvars, random.Random(config.seed))
    return canonical_lefschetz(spec)


def _write(config: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(fieldnames: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _emit(config: RunConfig, payload: dict, csv_fields: list[str],
          csv_rows: list[dict], text: str) -> None:
    if config.fmt == "json":
        _write(config, json.dumps(payload, indent=2))
    elif config.fmt == "csv":
        _write(config, _csv_text(csv_fields, csv_rows))
    else:
        _write(config, text)


def _coeff_text(L: Poly, spec: FamilySpec) -> str:
    return format_poly(L, spec.layout)


# ---------------------------------------------------------------------------
# commands


def cmd_hilbert(config: RunConfig) -> int:
    spec = config.spec()
    ensure_within_budget(spec.nvars, spec.socle_degree, config.budget)
    weights = _resolve_weights(config.weights_arg, spec)
    f = make_invariant(spec)
    fn = hilbert_function(f, weights)
    rows = hilbert_report_rows(f, fn)
    payload = {
        "family": spec.kind.value,
        "n": spec.size,
        "s": spec.power,
        "socle_degree": fn.socle_degree,
        "hilbert": list(fn.values),
        "rows": rows,
    }
    text_lines = [
        f"family {spec.kind.value} n={spec.size} s={spec.power}",
        f"hilbert {fn.as_text()}",
        "degree dim_R_i rank kernel_dim",
    ]
    text_lines += [
        f"{r['degree']} {r['dim_R_i']} {r['rank']} {r['kernel_dim']}" for r in rows
    ]
    _emit(config, payload, ["degree", "dim_R_i", "rank", "kernel_dim"], rows,
          "\n".join(text_lines))
    return EXIT_PASS


def cmd_slp(config: RunConfig) -> int:
    spec = config.spec()
    ensure_within_budget(spec.nvars, spec.socle_degree, config.budget)
    weights = _resolve_weights(config.weights_arg, spec)
    f = make_invariant(spec)
    L = _lefschetz_from(config, spec)
    report = slp_check(f, L, spec=spec, weights=weights)
    payload = report.to_dict(spec.layout)
    csv_rows = payload["rows"]
    text_lines = [
        f"family {spec.kind.value} n={spec.size} s={spec.power} c={report.c}",
        f"L = {_coeff_text(L, spec)}",
        "i required achieved pass",
    ]
    text_lines += [
        f"{r['i']} {r['required']} {r['achieved']} {'yes' if r['pass'] else 'no'}"
        for r in csv_rows
    ]
    text_lines.append(f"verdict {'true' if report.verdict else 'false'}")
    _emit(config, payload, ["i", "required", "achieved", "pass"], csv_rows,
          "\n".join(text_lines))
    return EXIT_PASS if report.verdict else EXIT_FALSE


def cmd_verify(config: RunConfig) -> int:
    spec = config.spec()
    if _resolve_weights(config.weights_arg, spec) is not None:
        raise LefkitError(
            "verify compares against open-orbit membership, which assumes "
            "unit apolarity weights"
        )
    summary = verify_theorem(spec, config.samples, config.seed, config.budget)
    payload = summary.to_dict(spec.layout)
    csv_rows = [
        {
            "index": k,
            "forced": row["forced"],
            "slp": row["slp"],
            "orbit": row["orbit"],
            "agree": row["agree"],
            "L": " ".join(f"{n}={v}" for n, v in row["L"].items()),
        }
        for k, row in enumerate(payload["rows"])
    ]
    text_lines = [
        f"family {spec.kind.value} n={spec.size} s={spec.power} "
        f"seed={summary.seed} samples={summary.requested_samples}",
        f"checked {len(summary.samples)} candidates "
        f"({len(summary.samples) - summary.requested_samples} forced)",
        f"mismatches {summary.mismatches}",
    ]
    _emit(config, payload, ["index", "forced", "slp", "orbit", "agree", "L"],
          csv_rows, "\n".join(text_lines))
    return EXIT_PASS if summary.mismatches == 0 else EXIT_FALSE


def cmd_predict(config: RunConfig) -> int:
    spec = config.spec()
    if spec.kind.value != "sym-det":
        raise LefkitError("prediction implemented for sym-det only")
    if _resolve_weights(config.weights_arg, spec) is not None:
        raise LefkitError("predict compares unit-weight Hilbert functions")
    ensure_within_budget(spec.nvars, spec.socle_degree, config.budget)
    predicted = predicted_hilbert_typeC(spec.size, spec.power)
    computed = hilbert_function(make_invariant(spec))
    match = predicted.values == computed.values
    payload = {
        "family": spec.kind.value,
        "n": spec.size,
        "s": spec.power,
        "predicted": list(predicted.values),
        "computed": list(computed.values),
        "match": match,
    }
    csv_rows = [
        {"degree": i, "predicted": p, "computed": c}
        for i, (p, c) in enumerate(zip(predicted.values, computed.values))
    ]
    text = "\n".join(
        [
            f"family {spec.kind.value} n={spec.size} s={spec.power}",
            f"predicted {predicted.as_text()}",
            f"computed  {computed.as_text()}",
            f"match {'true' if match else 'false'}",
        ]
    )
    _emit(config, payload, ["degree", "predicted", "computed"], csv_rows, text)
    return EXIT_PASS if match else EXIT_FALSE


def cmd_hessian(config: RunConfig) -> int:
    spec = config.spec()
    ensure_within_budget(spec.nvars, spec.socle_degree, config.budget)
    weights = _resolve_weights(config.weights_arg, spec)
    f = make_invariant(spec)
    L = _lefschetz_from(config, spec)
    dets = hessian_determinants_at(f, L, weights)
    rows = [
        {"i": i, "det": str(d), "nonzero": bool(d)} for i, d in enumerate(dets)
    ]
    all_nonzero = all(r["nonzero"] for r in rows)
    payload = {
        "family": spec.kind.value,
        "n": spec.size,
        "s": spec.power,
        "L": {
            name: str(v)
            for name, v in zip(spec.layout, L.linear_coefficients())
            if v
        },
        "rows": rows,
        "all_nonzero": all_nonzero,
    }
    text_lines = [
        f"family {spec.kind.value} n={spec.size} s={spec.power}",
        f"L = {_coeff_text(L, spec)}",
        "i det nonzero",
    ]
    text_lines += [
        f"{r['i']} {r['det']} {'yes' if r['nonzero'] else 'no'}" for r in rows
    ]
    text_lines.append(f"all_nonzero {'true' if all_nonzero else 'false'}")
    _emit(config, payload, ["i", "det", "nonzero"], rows, "\n".join(text_lines))
    return EXIT_PASS if all_nonzero else EXIT_FALSE


def cmd_annihilator(config: RunConfig) -> int:
    spec = config.spec()
    ensure_within_budget(spec.nvars, spec.socle_degree, config.budget)
    weights = _resolve_weights(config.weights_arg, spec)
    f = make_invariant(spec)
    basis = annihilator_basis(f, config.degree, weights)
    texts = [format_poly(p, spec.layout) for p in basis]
    payload = {
        "family": spec.kind.value,
        "n": spec.size,
        "s": spec.power,
        "degree": config.degree,
        "dim_R_i": dim_of_degree(spec.nvars, config.degree),
        "kernel_dim": len(texts),
        "basis": texts,
    }
    csv_rows = [{"index": k, "polynomial": t} for k, t in enumerate(texts)]
    text_lines = [
        f"family {spec.kind.value} n={spec.size} s={spec.power} degree={config.degree}",
        f"kernel_dim {len(texts)}",
    ] + texts
    _emit(config, payload, ["index", "polynomial"], csv_rows, "\n".join(text_lines))
    return EXIT_PASS


_COMMANDS = {
    "hilbert": cmd_hilbert,
    "slp": cmd_slp,
    "verify": cmd_verify,
    "predict": cmd_predict,
    "hessian": cmd_hessian,
    "annihilator": cmd_annihilator,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    config = _config_from(args)
    try:
        return _COMMANDS[config.command](config)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (LefkitError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
