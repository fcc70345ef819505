"""``redcore`` command line entry point."""

from __future__ import annotations

import argparse
import json
import sys

from .. import __version__
from ..blowup import analytic_spread, depth_positive, graded_hilbert, is_linear_type, rees_ideal
from ..errors import EngineError
from ..groebner import degree_cap_scope
from ..ideals import krull_dim
from ..local import LocalIdeal, local_intersect, local_quotient, localize
from ..reductions import (
    Options,
    cancellation_check,
    colon_power,
    core,
    core_oracle_mc,
    decreasing_chain_check,
    ideal_height,
    min_balanced_index,
    min_power_in_core,
    sample_reductions,
)
from ..reductions.balance import balanced_test
from ..reductions.colon import power_local
from ..reductions.core import characteristic_guard
from .jobfile import JobSpec, JobSyntaxError, parse_job

COMMANDS = ("gb", "colon", "power", "intersect", "rednum", "core", "balanced", "hilbert", "report")


def _pick(job: JobSpec, names: list[str] | None, count: int):
    avail = list(job.ideals)
    chosen = names or avail[:count]
    if len(chosen) < count:
        raise JobSyntaxError(f"command needs {count} ideal(s), job defines {len(avail)}")
    for n in chosen:
        if n not in job.ideals:
            raise JobSyntaxError(f"unknown ideal {n!r}")
    return [job.ideals[n] for n in chosen[:count]], chosen[:count]


def _local_fields(L: LocalIdeal) -> dict:
    return {"generators": L.generator_strings(), "colength": L.colength, "N": L.N}


def _cmd_gb(job, ideals, opts, args):
    (A,), names = ideals
    G = A.gb
    return {"ideal": names[0], "gb": [str(g) for g in G], "krull_dim": krull_dim(A)}


def _cmd_colon(job, ideals, opts, args):
    (A, B), names = ideals
    return {"colon": f"{names[0]}:{names[1]}", **_local_fields(local_quotient(A, B))}


def _cmd_power(job, ideals, opts, args):
    (A,), names = ideals
    n = 2 if args.n is None else args.n
    return {"ideal": names[0], "n": n, **_local_fields(localize(power_local(A, n)))}


def _cmd_intersect(job, ideals, opts, args):
    (A, B), names = ideals
    return {"intersect": f"{names[0]}&{names[1]}", **_local_fields(local_intersect(A, B))}


def _samples(I, opts):
    return sample_reductions(I, opts)


def _cmd_rednum(job, ideals, opts, args):
    (I,), names = ideals
    S = _samples(I, opts)
    r = [s.r_J for s in S]
    return {"ideal": names[0], "ell": analytic_spread(I), "r_hat": min(r), "r_samples": r,
            "r_constant": len(set(r)) == 1, "seed": opts.seed}


def _cmd_core(job, ideals, opts, args):
    (I,), names = ideals
    S = _samples(I, opts)
    cr = core(I, options=opts, samples=S)
    return {"ideal": names[0], "core_generators": cr.core.generator_strings(), "core_colength": cr.core.colength,
            "core_n_used": cr.n_used, "core_certified": cr.certified, "core_label": cr.label,
            "stabilized": cr.stabilized, "cross_validated": cr.cross_validated, "seed": opts.seed}


def _cmd_balanced(job, ideals, opts, args):
    (I,), names = ideals
    S = _samples(I, opts)
    if args.n is not None:
        ok, w = balanced_test(I, args.n, samples=S)
        return {"ideal": names[0], "n": args.n, "independent": ok,
                "witness": list(w) if w else None, "samples": len(S), "seed": opts.seed}
    rep = min_balanced_index(I, opts, samples=S)
    return {"ideal": names[0], **_balance_fields(rep), "seed": opts.seed}


def _cmd_hilbert(job, ideals, opts, args):
    (I,), names = ideals
    n = 5 if args.n is None else args.n
    prof = graded_hilbert(I, n)
    return {"ideal": names[0], "hilbert": prof.hilbert, "ell": analytic_spread(I)}


def _balance_fields(rep) -> dict:
    return {
        "ell": rep.ell, "height": rep.g, "r_hat": rep.r_hat, "r_samples": rep.r_samples,
        "balanced": [{"n": v.n, "independent": v.independent} for v in rep.verdicts],
        "min_balanced_index": rep.min_balanced_index, "expected_index": rep.expected_index,
        "gr_cm": rep.gr_cm, "verdict": rep.theorem_verdict, "monotone": rep.monotone,
        "r_constant": rep.r_constant,
    }


def _cmd_report(job, ideals, opts, args):
    (I,), names = ideals
    localize(I)
    S = _samples(I, opts)
    rep = min_balanced_index(I, opts, samples=S)
    J = S[0]
    out = {"ideal": names[0], "generators": job.sources.get(names[0], []), "ring": repr(job.ring),
           "colength": localize(I).colength, "linear_type": is_linear_type(rees_ideal(I))}
    out.update(_balance_fields(rep))
    out["r_exact"] = rep.gr_cm == "yes" or rep.dim == 1
    out["chain"] = decreasing_chain_check(I, J, rep.expected_index + 1)
    out["cancellation"] = all(cancellation_check(J, n, i) for n in (1, 2) for i in (1, 2))
    out["depth_positive"] = str(depth_positive(I, J.J, opts.samples, opts.rng("depth"), J.r_J, opts.height))
    if characteristic_guard(I, J.r_J, rep.ell, rep.g):
        cr = core(I, options=opts, samples=S)
        oracle = core_oracle_mc(I, opts.mc, options=opts)
        out.update({
            "core_generators": cr.core.generator_strings(), "core_colength": cr.core.colength,
            "core_n_used": cr.n_used, "core_certified": cr.certified, "core_label": cr.label,
            "mc_oracle_generators": oracle.generator_strings(),
            "oracle_contains_core": cr.core <= oracle, "oracle_equals_core": cr.core == oracle,
            "min_power_in_core": min_power_in_core(I, cr.core),
            "colon_equals_core": [{"n": v.n, "equal": all(colon_power(s, I, v.n) == cr.core for s in S)}
                                  for v in rep.verdicts],
        })
    else:
        out.update({"core_generators": None, "core_n_used": None, "core_certified": False,
                    "mc_oracle_generators": None})
    out["samples"] = opts.samples
    out["seed"] = opts.seed
    return out


HANDLERS = {"gb": (_cmd_gb, 1), "colon": (_cmd_colon, 2), "power": (_cmd_power, 1),
            "intersect": (_cmd_intersect, 2), "rednum": (_cmd_rednum, 1), "core": (_cmd_core, 1),
            "balanced": (_cmd_balanced, 1), "hilbert": (_cmd_hilbert, 1), "report": (_cmd_report, 1)}


def _text(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    for k, v in value.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(f"{pad}  - " + ", ".join(f"{a}={_scalar(b)}" for a, b in item.items()))
        elif isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.extend(_text(v, indent + 1))
        else:
            lines.append(f"{pad}{k}: {_scalar(v)}")
    return lines


def _scalar(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def render(result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2)
    return "\n".join(_text(result))


def run(job: JobSpec, command: str, options: Options, args) -> dict:
    fn, count = HANDLERS[command]
    ideals = _pick(job, args.ideal, count)
    with degree_cap_scope(options.degree_cap):
        return {"command": command, **fn(job, ideals, options, args)}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="redcore", description="Cores, reductions and colon ideals at the origin.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", "-i", required=True, help="job file ('-' for stdin)")
    p.add_argument("--ideal", action="append", help="ideal name(s) to use, in order (default: file order)")
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--mc", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--buffer", type=int, default=1, help="extra n scanned past the expected index")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--degree-cap", type=int)
    p.add_argument("--version", action="version", version=__version__)
    return p


def _options(job: JobSpec, args) -> Options:
    o = job.options

    def pick(flag, key, default):
        v = getattr(args, flag)
        return v if v is not None else o.get(key, default)

    return Options(seed=pick("seed", "seed", 0), samples=pick("samples", "samples", 8),
                   n_max=pick("nmax", "nmax", 50), mc=pick("mc", "mc", 25), buffer=args.buffer,
                   degree_cap=pick("degree_cap", "degree-cap", None))


def _fail(code: str, message: str, fmt: str, extra: dict | None = None) -> None:
    err = {"code": code, "message": message, **(extra or {})}
    if fmt == "json":
        print(json.dumps({"error": err}, indent=2))
    else:
        print(f"error[{code}]: {message}", file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    except OSError as exc:
        _fail("InputError", str(exc), args.format)
        return 2
    try:
        job = parse_job(text)
        if args.n is None and "n" in job.options:
            args.n = job.options["n"]
        opts = _options(job, args)
        if opts.samples < 2 and args.command in ("balanced", "report", "core"):
            raise JobSyntaxError("at least two samples are needed")
        result = run(job, args.command, opts, args)
    except JobSyntaxError as exc:
        _fail(exc.code, str(exc), args.format, {"line": exc.line, "column": exc.column})
        return 2
    except EngineError as exc:
        _fail(exc.code, str(exc), args.format)
        return 1
    print(render(result, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
