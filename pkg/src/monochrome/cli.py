"""Command-line front door.

Every subcommand is a thin shell over one library entry point and emits
a report with the fixed shape {command, timestamp, status, payload} as
JSON (default), flat text, or CSV.  Exit codes: 0 for a positive
outcome, 1 for definite negative outcomes (nothing found, refuted,
timeout, pool exhausted), 2 for usage, parse and input errors.

A config file of `key = value` lines (keys mirror the long flag names)
can supply any flag; explicit flags win.  The environment variable
MONOCHROME_BUDGET provides a global default for --budget / --work-cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from datetime import datetime, timezone

from .colorings import (
    Coloring,
    ColoringFormatError,
    load_coloring,
    random_coloring,
    store_coloring,
)
from .halesjewett import WorkCapExceeded, hj_number_exhaustive, sigma_trials
from .largeness import (
    PSWitness,
    dilate_set,
    dilation_transport,
    divide_set,
    division_transport,
    ipstar_refute,
    ps_witness_search,
    syndetic_check,
    validate_ps_witness,
)
from .patterns import (
    ScanConstraints,
    abundance_profile,
    format_family,
    parse_family,
    witness_scan,
)
from .rings import (
    enumerate_window,
    format_element,
    format_ring_spec,
    format_window_params,
    parse_element,
    parse_element_set,
    parse_ring_spec,
    parse_window_params,
)
from .search import (
    AvoidanceStatus,
    avoidance_backtrack,
    build_instance,
    cnf_export,
    cnf_model_decode,
    dual_engine_check,
    moreira_number,
    parse_model,
    to_dimacs,
)
from .ufp import PoolExhaustedError, UfpSequence, grow_ufp, has_ufp

BUDGET_ENV = "MONOCHROME_BUDGET"


class CliError(Exception):
    """Usage-level problem: reported to stderr, exit code 2."""


# ---------------------------------------------------------------------------
# Parser

_INT_KEYS = {
    "colors", "seed", "budget", "maxN", "alphabet", "n", "depth", "trials",
    "samples", "len", "length", "limit", "jobs", "work_cap",
}
_BOOL_KEYS = {"allow_degenerate", "partial", "crosscheck", "validate"}


def _add_common(p, *, ring=False, window=False, colors=False, family=False,
                seed=False, budget=False, constraints=False, output=True):
    if ring:
        p.add_argument("--ring", help="ring spec: Z, Zi, or GF(q)[x]")
    if window:
        p.add_argument("--window", help="window params: N=50[,signed] / B=3 / d=4")
    if colors:
        p.add_argument("--colors", type=int, help="number of colors r")
    if family:
        p.add_argument("--F", dest="F", help='family literal, e.g. "t" or "0; t" or "2t^2+t"')
    if seed:
        p.add_argument("--seed", type=int, help="stream seed (default 0)")
    if budget:
        p.add_argument("--budget", type=int,
                       help=f"node budget (default: ${BUDGET_ENV} or unlimited)")
    if constraints:
        p.add_argument("--exclude-y", help="element set never used as y (default {0,1})")
        p.add_argument("--exclude-x", help="element set never used as x (default {0})")
        p.add_argument("--allow-degenerate", action="store_true", default=None,
                       help="keep single-element instances")
    if output:
        p.add_argument("--format", choices=("json", "text", "csv"), help="report format")
        p.add_argument("-o", "--output", help="write the report here instead of stdout")
    p.add_argument("--config", help="file of key = value lines mirroring these flags")
    p.add_argument("--jobs", type=int,
                   help="reserved concurrency knob; execution is single-process")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monochrome",
        description="verification and search for monochromatic product/shift "
                    "configurations over finite ring windows",
    )
    sub = parser.add_subparsers(dest="cmd", metavar="subcommand")

    p = sub.add_parser("scan", help="list monochromatic instances of a coloring")
    _add_common(p, ring=True, window=True, colors=True, family=True, seed=True,
                constraints=True)
    p.add_argument("--coloring", help="coloring file (instead of --seed)")
    p.add_argument("--partial", action="store_true", default=None,
                   help="judge instances only partly inside the window by their visible part")
    p.add_argument("--limit", type=int, help="stop after this many witnesses")

    p = sub.add_parser("abundance", help="per-y color profile of admissible x values")
    _add_common(p, ring=True, window=True, colors=True, family=True, seed=True,
                constraints=True)
    p.add_argument("--coloring", help="coloring file (instead of --seed)")
    p.add_argument("--y", help="restrict to one y (element literal)")

    p = sub.add_parser("largeness", help="syndetic / witness / IP checks and transports")
    lsub = p.add_subparsers(dest="sub", metavar="check")

    q = lsub.add_parser("syndetic", help="do the gap translates of a set cover the window?")
    _add_common(q, ring=True, window=True)
    q.add_argument("--target", required=True, help="element set A")
    q.add_argument("--gaps", required=True, help="gap set G")

    q = lsub.add_parser("ps-witness", help="least anchor making (gaps, block) a witness")
    _add_common(q, ring=True, window=True)
    q.add_argument("--target", required=True)
    q.add_argument("--gaps", required=True)
    q.add_argument("--block", required=True)

    q = lsub.add_parser("ipstar", help="search seeded sequences whose finite sums miss a set")
    _add_common(q, ring=True, window=True, seed=True)
    q.add_argument("--target", required=True)
    q.add_argument("--target-window",
                   help="window params for parsing --target (default: --window)")
    q.add_argument("--len", type=int, required=True, help="sequence length")
    q.add_argument("--samples", type=int, required=True)

    q = lsub.add_parser("transport", help="dilate or divide a witness exactly")
    _add_common(q, ring=True, window=True)
    q.add_argument("--gaps", required=True)
    q.add_argument("--block", required=True)
    q.add_argument("--anchor", required=True, help="element literal")
    q.add_argument("--by", required=True, help="element literal to dilate/divide by")
    q.add_argument("--mode", choices=("dilate", "divide"), required=True)
    q.add_argument("--target", help="optional set A for before/after validation")

    p = sub.add_parser("hj", help="exhaustive cube-coloring search for forced lines")
    _add_common(p)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument("--maxN", dest="maxN", type=int, required=True)
    p.add_argument("--work-cap", type=int, help="refuse runs estimated above this")

    p = sub.add_parser("sigma", help="randomized exact checks of the embedding identity")
    _add_common(p, ring=True, window=True, family=True, seed=True)
    p.add_argument("--n", type=int, help="side of the layered space (default 2)")
    p.add_argument("--depth", type=int, help="levels d (default: family top degree)")
    p.add_argument("--trials", type=int, help="default 100")

    p = sub.add_parser("search", help="avoidance colorings and least-window thresholds")
    ssub = p.add_subparsers(dest="sub", metavar="mode")

    q = ssub.add_parser("avoid", help="search one window for an avoidance coloring")
    _add_common(q, ring=True, window=True, colors=True, family=True, budget=True,
                constraints=True)
    q.add_argument("--save-coloring", help="write a found coloring to this file")

    q = ssub.add_parser("moreira", help="least N over Z at which avoidance becomes impossible")
    _add_common(q, colors=True, family=True, budget=True)
    q.add_argument("--maxN", dest="maxN", type=int, required=True)
    q.add_argument("--crosscheck", action="store_true", default=None,
                   help="confirm the boundary with the reference CNF engine")

    p = sub.add_parser("cnf", help="DIMACS export / model decode")
    csub = p.add_subparsers(dest="sub", metavar="direction")

    q = csub.add_parser("export", help="write the avoidance instance as DIMACS CNF")
    _add_common(q, ring=True, window=True, colors=True, family=True, constraints=True,
                output=False)
    q.add_argument("--format", choices=("json", "text", "csv"), help="report format")
    q.add_argument("-o", "--output", help="CNF file path (default: raw DIMACS on stdout)")

    q = csub.add_parser("decode", help="turn a satisfying model back into a coloring")
    _add_common(q, ring=True, window=True, colors=True, family=True, constraints=True)
    q.add_argument("--model", required=True, help="model file (v-lines or literals); - for stdin")
    q.add_argument("--save-coloring", help="also write the decoded coloring here")

    p = sub.add_parser("ufp", help="uniqueness-of-finite-products tools")
    usub = p.add_subparsers(dest="sub", metavar="action")

    q = usub.add_parser("verify", help="check pairwise distinctness of subset products")
    _add_common(q, ring=True)
    q.add_argument("--elements", required=True,
                   help="comma-separated element literals, in order")

    q = usub.add_parser("grow", help="extend a sequence over a window pool")
    _add_common(q, ring=True, window=True)
    q.add_argument("--start", required=True, help="first element (literal)")
    q.add_argument("--length", type=int, required=True, help="target length")

    p = sub.add_parser("report", help="merge report JSON files into one CSV table")
    p.add_argument("inputs", nargs="+", help="report JSON files")
    p.add_argument("-o", "--output", help="CSV destination (default stdout)")

    return parser


# ---------------------------------------------------------------------------
# Config files


def _load_config(path: str) -> dict:
    entries = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise CliError(f"{path}:{lineno}: expected key = value, got {raw.strip()!r}")
                key, value = line.split("=", 1)
                entries[key.strip().replace("-", "_")] = value.strip()
    except OSError as exc:
        raise CliError(f"cannot read config {path}: {exc}") from None
    return entries


def _convert(key: str, value: str):
    if key in _INT_KEYS:
        try:
            return int(value)
        except ValueError:
            raise CliError(f"config key {key}: expected an integer, got {value!r}") from None
    if key in _BOOL_KEYS:
        low = value.lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise CliError(f"config key {key}: expected a boolean, got {value!r}")
    return value


def _apply_config(args: argparse.Namespace) -> None:
    """Fill unset options from the config file, then the environment."""
    allowed = {k for k in vars(args) if k not in ("cmd", "sub", "config", "inputs")}
    if getattr(args, "config", None):
        for key, value in _load_config(args.config).items():
            if key not in allowed:
                raise CliError(f"unknown config key {key!r}")
            if getattr(args, key) is None:
                setattr(args, key, _convert(key, value))
    env = os.environ.get(BUDGET_ENV)
    if env is not None:
        for dest in ("budget", "work_cap"):
            if dest in vars(args) and getattr(args, dest) is None:
                try:
                    setattr(args, dest, int(env))
                except ValueError:
                    raise CliError(f"${BUDGET_ENV} must be an integer, got {env!r}") from None


# ---------------------------------------------------------------------------
# Shared pieces


def _spec(args):
    return parse_ring_spec(args.ring or "Z")


def _window(args, spec, attr="window"):
    text = getattr(args, attr, None)
    if not text:
        raise CliError(f"missing --{attr.replace('_', '-')}")
    return enumerate_window(spec, parse_window_params(spec, text))


def _family(args, spec):
    if not args.F:
        raise CliError("missing --F")
    return parse_family(spec, args.F)


def _colors(args) -> int:
    if args.colors is None:
        raise CliError("missing --colors")
    return args.colors


def _constraints(args, spec, window) -> ScanConstraints:
    base = ScanConstraints.defaults_for(spec)
    exclude_y = base.exclude_y
    exclude_x = base.exclude_x
    if getattr(args, "exclude_y", None) is not None:
        exclude_y = parse_element_set(spec, args.exclude_y, window)
    if getattr(args, "exclude_x", None) is not None:
        exclude_x = parse_element_set(spec, args.exclude_x, window)
    return ScanConstraints(
        exclude_y=exclude_y,
        exclude_x=exclude_x,
        require_in_window=not bool(getattr(args, "partial", None)),
        forbid_degenerate=not bool(getattr(args, "allow_degenerate", None)),
    )


def _coloring_for(args, spec, window, r) -> Coloring:
    path = getattr(args, "coloring", None)
    if path:
        coloring = load_coloring(path)
        if coloring.window.spec != spec:
            raise CliError("coloring file ring differs from --ring")
        if coloring.window != window:
            raise CliError("coloring file window differs from --window")
        if args.colors is not None and coloring.r != r:
            raise CliError("coloring file colors differ from --colors")
        return coloring
    seed = args.seed if args.seed is not None else 0
    return random_coloring(window, r, seed)


def _fmt_set(elems) -> list:
    return sorted(format_element(e) for e in elems)


def _now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _render_text(report: dict) -> str:
    lines = [f"# {report['command']}", f"status: {report['status']}"]
    for key, value in report["payload"].items():
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{key}:")
            for row in value:
                lines.append("  " + "  ".join(f"{k}={_plain(v)}" for k, v in row.items()))
        else:
            lines.append(f"{key}: {_plain(value)}")
    return "\n".join(lines) + "\n"


def _plain(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _render_csv(report: dict) -> str:
    payload = report["payload"]
    tables = [
        (k, v)
        for k, v in payload.items()
        if isinstance(v, list) and v and all(isinstance(x, dict) for x in v)
    ]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if len(tables) == 1:
        rows = tables[0][1]
        cols = list(dict.fromkeys(key for row in rows for key in row))
        writer.writerow(cols)
        for row in rows:
            writer.writerow([_plain(row.get(c, "")) for c in cols])
    else:
        scalars = {k: v for k, v in payload.items() if not isinstance(v, (dict, list))}
        writer.writerow(["command", "timestamp", "status", *scalars])
        writer.writerow([report["command"], report["timestamp"], report["status"],
                         *[_plain(v) for v in scalars.values()]])
    return buf.getvalue()


def _emit(args, command: str, status: str, payload: dict, *, to_stdout=False) -> None:
    report = {"command": command, "timestamp": _now(), "status": status, "payload": payload}
    fmt = getattr(args, "format", None) or "json"
    if fmt == "json":
        text = json.dumps(report, indent=2) + "\n"
    elif fmt == "text":
        text = _render_text(report)
    else:
        text = _render_csv(report)
    dest = None if to_stdout else getattr(args, "output", None)
    if dest:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# Handlers


def _cmd_scan(args) -> int:
    spec = _spec(args)
    window = _window(args, spec)
    r = _colors(args)
    family = _family(args, spec)
    constraints = _constraints(args, spec, window)
    coloring = _coloring_for(args, spec, window, r)
    witnesses = [
        {"x": format_element(w.x), "y": format_element(w.y), "color": w.color}
        for w in witness_scan(coloring, family, constraints, limit=args.limit)
    ]
    payload = {
        "ring": format_ring_spec(spec),
        "window": format_window_params(spec, window.params),
        "colors": r,
        "family": format_family(family),
        "seed": args.seed,
        "count": len(witnesses),
        "witnesses": witnesses,
    }
    _emit(args, "scan", "ok", payload)
    return 0


def _cmd_abundance(args) -> int:
    spec = _spec(args)
    window = _window(args, spec)
    r = _colors(args)
    family = _family(args, spec)
    constraints = _constraints(args, spec, window)
    coloring = _coloring_for(args, spec, window, r)
    if args.y is not None:
        ys = [parse_element(spec, args.y)]
    else:
        ys = [y for y in window.elements if constraints.admits_y(y)]
    rows = []
    for y in ys:
        profile = abundance_profile(coloring, family, y, constraints)
        for c in range(1, r + 1):
            rows.append({"y": format_element(y), "color": c,
                         "count": len(profile.get(c, ()))})
    payload = {
        "ring": format_ring_spec(spec),
        "window": format_window_params(spec, window.params),
        "colors": r,
        "family": format_family(family),
        "rows": rows,
    }
    _emit(args, "abundance", "ok", payload)
    return 0


def _cmd_largeness(args) -> int:
    if args.sub is None:
        raise CliError("largeness needs a check: syndetic, ps-witness, ipstar or transport")
    spec = _spec(args)
    window = _window(args, spec)
    if args.sub == "syndetic":
        target = parse_element_set(spec, args.target, window)
        gaps = parse_element_set(spec, args.gaps, window)
        bad = syndetic_check(target, gaps, window)
        payload = {"holds": bad is None,
                   "counterexample": None if bad is None else format_element(bad)}
        _emit(args, "largeness syndetic", "holds" if bad is None else "refuted", payload)
        return 0 if bad is None else 1
    if args.sub == "ps-witness":
        target = parse_element_set(spec, args.target, window)
        gaps = parse_element_set(spec, args.gaps, window)
        block = parse_element_set(spec, args.block, window)
        witness = ps_witness_search(target, gaps, block, window)
        if witness is None:
            _emit(args, "largeness ps-witness", "not_found", {"found": False})
            return 1
        payload = {
            "found": True,
            "gaps": _fmt_set(witness.gaps),
            "block": _fmt_set(witness.block),
            "anchor": format_element(witness.anchor),
        }
        _emit(args, "largeness ps-witness", "found", payload)
        return 0
    if args.sub == "ipstar":
        target_window = window
        if args.target_window:
            target_window = _window(args, spec, "target_window")
        target = parse_element_set(spec, args.target, target_window)
        seed = args.seed if args.seed is not None else 0
        seq = ipstar_refute(target, window, args.len, args.samples, seed)
        payload = {"seq_len": args.len, "samples": args.samples, "seed": seed,
                   "found": seq is not None,
                   "sequence": None if seq is None else [format_element(e) for e in seq]}
        _emit(args, "largeness ipstar", "counterexample" if seq else "none_found", payload)
        return 0 if seq is not None else 1
    if args.sub == "transport":
        gaps = parse_element_set(spec, args.gaps, window)
        block = parse_element_set(spec, args.block, window)
        anchor = parse_element(spec, args.anchor)
        by = parse_element(spec, args.by)
        witness = PSWitness(frozenset(gaps), frozenset(block), anchor)
        target = None
        if args.target is not None:
            target = parse_element_set(spec, args.target, window)
        payload = {"mode": args.mode, "by": format_element(by)}
        if target is not None:
            payload["valid_before"] = validate_ps_witness(witness, target)
        if args.mode == "dilate":
            moved = dilation_transport(witness, by)
            moved_target = dilate_set(target, by) if target is not None else None
        else:
            moved = division_transport(witness, by)
            if moved is None:
                payload["divisible"] = False
                _emit(args, "largeness transport", "not_divisible", payload)
                return 1
            moved_target = divide_set(target, by) if target is not None else None
        payload["gaps"] = _fmt_set(moved.gaps)
        payload["block"] = _fmt_set(moved.block)
        payload["anchor"] = format_element(moved.anchor)
        if moved_target is not None:
            payload["valid_after"] = validate_ps_witness(moved, moved_target)
        elif target is not None:
            payload["valid_after"] = None  # target itself not fully divisible
        _emit(args, "largeness transport", "ok", payload)
        return 0
    raise CliError(f"unknown largeness check {args.sub!r}")


def _cmd_hj(args) -> int:
    try:
        res = hj_number_exhaustive(args.colors, args.alphabet, args.maxN, args.work_cap)
    except WorkCapExceeded as exc:
        _emit(args, "hj", "work_cap_exceeded", {"error": str(exc)})
        return 1
    payload = {"r": res.r, "t": res.t, "N": res.n, "status": res.status}
    if res.avoiding is not None:
        payload["avoiding_coloring"] = list(res.avoiding)
    _emit(args, "hj", res.status, payload)
    return 0 if res.status == "found" else 1


def _cmd_sigma(args) -> int:
    spec = _spec(args)
    pool = _window(args, spec)
    family = _family(args, spec)
    n = args.n if args.n is not None else 2
    trials = args.trials if args.trials is not None else 100
    seed = args.seed if args.seed is not None else 0
    checks = 0
    failures = 0
    for trial in sigma_trials(family, pool, n, args.depth, trials, seed):
        for check in trial:
            checks += 1
            if not check.ok:
                failures += 1
    payload = {
        "ring": format_ring_spec(spec),
        "family": format_family(family),
        "n": n,
        "trials": trials,
        "checks": checks,
        "failures": failures,
        "all_ok": failures == 0,
    }
    _emit(args, "sigma", "ok" if failures == 0 else "failed", payload)
    return 0 if failures == 0 else 1


def _cmd_search(args) -> int:
    if args.sub is None:
        raise CliError("search needs a mode: avoid or moreira")
    if args.sub == "avoid":
        spec = _spec(args)
        window = _window(args, spec)
        r = _colors(args)
        family = _family(args, spec)
        constraints = _constraints(args, spec, window)
        inst = build_instance(window, r, family, constraints)
        res = avoidance_backtrack(inst, args.budget)
        payload = {
            "ring": format_ring_spec(spec),
            "window": format_window_params(spec, window.params),
            "colors": r,
            "family": format_family(family),
            "candidates": len(inst.candidates),
            "status": res.status.value,
            "nodes": res.nodes,
            "backtracks": res.backtracks,
        }
        if res.coloring is not None:
            payload["coloring"] = list(res.coloring.colors)
            if args.save_coloring:
                store_coloring(res.coloring, args.save_coloring)
                payload["coloring_file"] = args.save_coloring
        _emit(args, "search avoid", res.status.value, payload)
        return 0 if res.status is AvoidanceStatus.FOUND else 1
    if args.sub == "moreira":
        spec = parse_ring_spec("Z")
        r = _colors(args)
        family = _family(args, spec)
        res = moreira_number(r, family, args.maxN, args.budget)
        payload = {
            "colors": r,
            "family": format_family(family),
            "maxN": args.maxN,
            "status": res.status,
            "N": res.n,
            "trace": [{"N": n, "status": st.value} for n, st in res.trace],
        }
        if args.crosscheck and res.status == "found":
            from .rings import WindowParams

            checks = {}
            if res.n > 1:
                below = build_instance(
                    enumerate_window(spec, WindowParams(res.n - 1)), r, family)
                checks["below"] = dual_engine_check(below)
            at = build_instance(enumerate_window(spec, WindowParams(res.n)), r, family)
            checks["at"] = dual_engine_check(at)
            payload["crosscheck"] = checks
        _emit(args, "search moreira", res.status, payload)
        return 0 if res.status == "found" else 1
    raise CliError(f"unknown search mode {args.sub!r}")


def _cmd_cnf(args) -> int:
    if args.sub is None:
        raise CliError("cnf needs a direction: export or decode")
    spec = _spec(args)
    window = _window(args, spec)
    r = _colors(args)
    family = _family(args, spec)
    constraints = _constraints(args, spec, window)
    inst = build_instance(window, r, family, constraints)
    if args.sub == "export":
        doc = cnf_export(inst)
        text = to_dimacs(doc)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
            payload = {
                "path": args.output,
                "vars": doc.num_vars,
                "clauses": len(doc.clauses),
                "candidates": len(inst.candidates),
            }
            _emit(args, "cnf export", "ok", payload, to_stdout=True)
        else:
            sys.stdout.write(text)
        return 0
    if args.sub == "decode":
        if args.model == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.model, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise CliError(f"cannot read model {args.model}: {exc}") from None
        coloring = cnf_model_decode(parse_model(text), inst)
        payload = {"colors": list(coloring.colors), "valid": True}
        if args.save_coloring:
            store_coloring(coloring, args.save_coloring)
            payload["coloring_file"] = args.save_coloring
        _emit(args, "cnf decode", "ok", payload)
        return 0
    raise CliError(f"unknown cnf direction {args.sub!r}")


def _cmd_ufp(args) -> int:
    if args.sub is None:
        raise CliError("ufp needs an action: verify or grow")
    spec = _spec(args)
    if args.sub == "verify":
        literals = [tok.strip() for tok in args.elements.split(",") if tok.strip()]
        if not literals:
            raise CliError("--elements needs at least one literal")
        seq = UfpSequence([parse_element(spec, tok) for tok in literals])
        violation = has_ufp(seq)
        payload = {
            "elements": [format_element(e) for e in seq.elements],
            "holds": violation is None,
        }
        if violation is not None:
            payload["violation"] = {
                "h": sorted(violation.h),
                "k": sorted(violation.k),
                "product": format_element(violation.product),
            }
        _emit(args, "ufp verify", "holds" if violation is None else "violated", payload)
        return 0 if violation is None else 1
    if args.sub == "grow":
        window = _window(args, spec)
        start = parse_element(spec, args.start)
        try:
            seq = grow_ufp(start, window, args.length)
        except PoolExhaustedError as exc:
            _emit(args, "ufp grow", "pool_exhausted",
                  {"error": str(exc), "step": exc.step})
            return 1
        payload = {
            "length": len(seq),
            "sequence": [format_element(e) for e in seq.elements],
            "products": len(seq.fp_set()),
        }
        _emit(args, "ufp grow", "ok", payload)
        return 0
    raise CliError(f"unknown ufp action {args.sub!r}")


def _cmd_report(args) -> int:
    reports = []
    for path in args.inputs:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise CliError(f"{path}: not valid JSON ({exc})") from None
        for key in ("command", "timestamp", "status", "payload"):
            if key not in data:
                raise CliError(f"{path}: missing report key {key!r}")
        reports.append((path, data))
    keys = sorted({
        k
        for _, data in reports
        for k, v in data["payload"].items()
        if not isinstance(v, (dict, list))
    })
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["file", "command", "timestamp", "status", *keys])
    for path, data in reports:
        payload = data["payload"]
        writer.writerow([
            path, data["command"], data["timestamp"], data["status"],
            *[_plain(payload[k]) if k in payload else "" for k in keys],
        ])
    text = buf.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


_HANDLERS = {
    "scan": _cmd_scan,
    "abundance": _cmd_abundance,
    "largeness": _cmd_largeness,
    "hj": _cmd_hj,
    "sigma": _cmd_sigma,
    "search": _cmd_search,
    "cnf": _cmd_cnf,
    "ufp": _cmd_ufp,
    "report": _cmd_report,
}


def dispatch(argv) -> int:
    """Parse argv, run the subcommand and return the exit code (0 ok,
    1 negative outcome, 2 usage/input error)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    if args.cmd is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        if args.cmd != "report":
            _apply_config(args)
        return _HANDLERS[args.cmd](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ColoringFormatError, ZeroDivisionError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
