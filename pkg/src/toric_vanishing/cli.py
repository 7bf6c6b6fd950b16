"""Command-line front end.

Input is a JSON document ``{"q": int, "phi": [[int]], "beta": [[int]]?, "Q": [[int]]}``.
When ``beta`` is missing a grading is derived from ``phi`` and echoed back.
Exit status: 0 success, 1 invalid input, 2 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Any

from . import codes, limits, points, toric, vanish
from .groebner import ideal_eq
from .intlin import IntMatrix, Lattice, lattice_colon
from .limits import BudgetExceeded
from .toric import SetupError

log = logging.getLogger("toric_vanishing")

COMMANDS = ("vanish", "lattice", "condition", "degenerate", "nullstellensatz", "points", "code")
METHODS = ("elim-general", "elim-simple", "lattice", "both")


class InputError(ValueError):
    pass


def _int_matrix(doc: dict, name: str, required: bool = True):
    if name not in doc:
        if required:
            raise InputError(f"missing field {name!r}")
        return None
    val = doc[name]
    if (
        not isinstance(val, list)
        or not val
        or not all(isinstance(row, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in row) for row in val)
    ):
        raise InputError(f"field {name!r} must be a non-empty list of integer rows")
    if len({len(row) for row in val}) != 1:
        raise InputError(f"field {name!r} has rows of different lengths")
    return IntMatrix(val)


def load_job(doc: Any) -> dict:
    """Validate the input document and build the toric setup."""
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")
    q = doc.get("q")
    if not isinstance(q, int) or isinstance(q, bool):
        raise InputError("field 'q' must be an integer prime power")
    phi = _int_matrix(doc, "phi")
    beta = _int_matrix(doc, "beta", required=False)
    Q = _int_matrix(doc, "Q", required=False)
    choice = None
    if beta is None:
        setup, choice = toric.setup_from_phi(phi, q)
    else:
        setup = toric.validate_setup(phi, beta, q)
    if Q is not None and Q.ncols != setup.r:
        raise InputError(f"field 'Q' must have r={setup.r} columns")
    return {"setup": setup, "Q": Q, "beta_choice": choice, "doc": doc}


def _need_Q(job):
    if job["Q"] is None:
        raise InputError("missing field 'Q'")
    return job["Q"]


def _echo(job) -> dict:
    setup = job["setup"]
    out = {"q": setup.q, "phi": setup.phi.tolist(), "beta": setup.beta.tolist()}
    if job["Q"] is not None:
        out["Q"] = job["Q"].tolist()
    for extra in ("alpha", "q_diag"):
        if extra in job["doc"]:
            out[extra] = job["doc"][extra]
    return out


def _result_dict(res: vanish.VanishingResult, seconds: float) -> dict:
    out = {
        "method": res.method,
        "condition_held": res.condition_held,
        "lattice_basis": res.lattice_used.tolist() if res.lattice_used is not None else None,
        "generators": res.generator_strings(),
        "gb_grevlex": res.gb().strings(),
        "timings": {"seconds": round(seconds, 6)},
    }
    if res.elimination_gb is not None:
        out["gb_lex"] = res.elimination_gb.strings()
    return out


def cmd_vanish(job, method: str) -> dict:
    setup = job["setup"]
    Q = _need_Q(job)
    runs = []
    if method in ("elim-general", "both"):
        runs.append(("general", True))
    if method == "elim-simple" or (method == "both" and setup.beta_nonnegative):
        runs.append(("simple", False))
    results = []
    for _, general in runs:
        t0 = time.perf_counter()
        res = vanish.vanishing_via_elimination(Q, setup, general=general)
        results.append((res, time.perf_counter() - t0))
    if method in ("lattice", "both"):
        t0 = time.perf_counter()
        res = vanish.vanishing_via_lattice(Q, setup)
        results.append((res, time.perf_counter() - t0))
    agree = all(ideal_eq(results[0][0].ideal, r.ideal) for r, _ in results[1:])
    return {
        "command": "vanish",
        "results": [_result_dict(r, t) for r, t in results],
        "agree": agree,
    }


def cmd_condition(job) -> dict:
    setup = job["setup"]
    Q = _need_Q(job)
    LL = vanish.script_L(Q, setup)
    colon = lattice_colon(LL, setup.q - 1)
    return {
        "command": "condition",
        "condition_held": LL == colon,
        "script_L": LL.tolist(),
        "script_L_colon": colon.tolist(),
        "lattice_basis": vanish.lattice_L_thm(Q, setup).tolist(),
    }


def cmd_lattice(job) -> dict:
    setup = job["setup"]
    Q = _need_Q(job)
    L1 = vanish.lattice_L1(Q, setup)
    Lt = vanish.lattice_L_thm(Q, setup)
    return {
        "command": "lattice",
        "lattice_basis": L1.tolist(),
        "closed_form_basis": Lt.tolist(),
        "condition_held": vanish.condition_holds(Q, setup),
        "closed_form_equal": L1 == Lt,
    }


def _diag(job) -> list[int]:
    setup = job["setup"]
    if "q_diag" in job["doc"]:
        qd = job["doc"]["q_diag"]
        if not isinstance(qd, list) or not all(isinstance(v, int) for v in qd) or len(qd) != setup.r:
            raise InputError(f"field 'q_diag' must list r={setup.r} integers")
        return qd
    Q = _need_Q(job)
    if Q.nrows != Q.ncols or any(Q[i, j] for i in range(Q.nrows) for j in range(Q.ncols) if i != j):
        raise InputError("field 'Q' must be diagonal for the degenerate command")
    return [Q[i, i] for i in range(Q.nrows)]


def cmd_degenerate(job) -> dict:
    setup = job["setup"]
    qd = _diag(job)
    L = vanish.degenerate_lattice(qd, setup)
    return {
        "command": "degenerate",
        "q_diag": qd,
        "D": vanish.degenerate_orders(qd, setup),
        "lattice_basis": L.tolist(),
        "generators": vanish.presentation_strings(vanish.lattice_ideal(L, setup)),
    }


def cmd_nullstellensatz(job) -> dict:
    setup = job["setup"]
    rep = vanish.nullstellensatz_check(_need_Q(job), setup)
    return {"command": "nullstellensatz", **rep.as_dict()}


def cmd_points(job) -> dict:
    setup = job["setup"]
    G = points.group_G(setup)
    T = points.enumerate_torus(setup)
    out = {"command": "points", "|G|": len(G), "|T_X|": len(T)}
    if job["Q"] is not None:
        Y = points.enumerate_YQ(job["Q"], setup)
        out["|Y_Q|"] = len(Y)
        out["Y_Q"] = Y.tolist()
    return out


def cmd_code(job, alphas: list[tuple[int, ...]]) -> dict:
    setup = job["setup"]
    Q = _need_Q(job)
    if not alphas:
        a = job["doc"].get("alpha")
        if a is None:
            raise InputError("missing field 'alpha' (or pass --alpha)")
        alphas = [tuple(x) for x in a] if a and isinstance(a[0], list) else [tuple(a)]
    for a in alphas:
        if len(a) != setup.d:
            raise InputError(f"alpha must have d={setup.d} entries")
    built = [codes.build_code(Q, a, setup) for a in alphas]
    S = vanish.cox_ring(setup)
    return {
        "command": "code",
        "csv": codes.codes_csv(built, S),
        "codes": [
            {"alpha": list(c.alpha), "n": c.n, "k": c.k, "d": c.d, "basis": c.basis_strings(S)}
            for c in built
        ],
    }


def _fmt_lattice(rows) -> str:
    return ", ".join("(" + ",".join(map(str, r)) + ")" for r in rows) or "0"


def render_text(report: dict, beta_note: str | None) -> str:
    lines = []
    if beta_note:
        lines.append(beta_note)
    cmd = report["command"]
    if cmd == "vanish":
        for r in report["results"]:
            lines.append(f"{r['method']}: " + ", ".join(r["generators"]))
            if r["lattice_basis"] is not None:
                lines.append(f"  lattice: {_fmt_lattice(r['lattice_basis'])}")
        lines.append("methods agree: " + ("yes" if report["agree"] else "no"))
    elif cmd == "condition":
        lines.append("yes" if report["condition_held"] else "no")
        lines.append(f"LL = {_fmt_lattice(report['script_L'])}")
        lines.append(f"LL:(q-1) = {_fmt_lattice(report['script_L_colon'])}")
        lines.append(f"L = {_fmt_lattice(report['lattice_basis'])}")
    elif cmd == "lattice":
        lines.append(f"L = {_fmt_lattice(report['lattice_basis'])}")
        lines.append(f"(L_Q ∩ L_beta) + (q-1)L_beta = {_fmt_lattice(report['closed_form_basis'])}")
        lines.append("condition: " + ("yes" if report["condition_held"] else "no"))
    elif cmd == "degenerate":
        lines.append(f"D = diag({', '.join(map(str, report['D']))})")
        lines.append(f"L = {_fmt_lattice(report['lattice_basis'])}")
        lines.append("I_L = " + ", ".join(report["generators"]))
    elif cmd == "nullstellensatz":
        for k, v in report.items():
            if k in ("command", "input", "beta_derived", "beta_normalized"):
                continue
            if k == "lattice_basis":
                v = _fmt_lattice(v)
            lines.append(f"{k}: {v}")
    elif cmd == "points":
        lines.append(f"|G| = {report['|G|']}")
        lines.append(f"|T_X| = {report['|T_X|']}")
        if "Y_Q" in report:
            lines.append(f"|Y_Q| = {report['|Y_Q|']}")
            for h in report["Y_Q"]:
                lines.append("  " + " ".join(map(str, h)))
    elif cmd == "code":
        lines.append(report["csv"].rstrip("\n"))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="JSON input file")
    src.add_argument("--inline", metavar="JSON", help="JSON input given directly")
    common.add_argument("--json", action="store_true", help="emit the structured JSON report")
    common.add_argument("--max-reductions", type=int, default=limits.DEFAULT_MAX_REDUCTIONS)
    common.add_argument("--max-enum", type=int, default=limits.DEFAULT_MAX_ENUM)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="toric-vanish",
        description="Vanishing ideals of parameterized subgroups of toric varieties over finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("vanish", parents=[common], help="generators of I(Y_Q)")
    p.add_argument("--method", choices=METHODS, default="both")
    sub.add_parser("lattice", parents=[common], help="lattice L with I(Y_Q) = I_L")
    sub.add_parser("condition", parents=[common], help="check LL = LL:(q-1)")
    sub.add_parser("degenerate", parents=[common], help="lattice of a diagonal Q")
    sub.add_parser("nullstellensatz", parents=[common], help="finite Nullstellensatz report")
    sub.add_parser("points", parents=[common], help="enumerate G, T_X and Y_Q")
    p = sub.add_parser("code", parents=[common], help="evaluation code parameters")
    p.add_argument("--alpha", action="append", default=[], help="degree, e.g. 1,0 (repeatable)")
    return parser


def _read_input(args) -> Any:
    try:
        if args.input is not None:
            with open(args.input) as fh:
                return json.load(fh)
        return json.loads(args.inline)
    except OSError as e:
        raise InputError(f"cannot read input: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON: {e}") from e


def run(args) -> tuple[int, dict | None]:
    """Execute a parsed job; returns (exit status, report)."""
    try:
        if args.max_reductions <= 0 or args.max_enum <= 0:
            raise InputError("budgets must be positive")
        with limits.budget(max_reductions=args.max_reductions, max_enum=args.max_enum):
            job = load_job(_read_input(args))
            if args.command == "vanish":
                report = cmd_vanish(job, args.method)
            elif args.command == "code":
                try:
                    alphas = [tuple(int(x) for x in a.split(",")) for a in args.alpha]
                except ValueError as e:
                    raise InputError(f"bad --alpha value: {e}") from e
                report = cmd_code(job, alphas)
            else:
                report = globals()[f"cmd_{args.command}"](job)
    except BudgetExceeded as e:
        return 2, {"error": "budget", "message": str(e)}
    except (InputError, SetupError, ValueError) as e:
        problems = getattr(e, "problems", None)
        return 1, {"error": "validation", "message": str(e), "problems": problems}
    report["input"] = _echo(job)
    if job["beta_choice"] is not None:
        report["beta_derived"] = True
        report["beta_normalized"] = job["beta_choice"].normalized
    return 0, report


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    status, report = run(args)
    if status:
        if args.json:
            print(json.dumps(report))
        else:
            print(f"error: {report['message']}", file=sys.stderr)
        return status
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        note = None
        if report.get("beta_derived"):
            note = "beta (derived): " + json.dumps(report["input"]["beta"])
            if not report["beta_normalized"]:
                note += "  [warning: has negative entries]"
        print(render_text(report, note))
    return 0


if __name__ == "__main__":
    sys.exit(main())
