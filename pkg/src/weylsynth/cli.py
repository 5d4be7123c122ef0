"""Command-line interface: ``weylsynth canon|synth|mirror|verify|reach|sweep``.

Documents go to stdout and diagnostics to stderr.  Exit codes:

    0  success
    2  unparseable input or bad argument
    3  non-unitary input matrix
    4  residual above tolerance (or sweep failures)
    5  target outside the reachable region, infeasible, or unsupported base
    6  circuit index out of range

``WEYL_TOL`` in the environment overrides the default tolerance of 1e-8.
"""

import argparse
import os
import sys

import numpy as np

from . import __version__
from .canonical import kak, local_invariant, mirror_coords, mirror_of, weyl_coordinates
from .documents import (
    DocumentError,
    circuit_from_doc,
    circuit_to_doc,
    dumps,
    format_angle,
    load_json,
    matrix_from_doc,
    parse_base,
    parse_triple,
)
from .errors import (
    DomainError,
    IndexOutOfRangeError,
    InfeasibleError,
    MalformedCircuitError,
    NonUnitaryInputError,
    OutOfRegionError,
    UnsupportedBaseError,
)
from .matcore import canonical_gate
from .synth.circuit import CONTROLLED, SUPERCONTROLLED, evaluate
from .synth.controlled import controlled_for_class, universal_budget
from .synth.mirror import mirror_rewrite
from .synth.region import reachable_region
from .synth.supercontrolled import synth_supercontrolled2, synth_supercontrolled3
from .synth.universal import synth_universal
from .verify import EXACT_PHASE, LOCAL_EQUIV, check_circuit, run_suite

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NONUNITARY = 3
EXIT_RESIDUAL = 4
EXIT_REGION = 5
EXIT_INDEX = 6

DEFAULT_TOL = 1e-8


def default_tol():
    raw = os.environ.get("WEYL_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise DocumentError(f"WEYL_TOL must be a number, got {raw!r}") from None
    if not tol > 0:
        raise DocumentError(f"WEYL_TOL must be positive, got {raw!r}")
    return tol


def _err(*parts):
    print(*parts, file=sys.stderr)


def _fmt_coords(c):
    c = [0.0 if abs(x) < 1e-12 else x for x in c]
    return "(" + ", ".join(format_angle(x) for x in c) + ")"


def _coords_line(c):
    c = [0.0 if abs(x) < 1e-12 else x for x in c]
    quarters = ", ".join(f"{x / (np.pi / 4):.12g}" for x in c)
    plain = ", ".join(f"{x:.12g}" for x in c)
    return f"coords: ({plain}) = ({quarters})·π/4"


def _fmt_matrix(m, indent="    "):
    rows = []
    for row in np.asarray(m):
        rows.append(indent + "  ".join(f"{z.real:+.6f}{z.imag:+.6f}j" for z in row))
    return "\n".join(rows)


def _load_matrix(path, tol, allow_nonunitary=False):
    return matrix_from_doc(load_json(path), 4, tol, allow_nonunitary)


# --- subcommands ---------------------------------------------------------------------

def cmd_canon(args):
    tol = args.tol if args.tol is not None else default_tol()
    u = _load_matrix(args.input, tol, args.allow_nonunitary)
    k = kak(u)
    inv = local_invariant(u)
    print(_coords_line(k.coords))
    print(f"class: U_d{_fmt_coords(k.coords)}")
    print(f"phase: {k.phase:.17g}")
    for name, m in (("pre A", k.pre.a), ("pre B", k.pre.b), ("post A", k.post.a), ("post B", k.post.b)):
        print(f"{name}:")
        print(_fmt_matrix(m))
    print("invariant phases: (" + ", ".join(f"{p:.12g}" for p in inv.phases) + ")")
    print(f"reconstruction residual: {k.reconstruction_error(u):.3e}")
    return EXIT_OK


def _synth_target(args, tol):
    if (args.target is None) == (args.coords is None):
        raise DocumentError("give exactly one of --target or --coords")
    if args.target is not None:
        return _load_matrix(args.target, tol)
    return canonical_gate(*parse_triple(args.coords))


def _synth_with_budget(target, base, n):
    """Circuit with exactly ``n`` applications, or raise OutOfRegionError."""
    k = kak(target)
    if base.kind == CONTROLLED:
        inner, path = controlled_for_class(k.coords, base.param, n)
    elif base.kind == SUPERCONTROLLED:
        if n == 3:
            inner, path = synth_supercontrolled3(*k.coords, base.param), "super-controlled-3"
        elif n == 2:
            if abs(k.coords.c3) > 1e-9:
                raise OutOfRegionError("two super controlled applications need h3 = 0", ["h3 = 0"])
            inner, path = synth_supercontrolled2(k.coords.c1, k.coords.c2, base.param), "super-controlled-2"
        else:
            raise DomainError(f"super controlled constructions use 2 or 3 applications, not {n}")
    else:
        raise UnsupportedBaseError(f"--n is supported for controlled and super controlled bases, not {base!r}")
    return inner.with_outer(k.post, k.pre, k.phase), path


def cmd_synth(args):
    tol = default_tol()
    target = _synth_target(args, tol)
    base = parse_base(args.base)
    if args.n is None:
        circuit = synth_universal(target, base)
        path = "universal"
        if base.kind == CONTROLLED:
            path += f" (budget {universal_budget(base.param)})"
    else:
        circuit, path = _synth_with_budget(target, base, args.n)
    res = check_circuit(circuit, target, EXACT_PHASE, tol)
    meta = {"path": path, "residual": res.max_residual,
            "target_coords": list(weyl_coordinates(target))}
    print(dumps(circuit_to_doc(circuit, meta)))
    _err(f"path: {path}; applications: {circuit.n}; residual: {res.max_residual:.3e}")
    return EXIT_OK if res.passed else EXIT_RESIDUAL


def cmd_mirror(args):
    tol = default_tol()
    if (args.gate is None) == (args.circuit is None):
        raise DocumentError("give exactly one of --gate or --circuit")
    if args.gate is not None:
        u = _load_matrix(args.gate, tol)
        c = weyl_coordinates(mirror_of(u))
        print(f"mirror class: {_fmt_coords(c)}")
        print(_coords_line(c))
        return EXIT_OK
    if args.index is None:
        raise DocumentError("--circuit needs --index")
    circuit = circuit_from_doc(load_json(args.circuit), tol)
    before = weyl_coordinates(evaluate(circuit))
    rewritten = mirror_rewrite(circuit, args.index)
    after = weyl_coordinates(evaluate(rewritten))
    meta = {"before_coords": list(before), "after_coords": list(after),
            "expected_coords": list(mirror_coords(before))}
    print(dumps(circuit_to_doc(rewritten, meta)))
    _err(f"before: {_fmt_coords(before)}  after: {_fmt_coords(after)}")
    return EXIT_OK


def cmd_verify(args):
    tol = args.tol if args.tol is not None else default_tol()
    circuit = circuit_from_doc(load_json(args.circuit), tol)
    target = _load_matrix(args.target, tol)
    mode = {"exact": EXACT_PHASE, "local": LOCAL_EQUIV}[args.mode]
    report = check_circuit(circuit, target, mode, tol)
    print(f"residual: {report.max_residual:.3e} ({mode}, tol {tol:.1e})")
    print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_RESIDUAL


def _constraint_text(con, gamma, n):
    bound = format_angle(con.bound)
    if "nγ" in con.label:
        return f"{con.label}  [nγ = {n}·{format_angle(gamma)} = {bound}]"
    return con.label


def cmd_reach(args):
    base = parse_base(args.base)
    region = reachable_region(base, args.n)
    gamma = region.gammas[0]
    print(f"region for {args.n} applications of {base.describe()} "
          f"(sufficiency: {region.sufficiency})")
    seen = set()
    for con in region.constraints:
        if con.label not in seen:
            seen.add(con.label)
            print("  " + _constraint_text(con, gamma, args.n))
    if args.point is not None:
        h = parse_triple(args.point)
        inside = region.contains(h)
        print(f"point h={_fmt_coords(h)}: {'INSIDE' if inside else 'OUTSIDE'}")
        print(f"binding: {region.binding(h)}")
        if inside and region.sufficiency != "full":
            print(f"constructive: {'yes' if region.constructive(h) else 'not covered'}")
    return EXIT_OK


def cmd_sweep(args):
    report = run_suite(args.suite, args.trials, args.seed)
    text = report.to_json(indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    _err(str(report).splitlines()[0])
    return EXIT_OK if report.passed else EXIT_RESIDUAL


# --- wiring ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="weylsynth", description="Two-qubit gate analysis and synthesis.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="canonical coordinates and local factors of a gate")
    p.add_argument("input", help="4x4 matrix document")
    p.add_argument("--tol", type=float, default=None, help="unitarity tolerance")
    p.add_argument("--allow-nonunitary", action="store_true",
                   help="accept a non-unitary matrix and use its nearest unitary")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("synth", help="synthesize a circuit over a base gate")
    p.add_argument("--target", help="4x4 matrix document")
    p.add_argument("--coords", help="canonical coordinates c1,c2,c3 (decimals or pi fractions)")
    p.add_argument("--base", required=True, help="controlled:γ | supercontrolled:α2 | mirror_controlled:γ")
    p.add_argument("--n", type=int, default=None, help="number of base-gate applications")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("mirror", help="mirror class of a gate, or mirror-rewrite a circuit")
    p.add_argument("--gate", help="4x4 matrix document")
    p.add_argument("--circuit", help="circuit document")
    p.add_argument("--index", type=int, help="application to replace")
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser("verify", help="compare a circuit with a target gate")
    p.add_argument("--circuit", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--mode", choices=("exact", "local"), default="exact")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reach", help="reachable region of a controlled gate")
    p.add_argument("--base", required=True, help="controlled:γ")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--point", help="doubled coordinates h1,h2,h3")
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("sweep", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=("necessity", "roundtrip", "crossmethod"))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="report file (default: stdout)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonUnitaryInputError as exc:
        _err(f"error: {exc}")
        return EXIT_NONUNITARY
    except (OutOfRegionError, InfeasibleError, UnsupportedBaseError) as exc:
        _err(f"error: {exc}")
        return EXIT_REGION
    except IndexOutOfRangeError as exc:
        _err(f"error: {exc}")
        return EXIT_INDEX
    except (DocumentError, DomainError, MalformedCircuitError) as exc:
        _err(f"error: {exc}")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
