"""Command-line front end.

Exit codes: 0 success (or every rule passes), 1 some admissibility rule fails,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence, Tuple

from . import monomials as mono
from .fileformat import read_ideal
from .ftable import f_table, render_diagram
from .generic import GinReport, gin
from .ideals import MonomialIdeal
from .invariants import invariant_table
from .polynomials import DEFAULT_PRIME, Ring, from_monomial_ideal
from .rules import admissibility, ek_syzygies

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _run_gin(ideal, args) -> GinReport:
    if isinstance(ideal, MonomialIdeal):
        ideal = from_monomial_ideal(ideal, Ring(ideal.num_vars, args.prime or DEFAULT_PRIME))
    return gin(ideal, trials=args.trials, seed=args.seed, parallel=args.parallel)


def _monomial(ideal, args) -> MonomialIdeal:
    """Monomial input as is; polynomial input through its generic initial ideal."""
    if isinstance(ideal, MonomialIdeal):
        return ideal
    return _run_gin(ideal, args).result


def _three_vars(ideal: MonomialIdeal) -> MonomialIdeal:
    if ideal.num_vars == 3:
        return ideal
    if ideal.num_vars == 4:
        return ideal.restrict_drop_last_var()
    raise InputError(f"f-tables need an ideal in 3 or 4 variables, got {ideal.num_vars}")


def cmd_gin(ideal, args) -> Tuple[int, str]:
    report = _run_gin(ideal, args)
    return EXIT_OK, _dump(report.to_json()) if args.json else report.to_text()


def cmd_invariants(ideal, args) -> Tuple[int, str]:
    table = invariant_table(f_table(_three_vars(_monomial(ideal, args))))
    return EXIT_OK, _dump(table.to_json()) if args.json else table.to_text()


def cmd_check(ideal, args) -> Tuple[int, str]:
    report = admissibility(f_table(_three_vars(_monomial(ideal, args))), tail_rule=not args.no_tail_rule)
    out = _dump(report.to_json()) if args.json else report.to_text()
    return (EXIT_OK if report.passed else EXIT_FAIL), out


def cmd_diagram(ideal, args) -> Tuple[int, str]:
    table = f_table(_three_vars(_monomial(ideal, args)))
    if args.max_degree is not None and args.max_degree < 0:
        raise InputError("--max-degree must be non-negative")
    return EXIT_OK, render_diagram(table, args.max_degree, args.format)


def cmd_syzygies(ideal, args) -> Tuple[int, str]:
    m = _monomial(ideal, args)
    syz = ek_syzygies(m)
    degrees = sorted(s.degree for s in syz)
    if args.json:
        return EXIT_OK, _dump({
            "generators": [mono.format_monomial(g) for g in m.gens],
            "syzygies": [{"i": s.i, "j": s.j, "L": mono.format_monomial(s.L), "l": s.l,
                          "degree": s.degree} for s in syz],
            "degrees": degrees,
        })
    lines = [f"{s.degree}: {s.format(m.gens)}" for s in syz]
    lines.append("degrees: {" + ", ".join(str(d) for d in degrees) + "}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_hilbert(ideal, args) -> Tuple[int, str]:
    if args.to < 0:
        raise InputError("--to must be non-negative")
    m = _monomial(ideal, args)
    values = [m.hilbert_function(d) for d in range(args.to + 1)]
    if args.json:
        return EXIT_OK, _dump({"values": values})
    return EXIT_OK, "".join(f"{d} {v}\n" for d, v in enumerate(values))


COMMANDS = {
    "gin": cmd_gin, "invariants": cmd_invariants, "check": cmd_check,
    "diagram": cmd_diagram, "syzygies": cmd_syzygies, "hilbert": cmd_hilbert,
}


def _gin_flags(p: argparse.ArgumentParser, visible: bool):
    # polynomial input to the analysis commands goes through gin; the flags are
    # accepted there too but only advertised on `gin`
    def doc(text):
        return text if visible else argparse.SUPPRESS

    p.add_argument("--prime", type=int, default=None, help=doc(f"field size (default {DEFAULT_PRIME})"))
    p.add_argument("--trials", type=int, default=3, help=doc("random coordinate changes"))
    p.add_argument("--seed", type=int, default=0, help=doc("64-bit seed"))
    p.add_argument("--parallel", action="store_true", help=doc("run trials in worker processes"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gincurve", description="Generic initial ideals of space curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gin", help="generic initial ideal of an ideal file")
    p.add_argument("file")
    _gin_flags(p, True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("invariants", help="s_k, mu_i(k) and lambda")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    _gin_flags(p, False)

    p = sub.add_parser("check", help="admissibility rules")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-tail-rule", action="store_true", help="skip the tail rule")
    _gin_flags(p, False)

    p = sub.add_parser("diagram", help="triangle diagram of f(i, j)")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=None, help="last row drawn")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    _gin_flags(p, False)

    p = sub.add_parser("syzygies", help="first syzygies of a Borel-fixed ideal")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    _gin_flags(p, False)

    p = sub.add_parser("hilbert", help="Hilbert function values 0..D")
    p.add_argument("file")
    p.add_argument("--to", type=int, required=True, metavar="D")
    p.add_argument("--json", action="store_true")
    _gin_flags(p, False)
    return parser


def run(argv: Sequence[str]) -> Tuple[int, str, str]:
    """Run one command; returns ``(exit code, stdout text, stderr text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return (EXIT_INPUT if exc.code else EXIT_OK), "", ""
    if args.trials < 1:
        return EXIT_INPUT, "", "error: --trials must be at least 1\n"
    try:
        ideal = read_ideal(args.file, prime=args.prime)
        code, out = COMMANDS[args.command](ideal, args)
    except (InputError, ValueError, OverflowError, OSError) as exc:
        return EXIT_INPUT, "", f"error: {exc}\n"
    return code, out, ""


def main(argv: Optional[List[str]] = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
