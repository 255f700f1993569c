"""``polyproj`` command-line tool.

Exit codes: 0 solved or verified, 2 infeasible, 3 no solution (lineality of
the upper image meets the ordering cone), 4 input error, 5 verification failure.
"""
import argparse
import json
import sys

from .benson import solve_molp
from .errors import InfeasibleError, InputError, NoSolutionError, VerificationError
from .io import instance_kind, parse_instance, parse_solution, write_mesh, write_solution
from .polyhedra import v_to_h
from .problems import UpperImage
from .reductions import INFEASIBLE, NO_SOLUTION, ROUTES, SOLVED, VLPOutcome, solve_pp, solve_vlp
from .verify import verify_outcome

EXIT = {SOLVED: 0, INFEASIBLE: 2, NO_SOLUTION: 3}
EXIT_INPUT, EXIT_VERIFY = 4, 5


def _read(path) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")


def _emit(data: bytes, path):
    if path:
        with open(path, "wb") as f:
            f.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _load(path, *kinds):
    inst = parse_instance(_read(path))
    if instance_kind(inst) not in kinds:
        raise InputError(f"{path}: expected a {' or '.join(kinds)} instance, "
                         f"got {instance_kind(inst)}")
    return inst


def cmd_solve_pp(args):
    pp = _load(args.file, "pp")
    try:
        pair, Y = solve_pp(pp, args.engine)
    except InfeasibleError as e:
        return VLPOutcome(INFEASIBLE, diagnostics=str(e), certificate=e.farkas)
    return VLPOutcome(SOLVED, pair, UpperImage(Y, v_to_h(Y)), f"projection solved with engine {args.engine}")


def cmd_solve_vlp(args):
    return solve_vlp(_load(args.file, "vlp", "molp"), args.route)


def cmd_solve_molp(args):
    m = _load(args.file, "molp")
    try:
        sol = solve_molp(m)
    except InfeasibleError as e:
        return VLPOutcome(INFEASIBLE, diagnostics=str(e), certificate=e.farkas)
    except NoSolutionError as e:
        return VLPOutcome(NO_SOLUTION, diagnostics=str(e), certificate=e.certificate)
    return VLPOutcome(SOLVED, sol.pair, sol.upper_image, "outer approximation converged")


def _solve(func):
    def run(args):
        outcome = func(args)
        _emit(write_solution(outcome, args.format), args.output)
        return EXIT[outcome.status]
    return run


def cmd_verify(args):
    problem = parse_instance(_read(args.problem))
    outcome = parse_solution(_read(args.solution))
    report = verify_outcome(problem, outcome)
    if args.format == "json":
        data = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    else:
        lines = [("pass " if c.passed else "FAIL ") + c.name for c in report.checks]
        lines.append("verified" if report.ok else "verification failed: " + report.first_failure())
        data = "\n".join(lines) + "\n"
    _emit(data.encode(), args.output)
    return 0 if report.ok else EXIT_VERIFY


def cmd_mesh(args):
    outcome = parse_solution(_read(args.solution))
    if outcome.upper_image is None:
        raise InputError("solution file has no upper image")
    _emit(write_mesh(outcome.upper_image.vrep), args.output)
    return 0


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; argparse's default status 2 means "infeasible" here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser():
    ap = _Parser(prog="polyproj", description="Exact polyhedral projection "
                                 "and vector linear programming.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("-o", "--output", help="write to PATH instead of stdout")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("solve-pp", help="solve a projection problem")
    p.add_argument("file")
    p.add_argument("--engine", choices=("molp", "fm"), default="molp")
    common(p)
    p.set_defaults(func=_solve(cmd_solve_pp))

    p = sub.add_parser("solve-vlp", help="solve a vector linear program")
    p.add_argument("file")
    p.add_argument("--route", choices=ROUTES, default="pp")
    common(p)
    p.set_defaults(func=_solve(cmd_solve_vlp))

    p = sub.add_parser("solve-molp", help="solve a multiple objective linear program")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_solve(cmd_solve_molp))

    p = sub.add_parser("verify", help="check a solution file against a problem file")
    p.add_argument("problem")
    p.add_argument("solution")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mesh", help="export a bounded 3D upper image as OFF")
    p.add_argument("solution")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_mesh)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"polyproj: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationError as e:
        print(f"polyproj: verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
