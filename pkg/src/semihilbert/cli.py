"""Command-line front end.

Subcommands cover classification, certified radius and range boundary
computation, the reduced adjoint, the equivalence-verification
campaigns, and deterministic test-instance generation.  Exit codes are
scriptable: 0 success / member / equivalent, 2 file or dimension
problems, 3 membership failures (including rank-0 weights), 4 a
separated pair with witness evidence, 5 an inconclusive campaign.
"""

import argparse
import csv
import io
import sys

from .adjoint import sharp
from .errors import (DimensionMismatch, MatrixFileError, NotHermitian,
                     NotPositive, NotProportional, NotSemiHilbertian,
                     NotSquare, SemiHilbertError, ZeroRank)
from .linalg import max_abs
from .matrixio import read_matrix, write_matrix
from .numrange import a_radius, a_range_boundary
from .space import DEFAULT_TOL, new_context
from .verifier import (CampaignConfig, generate_instance,
                       identity_comparison_check,
                       product_equivalence_check, range_equality_check,
                       rankone_equivalence_check,
                       right_multiplication_check)

EXIT_OK = 0
EXIT_FILE = 2
EXIT_MEMBERSHIP = 3
EXIT_SEPARATED = 4
EXIT_INCONCLUSIVE = 5

_VERDICT_EXIT = {
    "equivalent": EXIT_OK,
    "separated": EXIT_SEPARATED,
    "inconclusive": EXIT_INCONCLUSIVE,
}


def _fmt_float(x) -> str:
    return repr(float(x))


def _fmt_complex(z) -> str:
    return repr(complex(z))


def _fmt_vector(v) -> str:
    parts = ", ".join(f"[{_fmt_float(z.real)}, {_fmt_float(z.imag)}]" for z in v)
    return f"[{parts}]"


def _load_context(a_path, tol: float):
    return new_context(read_matrix(a_path), tol)


def _load_operator(ctx, path):
    t = read_matrix(path)
    if t.shape != (ctx.dim, ctx.dim):
        raise DimensionMismatch(
            f"operator shape {t.shape} does not match weight dimension {ctx.dim}"
        )
    return t


def cmd_classify(args) -> int:
    ctx = _load_context(args.a_file, args.tol)
    t = _load_operator(ctx, args.t_file)
    verdict = ctx.classify(t)
    print(f"member: {'true' if verdict.in_semihilbert else 'false'}")
    print(f"violation_norm: {_fmt_float(verdict.violation_norm)}")
    return EXIT_OK if verdict.in_semihilbert else EXIT_MEMBERSHIP


def cmd_radius(args) -> int:
    ctx = _load_context(args.a_file, DEFAULT_TOL)
    t = _load_operator(ctx, args.t_file)
    est = a_radius(ctx, t, grid=args.grid, gap=args.gap)
    print(f"lower: {_fmt_float(est.lower)}")
    print(f"upper: {_fmt_float(est.upper)}")
    print(f"midpoint: {_fmt_float(est.midpoint)}")
    print(f"witness_angle: {_fmt_float(est.witness_angle)}")
    print(f"witness_vector: {_fmt_vector(est.witness_vector)}")
    if est.degenerate:
        print("degenerate: true (A = 0, empty numerical range)")
    return EXIT_OK


def cmd_range(args) -> int:
    ctx = _load_context(args.a_file, DEFAULT_TOL)
    t = _load_operator(ctx, args.t_file)
    boundary = a_range_boundary(ctx, t, args.points)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["theta", "re", "im"])
    for theta, point in zip(boundary.angles, boundary.points):
        writer.writerow([_fmt_float(theta), _fmt_float(point.real),
                         _fmt_float(point.imag)])
    text = buf.getvalue()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise MatrixFileError(f"cannot write {args.out}: {exc}") from exc
        print(f"wrote {len(boundary.points)} boundary points to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_adjoint(args) -> int:
    ctx = _load_context(args.a_file, DEFAULT_TOL)
    t = _load_operator(ctx, args.t_file)
    x = sharp(ctx, t)
    write_matrix(args.out, x)
    residual = max_abs(ctx.A @ x - t.conj().T @ ctx.A)
    print(f"wrote adjoint to {args.out}")
    print(f"residual: {_fmt_float(residual)}")
    return EXIT_OK


_MODE_CHECKS = {
    "product": product_equivalence_check,
    "rankone": rankone_equivalence_check,
    "range": range_equality_check,
    "right": right_multiplication_check,
}


def _verify_verdict(ctx, t, s, cfg, mode):
    if mode == "identity":
        return identity_comparison_check(ctx, t, cfg)
    return _MODE_CHECKS[mode](ctx, t, s, cfg)


def cmd_verify(args) -> int:
    ctx = _load_context(args.a_file, DEFAULT_TOL)
    t = _load_operator(ctx, args.t_file)
    s = _load_operator(ctx, args.s_file)
    cfg = CampaignConfig(dimension=ctx.dim, trials=args.trials, seed=args.seed,
                         tol=args.tol, ensemble="fixed", fixed_matrix=ctx.A)
    verdict = _verify_verdict(ctx, t, s, cfg, args.mode)
    print(f"mode: {args.mode}")
    print(f"dimension: {ctx.dim}")
    print(f"rank: {ctx.rank}")
    print(f"trials: {cfg.trials}")
    print(f"seed: {cfg.seed}")
    print(f"tol: {_fmt_float(cfg.tol)}")
    print(f"proportional: {'true' if verdict.proportional else 'false'}")
    print(f"lambda: {_fmt_complex(verdict.lam) if verdict.lam is not None else 'none'}")
    print(f"lambda_modulus_error: {_fmt_float(verdict.lambda_modulus_error)}")
    print(f"residual: {_fmt_float(verdict.residual)}")
    print(f"compression_gap: {_fmt_float(verdict.compression_gap)}")
    print(f"max_radius_gap: {_fmt_float(verdict.max_radius_gap)}")
    print(f"hull_distance: {_fmt_float(verdict.hull_distance)}")
    if verdict.hull_evidence is not None:
        print(f"hull_evidence: {_fmt_complex(verdict.hull_evidence)}")
    if verdict.witness is not None:
        print(f"witness_x: {_fmt_vector(verdict.witness.x)}")
        print(f"witness_y: {_fmt_vector(verdict.witness.y)}")
    else:
        print("witness: none")
    outcome = verdict.outcome()
    print(f"verdict: {outcome}")
    return _VERDICT_EXIT[outcome]


def cmd_gen(args) -> int:
    cfg = CampaignConfig(dimension=args.dim, trials=1, seed=args.seed,
                         ensemble=args.ensemble)
    ctx, s, t, phase = generate_instance(cfg)
    paths = {}
    for name, matrix in (("A", ctx.A), ("S", s), ("T", t)):
        path = f"{args.out_prefix}_{name}.json"
        write_matrix(path, matrix)
        paths[name] = path
    for name in ("A", "S", "T"):
        print(f"{name}: {paths[name]}")
    print(f"phase: {_fmt_float(phase)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semihilbert",
        description="Operator calculus in the seminormed space of a "
                    "positive semidefinite weight matrix.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="membership of T in the "
                       "semi-Hilbertian class of A")
    p.add_argument("a_file")
    p.add_argument("t_file")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("radius", help="certified weighted numerical radius")
    p.add_argument("a_file")
    p.add_argument("t_file")
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--gap", type=float, default=None)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("range", help="boundary points of the weighted "
                       "numerical range (CSV: theta,re,im)")
    p.add_argument("a_file")
    p.add_argument("t_file")
    p.add_argument("--points", type=int, default=64)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_range)

    p = sub.add_parser("adjoint", help="reduced weighted adjoint of T")
    p.add_argument("a_file")
    p.add_argument("t_file")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("verify", help="equivalence-verification campaign")
    p.add_argument("a_file")
    p.add_argument("t_file")
    p.add_argument("s_file", help="ignored by --mode identity")
    p.add_argument("--mode", required=True,
                   choices=["product", "rankone", "range", "right", "identity"])
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a deterministic (A, S, T) "
                       "instance with T equivalent to S")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--ensemble", default="invertible",
                   choices=["invertible", "rank_deficient"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MatrixFileError, DimensionMismatch, NotSquare, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FILE
    except (NotSemiHilbertian, ZeroRank) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, NotSemiHilbertian):
            print("note: outside the semi-Hilbertian class the weighted "
                  "numerical radius can be unbounded.", file=sys.stderr)
        return EXIT_MEMBERSHIP
    except (NotHermitian, NotPositive) as exc:
        print(f"error: weight matrix rejected: {exc}", file=sys.stderr)
        return EXIT_FILE
    except (NotProportional, SemiHilbertError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
