"""Command-line interface.

Subcommands:

* ``simulate``  pooled-spectrum histogram CSV for an ensemble or a
                depth-d construction
* ``moments``   Monte Carlo moment estimates with standard errors
* ``exact``     exact limiting moments (rationals) and the mixed-class
                contribution table
* ``bounds``    inequality checks: exact bound suite, Hölder sweep,
                sandwich bound, integer counterexample, conjecture scan
* ``gaps``      eigenvalue spacing CSV
* ``kron``      Kronecker product spectrum and moment factorization

Every command is a pure function of (flags, seed): rerunning with the
same seed reproduces output files byte for byte.  The default seed can
be overridden by the DISCO_RMT_SEED environment variable or the --seed
flag.  Wall time goes to stderr, never into output files, to keep them
reproducible.  Exit status is 0 iff all theorem-backed checks pass; the
conjectural comparisons only report.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import __version__, bounds, limit_moments, pairings, spectra
from .disco import DiscoPlan, kronecker
from .ensembles import EnsembleKind, EnsembleSpec, EntryDistribution, draw

DEFAULT_SEED = 12345


@dataclass
class CommandResult:
    exit_code: int = 0
    lines: list[str] = field(default_factory=list)
    files: dict[str, str] = field(default_factory=dict)

    def say(self, text: str = "") -> None:
        self.lines.append(text)


def _fmt_fraction(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _pretty_fraction(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator} = {float(f)!r}"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _parse_orders(text: str) -> tuple[int, ...]:
    try:
        orders = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad order list {text!r}") from exc
    if not orders or any(m < 0 for m in orders):
        raise ValueError("orders must be nonnegative integers")
    return orders


def _parse_dist(name: str) -> EntryDistribution:
    table = {
        "normal": EntryDistribution.STANDARD_NORMAL,
        "rademacher": EntryDistribution.RADEMACHER,
    }
    if name not in table:
        raise ValueError(f"unknown entry distribution {name!r}")
    return table[name]


def _parse_ensemble_token(token: str, dim: int, dist: EntryDistribution) -> EnsembleSpec:
    """'pst', 'rs', or 'bc:<period>'."""
    if token == "pst":
        return EnsembleSpec(EnsembleKind.PST, dim, dist)
    if token == "rs":
        return EnsembleSpec(EnsembleKind.RS, dim, dist)
    if token.startswith("bc:"):
        try:
            period = int(token.split(":", 1)[1])
        except ValueError as exc:
            raise ValueError(f"bad block-circulant period in {token!r}") from exc
        return EnsembleSpec(EnsembleKind.BLOCK_CIRCULANT, dim, dist, period=period)
    raise ValueError(f"unknown ensemble {token!r} (use pst, rs, or bc:<period>)")


def _target_from_args(args) -> EnsembleSpec | DiscoPlan:
    dist = _parse_dist(args.dist)
    if args.disco is not None:
        tokens = args.disco.split(",")
        if len(tokens) != 2:
            raise ValueError("--disco takes 'a_kind,b_kind'")
        a_tok, b_tok = tokens
        depth = args.depth
        a_spec = _parse_ensemble_token(a_tok, args.dim, dist)
        b_specs = tuple(
            _parse_ensemble_token(b_tok, 2 ** (i - 1) * args.dim, dist)
            for i in range(1, depth + 1)
        )
        return DiscoPlan(depth=depth, a_spec=a_spec, b_specs=b_specs)
    if args.ensemble is not None:
        return _parse_ensemble_token(args.ensemble, args.dim, dist)
    raise ValueError("pick a target with --ensemble or --disco")


def _describe_target(target) -> str:
    if isinstance(target, EnsembleSpec):
        extra = f" period={target.period}" if target.period else ""
        return f"{target.kind.value} dim={target.dim}{extra}"
    return (
        f"depth-{target.depth} disco of {target.a_spec.kind.value} "
        f"base_dim={target.base_dim} (full dim {target.dim})"
    )


def cmd_simulate(args) -> CommandResult:
    res = CommandResult()
    target = _target_from_args(args)
    samples = [
        spectra.eigenvalues(spectra.draw_target(target, args.seed, t))
        for t in range(args.trials)
    ]
    hist = spectra.histogram(
        samples,
        bins=args.bins if args.bin_width is None else "auto",
        bin_width=args.bin_width,
    )
    pooled = spectra.pooled_normalized(samples)
    inside = float(np.mean(np.abs(pooled) <= 2.1))
    res.say(f"simulate: {_describe_target(target)}, trials={args.trials}")
    res.say(
        f"pooled eigenvalues: {pooled.size}, bins: {len(hist.counts)}, "
        f"range [{pooled.min().item()!r}, {pooled.max().item()!r}]"
    )
    res.say(f"mass within [-2.1, 2.1]: {inside!r}")
    rows = [
        (lo_hi[0].item(), lo_hi[1].item(), int(c), g.item(), s.item())
        for lo_hi, c, g, s in zip(
            zip(hist.edges[:-1], hist.edges[1:]),
            hist.counts,
            hist.gauss_pdf,
            hist.semicircle_pdf,
        )
    ]
    if args.output:
        res.files[args.output] = _csv_text(
            ("bin_lo", "bin_hi", "count", "gauss_pdf", "semicircle_pdf"), rows
        )
    return res


def cmd_moments(args) -> CommandResult:
    res = CommandResult()
    target = _target_from_args(args)
    orders = _parse_orders(args.orders)
    report = spectra.monte_carlo_moments(
        target, orders, args.trials, args.seed, threads=args.threads
    )
    res.say(f"moments: {_describe_target(target)}, trials={report.trials}")
    for m, v, s in zip(report.orders, report.values, report.stderrs):
        res.say(f"  M_{m} = {v!r} (stderr {s!r})")
    if args.output:
        rows = [
            (m, v, s, report.trials, report.dim)
            for m, v, s in zip(report.orders, report.values, report.stderrs)
        ]
        res.files[args.output] = _csv_text(
            ("order", "value", "stderr", "trials", "dim"), rows
        )
    return res


def cmd_exact(args) -> CommandResult:
    res = CommandResult()
    if args.class_table:
        rows = limit_moments.class_table(args.max_order)
        res.say(f"mixed-class contributions up to order {args.max_order}")
        res.say("  2k   I   J   (I+J)*P       contribution")
        for r in rows:
            res.say(
                f"  {r.order:<4d} {r.num_a:<3d} {r.num_b:<3d} "
                f"{_pretty_fraction(r.weighted_p):<13s} {_pretty_fraction(r.contribution)}"
            )
        if args.output:
            res.files[args.output] = _csv_text(
                ("order", "num_a", "num_b", "weighted_p", "contribution", "decimal"),
                [
                    (
                        r.order,
                        r.num_a,
                        r.num_b,
                        _fmt_fraction(r.weighted_p),
                        _fmt_fraction(r.contribution),
                        float(r.contribution),
                    )
                    for r in rows
                ],
            )
        return res

    orders = _parse_orders(args.orders)
    cap = max(limit_moments.DEFAULT_MAX_ORDER, max(orders))
    moments = limit_moments.exact_moment_report(orders, max_order=cap)
    res.say(f"exact limiting moments (kernel: {pairings.IMPLEMENTATION})")
    for em in moments:
        res.say(f"  M_{em.order} = {_pretty_fraction(em.value)}")
    if args.output:
        res.files[args.output] = _csv_text(
            ("order", "value", "decimal"),
            [(em.order, _fmt_fraction(em.value), float(em.value)) for em in moments],
        )
    return res


def cmd_bounds(args) -> CommandResult:
    res = CommandResult()
    failed = False
    did_something = False

    if args.suite:
        did_something = True
        res.say(f"exact bound suite up to order {args.max_order}")
        prev_ratio = None
        for order in range(2, args.max_order + 1, 2):
            chk = limit_moments.bound_suite(order, max_order=max(order, 16))
            ratio_down = prev_ratio is None or chk.ratio < prev_ratio
            prev_ratio = chk.ratio
            ok = chk.all_ok and ratio_down
            failed = failed or not ok
            res.say(
                f"  2k={order}: semicircle {_fmt_fraction(chk.lower)} <= "
                f"M {_fmt_fraction(chk.value)} <= {_fmt_fraction(chk.upper)} "
                f"<= gaussian {chk.gaussian}; ratio {_fmt_fraction(chk.ratio)}; "
                f"root-bound {'ok' if chk.root_bound_ok else 'FAIL'}; "
                f"{'ok' if ok else 'FAIL'}"
            )

    if args.holder:
        did_something = True
        rep = bounds.holder_sweep(args.trials, args.seed)
        failed = failed or rep.violations > 0
        res.say(
            f"holder sweep: {rep.tuples} tuples, {rep.violations} violations, "
            f"max lhs/rhs {rep.max_ratio!r}"
        )

    if args.counterexample:
        did_something = True
        rep = bounds.conjecture_counterexample()
        failed = failed or not rep.exceeds_both
        res.say(f"counterexample (dim {rep.dim}, exact integers):")
        res.say(f"  Tr(A^4)        = {rep.tr_a4}")
        res.say(f"  Tr(B^4)        = {rep.tr_b4}")
        res.say(f"  Tr(D_1^4)/8    = {_pretty_fraction(rep.disco_quarter_trace)}")
        res.say(
            "  conjectured trace inequality REFUTED at matrix level"
            if rep.exceeds_both
            else "  FAIL: expected the scaled trace to exceed both"
        )

    if args.sandwich:
        did_something = True
        target = _target_from_args(args)
        if not isinstance(target, DiscoPlan) or target.depth != 1:
            raise ValueError("--sandwich needs --disco a,b with --depth 1")
        chk = bounds.sandwich_bound_check(
            target.a_spec, target.b_specs[0], args.order, args.trials, args.seed
        )
        failed = failed or not chk.ok
        res.say(
            f"sandwich order {chk.order}: {chk.lower!r} <= {chk.m_disco!r} <= "
            f"{chk.upper!r} (M_a {chk.m_a!r}, M_b {chk.m_b!r}) "
            f"{'ok' if chk.ok else 'FAIL'}"
        )

    if args.conjecture:
        did_something = True
        target = _target_from_args(args)
        if not isinstance(target, DiscoPlan) or target.depth != 1:
            raise ValueError("--conjecture needs --disco a,b with --depth 1")
        orders = _parse_orders(args.orders)
        rows = bounds.conjecture_moment_scan(
            target.a_spec, target.b_specs[0], orders, args.trials, args.seed,
            threads=args.threads,
        )
        res.say("conjecture scan (reporting only):")
        res.say("  order   M(A)        M(D_1)      M(B)")
        for r in rows:
            res.say(f"  {r.order:<7d} {r.m_a:<11.6g} {r.m_disco:<11.6g} {r.m_b:<11.6g}")
        if args.output:
            res.files[args.output] = _csv_text(
                ("order", "m_a", "se_a", "m_disco", "se_disco", "m_b", "se_b"),
                [(r.order, r.m_a, r.se_a, r.m_disco, r.se_disco, r.m_b, r.se_b) for r in rows],
            )

    if not did_something:
        raise ValueError(
            "pick at least one of --suite, --holder, --counterexample, "
            "--sandwich, --conjecture"
        )
    res.exit_code = 1 if failed else 0
    return res


def cmd_gaps(args) -> CommandResult:
    res = CommandResult()
    target = _target_from_args(args)
    sample = spectra.eigenvalues(spectra.draw_target(target, args.seed, 0))
    if args.spacing_scale == "base":
        base = target.base_dim if isinstance(target, DiscoPlan) else target.dim
        divisor = math.sqrt(base)
    else:
        divisor = None
    gaps = spectra.gap_spacings(sample, divisor=divisor)
    res.say(
        f"gaps: {_describe_target(target)}, {gaps.size} spacings, "
        f"scale={args.spacing_scale}"
    )
    res.say(f"mean {gaps.mean().item()!r}, max {gaps.max().item()!r}")
    if args.output:
        res.files[args.output] = _csv_text(("spacing",), [(g.item(),) for g in gaps])
    return res


def cmd_kron(args) -> CommandResult:
    res = CommandResult()
    dist = _parse_dist(args.dist)
    spec_a = _parse_ensemble_token(args.ensemble_a, args.dim_a, dist).with_seed(
        (args.seed, 0, 0)
    )
    spec_b = _parse_ensemble_token(args.ensemble_b, args.dim_b, dist).with_seed(
        (args.seed, 0, 1)
    )
    a, b = draw(spec_a), draw(spec_b)
    prod = kronecker(a, b)
    res.say(f"kron: {a.dim} x {b.dim} -> dim {prod.dim}")

    wa = np.linalg.eigvalsh(a.array)
    wb = np.linalg.eigvalsh(b.array)
    w_prod = np.sort(np.linalg.eigvalsh(prod.array))
    expected = np.sort(np.multiply.outer(wa, wb).reshape(-1))
    scale = max(1.0, float(np.abs(expected).max()))
    spectrum_err = float(np.max(np.abs(w_prod - expected))) / scale
    spectrum_ok = spectrum_err <= 1e-8
    res.say(f"spectrum = pairwise products: max rel err {spectrum_err!r}")

    failed = not spectrum_ok
    rows = []
    for m in _parse_orders(args.orders):
        lhs = spectra.empirical_moments(spectra.eigenvalues(prod), (m,))[0]
        rhs = (
            spectra.empirical_moments(spectra.eigenvalues(a), (m,))[0]
            * spectra.empirical_moments(spectra.eigenvalues(b), (m,))[0]
        )
        denom = max(1.0, abs(rhs))
        rel = abs(lhs - rhs) / denom
        ok = rel <= 1e-10
        failed = failed or not ok
        rows.append((m, float(lhs), float(rhs), rel))
        res.say(
            f"  M_{m}(A kron B) = {float(lhs)!r} vs M_{m}(A)*M_{m}(B) = {float(rhs)!r} "
            f"rel err {rel:.3e} {'ok' if ok else 'FAIL'}"
        )
    if args.output:
        res.files[args.output] = _csv_text(("order", "lhs", "rhs", "rel_err"), rows)
    res.exit_code = 1 if failed else 0
    return res


def _add_target_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ensemble", help="pst, rs, or bc:<period>")
    p.add_argument("--disco", help="a_kind,b_kind for the block construction")
    p.add_argument("--depth", type=int, default=1, help="construction depth d")
    p.add_argument("--dim", type=int, default=64, help="base dimension N")
    p.add_argument(
        "--dist", default="normal", help="entry law: normal or rademacher"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disco-rmt",
        description="Spectra and exact limiting moments of random symmetric block matrices.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=None, help="master seed")
        p.add_argument(
            "--threads", type=int, default=1, help="worker threads (0 = all cores)"
        )
        p.add_argument("-o", "--output", help="write CSV here (plus .manifest.json)")

    p = sub.add_parser("simulate", help="pooled spectrum histogram")
    _add_target_flags(p)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--bins", default="auto", help="'auto' (Freedman-Diaconis) or a count")
    p.add_argument("--bin-width", type=float, default=None)
    common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("moments", help="Monte Carlo moment estimates")
    _add_target_flags(p)
    p.add_argument("--orders", default="2,4", help="comma-separated moment orders")
    p.add_argument("--trials", type=int, default=100)
    common(p)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("exact", help="exact limiting moments")
    p.add_argument("--orders", default="2,4,6,8")
    p.add_argument("--class-table", action="store_true")
    p.add_argument("--max-order", type=int, default=8)
    common(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bounds", help="inequality checks")
    _add_target_flags(p)
    p.add_argument("--suite", action="store_true", help="exact moment bound suite")
    p.add_argument("--max-order", type=int, default=12)
    p.add_argument("--holder", action="store_true", help="random Hölder sweep")
    p.add_argument("--counterexample", action="store_true")
    p.add_argument("--sandwich", action="store_true")
    p.add_argument("--conjecture", action="store_true", help="moment scan (reports only)")
    p.add_argument("--order", type=int, default=4, help="order for --sandwich")
    p.add_argument("--orders", default="4,6,8", help="orders for --conjecture")
    p.add_argument("--trials", type=int, default=200)
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gaps", help="eigenvalue spacings")
    _add_target_flags(p)
    p.add_argument(
        "--spacing-scale",
        choices=("full", "base"),
        default="full",
        help="divide spacings by sqrt(full dim) or sqrt(base dim)",
    )
    common(p)
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("kron", help="Kronecker spectrum and moments")
    p.add_argument("--ensemble-a", default="rs")
    p.add_argument("--ensemble-b", default="rs")
    p.add_argument("--dim-a", type=int, default=6)
    p.add_argument("--dim-b", type=int, default=6)
    p.add_argument("--orders", default="2,4")
    p.add_argument("--dist", default="normal")
    common(p)
    p.set_defaults(func=cmd_kron)

    return parser


def _manifest(args, command: str, outputs: list[str]) -> str:
    flags = {}
    for key, value in sorted(vars(args).items()):
        if key in ("func",):
            continue
        if isinstance(value, (str, int, float, bool)) or value is None:
            flags[key] = value
        else:
            flags[key] = str(value)
    body = {
        "command": command,
        "flags": flags,
        "seed": args.seed,
        "versions": {
            "disco_rmt": __version__,
            "numpy": np.__version__,
            "python": ".".join(str(v) for v in sys.version_info[:3]),
            "pairing_kernel": pairings.IMPLEMENTATION,
        },
        "outputs": outputs,
        # Wall time is reported on stderr instead so that reruns with the
        # same seed stay byte-identical.
        "elapsed_ms": None,
    }
    return json.dumps(body, indent=2, sort_keys=True) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None:
        env = os.environ.get("DISCO_RMT_SEED")
        args.seed = int(env) if env else DEFAULT_SEED
    start = time.perf_counter()
    try:
        result = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    for line in result.lines:
        print(line)
    if result.files:
        for path, content in result.files.items():
            with open(path, "w", newline="") as fh:
                fh.write(content)
        manifest_path = next(iter(result.files)) + ".manifest.json"
        with open(manifest_path, "w", newline="") as fh:
            fh.write(_manifest(args, args.command, list(result.files)))
        print(f"wrote {', '.join(result.files)} and {manifest_path}", file=sys.stderr)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    print(f"elapsed_ms={elapsed_ms}", file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
