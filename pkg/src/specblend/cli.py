"""Command-line front end: spectra, alpha sweeps with CSV/SVG output,
threshold computation, and theorem-verification campaigns."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .graphs import (
    Graph,
    GraphParseError,
    classify_vertices,
    complete,
    complete_bipartite,
    cycle,
    h_ln,
    parse_edge_list,
    path,
    pendant_attach,
    star,
)
from .matrices import blend_matrix
from .eigen import sym_eig
from .theorems import (
    FAIL,
    VACUOUS,
    HypothesisError,
    TheoremVerdict,
    convexity_concavity_check,
    edge_delete_compare,
    exact_pendant_multiplicity,
    hln_partition,
    hln_spectrum,
    hln_spectrum_check,
    misc_identities_check,
    multiplicity_bounds,
    nullity_decomposition,
    star_block_charpoly_check,
)
from .threshold import closed_forms, hln1_formula_consistency, threshold_report
from .corpus import CORPUS_ALPHAS, erdos_renyi
from .graphs import bipartition

__all__ = ["main", "run_sweep", "run_verify", "SweepTable", "fmt_num"]


def fmt_num(x: float) -> str:
    """Shortest decimal that round-trips to the same float."""
    return repr(float(x))


@dataclass(frozen=True)
class SweepTable:
    """Eigenvalues of the blend on a strictly increasing alpha grid."""

    graph: str
    alphas: tuple[float, ...]
    rows: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if any(b <= a for a, b in zip(self.alphas, self.alphas[1:])):
            raise ValueError("alpha grid must be strictly increasing")
        if any(not 0.0 <= a <= 1.0 for a in self.alphas):
            raise ValueError("alpha grid must lie within [0, 1]")

    def to_csv(self) -> str:
        n = len(self.rows[0])
        header = "alpha," + ",".join(f"lambda_{k + 1}" for k in range(n))
        lines = [header]
        for a, row in zip(self.alphas, self.rows):
            lines.append(",".join([fmt_num(a)] + [fmt_num(v) for v in row]))
        return "\n".join(lines) + "\n"

    def to_svg(self, width: int = 720, height: int = 480, pad: int = 50) -> str:
        lo = min(min(r) for r in self.rows)
        hi = max(max(r) for r in self.rows)
        if hi - lo < 1e-12:
            hi = lo + 1.0
        a0, a1 = self.alphas[0], self.alphas[-1]

        def sx(a):
            return pad + (a - a0) / (a1 - a0) * (width - 2 * pad)

        def sy(v):
            return height - pad - (v - lo) / (hi - lo) * (height - 2 * pad)

        parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
                 f'height="{height}" viewBox="0 0 {width} {height}">']
        parts.append(f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" '
                     f'y2="{height - pad}" stroke="black"/>')
        parts.append(f'<line x1="{pad}" y1="{pad}" x2="{pad}" '
                     f'y2="{height - pad}" stroke="black"/>')
        n = len(self.rows[0])
        for k in range(n):
            pts = " ".join(f"{sx(a):.2f},{sy(row[k]):.2f}"
                           for a, row in zip(self.alphas, self.rows))
            parts.append(f'<polyline fill="none" stroke="hsl({(k * 53) % 360},60%,40%)" '
                         f'points="{pts}"/>')
        parts.append("</svg>")
        return "\n".join(parts) + "\n"


def run_sweep(g: Graph, start: float, stop: float, steps: int,
              out_csv: str | None = None, out_svg: str | None = None) -> SweepTable:
    """Eigenvalue curves on a uniform alpha grid; optionally write CSV/SVG."""
    if not (0.0 <= start < stop <= 1.0):
        raise ValueError("need 0 <= from < to <= 1")
    if steps < 2:
        raise ValueError("need at least 2 steps")
    alphas = [start + (stop - start) * k / (steps - 1) for k in range(steps)]
    alphas[-1] = stop
    rows = []
    for a in alphas:
        spec = sym_eig(blend_matrix(g, a))
        rows.append(tuple(float(v) for v in spec.values))
    table = SweepTable(graph=g.name or f"g{g.n}", alphas=tuple(alphas),
                       rows=tuple(rows))
    if out_csv:
        Path(out_csv).write_text(table.to_csv(), encoding="utf-8")
    if out_svg:
        Path(out_svg).write_text(table.to_svg(), encoding="utf-8")
    return table


# ---------------------------------------------------------------------------
# verification campaigns
# ---------------------------------------------------------------------------

def _vacuous(theorem: str, graph: str, alpha: float | None,
             note: str) -> TheoremVerdict:
    return TheoremVerdict(theorem=theorem, graph=graph, alpha=alpha,
                          status=VACUOUS, hypotheses_satisfied=False,
                          predicted=note, observed=None, tolerance=0.0, gap=0.0)


def _bool_verdict(theorem, graph, ok, gap, tol=1e-7) -> TheoremVerdict:
    return TheoremVerdict(theorem=theorem, graph=graph, alpha=None,
                          status="PASS" if ok else FAIL,
                          hypotheses_satisfied=True, predicted=None,
                          observed=None, tolerance=tol, gap=float(gap))


def _graph_verdicts(g: Graph, alphas, hln_params=None) -> list[TheoremVerdict]:
    verdicts: list[TheoremVerdict] = []
    rep = classify_vertices(g)
    partition = hln_partition(*hln_params) if hln_params else None
    for a in alphas:
        verdicts += misc_identities_check(g, a, partition=partition)
        for kind in ("false_twins", "true_twins", "pendant"):
            verdicts += multiplicity_bounds(g, a, kind)
        if rep.p >= 1:
            try:
                verdicts.append(exact_pendant_multiplicity(g, a))
            except HypothesisError:
                verdicts.append(_vacuous("pendant_multiplicity_exact",
                                         g.name or f"g{g.n}", a,
                                         "alpha = 1/2 excluded"))
            seen = set()
            for root, s in zip(rep.quasi_pendant, rep.star_sizes):
                key = (s, g.degree(root))
                if key not in seen and s + 1 <= 12:  # exact-determinant cap
                    seen.add(key)
                    verdicts.append(star_block_charpoly_check(
                        s, g.degree(root), a, (-2.0, -0.5, 0.3, 1.7, 4.0)))
        if g.m >= 1:
            verdicts += edge_delete_compare(g, g.edges()[0], a)
        if hln_params:
            verdicts.append(hln_spectrum_check(hln_params[0], hln_params[1], a))
    if rep.p >= 1:
        verdicts += nullity_decomposition(g)
    verdicts.append(convexity_concavity_check(g, 0.0, 1.0, (0.25, 0.5, 0.75)))
    # threshold sanity
    gname = g.name or f"g{g.n}"
    if g.m >= 1:
        tr = threshold_report(g)
        verdicts.append(_bool_verdict("threshold.beta0_lower", gname,
                                      tr.beta0 >= 2 / 3 - 1e-9,
                                      tr.beta0 - 2 / 3))
        verdicts.append(_bool_verdict("threshold.alpha0_range", gname,
                                      0 < tr.alpha0 <= 0.5 + 1e-9,
                                      0.5 - tr.alpha0))
        verdicts.append(_bool_verdict("threshold.epsilon_lower", gname,
                                      tr.epsilon >= 1 / 6 - 1e-8,
                                      tr.epsilon - 1 / 6, tol=1e-8))
        is_bip = bipartition(g) is not None
        at_floor = abs(tr.beta0 - 2 / 3) <= 1e-7
        verdicts.append(_bool_verdict("threshold.bipartite_iff", gname,
                                      is_bip == at_floor,
                                      tr.beta0 - 2 / 3))
        if hln_params:
            cf = closed_forms("h_ln", n=hln_params[0], ell=hln_params[1])
            verdicts.append(_bool_verdict("threshold.beta0_closed_form", gname,
                                          abs(cf.beta0 - tr.beta0) <= 1e-7,
                                          abs(cf.beta0 - tr.beta0)))
            verdicts.append(_bool_verdict("threshold.alpha0_closed_form", gname,
                                          abs(cf.alpha0 - tr.alpha0) <= 1e-7,
                                          abs(cf.alpha0 - tr.alpha0)))
            if hln_params[1] == 1:
                gap = hln1_formula_consistency(hln_params[0])
                verdicts.append(_bool_verdict("threshold.hln1_consistency",
                                              gname, gap <= 1e-6, gap, tol=1e-6))
    return verdicts


def run_verify(graphs: list[Graph], alphas=CORPUS_ALPHAS,
               hln_params=None) -> tuple[list[str], int]:
    """Run every applicable checker; returns sorted report lines and the exit
    code (0 unless some verdict FAILed; VACUOUS/INCONCLUSIVE never fail)."""
    lines = []
    failed = False
    for g in graphs:
        for v in _graph_verdicts(g, alphas, hln_params=hln_params):
            lines.append(v.report_line())
            failed = failed or v.status == FAIL
    return sorted(lines), (1 if failed else 0)


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

def _add_graph_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--graph", metavar="FILE", help="edge-list file")
    sp.add_argument("--family",
                    choices=["complete", "path", "cycle", "star",
                             "complete_bipartite", "h_ln", "pendant_attach"])
    sp.add_argument("--n", type=int, help="order parameter")
    sp.add_argument("--ell", type=int,
                    help="second parameter (h_ln edges / bipartite second part)")
    sp.add_argument("--s", help="star sizes, comma separated")
    sp.add_argument("--base", choices=["complete", "path", "cycle"],
                    default="complete", help="base family for pendant_attach")


def _resolve_graph(args, parser: argparse.ArgumentParser) -> Graph:
    if args.graph and args.family:
        parser.error("give either --graph or --family, not both")
    if args.graph:
        try:
            text = Path(args.graph).read_text(encoding="utf-8")
        except OSError as exc:
            parser.error(f"cannot read {args.graph}: {exc}")
        try:
            return parse_edge_list(text, name=Path(args.graph).stem)
        except GraphParseError as exc:
            parser.error(f"{args.graph}: {exc}")
    if not args.family:
        parser.error("need --graph FILE or --family NAME")
    try:
        if args.family == "complete":
            return complete(_req(args, parser, "n"))
        if args.family == "path":
            return path(_req(args, parser, "n"))
        if args.family == "cycle":
            return cycle(_req(args, parser, "n"))
        if args.family == "star":
            return star(int(_req_s(args, parser)))
        if args.family == "complete_bipartite":
            return complete_bipartite(_req(args, parser, "n"),
                                      _req(args, parser, "ell"))
        if args.family == "h_ln":
            return h_ln(_req(args, parser, "n"), _req(args, parser, "ell"))
        base = {"complete": complete, "path": path, "cycle": cycle}[args.base](
            _req(args, parser, "n"))
        sizes = [int(x) for x in _req_s(args, parser).split(",")]
        return pendant_attach(base, sizes)
    except ValueError as exc:
        parser.error(str(exc))


def _req(args, parser, name: str) -> int:
    val = getattr(args, name)
    if val is None:
        parser.error(f"--family {args.family} needs --{name}")
    return val


def _req_s(args, parser) -> str:
    if args.s is None:
        parser.error(f"--family {args.family} needs --s")
    return args.s


def _parse_alphas(text: str | None, parser) -> tuple[float, ...]:
    if text is None:
        return CORPUS_ALPHAS
    try:
        vals = tuple(float(x) for x in text.split(","))
    except ValueError:
        parser.error(f"bad --alpha list {text!r}")
    for a in vals:
        if not 0.0 <= a <= 1.0:
            parser.error(f"alpha {a} outside [0, 1]")
    return vals


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="specblend",
        description="Spectra and semidefiniteness thresholds of the "
                    "adjacency-Laplacian blend of a graph.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="eigenvalues at one blend parameter")
    _add_graph_args(sp)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--out", help="write a one-row CSV instead of stdout lines")

    sp = sub.add_parser("sweep", help="eigenvalue curves over an alpha grid")
    _add_graph_args(sp)
    sp.add_argument("--from", dest="sweep_from", type=float, default=0.0)
    sp.add_argument("--to", dest="sweep_to", type=float, default=1.0)
    sp.add_argument("--steps", type=int, default=101)
    sp.add_argument("--out", required=True, help="CSV output path")
    sp.add_argument("--svg", help="optional SVG chart path")

    for name, help_text in [("beta0", "largest PSD parameter of the blend"),
                            ("alpha0", "smallest PSD parameter of the companion"),
                            ("epsilon", "gap beta0 - alpha0")]:
        sp = sub.add_parser(name, help=help_text)
        _add_graph_args(sp)
        sp.add_argument("--tol", type=float, default=1e-10)
        sp.add_argument("--out", help="write the CSV row to a file")

    sp = sub.add_parser("hln", help="closed-form spectrum of the two-clique family")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--alpha", type=float, required=True)

    sp = sub.add_parser("multiplicity", help="multiplicity bounds and the exact "
                                             "pendant count at one parameter")
    _add_graph_args(sp)
    sp.add_argument("--alpha", type=float, required=True)

    sp = sub.add_parser("verify", help="run the theorem checkers")
    _add_graph_args(sp)
    sp.add_argument("--file", help="edge-list file (alias of --graph)")
    sp.add_argument("--random", action="store_true",
                    help="seeded random campaign")
    sp.add_argument("--p", type=float, default=0.5, help="edge probability")
    sp.add_argument("--trials", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--alpha", help="comma-separated blend parameters")

    args = parser.parse_args(argv)

    if args.command == "spectrum":
        g = _resolve_graph(args, parser)
        spec = sym_eig(blend_matrix(g, args.alpha))
        if args.out:
            header = "alpha," + ",".join(f"lambda_{k + 1}" for k in range(spec.n))
            row = ",".join([fmt_num(args.alpha)] + [fmt_num(v) for v in spec.values])
            _write_or_print(header + "\n" + row + "\n", args.out)
        else:
            for v in spec.values:
                print(fmt_num(v))
        return 0

    if args.command == "sweep":
        g = _resolve_graph(args, parser)
        try:
            run_sweep(g, args.sweep_from, args.sweep_to, args.steps,
                      out_csv=args.out, out_svg=args.svg)
        except ValueError as exc:
            parser.error(str(exc))
        return 0

    if args.command in ("beta0", "alpha0", "epsilon"):
        g = _resolve_graph(args, parser)
        report = threshold_report(g, tol=args.tol)
        _write_or_print(report.csv_row() + "\n", args.out)
        return 0

    if args.command == "hln":
        try:
            parts = hln_spectrum(args.n, args.ell, args.alpha)
        except ValueError as exc:
            parser.error(str(exc))
        for value, mult in parts:
            print(f"{fmt_num(value)},{mult}")
        return 0

    if args.command == "multiplicity":
        g = _resolve_graph(args, parser)
        rep = classify_vertices(g)
        verdicts = []
        for kind in ("false_twins", "true_twins", "pendant"):
            verdicts += multiplicity_bounds(g, args.alpha, kind)
        if rep.p >= 1:
            try:
                verdicts.append(exact_pendant_multiplicity(g, args.alpha))
            except HypothesisError:
                verdicts.append(_vacuous("pendant_multiplicity_exact",
                                         g.name or f"g{g.n}", args.alpha,
                                         "alpha = 1/2 excluded"))
        for line in sorted(v.report_line() for v in verdicts):
            print(line)
        return 1 if any(v.status == FAIL for v in verdicts) else 0

    if args.command == "verify":
        alphas = _parse_alphas(args.alpha, parser)
        if args.file:
            args.graph = args.graph or args.file
        hln_params = None
        if args.random:
            if args.n is None:
                parser.error("--random needs --n")
            if not 0.0 <= args.p <= 1.0:
                parser.error("--p must lie in [0, 1]")
            if args.trials < 1:
                parser.error("--trials must be positive")
            rng = np.random.default_rng(args.seed)
            graphs = [erdos_renyi(args.n, args.p, rng,
                                  name=f"er_s{args.seed}_t{i:03d}")
                      for i in range(args.trials)]
        else:
            g = _resolve_graph(args, parser)
            if args.family == "h_ln":
                hln_params = (args.n, args.ell)
            graphs = [g]
        lines, code = run_verify(graphs, alphas, hln_params=hln_params)
        for line in lines:
            print(line)
        return code

    parser.error(f"unhandled command {args.command}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
