"""Command-line front door: construct, analyze, encode, decode, simulate, plot."""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import analysis
from .construction import BaseVariant, build_fdpc, generate_base_matrix
from .decoder import DecoderConfig, MinSumDecoder
from .encoder import encode
from .harness import SimConfig, run_sweep
from .matrix import BinaryMatrix


def _add_code_args(p, required=True):
    p.add_argument("--t", type=int, required=required, help="construction parameter t")
    p.add_argument("--base", type=int, choices=(1, 2), default=1, help="base matrix variant")
    p.add_argument("--num-per", type=int, default=1, help="number of random column permutations")
    p.add_argument("--n", type=int, help="target blocklength N")
    p.add_argument("--seed", type=int, default=0, help="construction PRNG seed")


def _variant(args) -> BaseVariant:
    return BaseVariant(args.base)


def _build_code(args):
    if args.n is None:
        raise ValueError("--n is required to build a code")
    return build_fdpc(args.t, _variant(args), args.num_per, args.n, args.seed)


def _read_bit_line(path):
    text = sys.stdin.read() if path is None else open(path).read()
    line = text.strip().split()[0] if text.strip() else ""
    if not line or set(line) - {"0", "1"}:
        raise ValueError("expected a single line of 0/1 characters")
    return np.array([int(ch) for ch in line], dtype=np.uint8)


def _write_text(path, text):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_construct(args):
    code = _build_code(args)
    if args.alist:
        _write_text(args.alist, code.h.to_alist())
    _write_text(args.out, code.descriptor())
    return 0


def cmd_analyze(args):
    if args.alist:
        h = BinaryMatrix.from_alist(open(args.alist).read())
        name = args.alist
    elif args.n is not None:
        h = _build_code(args).h
        name = f"FDPC t={args.t} base={args.base} num_per={args.num_per} N={args.n}"
    else:
        if args.t is None:
            raise ValueError("analyze needs --alist or --t")
        h = generate_base_matrix(args.t, _variant(args))
        name = f"base matrix t={args.t} base={args.base}"
    lines = [f"matrix: {name}", f"size: {h.rows} x {h.cols}"]
    dens = analysis.density(h)
    lines.append(f"density: {dens} ({float(dens):.6g})")
    row_hist, col_hist = analysis.weight_histograms(h)
    lines.append(f"row weight histogram: {row_hist}")
    lines.append(f"column weight histogram: {col_hist}")
    if all(len(s) == 2 for s in h.col_supports):
        g = analysis.ring_graph(h)
        gir = analysis.girth(g)
        lines.append(f"girth: {'acyclic' if gir is None else gir}")
        lines.append(f"4-cycles: {analysis.count_4cycles(g)}")
    else:
        lines.append("girth: n/a (columns are not all weight 2)")
    try:
        d_min, spectrum = analysis.min_distance_enumerate(h, max_dim=args.max_dim)
        lines.append(f"d_min: {'infinite' if d_min == float('inf') else d_min}")
        low = {w: c for w, c in list(spectrum.items())[:8]}
        lines.append(f"low-weight spectrum: {low}")
    except ValueError as exc:
        lines.append(f"d_min: skipped ({exc})")
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_encode(args):
    code = _build_code(args)
    msg = _read_bit_line(args.infile)
    cw = encode(code, msg)
    _write_text(args.out, "".join(str(int(b)) for b in cw) + "\n")
    return 0


def cmd_decode(args):
    code = _build_code(args)
    text = sys.stdin.read() if args.infile is None else open(args.infile).read()
    llr = np.array([float(tok) for tok in text.split()], dtype=np.float64)
    cfg = DecoderConfig(max_iters=args.iters, alpha=args.alpha,
                        early_stop=args.early_stop == "on")
    res = MinSumDecoder(code.h, cfg).decode(llr)
    out = "".join(str(int(b)) for b in res.bits) + "\n"
    out += f"converged={'true' if res.converged else 'false'} iterations={res.iterations_used}\n"
    _write_text(args.out, out)
    return 0


def cmd_simulate(args):
    snr = tuple(float(s) for s in args.snr.split(","))
    cfg = SimConfig(
        t=args.t,
        variant=_variant(args),
        num_per=args.num_per,
        n=args.n,
        code_seed=args.seed,
        snr_points_db=snr,
        max_frames=args.max_frames,
        target_frame_errors=args.target_errors,
        decoder=DecoderConfig(max_iters=args.iters, alpha=args.alpha,
                              early_stop=args.early_stop == "on"),
        master_seed=args.master_seed,
        workers=args.workers,
    )
    result = run_sweep(cfg, out_path=args.out)
    if args.out is None:
        sys.stdout.write(result.to_csv())
    if args.plot:
        if args.out is None:
            raise ValueError("--plot requires --out (figure is rendered from the CSV)")
        from . import plotting

        fig_path = args.plot if args.plot != "auto" else args.out + ".png"
        plotting.plot_sweeps([args.out], fig_path)
        print(f"figure written to {fig_path}", file=sys.stderr)
    return 0


def cmd_plot(args):
    from . import plotting

    plotting.plot_sweeps(args.csv, args.out, title=args.title)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="fdpc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code; emit alist and descriptor")
    _add_code_args(p)
    p.add_argument("--alist", help="write the parity-check matrix here (alist format)")
    p.add_argument("--out", help="write the descriptor here (default stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="structural report for a base matrix or code")
    _add_code_args(p, required=False)
    p.add_argument("--alist", help="analyze an existing alist file instead")
    p.add_argument("--max-dim", type=int, default=20,
                   help="max nullspace dimension for exhaustive d_min")
    p.add_argument("--out", help="write the report here (default stdout)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("encode", help="encode a 0/1 message line")
    _add_code_args(p)
    p.add_argument("--in", dest="infile", help="message file (default stdin)")
    p.add_argument("--out", help="codeword output (default stdout)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode whitespace-separated LLRs")
    _add_code_args(p)
    p.add_argument("--iters", type=int, default=50)
    p.add_argument("--alpha", type=float, default=0.75)
    p.add_argument("--early-stop", choices=("on", "off"), default="on")
    p.add_argument("--in", dest="infile", help="LLR file (default stdin)")
    p.add_argument("--out", help="output (default stdout)")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="Monte Carlo FER/BER sweep")
    _add_code_args(p)
    p.add_argument("--snr", required=True, help="comma-separated E_b/N_0 points in dB")
    p.add_argument("--max-frames", type=int, default=10_000)
    p.add_argument("--target-errors", type=int, default=100)
    p.add_argument("--iters", type=int, default=50)
    p.add_argument("--alpha", type=float, default=0.75)
    p.add_argument("--early-stop", choices=("on", "off"), default="on")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--master-seed", type=int, default=0)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--plot", nargs="?", const="auto",
                   help="also render a waterfall figure (optional path)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("plot", help="render FER/BER figures from sweep CSVs")
    p.add_argument("--csv", nargs="+", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--title")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"fdpc: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
