"""Command-line frontend.

Subcommands:
  indices      asymmetry/non-normality indices, cond(V), spectral radius
  filter       apply the heat low-pass to a signal file
  diffuse      iterate x_{t+1} = P x_t and log norms against the iterate bound
  reconstruct  seeded bandlimited sampling/reconstruction experiment
  table1       three-row benchmark (undirected / directed / perturbed cycle)

All randomness flows from one 64-bit seed (--seed, or env BGFT_SEED) through
numpy's PCG64 generator (np.random.default_rng); sub-draws use documented
offsets so runs are byte-reproducible.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import graphs, markov, sampling, transform
from .errors import BgftError

DEFAULTS = dict(n=64, eps=20.0, k=8, m=20, tau=2.0, noise=0.0, seed=0)

# Seed offsets for the independent random draws of one experiment.
SEED_SIGNAL = 0
SEED_SAMPLES = 1
SEED_NOISE = 2


def read_signal(path) -> np.ndarray:
    """One complex value per line as `re im`; bare reals get im = 0."""
    values = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) not in (1, 2):
                raise BgftError(f"{path}:{lineno}: expected 're im', got {line!r}")
            try:
                re = float(parts[0])
                im = float(parts[1]) if len(parts) == 2 else 0.0
            except ValueError:
                raise BgftError(f"{path}:{lineno}: could not parse {line!r}")
            values.append(complex(re, im))
    if not values:
        raise BgftError(f"{path}: empty signal file")
    return np.array(values)


def write_signal(x, stream) -> None:
    for z in np.asarray(x, dtype=complex):
        stream.write(f"{float(z.real)!r} {float(z.imag)!r}\n")


def build_graph(args) -> graphs.DirectedGraph:
    if args.graph == "file":
        if not args.input:
            raise BgftError("--graph file requires --input PATH")
        return graphs.load_graph(args.input)
    n = args.n
    if args.graph == "undirected-cycle":
        return graphs.undirected_cycle(n)
    if args.graph == "directed-cycle":
        return graphs.directed_cycle(n)
    if args.graph == "perturbed-cycle":
        src = args.chord_src if args.chord_src is not None else 0
        dst = args.chord_dst if args.chord_dst is not None else n // 2
        return graphs.add_directed_chord(graphs.directed_cycle(n), args.eps, src, dst)
    raise BgftError(f"unknown graph kind {args.graph!r}")


def emit_records(records, fmt, stream) -> None:
    """records: list of (name, ordered dict of scalar fields)."""
    if fmt == "json":
        out = [dict(graph=name, **fields) for name, fields in records]
        json.dump(out, stream, indent=2)
        stream.write("\n")
        return
    keys = list(records[0][1].keys())
    if fmt == "csv":
        writer = csv.writer(stream)
        writer.writerow(["graph"] + keys)
        for name, fields in records:
            writer.writerow([name] + [repr(fields[k]) for k in keys])
        return
    # human table
    widths = [max(len("graph"), *(len(n) for n, _ in records))]
    rows = []
    for name, fields in records:
        rows.append([name] + [f"{fields[k]:.12g}" if isinstance(fields[k], float)
                              else str(fields[k]) for k in keys])
    header = ["graph"] + keys
    widths = [max(len(header[c]), *(len(r[c]) for r in rows)) for c in range(len(header))]
    stream.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for r in rows:
        stream.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def analysis_fields(op: markov.TransitionOperator, basis: transform.BgftBasis) -> dict:
    try:
        dist = markov.stationary(op)
        reversible = markov.is_reversible(op, dist)
    except BgftError:
        reversible = False
    lam = basis.eigenvalues
    return dict(
        alpha=markov.asymmetry_index(op.p),
        delta=markov.departure_from_normality(op.p),
        cond_v=basis.cond_v,
        spectral_radius=float(np.max(np.abs(lam))),
        reversible=reversible,
        top_eigenvalues=[
            [float(lam[i].real), float(lam[i].imag)] for i in basis.order[:4]
        ],
    )


def cmd_indices(args, stream) -> None:
    g = build_graph(args)
    op = markov.transition(g)
    basis = transform.decompose(op)
    fields = analysis_fields(op, basis)
    if args.format != "json":
        fields.pop("top_eigenvalues")
    emit_records([(args.graph, fields)], args.format, stream)


def cmd_filter(args, stream) -> None:
    g = build_graph(args)
    op = markov.transition(g)
    basis = transform.decompose(op)
    x = read_signal(args.signal)
    if x.shape[0] != op.n:
        raise BgftError(f"signal length {x.shape[0]} does not match n={op.n}")
    y = transform.apply_filter(basis, transform.FilterSpec.heat(args.tau), x)
    print(f"||x||2 = {np.linalg.norm(x)!r} ||Hx||2 = {np.linalg.norm(y)!r}",
          file=sys.stderr)
    write_signal(y, stream)


def cmd_diffuse(args, stream) -> None:
    g = build_graph(args)
    op = markov.transition(g)
    basis = transform.decompose(op)
    x = read_signal(args.signal)
    if x.shape[0] != op.n:
        raise BgftError(f"signal length {x.shape[0]} does not match n={op.n}")
    records = []
    norm0 = np.linalg.norm(x)
    cur = x
    for s in range(args.t + 1):
        if s > 0:
            cur = op.p @ cur
        norm = float(np.linalg.norm(cur))
        bound = transform.iterate_bound(basis, s) * float(norm0)
        if norm > bound + 1e-8:
            raise BgftError(f"iterate norm {norm} exceeds bound {bound} at t={s}")
        records.append((f"t={s}", dict(norm=norm, bound=bound)))
    emit_records(records, args.format, stream)


def run_reconstruction(basis, k, m, noise, seed):
    """One seeded sampling/reconstruction trial; returns the report."""
    omega = sampling.select_band(basis, k)
    x = sampling.random_bandlimited(basis, omega, 1000 * seed + SEED_SIGNAL)
    m_set = sampling.random_sampling_set(basis.n, m, 1000 * seed + SEED_SAMPLES)
    y = sampling.sample(x, m_set)
    eta_norm = 0.0
    if noise > 0:
        rng = np.random.default_rng(1000 * seed + SEED_NOISE)
        eta = noise * rng.standard_normal(m)
        y = y + eta
        eta_norm = float(np.linalg.norm(eta))
    return sampling.reconstruct(basis, omega, m_set, y, x_true=x, eta_norm=eta_norm)


def cmd_reconstruct(args, stream) -> None:
    g = build_graph(args)
    op = markov.transition(g)
    basis = transform.decompose(op)
    if not (1 <= args.k <= args.m <= op.n):
        raise BgftError(f"need 1 <= K <= m <= n, got K={args.k} m={args.m} n={op.n}")
    rep = run_reconstruction(basis, args.k, args.m, args.noise, args.seed)
    fields = dict(
        rel_err=rep.rel_err,
        sigma_min_b=rep.sigma_min_b,
        cond_b=rep.cond_b,
        noise_bound=rep.noise_bound,
        rank_deficient=rep.rank_deficient,
        k=args.k, m=args.m, noise=args.noise, seed=args.seed,
    )
    emit_records([(args.graph, fields)], args.format, stream)


def cmd_table1(args, stream) -> None:
    n, eps = args.n, args.eps
    rows = [
        ("undirected-cycle", graphs.undirected_cycle(n)),
        ("directed-cycle", graphs.directed_cycle(n)),
        (f"perturbed-cycle(eps={eps:g})",
         graphs.add_directed_chord(graphs.directed_cycle(n), eps, 0, n // 2)),
    ]
    records = []
    for name, g in rows:
        op = markov.transition(g)
        basis = transform.decompose(op)
        rep = run_reconstruction(basis, args.k, args.m, args.noise, args.seed)
        records.append((name, dict(
            alpha=markov.asymmetry_index(op.p),
            delta=markov.departure_from_normality(op.p),
            cond_v=basis.cond_v,
            cond_b=rep.cond_b,
            rel_err=rep.rel_err,
        )))
    emit_records(records, args.format, stream)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bgft",
        description="Biorthogonal spectral analysis of directed random-walk diffusion",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    env_seed = int(os.environ.get("BGFT_SEED", DEFAULTS["seed"]))

    def common(p, signal=False, t=False):
        p.add_argument("--graph", default="perturbed-cycle",
                       choices=["undirected-cycle", "directed-cycle",
                                "perturbed-cycle", "file"])
        p.add_argument("--input", help="graph file (edge list or .mtx)")
        p.add_argument("--n", type=int, default=DEFAULTS["n"])
        p.add_argument("--eps", type=float, default=DEFAULTS["eps"])
        p.add_argument("--chord-src", type=int, default=None)
        p.add_argument("--chord-dst", type=int, default=None)
        p.add_argument("--k", type=int, default=DEFAULTS["k"])
        p.add_argument("--m", type=int, default=DEFAULTS["m"])
        p.add_argument("--tau", type=float, default=DEFAULTS["tau"])
        p.add_argument("--noise", type=float, default=DEFAULTS["noise"])
        p.add_argument("--seed", type=int, default=env_seed)
        p.add_argument("--format", default="table", choices=["table", "csv", "json"])
        p.add_argument("--out", help="output path (default stdout)")
        if signal:
            p.add_argument("signal", help="signal file, one 're im' pair per line")
        if t:
            p.add_argument("--t", type=int, default=20, help="diffusion steps")

    common(sub.add_parser("indices", help="spectral/asymmetry indices"))
    common(sub.add_parser("filter", help="heat low-pass a signal"), signal=True)
    common(sub.add_parser("diffuse", help="iterate diffusion, log norms"),
           signal=True, t=True)
    common(sub.add_parser("reconstruct", help="bandlimited sampling experiment"))
    common(sub.add_parser("table1", help="three-graph benchmark table"))
    return parser


COMMANDS = dict(indices=cmd_indices, filter=cmd_filter, diffuse=cmd_diffuse,
                reconstruct=cmd_reconstruct, table1=cmd_table1)


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        COMMANDS[args.command](args, buf)
    except BgftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return 0


if __name__ == "__main__":
    sys.exit(main())
