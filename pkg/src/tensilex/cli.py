"""Command-line surface: score, optimize, evaluate, agreement, baseline.

Exit codes: 0 success, 1 I/O failure, 2 validation failure (bad lexicon,
bad corpus, bad flags). All randomized commands take an explicit --seed so
runs are reproducible. TENSILEX_LEXICON_DIR provides the default lexicon
directory.
"""

from __future__ import annotations

import argparse
import itertools
import os
import sys

from . import baseline as bl
from . import corpus as cp
from . import lexicon as lx
from . import metrics as mx
from .errors import TensilexError
from .optimizer import OptimizerConfig, hill_climb, total_absolute_error
from .scorer import explain, score_text

ENV_LEXICON_DIR = "TENSILEX_LEXICON_DIR"


def _add_lexicon_arg(parser):
    parser.add_argument("--lexicon-dir", default=os.environ.get(ENV_LEXICON_DIR),
                        help=f"lexicon directory (default: ${ENV_LEXICON_DIR})")


def _load_lexicon(args):
    if not args.lexicon_dir:
        raise TensilexError(f"no lexicon directory: pass --lexicon-dir or set ${ENV_LEXICON_DIR}")
    return lx.load_lexicon_set(args.lexicon_dir)


def _input_lines(path):
    if path == "-":
        yield from (line.rstrip("\n") for line in sys.stdin)
    else:
        with open(path, encoding="utf-8") as fh:
            yield from (line.rstrip("\n") for line in fh)


def cmd_score(args) -> int:
    lex = _load_lexicon(args)
    recognised = lex.recognised_words
    out = sys.stdout
    out.write("id\tstress\trelaxation\n")
    for i, line in enumerate(_input_lines(args.input), start=1):
        if args.tsv:
            text_id, _, text = line.partition("\t")
        else:
            text_id, text = str(i), line
        score, _ = score_text(text, lex, recognised)
        out.write(f"{text_id}\t{score.stress}\t{score.relaxation}\n")
        if args.trace:
            sys.stderr.write(f"--- {text_id}\n{explain(text, lex)}\n")
    return 0


def cmd_optimize(args) -> int:
    lex = _load_lexicon(args)
    corpus = cp.load_corpus(args.corpus)
    cfg = OptimizerConfig(seed=args.seed, min_improvement=args.min_improvement,
                          max_passes=args.max_passes)
    optimized, report = hill_climb(lex, corpus, cfg)
    lx.save_lexicon_set(optimized, args.out_dir)
    with open(os.path.join(args.out_dir, "optimization_log.tsv"), "w", encoding="utf-8") as fh:
        for line in report.log_lines():
            fh.write(line + "\n")
    print(f"initial error: {report.initial_error}")
    print(f"final error: {report.final_error}")
    print(f"changes: {report.changes_made} over {report.passes_run} passes")
    return 0


def cmd_evaluate(args) -> int:
    lex = _load_lexicon(args)
    corpus = cp.load_corpus(args.corpus)
    if args.subcorpus:
        corpus = cp.slice_corpus(corpus, args.subcorpus)
        if not corpus:
            sys.stderr.write(f"warning: no examples with subcorpus {args.subcorpus!r}\n")
            print("scale\t" + mx.MetricsReport.TSV_HEADER)
            return 0
    if args.supervised:
        result = cp.crossval_supervised(lex, corpus, k=args.k, reps=args.reps,
                                        base_seed=args.seed)
        print("scale\t" + cp.AveragedReport.TSV_HEADER)
        for scale in ("stress", "relax"):
            print(f"{scale}\t{result.averaged[scale].tsv_row()}")
        if args.log:
            with open(args.log, "w", encoding="utf-8") as fh:
                for line in result.log_tsv():
                    fh.write(line + "\n")
    else:
        reports = cp.evaluate_lexicon(lex, corpus, unrounded=args.unrounded)
        print("scale\t" + mx.MetricsReport.TSV_HEADER)
        for scale in ("stress", "relax"):
            print(f"{scale}\t{reports[scale].tsv_row()}")
    return 0


def cmd_agreement(args) -> int:
    corpus = cp.load_corpus(args.codes)
    if not corpus:
        raise TensilexError("empty coding file")
    n_coders = len(corpus[0].coder_stress)
    if n_coders < 2:
        raise TensilexError("agreement needs at least 2 coders")
    if any(len(ex.coder_stress) != n_coders for ex in corpus):
        raise TensilexError("coder count varies between rows")

    print("scale\tstatistic\tcoders\tvalue")
    for scale, codes_of in (("stress", lambda ex: ex.coder_stress),
                            ("relax", lambda ex: ex.coder_relax)):
        matrix = mx.CodingMatrix(tuple(codes_of(ex) for ex in corpus))
        alpha = mx.krippendorff_alpha_weighted(matrix)
        print(f"{scale}\talpha\tall\t{alpha:.3f}")
        for a, b in itertools.combinations(range(n_coders), 2):
            series = mx.PairedSeries(tuple(codes_of(ex)[a] for ex in corpus),
                                     tuple(codes_of(ex)[b] for ex in corpus))
            r = mx.pearson(series)
            print(f"{scale}\tpearson\t{a + 1}v{b + 1}\t" + ("NA" if r is None else f"{r:.3f}"))
            print(f"{scale}\tmad\t{a + 1}v{b + 1}\t{mx.mad(series):.3f}")
        full = 100.0 * sum(1 for ex in corpus if len(set(codes_of(ex))) == 1) / len(corpus)
        print(f"{scale}\tfull_agreement\tall\t{full:.3f}")
    return 0


def cmd_baseline(args) -> int:
    corpus = cp.load_corpus(args.corpus)
    kinds = ("nb", "logistic") if args.classifier == "both" else (args.classifier,)
    print("classifier\tn_features\tscale\t" + cp.AveragedReport.TSV_HEADER + "\tbest_for")
    if args.features == "sweep":
        rows, best = bl.sweep(corpus, args.scale, kinds=kinds, k=args.k,
                              reps=args.reps, base_seed=args.seed)
        marks = {}
        for metric, row in best.items():
            marks.setdefault((row[0], row[1]), []).append(metric)
        for kind, n, scale, rpt in rows:
            mark = ",".join(marks.get((kind, n), []))
            print(f"{kind}\t{n}\t{scale}\t{rpt.tsv_row()}\t{mark}")
    else:
        n = int(args.features)
        for kind in kinds:
            rpt = bl.crossval_baseline(corpus, args.scale, kind, n, k=args.k,
                                       reps=args.reps, base_seed=args.seed)
            print(f"{kind}\t{n}\t{args.scale}\t{rpt.tsv_row()}\t")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tensilex",
                                     description="Dual-scale stress/relaxation strength scoring.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="score texts, one per line (or - for stdin)")
    _add_lexicon_arg(p)
    p.add_argument("input", help="text file, one text per line, or - for stdin")
    p.add_argument("--tsv", action="store_true", help="input lines are id<TAB>text")
    p.add_argument("--trace", action="store_true", help="explanations on stderr")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("optimize", help="hill-climb term strengths against a corpus")
    _add_lexicon_arg(p)
    p.add_argument("corpus")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--min-improvement", type=int, default=2)
    p.add_argument("--max-passes", type=int, default=1000)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("evaluate", help="evaluate the lexicon against a corpus")
    _add_lexicon_arg(p)
    p.add_argument("corpus")
    p.add_argument("--subcorpus")
    p.add_argument("--unrounded", action="store_true",
                   help="MAD/correlation against unrounded coder means")
    p.add_argument("--supervised", action="store_true",
                   help="repeated k-fold cross validation with the optimizer")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--reps", type=int, default=30)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--log", help="write the detailed per-(rep,fold,scale) TSV log here")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("agreement", help="inter-coder agreement statistics")
    p.add_argument("codes", help="corpus TSV carrying the per-coder codes")
    p.set_defaults(func=cmd_agreement)

    p = sub.add_parser("baseline", help="n-gram machine-learning baseline")
    p.add_argument("corpus")
    p.add_argument("--classifier", choices=("nb", "logistic", "both"), default="both")
    p.add_argument("--features", default="sweep", help="feature count or 'sweep'")
    p.add_argument("--scale", choices=("stress", "relax"), required=True)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--reps", type=int, default=30)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_baseline)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "supervised", False) and args.seed is None:
        sys.stderr.write("error: --supervised requires --seed\n")
        return 2
    try:
        return args.func(args)
    except TensilexError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"I/O error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
