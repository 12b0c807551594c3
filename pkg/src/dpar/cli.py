"""Operator command line: train models, analyze, recommend, eval, serve.

Exit codes: 0 success, 1 I/O or configuration problem, 2 policy
violation. Tables are tab-separated; ``--json`` emits exactly the JSON
the HTTP service would return for the same input.
"""

from __future__ import annotations

import argparse
import sys

from . import payloads
from .l33t import L33tTable, L33tTableError
from .model import EmptyCorpusError, ModelFormatError, load_model, save_model, train
from .policy import validate_policy
from .recommend import RecommenderConfig, VARIANTS, recommend
from .strength import RankEstimator
from .service import ServiceConfig, analyze_password, create_app, load_service_model

EXIT_OK = 0
EXIT_IO = 1
EXIT_POLICY = 2


class CliError(Exception):
    """Fatal CLI problem mapped to exit code 1."""


def _load_table(path):
    return L33tTable.load(path) if path else L33tTable.default()


def _load_model(args):
    table = L33tTable.load(args.l33t) if getattr(args, "l33t", None) else None
    return load_model(args.model, table)


def cmd_train(args) -> int:
    table = _load_table(args.l33t)
    try:
        with open(args.corpus, "r", encoding="utf-8", errors="replace") as fh:
            model = train(fh, table, min_count=args.min_count)
    except EmptyCorpusError as exc:
        raise CliError(str(exc)) from exc
    save_model(model, args.out)
    print(f"trained\t{model.meta['corpus_lines']}")
    print(f"skipped\t{model.skipped_lines}")
    print(f"out\t{args.out}")
    return EXIT_OK


def _policy_exit(args, policy) -> int:
    if args.json:
        print(payloads.dumps(payloads.violation_payload(policy)))
    else:
        print("policy violation: " + ", ".join(policy.violations),
              file=sys.stderr)
    return EXIT_POLICY


def cmd_analyze(args) -> int:
    model = _load_model(args)
    policy = validate_policy(args.password)
    if not policy.valid:
        return _policy_exit(args, policy)
    estimator = RankEstimator.from_model(model)
    payload = analyze_password(model, estimator, args.password,
                               RecommenderConfig())
    if args.json:
        print(payloads.dumps(payload))
    else:
        for key in ("PS", "category", "crack_seconds", "crack_human",
                    "feedback_text"):
            print(f"{key}\t{payload[key]}")
    return EXIT_OK


def cmd_recommend(args) -> int:
    model = _load_model(args)
    policy = validate_policy(args.password)
    if not policy.valid:
        return _policy_exit(args, policy)
    estimator = RankEstimator.from_model(model)
    config = RecommenderConfig(seed=args.seed)
    result = recommend(model, args.password, config, estimator)
    payload = payloads.recommend_payload(policy, result, args.variant)
    if args.json:
        print(payloads.dumps(payload))
        return EXIT_OK
    for key in ("PS", "category", "crack_human", "feedback_text"):
        print(f"{key}\t{payload[key]}")
    print("id\tld\tPS\tcrack_human\tlabel\tpassword\tmask")
    for button in payload["buttons"]:
        print(f"{button['id']}\t{button['ld']}\t{button['PS']}"
              f"\t{button['crack_human']}\t{button['label']}"
              f"\t{button['password']}\t{button['mask_preview']}")
    return EXIT_OK


def cmd_eval(args) -> int:
    model = _load_model(args)
    estimator = RankEstimator.from_model(model)
    passwords = []
    with open(args.sample, "r", encoding="utf-8", errors="replace") as fh:
        for line in fh:
            password = line.rstrip("\r\n").split("\t")[0]
            if password and validate_policy(password).valid:
                passwords.append(password)
            if len(passwords) >= args.n:
                break
    if len(passwords) < 10:
        raise CliError(f"need at least 10 policy-valid sample lines, "
                       f"got {len(passwords)}")
    rows = []
    improvements = []
    for index, password in enumerate(passwords):
        config = RecommenderConfig(seed=args.seed + index)
        result = recommend(model, password, config, estimator)
        orig = result.report.strength_bits
        if result.buttons:
            best = max(result.buttons, key=lambda b: b.strength_bits)
            best_bits, distance = best.strength_bits, best.distance
        else:
            best_bits, distance = orig, 0
        improvement = best_bits - orig
        improvements.append(improvement)
        rows.append({"index": index, "original_ps": orig, "best_ps": best_bits,
                     "ld": distance, "improvement": improvement})
    mean = sum(improvements) / len(improvements)
    if args.json:
        print(payloads.dumps({"rows": rows, "count": len(rows),
                              "mean_improvement": mean, "seed": args.seed}))
        return EXIT_OK
    print("index\toriginal_ps\tbest_ps\tld\timprovement")
    for row in rows:
        print(f"{row['index']}\t{row['original_ps']}\t{row['best_ps']}"
              f"\t{row['ld']}\t{row['improvement']}")
    print(f"count\t{len(rows)}")
    print(f"mean_improvement\t{mean}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    config = ServiceConfig.from_file(args.config)
    if args.model:
        config.model_path = args.model
    if args.host:
        config.host = args.host
    if args.port:
        config.port = args.port
    if args.l33t:
        config.l33t_path = args.l33t
    model = load_service_model(config)
    app = create_app(model, config)
    uvicorn.run(app, host=config.host, port=config.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dpar")
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train a model from a corpus")
    p_train.add_argument("--corpus", required=True)
    p_train.add_argument("--l33t", default=None)
    p_train.add_argument("--min-count", dest="min_count", type=int, default=1)
    p_train.add_argument("--out", required=True)
    p_train.set_defaults(func=cmd_train)

    p_analyze = sub.add_parser("analyze", help="strength report for a password")
    p_analyze.add_argument("--model", required=True)
    p_analyze.add_argument("--l33t", default=None)
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.add_argument("password")
    p_analyze.set_defaults(func=cmd_analyze)

    p_rec = sub.add_parser("recommend", help="tweak recommendations")
    p_rec.add_argument("--model", required=True)
    p_rec.add_argument("--l33t", default=None)
    p_rec.add_argument("--seed", type=int, default=None)
    p_rec.add_argument("--variant", choices=VARIANTS, default="asterisks")
    p_rec.add_argument("--json", action="store_true")
    p_rec.add_argument("password")
    p_rec.set_defaults(func=cmd_recommend)

    p_eval = sub.add_parser("eval", help="improvement statistics on a sample")
    p_eval.add_argument("--model", required=True)
    p_eval.add_argument("--l33t", default=None)
    p_eval.add_argument("--sample", required=True)
    p_eval.add_argument("--seed", type=int, required=True)
    p_eval.add_argument("--n", type=int, default=1000)
    p_eval.add_argument("--json", action="store_true")
    p_eval.set_defaults(func=cmd_eval)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--config", default=None)
    p_serve.add_argument("--model", default=None)
    p_serve.add_argument("--host", default=None)
    p_serve.add_argument("--port", type=int, default=None)
    p_serve.add_argument("--l33t", default=None)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, OSError, ModelFormatError, L33tTableError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
