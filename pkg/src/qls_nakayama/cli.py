"""Command line: analyze one config file, run the bundled corpus, print the schema."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .analysis import analyze
from .config import SCHEMA, ConfigError, load_config
from .corpus import run_corpus

EXIT_OK, EXIT_INVALID, EXIT_INCONSISTENT = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qls-nakayama",
                                description="Nakayama automorphism and gradings of liftings of quantum linear spaces")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one instance file")
    a.add_argument("file")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.add_argument("--oracle-level", type=int, choices=(0, 1, 2), default=None)
    a.add_argument("--max-dim", type=int, default=None)
    a.add_argument("--s2-grading", action="store_true", help="also report the S^2 eigenspace grading")
    a.add_argument("--monomials", action="store_true", help="list the basis monomials of each component")

    c = sub.add_parser("corpus", help="run the bundled corpus")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--oracle-level", type=int, choices=(0, 1, 2), default=None)
    c.add_argument("--max-dim", type=int, default=None)

    sub.add_parser("schema", help="print the config file grammar")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "schema":
        sys.stdout.write(SCHEMA)
        return EXIT_OK
    if args.command == "analyze":
        if args.max_dim is not None and args.max_dim < 1:
            print("error: --max-dim must be positive", file=sys.stderr)
            return EXIT_INVALID
        try:
            cfg = load_config(args.file)
        except (OSError, ConfigError) as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_INVALID
        report = analyze(cfg, args.oracle_level, args.max_dim, args.s2_grading, args.monomials)
        sys.stdout.write(report.to_json() + "\n" if args.format == "json" else report.to_text())
        return report.exit_code
    run = run_corpus(args.oracle_level, args.max_dim)
    sys.stdout.write(run.to_json() + "\n" if args.format == "json" else run.to_text())
    return run.exit_code


if __name__ == "__main__":
    sys.exit(main())
