"""Run the full analysis over the bundled corpus and print the summary table.

    python scripts/run_corpus.py [--oracle-level 0|1|2] [--json out.json]
"""

import argparse
import sys
import time

from qls_nakayama.corpus import CORPUS_ORDER, run_corpus


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--oracle-level", type=int, choices=(0, 1, 2), default=None)
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--only", nargs="*", choices=CORPUS_ORDER)
    p.add_argument("--json", help="also write the full JSON reports here")
    args = p.parse_args()

    t0 = time.time()
    run = run_corpus(args.oracle_level, args.max_dim, tuple(args.only) if args.only else None)
    sys.stdout.write(run.to_text())
    print(f"{len(run.reports)} instances in {time.time() - t0:.1f}s")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as f:
            f.write(run.to_json() + "\n")
    return run.exit_code


if __name__ == "__main__":
    sys.exit(main())
