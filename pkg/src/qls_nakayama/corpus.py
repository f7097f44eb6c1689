"""The bundled instance corpus and the corpus-wide run."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .analysis import AnalysisReport, analyze
from .config import InstanceConfig, parse_config

CORPUS_ORDER = (
    "group_algebra_trivial",
    "group_algebra_z4",
    "group_algebra_z2xz3",
    "sweedler",
    "taft_2",
    "taft_3",
    "taft_4",
    "taft_5",
    "example_n1",
    "example_n2",
    "example_n3",
    "example_n4",
    "example_n5",
    "z4_single_lifting",
    "z4_two_gen_unimodular",
    "z4_mixed_lifting",
    "z4xz2_strong_lifting",
    "z3xz3_skew_qls",
    "z8_lifting",
)


def corpus_text(name: str) -> str:
    return resources.files(__package__).joinpath("corpus").joinpath(f"{name}.toml").read_text(encoding="utf-8")


def load_corpus(names: Optional[tuple[str, ...]] = None) -> list[InstanceConfig]:
    return [parse_config(corpus_text(n)) for n in (names or CORPUS_ORDER)]


@dataclass
class CorpusRun:
    reports: list[AnalysisReport]

    @property
    def exit_code(self) -> int:
        return max((r.exit_code for r in self.reports), default=0)

    def rows(self) -> list[dict]:
        out = []
        for r in self.reports:
            v = r.verdicts
            out.append({
                "instance": r.name,
                "dim": r.dim,
                "unimodular": v["unimodular"].value if v else None,
                "strongly_graded": v["strongly_graded"].value if v else None,
                "equidimensional": v["equidimensional"].value if v else None,
                "ord_rho": r.orders.get("rho"),
                "ord_S2": r.orders.get("S^2"),
                **r.counts(),
                "disagreements": r.disagreements(),
                "exit_code": r.exit_code,
            })
        return out

    def to_text(self) -> str:
        head = (f"{'instance':<24}{'dim':>5}  {'unimod':<7}{'strong':<7}{'equidim':<8}"
                f"{'ord rho':>8}{'ord S2':>7}{'pass':>6}{'fail':>5}{'skip':>5}  disagreements")
        lines = [head, "-" * len(head)]
        yn = {True: "yes", False: "no", None: "-"}
        for row in self.rows():
            lines.append(
                f"{row['instance']:<24}{row['dim'] or '-':>5}  {yn[row['unimodular']]:<7}"
                f"{yn[row['strongly_graded']]:<7}{yn[row['equidimensional']]:<8}"
                f"{row['ord_rho'] or '-':>8}{row['ord_S2'] or '-':>7}{row['pass']:>6}{row['fail']:>5}"
                f"{row['skipped']:>5}  {', '.join(row['disagreements']) or '-'}"
            )
        lines.append(f"exit code {self.exit_code}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        from .analysis import SCHEMA_VERSION
        return json.dumps({"schema_version": SCHEMA_VERSION, "instances": self.rows(),
                           "reports": [r.to_dict() for r in self.reports],
                           "exit_code": self.exit_code}, indent=2, ensure_ascii=False)


def run_corpus(oracle_level: Optional[int] = None, max_dim: Optional[int] = None,
               names: Optional[tuple[str, ...]] = None) -> CorpusRun:
    return CorpusRun([analyze(cfg, oracle_level, max_dim, s2_grading=True) for cfg in load_corpus(names)])
