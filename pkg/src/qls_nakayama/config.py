"""Instance configuration files (TOML) and their round-trip printer."""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .abelian_group import FiniteAbelianGroup
from .cyclotomic import CycScalar, ScalarSyntaxError, format_scalar, parse_scalar
from .hopf_core import LiftingDatum

SCHEMA = """\
# Instance configuration (TOML).  Indices in lambda_off keys are 1-based.
# Scalars are strings in the z-polynomial grammar, z = zeta_N with
# N = lcm(orders):   term := [+|-] (int | int/int) [* z[^k]] | [+|-] z[^k]
#                    e.g. "1/2*z^3 - z + 2"
name = "sweedler"            # optional, default "unnamed"
description = ""             # optional free text
orders = [2]                 # required: G = Z_{d1} x ... x Z_{dk}
g = [[1]]                    # required: g_i as exponent tuples, one per x_i
chi = [[1]]                  # required: chi_i as weight tuples, chi(e_j) = zeta_{d_j}^{w_j}
lambda_diag = ["0"]          # optional: lambda_i, default all "0"
lambda_off = {"1,2" = "1"}   # optional: lambda_ij for i < j; lambda_ji is derived
oracle_level = 1             # optional: 0 closed forms, 1 + integral/Nakayama oracles,
                             #           2 + brute-force gradings and Hopf axiom suite
max_dim = 128                # optional: oracles are skipped above this dimension
"""

KNOWN_KEYS = {"name", "description", "orders", "g", "chi", "lambda_diag", "lambda_off",
              "oracle_level", "max_dim"}
REQUIRED_KEYS = ("orders", "g", "chi")


class ConfigError(ValueError):
    pass


@dataclass
class InstanceConfig:
    name: str
    orders: tuple[int, ...]
    g: tuple[tuple[int, ...], ...]
    chi: tuple[tuple[int, ...], ...]
    lambda_diag: tuple[CycScalar, ...] = ()
    lambda_off: dict[tuple[int, int], CycScalar] = field(default_factory=dict)
    oracle_level: int = 1
    max_dim: int = 128
    description: str = ""

    @property
    def conductor(self) -> int:
        return math.lcm(*self.orders) if self.orders else 1

    @property
    def n(self) -> int:
        return len(self.g)

    def to_datum(self) -> LiftingDatum:
        G = FiniteAbelianGroup(self.orders)
        return LiftingDatum(
            group=G,
            g=[G(e) for e in self.g],
            chi=[G.character(w) for w in self.chi],
            lambda_diag=list(self.lambda_diag) or [CycScalar.zero(G.exponent)] * self.n,
            lambda_off=dict(self.lambda_off),
        )


def _int_tuple(value: Any, what: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise ConfigError(f"{what}: expected an array of integers, got {value!r}")
    return tuple(value)


def _scalar(text: Any, N: int, what: str) -> CycScalar:
    if isinstance(text, int) and not isinstance(text, bool):
        text = str(text)
    if not isinstance(text, str):
        raise ConfigError(f"{what}: expected a scalar string, got {text!r}")
    try:
        return parse_scalar(text, N)
    except ScalarSyntaxError as e:
        raise ConfigError(f"{what}: {e}") from None


def parse_config(text: str) -> InstanceConfig:
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"syntax error: {e}") from None
    unknown = sorted(set(doc) - KNOWN_KEYS)
    if unknown:
        raise ConfigError(f"unknown keys: {', '.join(unknown)}")
    missing = [k for k in REQUIRED_KEYS if k not in doc]
    if missing:
        raise ConfigError(f"missing required keys: {', '.join(missing)}")

    orders = _int_tuple(doc["orders"], "orders")
    if any(d < 1 for d in orders):
        raise ConfigError("orders: cyclic orders must be >= 1")
    N = math.lcm(*orders) if orders else 1
    if not isinstance(doc["g"], list) or not isinstance(doc["chi"], list):
        raise ConfigError("g and chi must be arrays of tuples")
    g = tuple(_int_tuple(v, f"g[{k+1}]") for k, v in enumerate(doc["g"]))
    chi = tuple(_int_tuple(v, f"chi[{k+1}]") for k, v in enumerate(doc["chi"]))
    for what, rows in (("g", g), ("chi", chi)):
        for k, row in enumerate(rows):
            if len(row) != len(orders):
                raise ConfigError(f"{what}[{k+1}]: expected {len(orders)} entries, got {len(row)}")
    if len(g) != len(chi):
        raise ConfigError(f"g has {len(g)} entries but chi has {len(chi)}")
    n = len(g)

    lam_diag_raw = doc.get("lambda_diag", ["0"] * n)
    if not isinstance(lam_diag_raw, list) or len(lam_diag_raw) != n:
        raise ConfigError(f"lambda_diag: expected an array of {n} scalars")
    lambda_diag = tuple(_scalar(v, N, f"lambda_diag[{k+1}]") for k, v in enumerate(lam_diag_raw))

    lam_off_raw = doc.get("lambda_off", {})
    if not isinstance(lam_off_raw, dict):
        raise ConfigError("lambda_off: expected a table of \"i,j\" = scalar")
    lambda_off = {}
    for key, v in lam_off_raw.items():
        try:
            i, j = (int(p) for p in key.split(","))
        except ValueError:
            raise ConfigError(f"lambda_off: bad key {key!r}, expected \"i,j\"") from None
        if not 1 <= i < j <= n:
            raise ConfigError(f"lambda_off: key {key!r} needs 1 <= i < j <= {n}")
        lambda_off[(i - 1, j - 1)] = _scalar(v, N, f"lambda_off[{key}]")

    level = doc.get("oracle_level", 1)
    if level not in (0, 1, 2):
        raise ConfigError("oracle_level must be 0, 1 or 2")
    max_dim = doc.get("max_dim", 128)
    if not isinstance(max_dim, int) or max_dim < 1:
        raise ConfigError("max_dim must be a positive integer")
    name = doc.get("name", "unnamed")
    description = doc.get("description", "")
    if not isinstance(name, str) or not isinstance(description, str):
        raise ConfigError("name and description must be strings")
    return InstanceConfig(name, orders, g, chi, lambda_diag, lambda_off, level, max_dim, description)


def _toml_str(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def _toml_ints(t) -> str:
    return "[" + ", ".join(str(v) for v in t) + "]"


def print_config(cfg: InstanceConfig) -> str:
    lines = [f"name = {_toml_str(cfg.name)}"]
    if cfg.description:
        lines.append(f"description = {_toml_str(cfg.description)}")
    lines.append(f"orders = {_toml_ints(cfg.orders)}")
    lines.append("g = [" + ", ".join(_toml_ints(e) for e in cfg.g) + "]")
    lines.append("chi = [" + ", ".join(_toml_ints(w) for w in cfg.chi) + "]")
    lines.append("lambda_diag = [" + ", ".join(_toml_str(format_scalar(v)) for v in cfg.lambda_diag) + "]")
    if cfg.lambda_off:
        items = ", ".join(
            f'"{i+1},{j+1}" = {_toml_str(format_scalar(v))}' for (i, j), v in sorted(cfg.lambda_off.items())
        )
        lines.append("lambda_off = {" + items + "}")
    lines.append(f"oracle_level = {cfg.oracle_level}")
    lines.append(f"max_dim = {cfg.max_dim}")
    return "\n".join(lines) + "\n"


def load_config(path) -> InstanceConfig:
    with open(path, encoding="utf-8") as f:
        return parse_config(f.read())
