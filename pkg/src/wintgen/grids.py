"""Parameter grids for audits, theorem verdicts, and counterexample sweeps.

The default grid is fixed and versioned: each of a, b, c, mu, k~ ranges over
{-2, -1, 0, 1, 2}/3 (scaled by 1/3 to dodge accidental degeneracies), with
n in {4..7} and m = 3.  Every identity audited here is polynomial of total
degree <= 6 in these variables after clearing denominators, so exact
agreement on five distinct values per variable proves the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator

from .scalars import to_rational

GRID_VARS = ("a", "b", "c", "mu", "k_tilde")

_DEFAULT_VALUES = tuple(Fraction(k, 3) for k in (-2, -1, 0, 1, 2))


@dataclass(frozen=True)
class GridPoint:
    n: int
    m: int
    a: Fraction
    b: Fraction
    c: Fraction
    mu: Fraction
    k_tilde: Fraction

    def as_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "a": self.a, "b": self.b,
                "c": self.c, "mu": self.mu, "k_tilde": self.k_tilde}


@dataclass(frozen=True)
class GridSpec:
    values: dict[str, tuple[Fraction, ...]]
    n_list: tuple[int, ...]
    m_list: tuple[int, ...] = (3,)

    def __post_init__(self):
        for var in GRID_VARS:
            if var not in self.values:
                raise ValueError(f"grid is missing values for {var!r}")

    def points(self) -> Iterator[GridPoint]:
        """Deterministic iteration order: (n, m) outer, variables inner."""
        for n in self.n_list:
            for m in self.m_list:
                for a, b, c, mu, kt in product(self.values["a"], self.values["b"],
                                               self.values["c"], self.values["mu"],
                                               self.values["k_tilde"]):
                    yield GridPoint(n, m, a, b, c, mu, kt)

    def size(self) -> int:
        per = 1
        for var in GRID_VARS:
            per *= len(self.values[var])
        return per * len(self.n_list) * len(self.m_list)

    @classmethod
    def from_json(cls, path: str) -> GridSpec:
        with open(path) as fh:
            raw = json.load(fh)
        values = {var: tuple(to_rational(v) for v in raw["values"][var]) for var in GRID_VARS}
        return cls(values=values,
                   n_list=tuple(int(n) for n in raw["n_list"]),
                   m_list=tuple(int(m) for m in raw.get("m_list", [3])))


def default_grid(n_list: tuple[int, ...] = (4, 5, 6, 7),
                 m_list: tuple[int, ...] = (3,)) -> GridSpec:
    return GridSpec(values={var: _DEFAULT_VALUES for var in GRID_VARS},
                    n_list=n_list, m_list=m_list)


def small_grid() -> GridSpec:
    """Three values per variable, n in {4, 5}; for quick unit-test sweeps."""
    vals = tuple(Fraction(k, 3) for k in (-1, 0, 1))
    return GridSpec(values={var: vals for var in GRID_VARS}, n_list=(4, 5))
