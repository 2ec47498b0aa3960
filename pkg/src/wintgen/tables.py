"""Literal transcriptions of the closed-form component tables (source 2.2).

Every display of the source is transcribed as printed, one ``SliceFormula``
per line: for fixed first pair (x1, x2) and last pair (x, y), the (Z, W)
slice is claimed to equal a combination of elementary wedge matrices
``sum_t coeff_t * <(E_p wedge_g E_q) Z, W>``.  The audit compares each claim
against brute-force evaluation; transcriptions are deliberately NOT repaired
when a printed coefficient looks wrong, so genuine misprints surface as
errata rows.  Two lines of the source are not evaluable as printed and are
bound per the evident pattern of the sibling tables: the generic-index lines
of QgC_04 (printed with unbound X, Y) are read as (E_i, E_j, Z, W; ...).

Index symbols: '1', '2' are E_1, E_2; 'i', 'j', 'k' range over distinct
values in {3..n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable


@dataclass(frozen=True)
class Env:
    """One parameter point; h = H^2 + k~ with H^2 = a^2 + b^2 + c^2."""

    n: int
    a: Fraction
    b: Fraction
    c: Fraction
    mu: Fraction
    kt: Fraction

    @property
    def h(self) -> Fraction:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.kt


Coeff = Callable[[Env], Fraction]


@dataclass(frozen=True)
class SliceFormula:
    table: str                      # source label, e.g. "r.c_01"
    tensor: str                     # engine tensor id, e.g. "R.C"
    line: str                       # line tag within the table
    first: tuple[str, str]          # (x1, x2) symbols
    last: tuple[str, str]           # (x, y) symbols
    terms: tuple[tuple[Coeff, tuple[str, str]], ...]
    index_vars: str                 # "", "i", "ij", or "ijk"


def _f(table, tensor, line, first, last, terms, index_vars) -> SliceFormula:
    return SliceFormula(table, tensor, line, first, last, tuple(terms), index_vars)


F = Fraction


def _zero(e: Env) -> Fraction:
    return F(0)


# --- R.C (source 2.2.2, r.c_01 .. r.c_04) ---------------------------------

RC_FORMULAS = [
    _f("r.c_01", "R.C", "L1", ("1", "2"), ("1", "i"), [
        (lambda e: F(2 * (e.n - 3), e.n - 2) * e.mu ** 3 * e.a, ("1", "i")),
        (lambda e: -F(2 * (e.n - 3), e.n - 2) * e.mu ** 2 * (e.h + e.mu * e.b), ("2", "i")),
    ], "i"),
    _f("r.c_01", "R.C", "L2", ("1", "2"), ("2", "i"), [
        (lambda e: F(2 * (e.n - 3), e.n - 2) * e.mu ** 2 * (e.h - e.mu * e.b), ("1", "i")),
        (lambda e: -F(2 * (e.n - 3), e.n - 2) * e.mu ** 3 * e.a, ("2", "i")),
    ], "i"),
    _f("r.c_02", "R.C", "L1", ("1", "i"), ("1", "2"), [], "i"),
    _f("r.c_02", "R.C", "L2", ("1", "i"), ("1", "j"), [
        (lambda e: F(2, e.n - 2) * e.mu ** 2 * (e.h + e.mu * e.b), ("i", "j")),
    ], "ij"),
    _f("r.c_02", "R.C", "L3", ("1", "i"), ("2", "i"), [
        (lambda e: F(2 * (e.n - 3), e.n - 2) * e.mu ** 2 * (e.h - e.mu * e.b), ("1", "2")),
    ], "i"),
    _f("r.c_02", "R.C", "L4", ("1", "i"), ("i", "j"), [], "ij"),
    _f("r.c_03", "R.C", "L1", ("2", "i"), ("2", "1"), [], "i"),
    _f("r.c_03", "R.C", "L2", ("2", "i"), ("2", "j"), [
        (lambda e: F(2, e.n - 2) * e.mu ** 2 * (e.h - e.mu * e.b), ("i", "j")),
    ], "ij"),
    _f("r.c_03", "R.C", "L3", ("2", "i"), ("i", "1"), [
        (lambda e: F(2 * (e.n - 3), e.n - 2) * e.mu ** 2 * (e.h + e.mu * e.b), ("1", "2")),
    ], "i"),
    _f("r.c_03", "R.C", "L4", ("2", "i"), ("i", "j"), [], "ij"),
    # r.c_04 L1 second coefficient is printed 2 mu^2 a/(n-2): transcribed as is
    _f("r.c_04", "R.C", "L1", ("i", "j"), ("i", "1"), [
        (lambda e: F(2, e.n - 2) * e.mu ** 2 * (e.h + e.mu * e.b), ("1", "j")),
        (lambda e: F(2, e.n - 2) * e.mu ** 2 * e.a, ("2", "j")),
    ], "ij"),
    _f("r.c_04", "R.C", "L2", ("i", "j"), ("i", "2"), [
        (lambda e: F(2, e.n - 2) * e.mu ** 3 * e.a, ("1", "j")),
        (lambda e: F(2, e.n - 2) * e.mu ** 2 * (e.h - e.mu * e.b), ("2", "j")),
    ], "ij"),
    _f("r.c_04", "R.C", "L3", ("i", "j"), ("i", "k"), [], "ijk"),
    _f("r.c_04", "R.C", "L4", ("i", "j"), ("j", "k"), [], "ijk"),
]

# --- C.R (c.r_01 .. c.r_04) ------------------------------------------------

CR_FORMULAS = [
    _f("c.r_01", "C.R", "L1", ("1", "2"), ("1", "i"), [
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 3 * e.a, ("1", "i")),
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2 * (2 * e.mu ** 2 - e.mu * e.b), ("2", "i")),
    ], "i"),
    _f("c.r_01", "C.R", "L2", ("1", "2"), ("2", "i"), [
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2 * (2 * e.mu ** 2 + e.mu * e.b), ("1", "i")),
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 3 * e.a, ("2", "i")),
    ], "i"),
    _f("c.r_02", "C.R", "L1", ("1", "i"), ("1", "2"), [
        (lambda e: -F(4 * (e.n - 3), e.n - 1) * e.mu ** 3 * e.a, ("1", "i")),
        (lambda e: F(4 * (e.n - 3), e.n - 1) * e.mu ** 3 * e.b, ("2", "i")),
    ], "i"),
    _f("c.r_02", "C.R", "L2", ("1", "i"), ("1", "j"), [
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 3 * e.b, ("i", "j")),
    ], "ij"),
    _f("c.r_02", "C.R", "L3", ("1", "i"), ("2", "i"), [
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2 * (2 * e.mu ** 2 + e.mu * e.b), ("1", "2")),
    ], "i"),
    _f("c.r_02", "C.R", "L4", ("1", "i"), ("i", "j"), [], "ij"),
    _f("c.r_03", "C.R", "L1", ("2", "i"), ("2", "1"), [
        (lambda e: -F(4 * (e.n - 3), e.n - 1) * e.mu ** 3 * e.b, ("1", "i")),
        (lambda e: -F(4 * (e.n - 3), e.n - 1) * e.mu ** 3 * e.a, ("2", "i")),
    ], "i"),
    _f("c.r_03", "C.R", "L2", ("2", "i"), ("2", "j"), [
        (lambda e: -F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 3 * e.b, ("i", "j")),
    ], "ij"),
    _f("c.r_03", "C.R", "L3", ("2", "i"), ("i", "1"), [
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2 * (2 * e.mu ** 2 - e.b * e.mu), ("1", "2")),
    ], "i"),
    _f("c.r_03", "C.R", "L4", ("2", "i"), ("i", "j"), [], "ij"),
    _f("c.r_04", "C.R", "L1", ("i", "j"), ("i", "1"), [
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 3 * e.b, ("1", "j")),
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 3 * e.a, ("2", "j")),
    ], "ijk"),
    # c.r_04 L2 prints E_i (not E_j) in both wedges: transcribed as is
    _f("c.r_04", "C.R", "L2", ("i", "j"), ("i", "2"), [
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 3 * e.a, ("1", "i")),
        (lambda e: -F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 3 * e.b, ("2", "i")),
    ], "ijk"),
    _f("c.r_04", "C.R", "L3", ("i", "j"), ("i", "k"), [], "ijk"),
    _f("c.r_04", "C.R", "L4", ("i", "j"), ("j", "k"), [], "ijk"),
]

# --- R.C - C.R (r.c-c.r_01 .. _04) -----------------------------------------

DIFF_FORMULAS = [
    _f("r.c-c.r_01", "R.C-C.R", "L1", ("1", "2"), ("1", "i"), [
        (lambda e: F(2 * (e.n - 3), e.n - 1) * e.mu ** 3 * e.a, ("1", "i")),
        (lambda e: -F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) * e.h + (e.n - 2) * e.mu * e.b + 2 * e.mu ** 2), ("2", "i")),
    ], "i"),
    _f("r.c-c.r_01", "R.C-C.R", "L2", ("1", "2"), ("2", "i"), [
        (lambda e: -F(2 * e.n * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 3 * e.a, ("2", "i")),
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) * e.h - e.n * e.mu * e.b - 2 * e.mu ** 2), ("1", "i")),
    ], "i"),
    _f("r.c-c.r_02", "R.C-C.R", "L1", ("1", "i"), ("1", "2"), [
        (lambda e: F(4 * (e.n - 3), e.n - 1) * e.mu ** 3 * e.a, ("1", "i")),
        (lambda e: -F(4 * (e.n - 3), e.n - 1) * e.mu ** 3 * e.b, ("2", "i")),
    ], "i"),
    _f("r.c-c.r_02", "R.C-C.R", "L2", ("1", "i"), ("1", "j"), [
        (lambda e: F(2, (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) * e.h + 2 * e.mu * e.b), ("i", "j")),
    ], "ij"),
    _f("r.c-c.r_02", "R.C-C.R", "L3", ("1", "i"), ("2", "i"), [
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) * e.h - e.n * e.mu * e.b - 2 * e.mu ** 2), ("1", "2")),
    ], "i"),
    _f("r.c-c.r_02", "R.C-C.R", "L4", ("1", "i"), ("i", "j"), [], "ij"),
    _f("r.c-c.r_03", "R.C-C.R", "L1", ("2", "i"), ("2", "1"), [
        (lambda e: F(4 * (e.n - 3), e.n - 1) * e.mu ** 3 * e.b, ("1", "i")),
        (lambda e: F(4 * (e.n - 3), e.n - 1) * e.mu ** 3 * e.a, ("2", "i")),
    ], "i"),
    _f("r.c-c.r_03", "R.C-C.R", "L2", ("2", "i"), ("2", "j"), [
        (lambda e: F(2, (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) * e.h - 2 * e.mu * e.b), ("i", "j")),
    ], "ij"),
    _f("r.c-c.r_03", "R.C-C.R", "L3", ("2", "i"), ("i", "1"), [
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) * e.h + e.n * e.mu * e.b), ("1", "2")),
    ], "i"),
    _f("r.c-c.r_03", "R.C-C.R", "L4", ("2", "i"), ("i", "j"), [], "ij"),
    # r.c-c.r_04 L1/L2 print E_i in the wedges where the sibling tables
    # have E_j: transcribed as printed
    _f("r.c-c.r_04", "R.C-C.R", "L1", ("i", "j"), ("i", "1"), [
        (lambda e: F(2, (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) * e.h + 2 * e.mu * e.b), ("1", "i")),
        (lambda e: F(4, (e.n - 1) * (e.n - 2)) * e.mu ** 3 * e.a, ("2", "i")),
    ], "ijk"),
    _f("r.c-c.r_04", "R.C-C.R", "L2", ("i", "j"), ("i", "2"), [
        (lambda e: F(4, (e.n - 1) * (e.n - 2)) * e.mu ** 3 * e.a, ("1", "i")),
        (lambda e: F(2, (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) * e.h - 2 * e.mu * e.b), ("2", "i")),
    ], "ijk"),
    _f("r.c-c.r_04", "R.C-C.R", "L3", ("i", "j"), ("i", "k"), [], "ijk"),
    _f("r.c-c.r_04", "R.C-C.R", "L4", ("i", "j"), ("j", "k"), [], "ijk"),
]

# --- Q(g, R) (Qgr_01 .. _04) ------------------------------------------------

QGR_FORMULAS = [
    _f("Qgr_01", "Q(g,R)", "L1", ("1", "2"), ("1", "i"), [
        (lambda e: e.b * e.mu - 2 * e.mu ** 2, ("2", "i")),
    ], "i"),
    _f("Qgr_01", "Q(g,R)", "L2", ("1", "2"), ("2", "i"), [
        (lambda e: e.b * e.mu + 2 * e.mu ** 2, ("1", "i")),
        (lambda e: -e.a * e.mu, ("2", "i")),
    ], "i"),
    _f("Qgr_02", "Q(g,R)", "L1", ("1", "i"), ("1", "2"), [
        (lambda e: e.a * e.mu, ("1", "i")),
        (lambda e: -2 * e.b * e.mu, ("2", "i")),
    ], "i"),
    _f("Qgr_02", "Q(g,R)", "L2", ("1", "i"), ("1", "j"), [
        (lambda e: e.b * e.mu, ("i", "j")),
    ], "ij"),
    _f("Qgr_02", "Q(g,R)", "L3", ("1", "i"), ("2", "i"), [
        (lambda e: e.b * e.mu + 2 * e.mu ** 2, ("1", "2")),
    ], "i"),
    _f("Qgr_02", "Q(g,R)", "L4", ("1", "i"), ("i", "j"), [], "ij"),
    _f("Qgr_03", "Q(g,R)", "L1", ("2", "i"), ("1", "2"), [
        (lambda e: 2 * e.b * e.mu, ("1", "i")),
        (lambda e: -e.a * e.mu, ("2", "i")),
    ], "i"),
    _f("Qgr_03", "Q(g,R)", "L2", ("2", "i"), ("2", "j"), [
        (lambda e: -e.b * e.mu, ("i", "j")),
    ], "ij"),
    _f("Qgr_03", "Q(g,R)", "L3", ("2", "i"), ("i", "1"), [
        (lambda e: -e.b * e.mu + 2 * e.mu ** 2, ("1", "2")),
    ], "i"),
    _f("Qgr_03", "Q(g,R)", "L4", ("2", "i"), ("i", "j"), [], "ij"),
    _f("Qgr_04", "Q(g,R)", "L1", ("i", "j"), ("i", "1"), [
        (lambda e: e.b * e.mu, ("1", "j")),
    ], "ijk"),
    _f("Qgr_04", "Q(g,R)", "L2", ("i", "j"), ("i", "2"), [
        (lambda e: e.a * e.mu, ("1", "j")),
        (lambda e: -e.b * e.mu, ("2", "j")),
    ], "ijk"),
    _f("Qgr_04", "Q(g,R)", "L3", ("i", "j"), ("i", "k"), [], "ijk"),
    _f("Qgr_04", "Q(g,R)", "L4", ("i", "j"), ("j", "k"), [], "ijk"),
]

# --- Q(g, C) (QgC_01 .. _04) ------------------------------------------------

QGC_FORMULAS = [
    _f("QgC_01", "Q(g,C)", "L1", ("1", "2"), ("1", "i"), [
        (lambda e: -F(2 * (e.n - 3), e.n - 2) * e.mu ** 2, ("2", "i")),
    ], "i"),
    _f("QgC_01", "Q(g,C)", "L2", ("1", "2"), ("2", "i"), [
        (lambda e: F(2 * (e.n - 3), e.n - 2) * e.mu ** 2, ("1", "i")),
    ], "i"),
    _f("QgC_02", "Q(g,C)", "L1", ("1", "i"), ("1", "2"), [], "i"),
    _f("QgC_02", "Q(g,C)", "L2", ("1", "i"), ("1", "j"), [
        (lambda e: F(2, e.n - 2) * e.mu ** 2, ("i", "j")),
    ], "ij"),
    _f("QgC_02", "Q(g,C)", "L3", ("1", "i"), ("2", "i"), [
        (lambda e: F(2 * (e.n - 3), e.n - 2) * e.mu ** 2, ("1", "2")),
    ], "i"),
    _f("QgC_02", "Q(g,C)", "L4", ("1", "i"), ("i", "j"), [], "ij"),
    _f("QgC_03", "Q(g,C)", "L1", ("2", "i"), ("2", "1"), [], "i"),
    _f("QgC_03", "Q(g,C)", "L2", ("2", "i"), ("2", "j"), [
        (lambda e: F(2, e.n - 2) * e.mu ** 2, ("i", "j")),
    ], "ij"),
    _f("QgC_03", "Q(g,C)", "L3", ("2", "i"), ("i", "1"), [
        (lambda e: F(2 * (e.n - 3), e.n - 2) * e.mu ** 2, ("1", "2")),
    ], "i"),
    # QgC_03 L4 repeats the L3 index pattern with value 0: transcribed as is
    _f("QgC_03", "Q(g,C)", "L4", ("2", "i"), ("i", "1"), [], "i"),
    _f("QgC_04", "Q(g,C)", "L1", ("i", "j"), ("i", "1"), [
        (lambda e: F(2, e.n - 2) * e.mu ** 2, ("1", "j")),
    ], "ijk"),
    _f("QgC_04", "Q(g,C)", "L2", ("i", "j"), ("i", "2"), [
        (lambda e: F(2, e.n - 2) * e.mu ** 2, ("2", "j")),
    ], "ijk"),
    _f("QgC_04", "Q(g,C)", "L3", ("i", "j"), ("i", "k"), [], "ijk"),
    _f("QgC_04", "Q(g,C)", "L4", ("i", "j"), ("j", "k"), [], "ijk"),
]

# --- Q(g, g^Ricc) (QgGvS01 .. 04) --------------------------------------------

QGGR_FORMULAS = [
    _f("QgGvS01", "Q(g,g^Ricc)", "L1", ("1", "2"), ("1", "i"), [
        (lambda e: (e.n - 2) * e.b * e.mu - 2 * e.mu ** 2, ("2", "i")),
    ], "i"),
    _f("QgGvS01", "Q(g,g^Ricc)", "L2", ("1", "2"), ("2", "i"), [
        (lambda e: (e.n - 2) * e.b * e.mu + 2 * e.mu ** 2, ("1", "i")),
    ], "i"),
    _f("QgGvS02", "Q(g,g^Ricc)", "L1", ("1", "i"), ("1", "2"), [
        (lambda e: -2 * (e.n - 2) * e.b * e.mu, ("2", "i")),
    ], "i"),
    _f("QgGvS02", "Q(g,g^Ricc)", "L2", ("1", "i"), ("1", "j"), [
        (lambda e: -(e.n - 2) * e.b * e.mu + 2 * e.mu ** 2, ("i", "j")),
    ], "ij"),
    _f("QgGvS02", "Q(g,g^Ricc)", "L3", ("1", "i"), ("2", "i"), [
        (lambda e: (e.n - 2) * e.b * e.mu + 2 * e.mu ** 2, ("1", "2")),
    ], "i"),
    _f("QgGvS02", "Q(g,g^Ricc)", "L4", ("1", "i"), ("i", "j"), [], "ij"),
    _f("QgGvS03", "Q(g,g^Ricc)", "L1", ("2", "i"), ("2", "1"), [
        (lambda e: 2 * (e.n - 2) * e.b * e.mu, ("1", "i")),
    ], "i"),
    _f("QgGvS03", "Q(g,g^Ricc)", "L2", ("2", "i"), ("2", "j"), [
        (lambda e: -(e.n - 2) * e.b * e.mu - 2 * e.mu ** 2, ("i", "j")),
    ], "ij"),
    _f("QgGvS03", "Q(g,g^Ricc)", "L3", ("2", "i"), ("i", "1"), [
        (lambda e: -(e.n - 2) * e.b * e.mu + 2 * e.mu ** 2, ("1", "2")),
    ], "i"),
    _f("QgGvS03", "Q(g,g^Ricc)", "L4", ("2", "i"), ("i", "j"), [], "ij"),
    _f("QgGvS04", "Q(g,g^Ricc)", "L1", ("i", "j"), ("i", "1"), [
        (lambda e: (e.n - 2) * e.b * e.mu - 2 * e.mu ** 2, ("1", "j")),
    ], "ijk"),
    # QgGvS04 L2 prints the wedge E_2 ^ E_i (not E_j): transcribed as is
    _f("QgGvS04", "Q(g,g^Ricc)", "L2", ("i", "j"), ("i", "2"), [
        (lambda e: -(e.n - 2) * e.b * e.mu - 2 * e.mu ** 2, ("2", "i")),
    ], "ijk"),
    # QgGvS04 L3 prints the last pair (E_i, E_j) rather than (E_i, E_k)
    _f("QgGvS04", "Q(g,g^Ricc)", "L3", ("i", "j"), ("i", "j"), [], "ij"),
    _f("QgGvS04", "Q(g,g^Ricc)", "L4", ("i", "j"), ("j", "k"), [], "ijk"),
]

# --- Q(Ricc, R) (QSR_01 .. _04) ----------------------------------------------

QSR_FORMULAS = [
    _f("QSR_01", "Q(Ricc,R)", "L1", ("1", "2"), ("1", "i"), [
        (lambda e: e.a * e.mu * (-e.h + 2 * e.mu ** 2), ("1", "i")),
        (lambda e: ((e.n - 2) * (e.a ** 2 + e.b ** 2) * e.mu ** 2 - 2 * e.b * e.mu ** 3
                    - (2 * e.n - 4) * e.mu ** 2 * e.h + e.b * e.mu * e.h), ("2", "i")),
    ], "i"),
    _f("QSR_01", "Q(Ricc,R)", "L2", ("1", "2"), ("2", "i"), [
        (lambda e: (-2 * e.b * e.mu ** 3 - (e.n - 2) * (e.a ** 2 + e.b ** 2) * e.mu ** 2
                    + (2 * e.n - 4) * e.mu ** 2 * e.h + e.b * e.mu * e.h), ("1", "i")),
        (lambda e: -2 * e.a * e.mu ** 3 + e.a * e.mu * e.h, ("2", "i")),
    ], "i"),
    _f("QSR_02", "Q(Ricc,R)", "L1", ("1", "i"), ("1", "2"), [
        (lambda e: 2 * e.a * e.mu * (e.h - 2 * e.mu ** 2), ("1", "i")),
        (lambda e: 2 * e.b * e.mu * (-e.h + 2 * e.mu ** 2), ("2", "i")),
    ], "i"),
    _f("QSR_02", "Q(Ricc,R)", "L2", ("1", "i"), ("1", "j"), [
        (lambda e: e.h * (e.b * e.mu + 2 * e.mu ** 2), ("i", "j")),
    ], "ij"),
    _f("QSR_02", "Q(Ricc,R)", "L3", ("1", "i"), ("2", "i"), [
        (lambda e: (-(e.n - 2) * (e.a ** 2 + e.b ** 2) * e.mu ** 2 - 2 * e.b * e.mu ** 3
                    + (2 * e.n - 4) * e.mu ** 2 * e.h + e.b * e.mu * e.h), ("1", "2")),
    ], "i"),
    _f("QSR_02", "Q(Ricc,R)", "L4", ("1", "i"), ("i", "j"), [], "ij"),
    _f("QSR_03", "Q(Ricc,R)", "L1", ("2", "i"), ("2", "1"), [
        (lambda e: 2 * e.b * e.mu * e.h - 4 * e.b * e.mu ** 3, ("1", "i")),
        (lambda e: 2 * e.a * e.mu * e.h - 4 * e.a * e.mu ** 3, ("2", "i")),
    ], "i"),
    _f("QSR_03", "Q(Ricc,R)", "L2", ("2", "i"), ("2", "j"), [
        (lambda e: (-e.b * e.mu + 2 * e.mu ** 2) * e.h, ("i", "j")),
    ], "ij"),
    _f("QSR_03", "Q(Ricc,R)", "L3", ("2", "i"), ("i", "1"), [
        (lambda e: (2 * e.b * e.mu ** 3 - (e.n - 2) * (e.a ** 2 + e.b ** 2) * e.mu ** 2
                    + (2 * e.n - 4) * e.mu ** 2 * e.h - e.b * e.mu * e.h), ("1", "2")),
    ], "i"),
    _f("QSR_03", "Q(Ricc,R)", "L4", ("2", "i"), ("i", "j"), [], "ij"),
    _f("QSR_04", "Q(Ricc,R)", "L1", ("i", "j"), ("i", "1"), [
        (lambda e: (e.b * e.mu + 2 * e.mu ** 2) * e.h, ("1", "j")),
        (lambda e: e.a * e.mu * e.h, ("2", "j")),
    ], "ijk"),
    _f("QSR_04", "Q(Ricc,R)", "L2", ("i", "j"), ("i", "2"), [
        (lambda e: e.a * e.mu * e.h, ("1", "j")),
        (lambda e: (-e.b * e.mu + 2 * e.mu ** 2) * e.h, ("2", "j")),
    ], "ijk"),
    _f("QSR_04", "Q(Ricc,R)", "L3", ("i", "j"), ("i", "k"), [], "ijk"),
    _f("QSR_04", "Q(Ricc,R)", "L4", ("i", "j"), ("j", "k"), [], "ijk"),
]

# --- Q(Ricc, C) (QSC_01 .. _04) ----------------------------------------------

QSC_FORMULAS = [
    _f("QSC_01", "Q(Ricc,C)", "L1", ("1", "2"), ("1", "i"), [
        (lambda e: F(2 * (e.n - 3), e.n - 1) * e.a * e.mu ** 3, ("1", "i")),
        (lambda e: -F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) ** 2 * e.h + (e.n - 2) * e.b * e.mu - 2 * e.mu ** 2), ("2", "i")),
    ], "i"),
    _f("QSC_01", "Q(Ricc,C)", "L2", ("1", "2"), ("2", "i"), [
        (lambda e: -F(2 * (e.n - 3), e.n - 1) * e.a * e.mu ** 3, ("2", "i")),
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) ** 2 * e.h - (e.n - 2) * e.b * e.mu - 2 * e.mu ** 2), ("1", "i")),
    ], "i"),
    _f("QSC_02", "Q(Ricc,C)", "L1", ("1", "i"), ("1", "2"), [
        (lambda e: -F(4 * (e.n - 3), e.n - 1) * e.a * e.mu ** 3, ("1", "i")),
        (lambda e: F(4 * (e.n - 3), e.n - 1) * e.b * e.mu ** 3, ("2", "i")),
    ], "i"),
    _f("QSC_02", "Q(Ricc,C)", "L2", ("1", "i"), ("1", "j"), [
        (lambda e: F(2, (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) ** 2 * e.h + 2 * (e.n - 2) * e.b * e.mu - 4 * e.mu ** 2), ("i", "j")),
    ], "ij"),
    _f("QSC_02", "Q(Ricc,C)", "L3", ("1", "i"), ("2", "i"), [
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) ** 2 * e.h - (e.n - 2) * e.b * e.mu - 2 * e.mu ** 2), ("1", "2")),
    ], "i"),
    # QSC_02 L4 prints a nonzero value where the sibling tables vanish
    _f("QSC_02", "Q(Ricc,C)", "L4", ("1", "i"), ("i", "j"), [
        (lambda e: -F(2 * (e.n - 3), e.n - 1) * e.a * e.mu ** 3, ("1", "2")),
    ], "ij"),
    _f("QSC_03", "Q(Ricc,C)", "L1", ("2", "i"), ("2", "1"), [
        (lambda e: F(4 * (e.n - 3), e.n - 1) * e.b * e.mu ** 3, ("1", "i")),
        (lambda e: -F(4 * (e.n - 3), e.n - 1) * e.a * e.mu ** 3, ("2", "i")),
    ], "i"),
    _f("QSC_03", "Q(Ricc,C)", "L2", ("2", "i"), ("2", "j"), [
        (lambda e: F(2, (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) ** 2 * e.h - 2 * (e.n - 2) * e.b * e.mu - 4 * e.mu ** 2), ("i", "j")),
    ], "ij"),
    _f("QSC_03", "Q(Ricc,C)", "L3", ("2", "i"), ("i", "1"), [
        (lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) ** 2 * e.h + (e.n - 2) * e.b * e.mu - 2 * e.mu ** 2), ("1", "2")),
    ], "i"),
    _f("QSC_03", "Q(Ricc,C)", "L4", ("2", "i"), ("i", "j"), [], "ij"),
    _f("QSC_04", "Q(Ricc,C)", "L1", ("i", "j"), ("i", "1"), [
        (lambda e: F(4, e.n - 1) * e.a * e.mu ** 3, ("2", "j")),
        (lambda e: F(2, (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) ** 2 * e.h + 2 * (e.n - 2) * e.b * e.mu - 4 * e.mu ** 2), ("1", "j")),
    ], "ijk"),
    _f("QSC_04", "Q(Ricc,C)", "L2", ("i", "j"), ("i", "2"), [
        (lambda e: F(4, e.n - 1) * e.a * e.mu ** 3, ("1", "j")),
        (lambda e: F(2, (e.n - 1) * (e.n - 2)) * e.mu ** 2
            * ((e.n - 1) ** 2 * e.h - 2 * (e.n - 2) * e.b * e.mu - 4 * e.mu ** 2), ("2", "j")),
    ], "ijk"),
    _f("QSC_04", "Q(Ricc,C)", "L3", ("i", "j"), ("i", "k"), [], "ijk"),
    _f("QSC_04", "Q(Ricc,C)", "L4", ("i", "j"), ("j", "k"), [], "ijk"),
]

# --- Q(Ricc, g^Ricc) (QS_gS_01 .. _04) ----------------------------------------

QSGS_FORMULAS = [
    _f("QS_gS_01", "Q(Ricc,g^Ricc)", "L1", ("1", "2"), ("1", "i"), [
        (lambda e: (e.n - 1) * e.a * e.mu
            * (2 * (e.n - 1) * e.h + (e.n - 2) * e.b * e.mu - 2 * e.mu ** 2), ("1", "i")),
        (lambda e: (-4 * e.mu ** 4 + (e.n - 2) ** 2 * e.b ** 2 * e.mu ** 2
                    + 2 * (e.n - 1) * e.mu ** 2 * e.h
                    - (e.n - 1) * (e.n - 2) * e.b * e.mu * e.h), ("2", "i")),
    ], "i"),
    _f("QS_gS_01", "Q(Ricc,g^Ricc)", "L2", ("1", "2"), ("2", "i"), [
        (lambda e: (4 * e.mu ** 4 - (e.n - 2) ** 2 * e.b ** 2 * e.mu ** 2
                    - 2 * (e.n - 1) * e.mu ** 2 * e.h
                    - (e.n - 1) * (e.n - 2) * e.b * e.mu * e.h), ("1", "i")),
        (lambda e: -(e.n - 2) * e.a * e.mu
            * (2 * (e.n - 1) * e.h - (e.n - 2) * e.b * e.mu - 2 * e.mu ** 2), ("2", "i")),
    ], "i"),
    _f("QS_gS_02", "Q(Ricc,g^Ricc)", "L1", ("1", "i"), ("1", "2"), [
        (lambda e: -2 * (e.n - 2) * e.a * e.mu
            * (2 * (e.n - 1) * e.h + (e.n - 2) * e.b * e.mu - 2 * e.mu ** 2), ("1", "i")),
        (lambda e: 2 * (e.n - 1) * (e.n - 2) * e.b * e.mu * e.h, ("2", "i")),
    ], "i"),
    _f("QS_gS_02", "Q(Ricc,g^Ricc)", "L2", ("1", "i"), ("1", "j"), [
        (lambda e: (-(e.n - 1) * (e.n - 2) * e.b * e.mu * e.h
                    + 2 * (e.n - 1) * e.mu ** 2 * e.h), ("i", "j")),
    ], "ij"),
    # QS_gS_02 L3 prints the last pair (E_2, E_j) with j != i: transcribed as is
    _f("QS_gS_02", "Q(Ricc,g^Ricc)", "L3", ("1", "i"), ("2", "j"), [
        (lambda e: (4 * e.mu ** 4 - (e.n - 2) ** 2 * e.b ** 2 * e.mu ** 2
                    - 2 * (e.n - 1) * e.mu ** 2 * e.h
                    - (e.n - 1) * (e.n - 2) * e.b * e.mu * e.h), ("1", "2")),
    ], "ij"),
    _f("QS_gS_02", "Q(Ricc,g^Ricc)", "L4", ("1", "i"), ("i", "j"), [], "ij"),
    _f("QS_gS_03", "Q(Ricc,g^Ricc)", "L1", ("2", "i"), ("2", "1"), [
        (lambda e: -2 * (e.n - 1) * (e.n - 2) * e.b * e.mu * e.h, ("1", "i")),
        (lambda e: -2 * (e.n - 2) * e.a * e.mu
            * (2 * (e.n - 1) * e.h - (e.n - 2) * e.b * e.mu - 2 * e.mu ** 2), ("2", "i")),
    ], "i"),
    _f("QS_gS_03", "Q(Ricc,g^Ricc)", "L2", ("2", "i"), ("2", "j"), [
        (lambda e: ((e.n - 1) * (e.n - 2) * e.b * e.mu * e.h
                    + 2 * (e.n - 1) * e.mu ** 2 * e.h), ("i", "j")),
    ], "ij"),
    # QS_gS_03 L3 prints (n-2) b^2 mu^2 where L2 of QS_gS_01 has (n-2)^2
    _f("QS_gS_03", "Q(Ricc,g^Ricc)", "L3", ("2", "i"), ("i", "1"), [
        (lambda e: (4 * e.mu ** 4 - (e.n - 2) * e.b ** 2 * e.mu ** 2
                    + (e.n - 1) * (e.n - 2) * e.b * e.mu * e.h
                    - 2 * (e.n - 1) * e.mu ** 2 * e.h), ("1", "2")),
    ], "i"),
    _f("QS_gS_03", "Q(Ricc,g^Ricc)", "L4", ("2", "i"), ("i", "j"), [], "ij"),
    _f("QS_gS_04", "Q(Ricc,g^Ricc)", "L1", ("i", "j"), ("i", "1"), [
        (lambda e: (e.n - 1) * e.h * (-(e.n - 2) * e.b * e.mu + 2 * e.mu ** 2), ("1", "j")),
        (lambda e: -2 * (e.n - 1) * (e.n - 2) * e.a * e.mu * e.h, ("2", "j")),
    ], "ijk"),
    # QS_gS_04 L2 prints (n-1)(n+2) b mu in the second coefficient
    _f("QS_gS_04", "Q(Ricc,g^Ricc)", "L2", ("i", "j"), ("i", "2"), [
        (lambda e: -2 * (e.n - 1) * (e.n - 2) * e.a * e.mu * e.h, ("1", "j")),
        (lambda e: ((e.n - 1) * (e.n + 2) * e.b * e.mu * e.h
                    + 2 * (e.n - 1) * e.mu ** 2 * e.h), ("2", "j")),
    ], "ijk"),
    _f("QS_gS_04", "Q(Ricc,g^Ricc)", "L3", ("i", "j"), ("i", "k"), [], "ijk"),
    _f("QS_gS_04", "Q(Ricc,g^Ricc)", "L4", ("i", "j"), ("j", "k"), [], "ijk"),
]

ALL_DERIVED_FORMULAS = (RC_FORMULAS + CR_FORMULAS + DIFF_FORMULAS + QGR_FORMULAS
                        + QGC_FORMULAS + QGGR_FORMULAS + QSR_FORMULAS
                        + QSC_FORMULAS + QSGS_FORMULAS)

# --- curvature-operator rows (eq010): slices of R itself ---------------------

EQ010_FORMULAS = [
    _f("eq010", "R", "L1", ("1", "2"), ("-", "-"), [
        (lambda e: e.h - 2 * e.mu ** 2, ("1", "2")),
    ], ""),
    _f("eq010", "R", "L2", ("1", "i"), ("-", "-"), [
        (lambda e: e.h + e.b * e.mu, ("1", "i")),
        (lambda e: e.a * e.mu, ("2", "i")),
    ], "i"),
    _f("eq010", "R", "L3", ("2", "i"), ("-", "-"), [
        (lambda e: e.a * e.mu, ("1", "i")),
        (lambda e: e.h - e.b * e.mu, ("2", "i")),
    ], "i"),
    _f("eq010", "R", "L4", ("i", "j"), ("-", "-"), [
        (lambda e: e.h, ("i", "j")),
    ], "ij"),
]

# --- scalar component tables (eq001*, eq001**, eqgWRICCI001**, eq701*) -------
# entry: (label, name, index pattern, coefficient); patterns use 1/2/i/j

SCALAR_R_ENTRIES = [
    ("eq001*", "R_1221", ("1", "2", "2", "1"), lambda e: e.h - 2 * e.mu ** 2),
    ("eq001*", "R_1ii1", ("1", "i", "i", "1"), lambda e: e.h + e.b * e.mu),
    ("eq001*", "R_2ii2", ("2", "i", "i", "2"), lambda e: e.h - e.b * e.mu),
    ("eq001*", "R_ijji", ("i", "j", "j", "i"), lambda e: e.h),
    ("eq001*", "R_1ii2", ("1", "i", "i", "2"), lambda e: e.a * e.mu),
]

SCALAR_S_ENTRIES = [
    ("eq001**", "S_11", ("1", "1"), lambda e: (e.n - 1) * e.h - 2 * e.mu ** 2 + (e.n - 2) * e.b * e.mu),
    ("eq001**", "S_12", ("1", "2"), lambda e: (e.n - 2) * e.a * e.mu),
    ("eq001**", "S_22", ("2", "2"), lambda e: (e.n - 1) * e.h - 2 * e.mu ** 2 - (e.n - 2) * e.b * e.mu),
    ("eq001**", "S_ii", ("i", "i"), lambda e: (e.n - 1) * e.h),
]

SCALAR_GW_ENTRIES = [
    ("eqgWRICCI001**", "gwR_1221", ("1", "2", "2", "1"), lambda e: 2 * (e.n - 1) * e.h - 4 * e.mu ** 2),
    ("eqgWRICCI001**", "gwR_1ii1", ("1", "i", "i", "1"),
     lambda e: 2 * (e.n - 1) * e.h - 2 * e.mu ** 2 + (e.n - 2) * e.b * e.mu),
    ("eqgWRICCI001**", "gwR_2ii2", ("2", "i", "i", "2"),
     lambda e: 2 * (e.n - 1) * e.h - 2 * e.mu ** 2 - (e.n - 2) * e.b * e.mu),
    ("eqgWRICCI001**", "gwR_ijji", ("i", "j", "j", "i"), lambda e: 2 * (e.n - 1) * e.h),
]

SCALAR_C_ENTRIES = [
    ("eq701*", "C_1221", ("1", "2", "2", "1"), lambda e: -F(2 * (e.n - 3), e.n - 1) * e.mu ** 2),
    ("eq701*", "C_1ii1", ("1", "i", "i", "1"), lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2),
    ("eq701*", "C_2ii2", ("2", "i", "i", "2"), lambda e: F(2 * (e.n - 3), (e.n - 1) * (e.n - 2)) * e.mu ** 2),
    ("eq701*", "C_ijji", ("i", "j", "j", "i"), lambda e: -F(4, (e.n - 1) * (e.n - 2)) * e.mu ** 2),
]


def tau_formula(e: Env) -> Fraction:
    """eq5: n(n-1)(H^2 + k~) - 4 mu^2."""
    return e.n * (e.n - 1) * e.h - 4 * e.mu ** 2


def rho_formula(e: Env) -> Fraction:
    """eq6: (H^2 + k~) - 4 mu^2 / (n(n-1))."""
    return e.h - F(4, e.n * (e.n - 1)) * e.mu ** 2


# --- shape-operator wedge identities (eqbli3 .. eqbli6) -----------------------
# rows: (label, operator index 0..2, (s, t) symbols, [(coeff, (p, q)), ...])

EQBLI_ROWS = [
    ("eqbli3", 0, ("1", "2"), [(lambda e: e.a ** 2 - e.mu ** 2, ("1", "2"))]),
    ("eqbli3", 1, ("1", "2"), [(lambda e: e.b ** 2 - e.mu ** 2, ("1", "2"))]),
    ("eqbli3", 2, ("1", "2"), [(lambda e: e.c ** 2, ("1", "2"))]),
    ("eqbli4", 0, ("1", "i"), [(lambda e: e.a ** 2, ("1", "i")),
                               (lambda e: e.a * e.mu, ("2", "i"))]),
    ("eqbli4", 1, ("1", "i"), [(lambda e: e.b ** 2 + e.b * e.mu, ("1", "i"))]),
    ("eqbli4", 2, ("1", "i"), [(lambda e: e.c ** 2, ("1", "i"))]),
    ("eqbli5", 0, ("2", "i"), [(lambda e: e.a * e.mu, ("1", "i")),
                               (lambda e: e.a ** 2, ("2", "i"))]),
    ("eqbli5", 1, ("2", "i"), [(lambda e: e.b ** 2 - e.b * e.mu, ("2", "i"))]),
    ("eqbli5", 2, ("2", "i"), [(lambda e: e.c ** 2, ("2", "i"))]),
    ("eqbli6", 0, ("i", "j"), [(lambda e: e.a ** 2, ("i", "j"))]),
    ("eqbli6", 1, ("i", "j"), [(lambda e: e.b ** 2, ("i", "j"))]),
    ("eqbli6", 2, ("i", "j"), [(lambda e: e.c ** 2, ("i", "j"))]),
]
