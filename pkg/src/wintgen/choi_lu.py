"""Choi-Lu frames: the canonical shape operators of Wintgen ideal submanifolds.

In an adapted frame the whole extrinsic geometry reduces to four functions
(a, b, c, mu) and the ambient constant k~:

    A_1 = a Id + mu (E_12 + E_21),  A_2 = b Id + mu (E_11 - E_22),
    A_3 = c Id (codimension >= 3),  A_4 = ... = A_m = 0.

This module also carries the closed-form component table of these frames
and builders for every special-case branch of the dependence theorems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curvature import SubmanifoldModel, ddvv_gap, mean_curvature  # noqa: F401  (ddvv_gap re-exported)
from .scalars import ScalarLike, to_rational
from .tensors import FrameConvention, SymMatrix, TensorError
from . import kernels


@dataclass(frozen=True)
class ChoiLuParams:
    a: Fraction
    b: Fraction
    c: Fraction
    mu: Fraction
    k_tilde: Fraction
    n: int
    m: int

    def __post_init__(self):
        if self.n < 4:
            raise TensorError("Choi-Lu frames need n >= 4")
        if self.m < 2:
            raise TensorError("Choi-Lu frames need m >= 2")
        if self.m == 2 and self.c != 0:
            raise TensorError("c != 0 needs a third normal direction (m >= 3)")

    @classmethod
    def make(cls, a: ScalarLike, b: ScalarLike, c: ScalarLike, mu: ScalarLike,
             k_tilde: ScalarLike, n: int, m: int) -> ChoiLuParams:
        return cls(to_rational(a), to_rational(b), to_rational(c), to_rational(mu),
                   to_rational(k_tilde), n, m)

    @property
    def H_sq(self) -> Fraction:
        return self.a * self.a + self.b * self.b + self.c * self.c


def choi_lu_shape_ops(p: ChoiLuParams) -> SubmanifoldModel:
    """Model with the canonical (a, b, c, mu) shape operators."""
    n = p.n
    A1 = kernels.zeros_object((n, n))
    A2 = kernels.zeros_object((n, n))
    for i in range(n):
        A1[i, i] = p.a
        A2[i, i] = p.b
    A1[0, 1] = A1[1, 0] = p.mu
    A2[0, 0] = p.b + p.mu
    A2[1, 1] = p.b - p.mu
    ops = [SymMatrix(A1), SymMatrix(A2)]
    if p.m >= 3:
        A3 = kernels.zeros_object((n, n))
        for i in range(n):
            A3[i, i] = p.c
        ops.append(SymMatrix(A3))
    ops.extend(SymMatrix.zero(n) for _ in range(p.m - len(ops)))
    return SubmanifoldModel(FrameConvention(p.n, p.m), p.k_tilde, tuple(ops))


@dataclass(frozen=True)
class ComponentTable:
    """Closed-form components of a Choi-Lu frame (everything else vanishes,
    except the g^Ricc slots noted in ``audit.check_table_completeness``)."""

    R_1221: Fraction
    R_1ii1: Fraction
    R_2ii2: Fraction
    R_ijji: Fraction
    R_1ii2: Fraction
    S_11: Fraction
    S_12: Fraction
    S_22: Fraction
    S_ii: Fraction
    gwR_1221: Fraction
    gwR_1ii1: Fraction
    gwR_2ii2: Fraction
    gwR_ijji: Fraction
    C_1221: Fraction
    C_1ii1: Fraction
    C_2ii2: Fraction
    C_ijji: Fraction
    tau: Fraction
    rho: Fraction


def closed_form_table(p: ChoiLuParams) -> ComponentTable:
    n = p.n
    h = p.H_sq + p.k_tilde
    mu2 = p.mu * p.mu
    bmu = p.b * p.mu
    tau = n * (n - 1) * h - 4 * mu2
    return ComponentTable(
        R_1221=h - 2 * mu2,
        R_1ii1=h + bmu,
        R_2ii2=h - bmu,
        R_ijji=h,
        R_1ii2=p.a * p.mu,
        S_11=(n - 1) * h - 2 * mu2 + (n - 2) * bmu,
        S_12=(n - 2) * p.a * p.mu,
        S_22=(n - 1) * h - 2 * mu2 - (n - 2) * bmu,
        S_ii=(n - 1) * h,
        gwR_1221=2 * (n - 1) * h - 4 * mu2,
        gwR_1ii1=2 * (n - 1) * h - 2 * mu2 + (n - 2) * bmu,
        gwR_2ii2=2 * (n - 1) * h - 2 * mu2 - (n - 2) * bmu,
        gwR_ijji=2 * (n - 1) * h,
        C_1221=Fraction(-2 * (n - 3), n - 1) * mu2,
        C_1ii1=Fraction(2 * (n - 3), (n - 1) * (n - 2)) * mu2,
        C_2ii2=Fraction(2 * (n - 3), (n - 1) * (n - 2)) * mu2,
        C_ijji=Fraction(-4, (n - 1) * (n - 2)) * mu2,
        tau=tau,
        rho=Fraction(tau, n * (n - 1)),
    )


THEOREM_CASE_IDS = ("T2ii", "T7ii", "C1ii", "T10ii", "T13ii", "T18ii", "T22ii",
                    "T25ii", "T27ii", "umbilical", "geodesic")


def theorem_case_builder(case_id: str, *, n: int, m: int = 3,
                         mu: ScalarLike = 0, c: ScalarLike = 0,
                         k_tilde: ScalarLike = 0,
                         a: ScalarLike = 0, b: ScalarLike = 0) -> SubmanifoldModel:
    """Choi-Lu model for one special-case branch, constraints verified exactly.

    Branch constraints of the form c^2 = ... are never solved here; the caller
    supplies c and the builder checks the equation over the rationals.

    The IDs T2ii/T7ii/T13ii/T18ii/T22ii all denote the one Weyl-semi-symmetric
    branch (a = b = 0, c^2 = -k~, mu != 0); T25ii additionally pins
    c^2 + k~ = 2 mu^2/((n-1)(n-2)), the constraint under which that branch's
    proportionality actually holds (see the repository notes on the source's
    statement).  T27ii uses a = 0, b = mu with H^2 + k~ = 2 mu^2/(n-1).
    """
    mu = to_rational(mu)
    c = to_rational(c)
    kt = to_rational(k_tilde)
    a = to_rational(a)
    b = to_rational(b)

    def params(av, bv, cv):
        return ChoiLuParams(av, bv, cv, mu, kt, n, m)

    if case_id == "geodesic":
        return choi_lu_shape_ops(params(Fraction(0), Fraction(0), Fraction(0)))
    if case_id == "umbilical":
        return choi_lu_shape_ops(ChoiLuParams(a, b, c, Fraction(0), kt, n, m))
    if mu == 0:
        raise TensorError(f"branch {case_id} requires mu != 0")

    if case_id in ("T2ii", "T7ii", "T13ii", "T18ii", "T22ii"):
        if kt > 0:
            raise TensorError(f"branch {case_id} requires k~ <= 0")
        if c * c != -kt:
            raise TensorError(f"branch {case_id} requires c^2 = -k~ (got c^2={c * c}, -k~={-kt})")
        return choi_lu_shape_ops(params(Fraction(0), Fraction(0), c))
    if case_id == "C1ii":
        if kt != 0:
            raise TensorError("branch C1ii requires k~ = 0")
        return choi_lu_shape_ops(params(Fraction(0), Fraction(0), Fraction(0)))
    if case_id == "T10ii":
        return choi_lu_shape_ops(params(Fraction(0), Fraction(0), c))
    if case_id == "T25ii":
        target = Fraction(2, (n - 1) * (n - 2)) * mu * mu
        if c * c + kt != target:
            raise TensorError(
                f"branch T25ii requires c^2 + k~ = 2mu^2/((n-1)(n-2)) = {target}, got {c * c + kt}")
        return choi_lu_shape_ops(params(Fraction(0), Fraction(0), c))
    if case_id == "T27ii":
        target = -kt - Fraction(n - 3, n - 1) * mu * mu
        if c * c != target:
            raise TensorError(
                f"branch T27ii requires c^2 = -k~ - (n-3)mu^2/(n-1) = {target}, got {c * c}")
        model = choi_lu_shape_ops(params(Fraction(0), mu, c))
        h = mean_curvature(model).H_sq + kt
        assert h == Fraction(2, n - 1) * mu * mu
        return model
    raise TensorError(f"unknown theorem case id {case_id!r}; known: {THEOREM_CASE_IDS}")
