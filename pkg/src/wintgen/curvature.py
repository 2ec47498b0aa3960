"""Curvature objects of a submanifold model via the Gauss and Ricci equations.

A model is pointwise data: shape operators in an adapted orthonormal frame
plus the ambient constant curvature.  Everything intrinsic (R, Ricci, Weyl,
scalar invariants) and normal (R_perp) is derived from it exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels
from .scalars import ScalarLike, sqrt_scalar, to_rational
from .tensors import (
    CurvatureTensor4,
    FrameConvention,
    NormalTensor4,
    SymMatrix,
    TensorError,
)


@dataclass(frozen=True)
class SubmanifoldModel:
    """Pointwise submanifold data: frame dimensions, k~, and m shape operators."""

    frame: FrameConvention
    k_tilde: Fraction
    shape_ops: tuple[SymMatrix, ...]

    def __post_init__(self):
        if len(self.shape_ops) != self.frame.m:
            raise TensorError(f"expected {self.frame.m} shape operators, got {len(self.shape_ops)}")
        for A in self.shape_ops:
            if A.n != self.frame.n:
                raise TensorError("shape operator dimension does not match the frame")

    @property
    def n(self) -> int:
        return self.frame.n

    @property
    def m(self) -> int:
        return self.frame.m

    @classmethod
    def from_data(cls, n: int, m: int, k_tilde: ScalarLike,
                  shape_ops: Sequence[SymMatrix | Sequence[Sequence[ScalarLike]]]) -> SubmanifoldModel:
        ops = tuple(A if isinstance(A, SymMatrix) else SymMatrix.from_rows(A) for A in shape_ops)
        return cls(FrameConvention(n, m), to_rational(k_tilde), ops)


@dataclass(frozen=True)
class MeanCurvatureData:
    H_vec: tuple[Fraction, ...]
    H_sq: Fraction


@dataclass(frozen=True)
class RicciData:
    ricc: SymMatrix
    ricci_op: np.ndarray   # equals ricc.comps in an orthonormal frame
    tau: Fraction          # scalar curvature; the source's kappa and tau coincide


@dataclass(frozen=True)
class ScalarInvariants:
    rho: Fraction
    rho_perp: Fraction | float
    inf_K: float | None = None


class UmbilicityClass(enum.Enum):
    TOTALLY_GEODESIC = "TotallyGeodesic"
    TOTALLY_UMBILICAL = "TotallyUmbilical"
    MINIMAL = "Minimal"
    PSEUDO_UMBILICAL = "PseudoUmbilical"
    MINIMAL_AND_PSEUDO_UMBILICAL = "MinimalAndPseudoUmbilical"
    GENERIC = "Generic"


def gauss_curvature(model: SubmanifoldModel) -> CurvatureTensor4:
    """Riemann tensor of the model by the Gauss equation."""
    g = kernels.identity_like(model.n, object)
    R = kernels.gauss([A.comps for A in model.shape_ops], model.k_tilde, g)
    return CurvatureTensor4(R)


def ricci_from_R(R: CurvatureTensor4) -> RicciData:
    S = kernels.ricci(R.comps)
    ricc = SymMatrix(S.copy())
    return RicciData(ricc=ricc, ricci_op=ricc.comps, tau=ricc.trace())


def weyl(R: CurvatureTensor4, ricci: RicciData) -> CurvatureTensor4:
    """Weyl conformal tensor C = R - g^Ricc/(n-2) + tau g^g/(2(n-1)(n-2))."""
    n = R.n
    if n < 4:
        raise TensorError("the Weyl tensor needs n >= 4")
    g = kernels.identity_like(n, object)
    scaled = kernels.weyl_scaled(R.comps, ricci.ricc.comps, ricci.tau, g, n)
    return CurvatureTensor4(scaled * Fraction(1, 2 * (n - 1) * (n - 2)))


def normal_curvature(model: SubmanifoldModel) -> NormalTensor4:
    """R_perp from shape-operator commutators; zero for a single normal direction."""
    comps = kernels.normal_curvature([A.comps for A in model.shape_ops],
                                     model.n, model.m, object)
    return NormalTensor4(comps)


def mean_curvature(model: SubmanifoldModel) -> MeanCurvatureData:
    n = model.n
    H_vec = tuple(A.trace() / n for A in model.shape_ops)
    return MeanCurvatureData(H_vec=H_vec, H_sq=sum(h * h for h in H_vec))


def scalar_invariants(model: SubmanifoldModel, R: CurvatureTensor4,
                      ricci: RicciData, r_perp: NormalTensor4) -> ScalarInvariants:
    """rho and rho_perp.

    rho_perp uses the standard squared-summand radicand
    sqrt(sum_{i<j} sum_{a<b} R_perp(...)^2); the root is exact whenever the
    radicand is a perfect rational square (always on Choi-Lu frames).
    """
    n, m = model.n, model.m
    rho = ricci.tau / (n * (n - 1))
    radicand = Fraction(0)
    for i in range(n):
        for j in range(i + 1, n):
            for al in range(m):
                for be in range(al + 1, m):
                    v = r_perp.comps[i, j, al, be]
                    radicand += v * v
    root = sqrt_scalar(radicand)
    rho_perp = Fraction(2, n * (n - 1)) * root if isinstance(root, Fraction) \
        else 2.0 * root / (n * (n - 1))
    return ScalarInvariants(rho=rho, rho_perp=rho_perp)


def classify_umbilicity(model: SubmanifoldModel) -> UmbilicityClass:
    """Exact umbilicity classification from the shape operators."""
    n = model.n
    mc = mean_curvature(model)
    if all(A.is_zero() for A in model.shape_ops):
        return UmbilicityClass.TOTALLY_GEODESIC
    idencomp = kernels.identity_like(n, object)
    if all(not np.any(A.comps != h * idencomp)
           for A, h in zip(model.shape_ops, mc.H_vec)):
        return UmbilicityClass.TOTALLY_UMBILICAL
    if mc.H_sq == 0:
        # A_H = 0 holds trivially; the source treats these points as the
        # minimal branch, so MINIMAL_AND_PSEUDO_UMBILICAL stays unused.
        return UmbilicityClass.MINIMAL
    A_H = sum(h * A.comps for h, A in zip(mc.H_vec, model.shape_ops))
    if not np.any((A_H - A_H[0, 0] * idencomp) != Fraction(0)):
        return UmbilicityClass.PSEUDO_UMBILICAL
    return UmbilicityClass.GENERIC


def is_totally_umbilical(model: SubmanifoldModel) -> bool:
    return classify_umbilicity(model) in (UmbilicityClass.TOTALLY_GEODESIC,
                                          UmbilicityClass.TOTALLY_UMBILICAL)


def sectional_curvature(R: CurvatureTensor4, u, v) -> Fraction:
    """K(u, v) = R(u,v,v,u) / (|u|^2 |v|^2 - <u,v>^2), exact."""
    u = np.asarray([to_rational(x) for x in u], dtype=object)
    v = np.asarray([to_rational(x) for x in v], dtype=object)
    uu = np.dot(u, u)
    vv = np.dot(v, v)
    uv = np.dot(u, v)
    denom = uu * vv - uv * uv
    if denom == 0:
        raise TensorError("degenerate plane: u, v are linearly dependent")
    return kernels.sectional_numerator(R.comps, u, v) / denom


@dataclass(frozen=True)
class InfSectional:
    value: float
    u: tuple[float, ...]
    v: tuple[float, ...]


def inf_sectional(R: CurvatureTensor4, random_restarts: int = 100,
                  refine_tol: float = 1e-12, seed: int = 0) -> InfSectional:
    """Best-found minimum of the sectional curvature over 2-planes.

    Multistart local descent: seeds at every coordinate plane E_i^E_j plus
    seeded random planes, refined over the raw (u, v) parameterization with
    the Gram denominator keeping the iterates away from degenerate pairs.
    Reported value is the achieved minimum, not a certified global one.
    """
    from scipy.optimize import minimize

    n = R.n
    Rf = R.comps.astype(np.float64)

    def ratio(w):
        u, v = w[:n], w[n:]
        uu, vv, uv = u @ u, v @ v, u @ v
        denom = uu * vv - uv * uv
        if denom <= 1e-14 * max(uu * vv, 1e-300):
            return 1e12
        return float(np.einsum('abcd,a,b,c,d->', Rf, u, v, v, u)) / denom

    seeds = []
    for i in range(n):
        for j in range(i + 1, n):
            w = np.zeros(2 * n)
            w[i] = 1.0
            w[n + j] = 1.0
            seeds.append(w)
    rng = np.random.default_rng(seed)
    for _ in range(random_restarts):
        seeds.append(rng.standard_normal(2 * n))

    best_val = math.inf
    best_w = seeds[0]
    for w0 in seeds:
        res = minimize(ratio, w0, method='Nelder-Mead',
                       options={'xatol': refine_tol, 'fatol': refine_tol,
                                'maxiter': 4000, 'maxfev': 4000})
        if res.fun < best_val:
            best_val = float(res.fun)
            best_w = res.x
    res = minimize(ratio, best_w, method='Powell', options={'xtol': refine_tol, 'ftol': refine_tol})
    if res.fun < best_val:
        best_val = float(res.fun)
        best_w = res.x
    u, v = best_w[:n], best_w[n:]
    return InfSectional(value=best_val, u=tuple(u), v=tuple(v))


def ddvv_gap(model: SubmanifoldModel) -> Fraction | float:
    """H^2 - rho_perp + k~ - rho; exactly zero on Wintgen ideal (Choi-Lu) models."""
    R = gauss_curvature(model)
    ric = ricci_from_R(R)
    rp = normal_curvature(model)
    inv = scalar_invariants(model, R, ric, rp)
    mc = mean_curvature(model)
    if isinstance(inv.rho_perp, Fraction):
        return mc.H_sq - inv.rho_perp + model.k_tilde - inv.rho
    return float(mc.H_sq) - inv.rho_perp + float(model.k_tilde) - float(inv.rho)
