"""Curvature-type derivations, Tachibana tensors, and the commutation identity.

The derivation of a tensor T by an endomorphism family B(E_x, E_y) is
(B . T)(x1..xk; x, y) = -sum_s T(.., B(E_x,E_y) x_s, ..); with B = R or C
this gives R.T and C.T, with the wedge family X wedge_A Y it gives Q(A, T).
"""

from __future__ import annotations

from fractions import Fraction

from . import kernels
from .curvature import RicciData, SubmanifoldModel, gauss_curvature, ricci_from_R, weyl
from .tensors import (
    CurvatureTensor4,
    DerivedTensor4,
    DerivedTensor6,
    SymMatrix,
    TensorError,
)


def endo_derive(B: CurvatureTensor4, T: SymMatrix | CurvatureTensor4) -> DerivedTensor4 | DerivedTensor6:
    """R.T / C.T: derivation of a rank-2 or rank-4 tensor by B's endomorphisms."""
    if isinstance(T, SymMatrix):
        if T.n != B.n:
            raise TensorError("dimension mismatch")
        return DerivedTensor4(kernels.derive_rank2(B.comps, T.comps))
    if isinstance(T, CurvatureTensor4):
        if T.n != B.n:
            raise TensorError("dimension mismatch")
        return DerivedTensor6(kernels.derive_rank4(B.comps, T.comps))
    raise TensorError(f"cannot derive a {type(T).__name__}; rank must be 2 or 4")


def tachibana(A: SymMatrix, T: SymMatrix | CurvatureTensor4) -> DerivedTensor4 | DerivedTensor6:
    """Tachibana tensor Q(A, T), the derivation by the X wedge_A Y family."""
    g = kernels.identity_like(A.n, object)
    if isinstance(T, SymMatrix):
        if T.n != A.n:
            raise TensorError("dimension mismatch")
        return DerivedTensor4(kernels.tachibana_rank2(A.comps, T.comps, g))
    if isinstance(T, CurvatureTensor4):
        if T.n != A.n:
            raise TensorError("dimension mismatch")
        return DerivedTensor6(kernels.tachibana_rank4(A.comps, T.comps, g))
    raise TensorError(f"cannot form Q(A, T) for a {type(T).__name__}; rank must be 2 or 4")


def p_tensor(R: CurvatureTensor4, ricci: RicciData) -> DerivedTensor6:
    """The (0,6)-tensor P entering the commutation identity (corrected form)."""
    g = kernels.identity_like(R.n, object)
    return DerivedTensor6(kernels.p_tensor(R.comps, ricci.ricc.comps, g))


def extended_kulkarni(A: SymMatrix, D: DerivedTensor4) -> DerivedTensor6:
    """A ^ D for a rank-4 (x1,x2;x,y) block, Kulkarni-Nomizu slot pattern."""
    if A.n != D.n:
        raise TensorError("dimension mismatch")
    return DerivedTensor6(kernels.extended_kulkarni(A.comps, D.comps))


def commutation_residual(model: SubmanifoldModel) -> DerivedTensor6:
    """(n-2)(R.C - C.R) - Q(Ricc - tau/(n-1) g, R) + g^(R.Ricc) - P.

    Identically zero under the adopted conventions; kept as a calibration
    oracle for the extended Kulkarni-Nomizu pattern and the P correction.
    """
    n = model.n
    R = gauss_curvature(model)
    ric = ricci_from_R(R)
    g = kernels.identity_like(n, object)
    c_scaled = kernels.weyl_scaled(R.comps, ric.ricc.comps, ric.tau, g, n)
    scaled = kernels.commutation_residual_scaled(R.comps, ric.ricc.comps, ric.tau,
                                                 c_scaled, g, n)
    return DerivedTensor6(scaled * Fraction(1, 2 * (n - 1)))


def weyl_pipeline(model: SubmanifoldModel) -> tuple[CurvatureTensor4, RicciData, CurvatureTensor4]:
    """Convenience: (R, Ricci data, C) for one model."""
    R = gauss_curvature(model)
    ric = ricci_from_R(R)
    return R, ric, weyl(R, ric)
