"""Dtype-agnostic einsum kernels for every tensor formula in the engine.

Each kernel takes and returns bare numpy arrays and never divides, so the
same code path serves three element types:

* ``object`` arrays of ``Fraction`` -- the exact public API,
* ``int64`` arrays of cleared-denominator integers -- the fast grid audit,
* ``float64`` arrays -- the sectional-curvature minimizer.

Index conventions (0-based internally): a curvature-type array ``R`` stores
``R[x1, x2, x3, x4] = R(E_{x1}, E_{x2}, E_{x3}, E_{x4})`` and the associated
endomorphism acts by ``B(E_x, E_y) E_z = sum_w B[x, y, z, w] E_w``.
Rank-6 arrays are laid out ``(x1, x2, x3, x4, x, y)``; rank-4 derivation
outputs are laid out ``(x1, x2, x, y)``.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def zeros_object(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr[...] = Fraction(0)
    return arr


def identity_like(n: int, dtype) -> np.ndarray:
    if dtype is object:
        g = zeros_object((n, n))
        for i in range(n):
            g[i, i] = Fraction(1)
        return g
    return np.eye(n, dtype=dtype)


def gauss(shape_ops, k_tilde, g: np.ndarray) -> np.ndarray:
    """Induced curvature from shape operators and the ambient constant.

    R(x1,x2,x3,x4) = sum_a [A_a(x1,x4)A_a(x2,x3) - A_a(x1,x3)A_a(x2,x4)]
                   + k~ [g(x1,x4)g(x2,x3) - g(x1,x3)g(x2,x4)]
    """
    R = k_tilde * (np.einsum('ad,bc->abcd', g, g) - np.einsum('ac,bd->abcd', g, g))
    for A in shape_ops:
        R = R + np.einsum('ad,bc->abcd', A, A) - np.einsum('ac,bd->abcd', A, A)
    return R


def ricci(R: np.ndarray) -> np.ndarray:
    """S(u,v) = sum_i R(E_i, E_u, E_v, E_i)."""
    return np.einsum('iuvi->uv', R)


def trace(M: np.ndarray):
    return np.einsum('ii->', M)


def kulkarni_nomizu(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """(A ^ B)(x1,x2; x,y) with the output laid out (x1, x2, x, y)."""
    return (np.einsum('ay,bx->abxy', A, B) + np.einsum('bx,ay->abxy', A, B)
            - np.einsum('ax,by->abxy', A, B) - np.einsum('by,ax->abxy', A, B))


def weyl_scaled(R: np.ndarray, S: np.ndarray, tau, g: np.ndarray, n: int) -> np.ndarray:
    """2(n-1)(n-2) * C, which is division-free in any element type."""
    return (2 * (n - 1) * (n - 2)) * R - (2 * (n - 1)) * kulkarni_nomizu(g, S) \
        + tau * kulkarni_nomizu(g, g)


def normal_curvature(shape_ops, n: int, m: int, dtype) -> np.ndarray:
    """R_perp[i, j, alpha, beta] = ([A_alpha, A_beta])[j, i]."""
    if dtype is object:
        out = zeros_object((n, n, m, m))
    else:
        out = np.zeros((n, n, m, m), dtype=dtype)
    for al in range(m):
        for be in range(al + 1, m):
            comm = shape_ops[al] @ shape_ops[be] - shape_ops[be] @ shape_ops[al]
            out[:, :, al, be] = comm.T
            out[:, :, be, al] = -comm.T
    return out


def derive_rank4(B: np.ndarray, T: np.ndarray) -> np.ndarray:
    """Derivation of a (0,4)-tensor by the endomorphism family of B.

    (B . T)(x1..x4; x, y) = -sum_s sum_t B(x, y, x_s, t) T(.., t at s, ..)
    """
    return -(np.einsum('xyat,tbcd->abcdxy', B, T)
             + np.einsum('xybt,atcd->abcdxy', B, T)
             + np.einsum('xyct,abtd->abcdxy', B, T)
             + np.einsum('xydt,abct->abcdxy', B, T))


def derive_rank2(B: np.ndarray, T: np.ndarray) -> np.ndarray:
    """Derivation of a (0,2)-tensor, laid out (x1, x2, x, y)."""
    return -(np.einsum('xyat,tb->abxy', B, T) + np.einsum('xybt,at->abxy', B, T))


def wedge_action(A: np.ndarray, g: np.ndarray) -> np.ndarray:
    """W[x, y, z, w] with (E_x wedge_A E_y) E_z = sum_w W[x, y, z, w] E_w."""
    return np.einsum('yz,xw->xyzw', A, g) - np.einsum('xz,yw->xyzw', A, g)


def tachibana_rank4(A: np.ndarray, T: np.ndarray, g: np.ndarray) -> np.ndarray:
    return derive_rank4(wedge_action(A, g), T)


def tachibana_rank2(A: np.ndarray, T: np.ndarray, g: np.ndarray) -> np.ndarray:
    return derive_rank2(wedge_action(A, g), T)


def p_tensor(R: np.ndarray, S: np.ndarray, g: np.ndarray) -> np.ndarray:
    """The (0,6) correction tensor of the commutation identity.

    Built slot by slot with the Ricci operator inserted; the subtrahend of
    every line carries S(E_x), which repairs the one misprinted line of the
    source display (see the repository notes).
    """
    R1 = np.einsum('yt,tbcd->ybcd', S, R)
    R2 = np.einsum('yt,atcd->yacd', S, R)
    R3 = np.einsum('yt,abtd->yabd', S, R)
    R4 = np.einsum('yt,abct->yabc', S, R)
    return (np.einsum('xa,ybcd->abcdxy', g, R1) - np.einsum('ya,xbcd->abcdxy', g, R1)
            + np.einsum('xb,yacd->abcdxy', g, R2) - np.einsum('yb,xacd->abcdxy', g, R2)
            + np.einsum('xc,yabd->abcdxy', g, R3) - np.einsum('yc,xabd->abcdxy', g, R3)
            + np.einsum('xd,yabc->abcdxy', g, R4) - np.einsum('yd,xabc->abcdxy', g, R4))


def extended_kulkarni(A: np.ndarray, D: np.ndarray) -> np.ndarray:
    """Kulkarni-Nomizu slot pattern applied to a rank-4 (x1,x2;x,y) block.

    (A ^ D)(x1,x2,x3,x4; x,y) = A(x1,x4) D(x2,x3;x,y) + A(x2,x3) D(x1,x4;x,y)
                              - A(x1,x3) D(x2,x4;x,y) - A(x2,x4) D(x1,x3;x,y)
    """
    return (np.einsum('ad,bcxy->abcdxy', A, D) + np.einsum('bc,adxy->abcdxy', A, D)
            - np.einsum('ac,bdxy->abcdxy', A, D) - np.einsum('bd,acxy->abcdxy', A, D))


def commutation_residual_scaled(R: np.ndarray, S: np.ndarray, tau,
                                C_scaled: np.ndarray, g: np.ndarray, n: int) -> np.ndarray:
    """2(n-1) times the commutation-identity residual; division-free.

    residual = (n-2)(R.C - C.R) - Q(Ricc - tau/(n-1) g, R) + g^(R.Ricc) - P
    with C_scaled = 2(n-1)(n-2) C, so (n-2)(R.C - C.R) = (R.C_s - C_s.R)/(2(n-1)).
    """
    rc = derive_rank4(R, C_scaled)
    cr = derive_rank4(C_scaled, R)
    shifted = (n - 1) * S - tau * g
    q_term = tachibana_rank4(shifted, R, g)
    gw_term = extended_kulkarni(g, derive_rank2(R, S))
    p_term = p_tensor(R, S, g)
    return (rc - cr) - 2 * q_term + (2 * (n - 1)) * gw_term - (2 * (n - 1)) * p_term


def sectional_numerator(R: np.ndarray, u: np.ndarray, v: np.ndarray):
    return np.einsum('abcd,a,b,c,d->', R, u, v, v, u)
