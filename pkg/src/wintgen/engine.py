"""Exact cleared-denominator integer engine for grid-scale sweeps.

Pure-Fraction arithmetic is exact but slow at n^6 scale, so grid sweeps run
the same kernels over int64 arrays after clearing denominators: multiply
shape operators by the lcm D of all denominators and k~ by D^2; every
tensor of weight w (weight 1 for a, b, c, mu entries, 2 for k~) then scales
by D^w, with an extra 2(n-1)(n-2) carried by the division-free Weyl tensor.
All results are exact integers; int64 ranges are enforced with explicit
bounds and the engine promotes to Python-int object arrays when a product
could leave the safe range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import kernels
from .curvature import SubmanifoldModel
from .grids import GridPoint

_INT64_SAFE = 2 ** 62

RANK6_LEFT = ("R.R", "R.C", "C.R", "C.C", "R.C-C.R")
RANK6_RIGHT = ("Q(g,R)", "Q(g,C)", "Q(g,g^Ricc)", "Q(Ricc,R)", "Q(Ricc,C)", "Q(Ricc,g^Ricc)")
RANK4_PAIRS = (("R.Ricc", "Q(g,Ricc)"),)


def _lcm(values) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


@dataclass
class IntModel:
    """Shape operators and k~ scaled to integers; D is the clearing factor."""

    n: int
    m: int
    D: int
    ops: list[np.ndarray]
    kt: int

    @classmethod
    def from_model(cls, model: SubmanifoldModel) -> IntModel:
        dens = [model.k_tilde.denominator]
        for A in model.shape_ops:
            dens.extend(v.denominator for v in A.comps.reshape(-1))
        D = _lcm(dens)
        ops = []
        for A in model.shape_ops:
            arr = np.array([[int(v * D) for v in row] for row in A.comps], dtype=np.int64)
            ops.append(arr)
        kt = int(model.k_tilde * D * D)
        return cls(n=model.n, m=model.m, D=D, ops=ops, kt=kt)

    @classmethod
    def from_point(cls, p: GridPoint) -> IntModel:
        if p.m < 3 and p.c != 0:
            raise ValueError("c != 0 needs a third normal direction (m >= 3)")
        D = _lcm([p.a.denominator, p.b.denominator, p.c.denominator,
                  p.mu.denominator, p.k_tilde.denominator])
        n = p.n
        A1 = np.zeros((n, n), dtype=np.int64)
        A2 = np.zeros((n, n), dtype=np.int64)
        a, b, mu = int(p.a * D), int(p.b * D), int(p.mu * D)
        np.fill_diagonal(A1, a)
        np.fill_diagonal(A2, b)
        A1[0, 1] = A1[1, 0] = mu
        A2[0, 0] = b + mu
        A2[1, 1] = b - mu
        ops = [A1, A2]
        if p.m >= 3:
            A3 = np.zeros((n, n), dtype=np.int64)
            np.fill_diagonal(A3, int(p.c * D))
            ops.append(A3)
        ops.extend(np.zeros((n, n), dtype=np.int64) for _ in range(p.m - len(ops)))
        return cls(n=n, m=p.m, D=D, ops=ops, kt=int(p.k_tilde * D * D))


@dataclass(frozen=True)
class ScaledTensor:
    """Integer array equal to ``scale`` times the true rational tensor."""

    arr: np.ndarray
    scale: Fraction

    def max_abs(self) -> int:
        if self.arr.size == 0:
            return 0
        return int(np.max(np.abs(self.arr)))

    def is_zero(self) -> bool:
        return not np.any(self.arr)

    def true_component(self, idx) -> Fraction:
        return Fraction(int(self.arr[idx])) / self.scale


def _maybe_object(a: np.ndarray, bound: int) -> np.ndarray:
    # einsum output entries are sums of <= 4n products; promote before overflow
    if bound < _INT64_SAFE:
        return a
    return a.astype(object)


def _pair_bound(B: np.ndarray, T: np.ndarray, n: int) -> int:
    mb = int(np.max(np.abs(np.asarray(B, dtype=object))))
    mt = int(np.max(np.abs(np.asarray(T, dtype=object))))
    return 4 * n * mb * mt


class ModelTensors:
    """Lazy cache of every curvature/derivation tensor of one model, exact ints."""

    def __init__(self, im: IntModel):
        self.im = im
        n = im.n
        self.g = np.eye(n, dtype=np.int64)
        D = Fraction(im.D)
        self._cache: dict[str, ScaledTensor] = {}
        R = kernels.gauss(im.ops, im.kt, self.g)
        S = kernels.ricci(R)
        self.tau = int(kernels.trace(S))
        cw = 2 * (n - 1) * (n - 2)
        self._cache["g"] = ScaledTensor(self.g, Fraction(1))
        self._cache["R"] = ScaledTensor(R, D ** 2)
        self._cache["Ricc"] = ScaledTensor(S, D ** 2)
        self._cache["g^Ricc"] = ScaledTensor(kernels.kulkarni_nomizu(self.g, S), D ** 2)
        self._cache["C"] = ScaledTensor(
            kernels.weyl_scaled(R, S, self.tau, self.g, n), cw * D ** 2)
        self._cache["g^g"] = ScaledTensor(kernels.kulkarni_nomizu(self.g, self.g), Fraction(1))

    def base(self, name: str) -> ScaledTensor:
        return self._cache[name]

    def _derive(self, B: ScaledTensor, T: ScaledTensor, rank: int) -> ScaledTensor:
        n = self.im.n
        bound = _pair_bound(B.arr, T.arr, n)
        Ba = _maybe_object(B.arr, bound)
        Ta = _maybe_object(T.arr, bound)
        fn = kernels.derive_rank4 if rank == 4 else kernels.derive_rank2
        return ScaledTensor(fn(Ba, Ta), B.scale * T.scale)

    def _tachibana(self, A: ScaledTensor, T: ScaledTensor, rank: int) -> ScaledTensor:
        W = ScaledTensor(kernels.wedge_action(A.arr, self.g), A.scale)
        return self._derive(W, T, rank)

    def get(self, name: str) -> ScaledTensor:
        if name in self._cache:
            return self._cache[name]
        t: ScaledTensor
        if name == "R.C-C.R":
            rc, cr = self.get("R.C"), self.get("C.R")
            assert rc.scale == cr.scale
            t = ScaledTensor(rc.arr - cr.arr, rc.scale)
        elif "." in name:
            left, right = name.split(".", 1)
            rank = 2 if right == "Ricc" else 4
            t = self._derive(self.base(left), self.base(right), rank)
        elif name.startswith("Q("):
            inner = name[2:-1]
            a_name, t_name = inner.split(",", 1)
            T = self.base(t_name)
            rank = 2 if t_name == "Ricc" else 4
            t = self._tachibana(self.base(a_name), T, rank)
        else:
            raise KeyError(name)
        self._cache[name] = t
        return t

    def commutation_residual_scaled(self) -> ScaledTensor:
        n = self.im.n
        R, S, C = self.base("R"), self.base("Ricc"), self.base("C")
        arr = kernels.commutation_residual_scaled(R.arr, S.arr, self.tau, C.arr, self.g, n)
        return ScaledTensor(arr, C.scale * R.scale * Fraction(2 * (n - 1)))


def dependence_scaled(T1: ScaledTensor, T2: ScaledTensor):
    """Exact dependence verdict between two scaled integer tensors.

    Returns (kind, lam) with kind in {BothZero, LeftZero, RightZero,
    Proportional, Independent}; lam is the true rational coefficient.
    """
    z1, z2 = T1.is_zero(), T2.is_zero()
    if z1 and z2:
        return "BothZero", None
    if z1:
        return "LeftZero", Fraction(0)
    if z2:
        return "RightZero", None
    flat1 = T1.arr.reshape(-1)
    flat2 = T2.arr.reshape(-1)
    piv = int(np.argmax(np.abs(np.asarray(flat2, dtype=object))))
    p1, p2 = int(flat1[piv]), int(flat2[piv])
    m1, m2 = T1.max_abs(), T2.max_abs()
    if max(m1 * abs(p2), m2 * abs(p1)) >= _INT64_SAFE or flat1.dtype == object or flat2.dtype == object:
        a1 = flat1.astype(object) * p2
        a2 = flat2.astype(object) * p1
        equal = not np.any(a1 != a2)
    else:
        equal = np.array_equal(flat1 * p2, flat2 * p1)
    if equal:
        lam = Fraction(p1, p2) * (T2.scale / T1.scale)
        return "Proportional", lam
    return "Independent", None
