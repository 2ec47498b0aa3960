"""Dense exact-arithmetic tensor containers and the core algebraic products.

Everything is stored in an orthonormal frame, so the metric is the identity
and no index raising/lowering ever happens.  Components are Fractions held
in numpy object arrays; containers are immutable after construction.
Internal indices are 0-based; user-facing index tuples (reports, the
``wedge_endomorphism`` arguments, ``max_abs_component``) are 1-based to
match the usual E_1..E_n labelling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .scalars import ScalarLike, to_rational

MAX_DIMENSION = 12

CURVATURE_LIKE = "curvature-like"
PAIR_SKEW_ONLY = "pair-skew-only"


class TensorError(ValueError):
    """Raised on dimension mismatches or violated structural invariants."""


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def _as_object_array(entries, shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    it = np.nditer(np.zeros(shape), flags=['multi_index'])
    for _ in it:
        idx = it.multi_index
        val = entries
        for i in idx:
            val = val[i]
        arr[idx] = to_rational(val)
    return arr


@dataclass(frozen=True)
class FrameConvention:
    """Tangent dimension n >= 4 and codimension m >= 1; the frame is implicit."""

    n: int
    m: int

    def __post_init__(self):
        if not (4 <= self.n <= MAX_DIMENSION):
            raise TensorError(f"tangent dimension must be in [4, {MAX_DIMENSION}], got {self.n}")
        if not (1 <= self.m <= MAX_DIMENSION):
            raise TensorError(f"codimension must be in [1, {MAX_DIMENSION}], got {self.m}")


@dataclass(frozen=True)
class SymMatrix:
    """Symmetric n x n grid of rationals (shape operators, Ricci, metric)."""

    comps: np.ndarray

    def __post_init__(self):
        arr = self.comps
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise TensorError(f"expected a square matrix, got shape {arr.shape}")
        n = arr.shape[0]
        for i in range(n):
            for j in range(i + 1, n):
                if arr[i, j] != arr[j, i]:
                    raise TensorError(f"not symmetric at ({i + 1},{j + 1})")
        _freeze(arr)

    @property
    def n(self) -> int:
        return self.comps.shape[0]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]]) -> SymMatrix:
        n = len(rows)
        return cls(_as_object_array(rows, (n, n)))

    @classmethod
    def identity(cls, n: int) -> SymMatrix:
        return cls(kernels.identity_like(n, object))

    @classmethod
    def zero(cls, n: int) -> SymMatrix:
        return cls(kernels.zeros_object((n, n)))

    def __getitem__(self, idx):
        return self.comps[idx]

    def trace(self) -> Fraction:
        return sum(self.comps[i, i] for i in range(self.n))

    def is_zero(self) -> bool:
        return not np.any(self.comps != Fraction(0))

    def is_multiple_of_identity(self) -> bool:
        d = self.comps[0, 0]
        n = self.n
        return all(self.comps[i, j] == (d if i == j else 0)
                   for i in range(n) for j in range(n))


@dataclass(frozen=True)
class CurvatureTensor4:
    """(0,4)-tensor with curvature symmetries, laid out (x1, x2, x3, x4)."""

    comps: np.ndarray
    symmetry_class: str = CURVATURE_LIKE

    def __post_init__(self):
        arr = self.comps
        if arr.ndim != 4 or len(set(arr.shape)) != 1:
            raise TensorError(f"expected an n^4 grid, got shape {arr.shape}")
        if self.symmetry_class not in (CURVATURE_LIKE, PAIR_SKEW_ONLY):
            raise TensorError(f"unknown symmetry class {self.symmetry_class!r}")
        self.check_symmetries()
        _freeze(arr)

    @property
    def n(self) -> int:
        return self.comps.shape[0]

    def __getitem__(self, idx):
        return self.comps[idx]

    def check_symmetries(self) -> None:
        arr = self.comps
        if np.any(np.swapaxes(arr, 0, 1) != -arr):
            raise TensorError("not skew in (x1, x2)")
        if np.any(np.swapaxes(arr, 2, 3) != -arr):
            raise TensorError("not skew in (x3, x4)")
        if self.symmetry_class == CURVATURE_LIKE:
            if np.any(np.transpose(arr, (2, 3, 0, 1)) != arr):
                raise TensorError("pair symmetry violated")
            bianchi = arr + np.transpose(arr, (1, 2, 0, 3)) + np.transpose(arr, (2, 0, 1, 3))
            if np.any(bianchi != Fraction(0)):
                raise TensorError("first Bianchi identity violated")

    def is_zero(self) -> bool:
        return not np.any(self.comps != Fraction(0))


@dataclass(frozen=True)
class DerivedTensor4:
    """Rank-2 derivation output, laid out (x1, x2; x, y); skew in (x, y)."""

    comps: np.ndarray

    def __post_init__(self):
        arr = self.comps
        if arr.ndim != 4 or len(set(arr.shape)) != 1:
            raise TensorError(f"expected an n^4 grid, got shape {arr.shape}")
        if np.any(np.swapaxes(arr, 2, 3) != -arr):
            raise TensorError("not skew in (x, y)")
        _freeze(arr)

    @property
    def n(self) -> int:
        return self.comps.shape[0]

    def __getitem__(self, idx):
        return self.comps[idx]

    def is_zero(self) -> bool:
        return not np.any(self.comps != Fraction(0))


@dataclass(frozen=True)
class DerivedTensor6:
    """(0,6)-tensor laid out (x1, x2, x3, x4; x, y).

    Skewness in the three pairs is a consequence of how these tensors are
    produced; construction does not re-verify it (that is an O(n^6) sweep),
    ``check_skew`` does on demand and the test suite exercises it.
    """

    comps: np.ndarray

    def __post_init__(self):
        arr = self.comps
        if arr.ndim != 6 or len(set(arr.shape)) != 1:
            raise TensorError(f"expected an n^6 grid, got shape {arr.shape}")
        _freeze(arr)

    @property
    def n(self) -> int:
        return self.comps.shape[0]

    def __getitem__(self, idx):
        return self.comps[idx]

    def check_skew(self) -> None:
        arr = self.comps
        for (i, j) in ((0, 1), (2, 3), (4, 5)):
            if np.any(np.swapaxes(arr, i, j) != -arr):
                raise TensorError(f"not skew in axes ({i}, {j})")

    def is_zero(self) -> bool:
        return not np.any(self.comps != Fraction(0))


@dataclass(frozen=True)
class NormalTensor4:
    """Normal curvature grid (i, j; alpha, beta), skew in both pairs."""

    comps: np.ndarray

    def __post_init__(self):
        arr = self.comps
        if arr.ndim != 4 or arr.shape[0] != arr.shape[1] or arr.shape[2] != arr.shape[3]:
            raise TensorError(f"expected an (n,n,m,m) grid, got shape {arr.shape}")
        if np.any(np.swapaxes(arr, 0, 1) != -arr):
            raise TensorError("not skew in (i, j)")
        if np.any(np.swapaxes(arr, 2, 3) != -arr):
            raise TensorError("not skew in (alpha, beta)")
        _freeze(arr)

    @property
    def n(self) -> int:
        return self.comps.shape[0]

    @property
    def m(self) -> int:
        return self.comps.shape[2]

    def __getitem__(self, idx):
        return self.comps[idx]

    def is_zero(self) -> bool:
        return not np.any(self.comps != Fraction(0))


Tensor = SymMatrix | CurvatureTensor4 | DerivedTensor4 | DerivedTensor6 | NormalTensor4


def kulkarni_nomizu(A: SymMatrix, B: SymMatrix) -> CurvatureTensor4:
    """Kulkarni-Nomizu product of two symmetric (0,2)-tensors."""
    if A.n != B.n:
        raise TensorError(f"dimension mismatch: {A.n} vs {B.n}")
    return CurvatureTensor4(kernels.kulkarni_nomizu(A.comps, B.comps))


def wedge_endomorphism(A: SymMatrix, x: int, y: int, z: int) -> np.ndarray:
    """Coordinate vector of (E_x wedge_A E_y) E_z; indices are 1-based."""
    n = A.n
    for name, idx in (("x", x), ("y", y), ("z", z)):
        if not 1 <= idx <= n:
            raise TensorError(f"index {name}={idx} out of range 1..{n}")
    x, y, z = x - 1, y - 1, z - 1
    vec = kernels.zeros_object((n,))
    vec[x] += A.comps[y, z]
    vec[y] -= A.comps[x, z]
    return _freeze(vec)


def linear_combination(terms: Iterable[tuple[ScalarLike, Tensor]]) -> Tensor:
    """Componentwise sum of lambda_k * T_k; all tensors must share rank and n."""
    terms = list(terms)
    if not terms:
        raise TensorError("empty linear combination")
    first = terms[0][1]
    cls = type(first)
    acc = None
    for lam, t in terms:
        if type(t) is not cls or t.comps.shape != first.comps.shape:
            raise TensorError("rank/dimension mismatch in linear combination")
        part = to_rational(lam) * t.comps
        acc = part if acc is None else acc + part
    if cls is CurvatureTensor4:
        return CurvatureTensor4(acc, symmetry_class=first.symmetry_class)
    return cls(acc)


def max_abs_component(T: Tensor) -> tuple[Fraction, tuple[int, ...]]:
    """Largest |component| with its first (lexicographic) 1-based index tuple.

    The zero tensor reports magnitude 0 at (1, 1, ...).
    """
    flat = np.abs(T.comps.reshape(-1))
    pos = int(np.argmax(flat))
    value = flat[pos]
    if value == 0:
        return Fraction(0), (1,) * T.comps.ndim
    idx = np.unravel_index(pos, T.comps.shape)
    return value, tuple(i + 1 for i in idx)


def curvature_from_entries(n: int, entries: dict[tuple[int, int, int, int], ScalarLike],
                           symmetry_class: str = CURVATURE_LIKE) -> CurvatureTensor4:
    """Build a curvature tensor from 1-based generator entries.

    Each given component is propagated through the dihedral symmetry group
    (skew swaps and, for curvature-like tensors, the pair swap); conflicting
    assignments raise.
    """
    arr = kernels.zeros_object((n, n, n, n))
    seen: dict[tuple[int, int, int, int], Fraction] = {}

    def assign(idx, val):
        if idx in seen:
            if seen[idx] != val:
                raise TensorError(f"conflicting entries for index {tuple(i + 1 for i in idx)}")
            return
        seen[idx] = val
        arr[idx] = val

    for (u, v, w, t), raw in entries.items():
        val = to_rational(raw)
        base = (u - 1, v - 1, w - 1, t - 1)
        images = [(base, val)]
        a, b, c, d = base
        images.append(((b, a, c, d), -val))
        images.append(((a, b, d, c), -val))
        images.append(((b, a, d, c), val))
        if symmetry_class == CURVATURE_LIKE:
            for (i1, i2, i3, i4), v4 in list(images):
                images.append(((i3, i4, i1, i2), v4))
        for idx, v4 in images:
            assign(idx, v4)
    return CurvatureTensor4(arr, symmetry_class=symmetry_class)
