"""Linear-dependence analysis and the theorem verdict engine.

The dependence predicate is directional: the statements under test all have
the shape "T1 = lambda T2 for some function lambda", so a vanishing left
tensor (LeftZero, lambda = 0) counts as dependent while a vanishing right
tensor with nonzero left (RightZero) does not.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from . import engine
from .choi_lu import ChoiLuParams, choi_lu_shape_ops
from .curvature import SubmanifoldModel, is_totally_umbilical
from .engine import IntModel, ModelTensors, dependence_scaled
from .grids import GridPoint, GridSpec, default_grid
from .tensors import DerivedTensor4, DerivedTensor6, TensorError


class DependenceKind(enum.Enum):
    BOTH_ZERO = "BothZero"
    LEFT_ZERO = "LeftZero"
    RIGHT_ZERO = "RightZero"
    PROPORTIONAL = "Proportional"
    INDEPENDENT = "Independent"

    @property
    def admits_lambda(self) -> bool:
        """True when "T1 = lambda T2" holds for some lambda."""
        return self in (DependenceKind.BOTH_ZERO, DependenceKind.LEFT_ZERO,
                        DependenceKind.PROPORTIONAL)


@dataclass(frozen=True)
class DependenceVerdict:
    kind: DependenceKind
    lam: Fraction | float | None = None
    residual_max: Fraction | float = Fraction(0)


@dataclass(frozen=True)
class ConditionReport:
    left: str
    right: str
    verdict: DependenceVerdict


def dependence(T1: DerivedTensor4 | DerivedTensor6, T2: DerivedTensor4 | DerivedTensor6,
               tol: float | None = None) -> DependenceVerdict:
    """Decide T1 = lambda T2; exact by default, tolerance-based when tol is given."""
    if T1.comps.shape != T2.comps.shape:
        raise TensorError("dimension mismatch between compared tensors")
    a1, a2 = T1.comps, T2.comps
    if tol is None:
        z1, z2 = T1.is_zero(), T2.is_zero()
        if z1 and z2:
            return DependenceVerdict(DependenceKind.BOTH_ZERO)
        if z1:
            return DependenceVerdict(DependenceKind.LEFT_ZERO, lam=Fraction(0))
        if z2:
            return DependenceVerdict(DependenceKind.RIGHT_ZERO)
        flat1, flat2 = a1.reshape(-1), a2.reshape(-1)
        piv = int(np.argmax(np.abs(flat2)))
        lam = flat1[piv] / flat2[piv]
        resid = flat1 - lam * flat2
        mask = resid != Fraction(0)
        if not np.any(mask):
            return DependenceVerdict(DependenceKind.PROPORTIONAL, lam=lam)
        residual_max = max(abs(v) for v in resid[mask])
        return DependenceVerdict(DependenceKind.INDEPENDENT, residual_max=residual_max)
    f1 = a1.astype(np.float64).reshape(-1)
    f2 = a2.astype(np.float64).reshape(-1)
    s1, s2 = float(np.max(np.abs(f1))), float(np.max(np.abs(f2)))
    scale = max(s1, s2, 1e-300)
    if s1 <= tol * scale and s2 <= tol * scale:
        return DependenceVerdict(DependenceKind.BOTH_ZERO)
    if s1 <= tol * scale:
        return DependenceVerdict(DependenceKind.LEFT_ZERO, lam=0.0)
    if s2 <= tol * scale:
        return DependenceVerdict(DependenceKind.RIGHT_ZERO)
    piv = int(np.argmax(np.abs(f2)))
    lam = f1[piv] / f2[piv]
    residual_max = float(np.max(np.abs(f1 - lam * f2)))
    if residual_max <= tol * scale:
        return DependenceVerdict(DependenceKind.PROPORTIONAL, lam=lam, residual_max=residual_max)
    return DependenceVerdict(DependenceKind.INDEPENDENT, residual_max=residual_max)


def _verdict_from_scaled(t1, t2) -> DependenceVerdict:
    kind, lam = dependence_scaled(t1, t2)
    return DependenceVerdict(DependenceKind(kind), lam=lam)


_CONDITION_TENSORS = {
    "pseudoSym": ("R.R", "Q(g,R)"),
    "WeylpseudoS": ("R.C", "Q(g,C)"),
    "pseudoWeylT": ("C.C", "Q(g,C)"),
    "Riccipseudo": ("R.Ricc", "Q(g,Ricc)"),
    "RicciWeyl": ("R.C", "Q(Ricc,C)"),
}


def model_tensors(model: SubmanifoldModel) -> ModelTensors:
    """Exact integer tensor cache for a model (cleared denominators)."""
    return ModelTensors(IntModel.from_model(model))


def condition_matrix(model: SubmanifoldModel) -> list[ConditionReport]:
    """Every rank-compatible (left, right) dependence verdict, deterministic order."""
    mt = model_tensors(model)
    reports = []
    for left in engine.RANK6_LEFT:
        for right in engine.RANK6_RIGHT:
            reports.append(ConditionReport(left, right,
                                           _verdict_from_scaled(mt.get(left), mt.get(right))))
    for left, right in engine.RANK4_PAIRS:
        reports.append(ConditionReport(left, right,
                                       _verdict_from_scaled(mt.get(left), mt.get(right))))
    return reports


def extract_L(model: SubmanifoldModel, condition: str) -> DependenceVerdict:
    """Verdict for one named pseudo-symmetry condition; lam is its L-value."""
    try:
        left, right = _CONDITION_TENSORS[condition]
    except KeyError:
        raise TensorError(f"unknown condition {condition!r}; "
                          f"known: {sorted(_CONDITION_TENSORS)}") from None
    mt = model_tensors(model)
    return _verdict_from_scaled(mt.get(left), mt.get(right))


# --- theorem registry ----------------------------------------------------

def _lam_t9(p: GridPoint) -> Fraction:
    return Fraction(-2 * (p.n - 3), (p.n - 1) * (p.n - 2)) * p.mu * p.mu


def _lam_t10(p: GridPoint) -> Fraction:
    return p.k_tilde + p.c * p.c


def _lam_t25(p: GridPoint) -> Fraction:
    return (p.k_tilde + p.c * p.c) / (2 * p.mu * p.mu)


def _lam_t27(p: GridPoint) -> Fraction:
    return Fraction(-(p.n - 3), (p.n - 1) * (p.n - 2))


def _lam_tb(p: GridPoint) -> Fraction:
    return p.k_tilde + p.a * p.a + p.b * p.b + p.c * p.c


def _is_umbilical(p: GridPoint) -> bool:
    return p.mu == 0


def _in_wss(p: GridPoint) -> bool:
    # Weyl-semi-symmetric branch: a = b = 0, c^2 + k~ = 0 (includes a=b=c=k~=0)
    return p.a == 0 and p.b == 0 and p.mu != 0 and p.c * p.c + p.k_tilde == 0


def _in_ab0(p: GridPoint) -> bool:
    return p.a == 0 and p.b == 0 and p.mu != 0


def _in_t25(p: GridPoint) -> bool:
    return (p.a == 0 and p.b == 0 and p.mu != 0
            and p.c * p.c + p.k_tilde == Fraction(2, (p.n - 1) * (p.n - 2)) * p.mu * p.mu)


def _in_t27_printed(p: GridPoint) -> bool:
    # printed case (ii): a = 0, b = mu, H^2 + k~ = 2mu^2/(n-1)
    return (p.a == 0 and p.b == p.mu and p.mu != 0
            and p.mu * p.mu + p.c * p.c + p.k_tilde == Fraction(2, p.n - 1) * p.mu * p.mu)


BRANCH_PREDICATES: dict[str, Callable[[GridPoint], bool]] = {
    "umbilical": _is_umbilical,
    "wss": _in_wss,
    "ab0": _in_ab0,
    "t25": _in_t25,
    "t27printed": _in_t27_printed,
}


def branch_sample_points(branch: str, n_list: Sequence[int] = (4, 5, 6, 7),
                         m: int = 3) -> list[GridPoint]:
    """Grid points lying exactly on a constrained branch (rational solutions)."""
    zero = Fraction(0)
    pts = []
    if branch == "wss":
        for n in n_list:
            for c in (zero, Fraction(1), Fraction(2), Fraction(1, 2)):
                for mu in (Fraction(1), Fraction(1, 2), Fraction(-2)):
                    pts.append(GridPoint(n, m, zero, zero, c, mu, -c * c))
    elif branch == "ab0":
        for n in n_list:
            for c in (zero, Fraction(1), Fraction(2, 3)):
                for mu in (Fraction(1), Fraction(1, 3)):
                    for kt in (zero, Fraction(1), Fraction(-1, 3)):
                        pts.append(GridPoint(n, m, zero, zero, c, mu, kt))
    elif branch == "t25":
        for n in n_list:
            for c in (zero, Fraction(1), Fraction(1, 2)):
                for mu in (Fraction(1), Fraction(3)):
                    kt = Fraction(2, (n - 1) * (n - 2)) * mu * mu - c * c
                    pts.append(GridPoint(n, m, zero, zero, c, mu, kt))
    elif branch == "t27printed":
        for n in n_list:
            for c in (zero, Fraction(1), Fraction(1, 2)):
                for mu in (Fraction(1), Fraction(2)):
                    kt = Fraction(2, n - 1) * mu * mu - mu * mu - c * c
                    pts.append(GridPoint(n, m, zero, mu, c, mu, kt))
    else:
        raise TensorError(f"no sample construction for branch {branch!r}")
    return pts

# Dependence sets established computationally for every pair on Choi-Lu
# frames: at a grid point the pair is dependent iff one listed branch holds.
PAIR_DEPENDENCE_BRANCHES: dict[tuple[str, str], tuple[str, ...]] = {
    ("R.C", "Q(g,R)"): ("umbilical", "wss"),
    ("C.R", "Q(g,R)"): ("umbilical",),
    ("R.C-C.R", "Q(g,R)"): ("umbilical", "wss"),
    ("R.C", "Q(g,C)"): ("umbilical", "ab0"),
    ("C.R", "Q(g,C)"): ("umbilical",),
    ("R.C-C.R", "Q(g,C)"): ("umbilical",),
    ("R.C", "Q(g,g^Ricc)"): ("umbilical", "wss"),
    ("C.R", "Q(g,g^Ricc)"): ("umbilical",),
    ("R.C-C.R", "Q(g,g^Ricc)"): ("umbilical",),
    ("R.C", "Q(Ricc,R)"): ("umbilical", "wss"),
    ("C.R", "Q(Ricc,R)"): ("umbilical",),
    ("R.C-C.R", "Q(Ricc,R)"): ("umbilical",),
    ("R.C", "Q(Ricc,C)"): ("umbilical", "wss"),
    ("C.R", "Q(Ricc,C)"): ("umbilical",),
    ("R.C-C.R", "Q(Ricc,C)"): ("umbilical",),
    ("R.C", "Q(Ricc,g^Ricc)"): ("umbilical", "wss", "t25"),
    ("C.R", "Q(Ricc,g^Ricc)"): ("umbilical",),
    ("R.C-C.R", "Q(Ricc,g^Ricc)"): ("umbilical",),
    ("R.R", "Q(g,R)"): ("umbilical", "ab0"),
    ("R.Ricc", "Q(g,Ricc)"): ("umbilical", "ab0"),
}


@dataclass(frozen=True)
class TheoremSpec:
    theorem_id: str
    left: str
    right: str
    kt_filter: str | None = None          # ">0" | "<=0" | "=0" | None
    branch: str | None = None             # extra branch beyond "umbilical"
    branch_lam: Callable[[GridPoint], Fraction] | None = None
    branch_kind: DependenceKind | None = None
    paper_note: str | None = None         # set when the printed claim fails


def _kt_ok(p: GridPoint, flt: str | None) -> bool:
    if flt is None:
        return True
    if flt == ">0":
        return p.k_tilde > 0
    if flt == "<=0":
        return p.k_tilde <= 0
    if flt == "=0":
        return p.k_tilde == 0
    raise ValueError(flt)


def _spec(tid, left, right, kt=None, branch=None, lam=None,
          kind=None, note=None) -> TheoremSpec:
    return TheoremSpec(tid, left, right, kt_filter=kt, branch=branch,
                       branch_lam=lam, branch_kind=kind, paper_note=note)


_T27_NOTE = ("printed case (ii) never yields dependence: the three component "
             "families of (R.C - C.R, Q(Ricc,g^Ricc)) carry incompatible ratios "
             "for every (c, mu, k~); dependence holds at umbilical points only")

THEOREMS: dict[str, TheoremSpec] = {s.theorem_id: s for s in [
    _spec("T1", "R.C", "zero", kt=">0"),
    _spec("T2", "R.C", "zero", kt="<=0", branch="wss"),
    _spec("C1", "R.C", "zero", kt="=0", branch="wss"),
    _spec("T3", "C.R", "zero"),
    _spec("T4", "R.C-C.R", "zero"),
    _spec("T5", "R.C", "Q(g,R)", kt=">0"),
    _spec("T6", "R.C", "Q(g,R)", kt="<=0", branch="wss", kind=DependenceKind.LEFT_ZERO),
    _spec("C2", "R.C", "Q(g,R)", kt="=0", branch="wss", kind=DependenceKind.LEFT_ZERO),
    _spec("T7", "C.R", "Q(g,R)"),
    _spec("T8", "R.C-C.R", "Q(g,R)", kt=">0"),
    _spec("T9", "R.C-C.R", "Q(g,R)", kt="<=0", branch="wss",
          lam=_lam_t9, kind=DependenceKind.PROPORTIONAL),
    _spec("C3", "R.C-C.R", "Q(g,R)", kt="=0", branch="wss",
          lam=_lam_t9, kind=DependenceKind.PROPORTIONAL),
    _spec("T10", "R.C", "Q(g,C)", branch="ab0",
          lam=_lam_t10, kind=None),
    _spec("T11", "C.R", "Q(g,C)"),
    _spec("T12", "R.C-C.R", "Q(g,C)"),
    _spec("T13", "R.C", "Q(g,g^Ricc)", kt=">0"),
    _spec("T14", "R.C", "Q(g,g^Ricc)", kt="<=0", branch="wss", kind=DependenceKind.LEFT_ZERO),
    _spec("C4", "R.C", "Q(g,g^Ricc)", kt="=0", branch="wss", kind=DependenceKind.LEFT_ZERO),
    _spec("T15", "C.R", "Q(g,g^Ricc)"),
    _spec("T16", "R.C-C.R", "Q(g,g^Ricc)"),
    _spec("T17", "R.C", "Q(Ricc,R)", kt=">0"),
    _spec("T18", "R.C", "Q(Ricc,R)", kt="<=0", branch="wss", kind=DependenceKind.LEFT_ZERO),
    _spec("C5", "R.C", "Q(Ricc,R)", kt="=0", branch="wss", kind=DependenceKind.LEFT_ZERO),
    _spec("T19", "C.R", "Q(Ricc,R)"),
    _spec("T20", "R.C-C.R", "Q(Ricc,R)"),
    _spec("T21", "R.C", "Q(Ricc,C)", kt=">0"),
    _spec("T22", "R.C", "Q(Ricc,C)", kt="<=0", branch="wss", kind=DependenceKind.LEFT_ZERO),
    _spec("C6", "R.C", "Q(Ricc,C)", kt="=0", branch="wss", kind=DependenceKind.LEFT_ZERO),
    _spec("T23", "C.R", "Q(Ricc,C)"),
    _spec("T24", "R.C-C.R", "Q(Ricc,C)"),
    _spec("T25", "R.C", "Q(Ricc,g^Ricc)", branch="t25",
          lam=_lam_t25, kind=DependenceKind.PROPORTIONAL,
          note=("the printed hypothesis c^2 + k~ != 0 is insufficient; dependence "
                "requires c^2 + k~ = 2mu^2/((n-1)(n-2)), under which the printed "
                "coefficient (k~ + c^2)/(2mu^2) is exact")),
    _spec("T26", "C.R", "Q(Ricc,g^Ricc)"),
    _spec("T27", "R.C-C.R", "Q(Ricc,g^Ricc)", branch="t27printed",
          lam=_lam_t27, kind=DependenceKind.PROPORTIONAL, note=_T27_NOTE),
    _spec("TB", "R.R", "Q(g,R)", branch="ab0",
          lam=_lam_tb, kind=DependenceKind.PROPORTIONAL),
]}


@dataclass(frozen=True)
class PointVerdict:
    point: GridPoint
    region: str                 # "umbilical" | "branch" | "generic"
    verdict: DependenceVerdict
    expected_lam: Fraction | None
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    rows: list[PointVerdict]
    passed: bool
    paper_note: str | None = None


def _point_region(spec: TheoremSpec, p: GridPoint) -> str:
    if _is_umbilical(p):
        return "umbilical"
    if spec.branch and BRANCH_PREDICATES[spec.branch](p):
        return "branch"
    return "generic"


def _expected_dependent(spec: TheoremSpec, p: GridPoint) -> bool:
    """Ground truth for the pair at this point, per the dependence sets."""
    if spec.right == "zero":
        branches = ("umbilical",) + (("wss",) if spec.left == "R.C" else ())
    else:
        branches = PAIR_DEPENDENCE_BRANCHES[(spec.left, spec.right)]
    return any(BRANCH_PREDICATES[b](p) for b in branches)


def theorem_verdict(theorem_id: str, grid: GridSpec | Iterable[GridPoint] | None = None,
                    check_only_if: bool = True) -> TheoremReport:
    """Check one theorem over a grid: branch points must be dependent with the
    claimed coefficient, generic points independent.

    Grid points violating the theorem's k~ hypothesis are skipped.  For the
    chain corollaries (C7, C8, C9) every listed pair is evaluated per point
    and the equivalence of the conditions is what is checked.
    """
    if theorem_id in ("C7", "C8", "C9"):
        return _chain_verdict(theorem_id, grid)
    try:
        spec = THEOREMS[theorem_id]
    except KeyError:
        raise TensorError(f"unknown theorem id {theorem_id!r}") from None
    points = _grid_points(grid, spec)
    rows: list[PointVerdict] = []
    for p in points:
        if not _kt_ok(p, spec.kt_filter):
            continue
        mt = ModelTensors(IntModel.from_point(p))
        left = mt.get(spec.left)
        if spec.right == "zero":
            dependent = left.is_zero()
            verdict = DependenceVerdict(
                DependenceKind.LEFT_ZERO if dependent else DependenceKind.INDEPENDENT,
                lam=Fraction(0) if dependent else None)
        else:
            verdict = _verdict_from_scaled(left, mt.get(spec.right))
            dependent = verdict.kind.admits_lambda
        region = _point_region(spec, p)
        expected_lam = None
        note = ""
        if region == "branch":
            # the theorem's case-(ii) claim: dependent, with the stated
            # verdict kind and coefficient where the theorem states one
            ok = dependent
            if not ok:
                note = "branch point is not dependent"
            elif spec.branch_kind is not None and verdict.kind != spec.branch_kind:
                ok = False
                note = f"expected {spec.branch_kind.value}, got {verdict.kind.value}"
            elif spec.branch_lam is not None and verdict.kind == DependenceKind.PROPORTIONAL:
                expected_lam = spec.branch_lam(p)
                if verdict.lam != expected_lam:
                    ok = False
                    note = f"lambda {verdict.lam} != expected {expected_lam}"
        else:
            expected_dep = _expected_dependent(spec, p)
            if not check_only_if and not expected_dep:
                continue
            ok = dependent == expected_dep
            if not ok:
                note = ("dependent but expected independent" if dependent
                        else "independent but expected dependent")
        rows.append(PointVerdict(p, region, verdict, expected_lam, ok, note))
    return TheoremReport(theorem_id, rows, all(r.passed for r in rows), spec.paper_note)


_CHAIN_PAIRS = [("R.C", "Q(g,R)"), ("R.C", "Q(g,g^Ricc)"), ("R.C", "Q(Ricc,R)"),
                ("R.C", "Q(Ricc,C)"), ("R.C-C.R", "Q(g,R)")]


def _chain_verdict(theorem_id: str, grid) -> TheoremReport:
    """C7 (k~<=0), C8 (k~=0): conditions II..VI hold iff the point is in the
    Weyl-semi-symmetric branch; C9 (k~>0): I..IV hold iff totally umbilical."""
    kt_filter = {"C7": "<=0", "C8": "=0", "C9": ">0"}[theorem_id]
    points = _grid_points(grid, None)
    rows = []
    for p in points:
        if not _kt_ok(p, kt_filter):
            continue
        if theorem_id in ("C7", "C8") and _is_umbilical(p):
            continue     # the chain corollaries address the non-umbilical case
        mt = ModelTensors(IntModel.from_point(p))
        deps = []
        for left, right in _CHAIN_PAIRS:
            v = _verdict_from_scaled(mt.get(left), mt.get(right))
            deps.append(v.kind.admits_lambda)
        if theorem_id == "C9":
            want = _is_umbilical(p)
            conds = deps[:4]
        else:
            want = _in_wss(p)
            conds = deps
        ok = all(d == want for d in conds)
        note = "" if ok else f"conditions {conds} vs branch membership {want}"
        region = "branch" if want else "generic"
        rows.append(PointVerdict(p, region, DependenceVerdict(
            DependenceKind.PROPORTIONAL if all(conds) else DependenceKind.INDEPENDENT),
            None, ok, note))
    return TheoremReport(theorem_id, rows, all(r.passed for r in rows), None)


def _grid_points(grid, spec) -> list[GridPoint]:
    if grid is None:
        pts = list(default_grid(n_list=(4, 5), m_list=(3,)).points())
        # constrained branches have no rational points on the default grid;
        # append exact samples so the "if" direction is actually exercised
        if spec is not None and spec.branch in ("wss", "t25", "t27printed"):
            pts.extend(branch_sample_points(spec.branch, n_list=(4, 5, 6)))
        return pts
    if isinstance(grid, GridSpec):
        return list(grid.points())
    return list(grid)


def counterexample_search(left: str, right: str,
                          grid: GridSpec | Iterable[GridPoint] | None = None
                          ) -> list[tuple[GridPoint, DependenceVerdict]]:
    """Points where the pair is dependent although the model is non-umbilical
    and outside every known case-(ii) branch.  Expected empty."""
    branches = PAIR_DEPENDENCE_BRANCHES[(left, right)]
    hits = []
    for p in _grid_points(grid, None):
        if any(BRANCH_PREDICATES[b](p) for b in branches):
            continue
        mt = ModelTensors(IntModel.from_point(p))
        verdict = _verdict_from_scaled(mt.get(left), mt.get(right))
        if verdict.kind.admits_lambda:
            hits.append((p, verdict))
    return hits
