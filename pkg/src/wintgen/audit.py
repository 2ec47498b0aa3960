"""Grid audits: closed-form tables against brute force, exactly.

Every audit runs the integer engine over a deterministic parameter grid and
compares brute-force tensor components against the transcriptions in
``tables``.  A mismatch is never hidden: it becomes an errata row holding
the transcribed value and the brute value, and is then re-evaluated by a
second, independent evaluator (``naive_component``, plain nested loops over
Fractions sharing no code with the einsum kernels).  A mismatch confirmed
by both paths flags a misprint in the source table rather than an
implementation bug.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import tables
from .engine import IntModel, ModelTensors
from .grids import GridPoint, GridSpec, default_grid
from .scalars import format_rational
from .tables import Env

# (table, line, point, indices, component, paper_value, brute_value, tensor_id)
Failure = tuple


@dataclass(frozen=True)
class ErrataRow:
    table: str
    line: str
    point: GridPoint
    indices: tuple[int, ...]        # 1-based index assignment (i, j, k), may be ()
    component: tuple[int, ...]      # 1-based full component tuple
    paper_value: Fraction
    brute_value: Fraction
    confirmed: bool                 # second independent path agrees with brute
    failing_points: int = 1

    def as_record(self) -> dict:
        return {
            "table": self.table, "line": self.line,
            "n": self.point.n, "m": self.point.m,
            "a": format_rational(self.point.a), "b": format_rational(self.point.b),
            "c": format_rational(self.point.c), "mu": format_rational(self.point.mu),
            "k_tilde": format_rational(self.point.k_tilde),
            "indices": ",".join(map(str, self.indices)),
            "component": ",".join(map(str, self.component)),
            "paper_value": format_rational(self.paper_value),
            "brute_value": format_rational(self.brute_value),
            "confirmed": self.confirmed,
            "failing_points": self.failing_points,
        }


@dataclass
class AuditResult:
    checks: int = 0
    errata: list[ErrataRow] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.errata

    @property
    def all_confirmed(self) -> bool:
        return all(row.confirmed for row in self.errata)


def _wedge_matrix(p: int, q: int, n: int) -> np.ndarray:
    # entry [z, w] of <(E_p ^ E_q) E_z, E_w>, all 0-based
    W = np.zeros((n, n), dtype=np.int64)
    W[q, p] = 1
    W[p, q] = -1
    return W


def _resolve(sym: str, assign: dict[str, int]) -> int:
    if sym in ("1", "2"):
        return int(sym) - 1
    return assign[sym] - 1


def _index_assignments(index_vars: str, n: int) -> list[dict[str, int]]:
    """Representative 1-based assignments for the free indices in {3..n}."""
    if index_vars == "":
        return [{}]
    if index_vars == "i":
        return [{"i": v} for v in sorted({3, n})]
    if index_vars == "ij":
        pairs = [(3, 4), (4, 3)]
        if n > 4:
            pairs.append((n, 3))
        return [{"i": i, "j": j} for i, j in pairs]
    if index_vars == "ijk":
        if n < 5:
            return []
        triples = [(3, 4, 5), (5, 3, 4)]
        if n > 5:
            triples.append((n, 3, 4))
        return [{"i": i, "j": j, "k": k} for i, j, k in triples]
    raise ValueError(index_vars)


def _formula_slice(formula: tables.SliceFormula, env: Env, assign: dict[str, int],
                   n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for coeff, (p, q) in formula.terms:
        out = out + coeff(env) * _wedge_matrix(_resolve(p, assign), _resolve(q, assign), n)
    return out


def _merge_and_confirm(checks: int, failures: list[Failure]) -> AuditResult:
    """Deduplicate failures by (table, line, component, indices) and confirm
    each representative with the independent evaluator."""
    result = AuditResult(checks=checks)
    order: list[tuple] = []
    grouped: dict[tuple, list[Failure]] = {}
    for f in failures:
        key = (f[0], f[1], f[4], f[3])
        if key not in grouped:
            grouped[key] = []
            order.append(key)
        grouped[key].append(f)
    for key in order:
        group = grouped[key]
        table, line, point, indices, component, paper_value, brute_value, tensor_id = group[0]
        confirmed_val = naive_component(tensor_id, point, component)
        result.errata.append(ErrataRow(table, line, point, indices, component,
                                       paper_value, brute_value,
                                       confirmed=(confirmed_val == brute_value),
                                       failing_points=len(group)))
    return result


def _chunks(items: list, jobs: int) -> list[list]:
    jobs = max(1, min(jobs, len(items) or 1))
    size = (len(items) + jobs - 1) // jobs
    return [items[i:i + size] for i in range(0, len(items), size)]


def _run_chunked(worker, points: list[GridPoint], jobs: int) -> tuple[int, list[Failure]]:
    if jobs <= 1 or len(points) < 4:
        return worker(points)
    checks = 0
    failures: list[Failure] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for c, f in pool.map(worker, _chunks(points, jobs * 4)):
            checks += c
            failures.extend(f)
    return checks, failures


# --- criterion-2 audit: derived tables (source 2.2.2-2.2.7) ------------------

def _derived_chunk(points: list[GridPoint]) -> tuple[int, list[Failure]]:
    checks = 0
    failures: list[Failure] = []
    for point in points:
        mt = ModelTensors(IntModel.from_point(point))
        env = Env(point.n, point.a, point.b, point.c, point.mu, point.k_tilde)
        n = point.n
        for formula in tables.ALL_DERIVED_FORMULAS:
            tens = mt.get(formula.tensor)
            for assign in _index_assignments(formula.index_vars, n):
                x1 = _resolve(formula.first[0], assign)
                x2 = _resolve(formula.first[1], assign)
                x = _resolve(formula.last[0], assign)
                y = _resolve(formula.last[1], assign)
                brute = tens.arr[x1, x2, :, :, x, y]
                expected = _formula_slice(formula, env, assign, n) * tens.scale
                checks += 1
                diff = np.not_equal(brute.astype(object), expected)
                if np.any(diff):
                    z, w = map(int, np.argwhere(diff)[0])
                    comp = (x1 + 1, x2 + 1, z + 1, w + 1, x + 1, y + 1)
                    failures.append((formula.table, formula.line, point,
                                     tuple(sorted(set(assign.values()))), comp,
                                     Fraction(expected[z, w]) / tens.scale,
                                     Fraction(int(brute[z, w])) / tens.scale,
                                     formula.tensor))
    return checks, failures


def audit_derived_tables(grid: GridSpec | None = None, jobs: int = 1) -> AuditResult:
    """Source 2.2.2-2.2.7: every derived-tensor component formula on the grid."""
    grid = grid or default_grid()
    checks, failures = _run_chunked(_derived_chunk, list(grid.points()), jobs)
    return _merge_and_confirm(checks, failures)


# --- criterion-1 audit: the 2.2.1 tables -------------------------------------

_SCALAR_TENSOR_IDS = {"eq001*": "R", "eq001**": "Ricc",
                      "eqgWRICCI001**": "g^Ricc", "eq701*": "C"}


def _scalar_entries(n: int):
    for label, name, pattern, coeff in (tables.SCALAR_R_ENTRIES + tables.SCALAR_S_ENTRIES
                                        + tables.SCALAR_GW_ENTRIES + tables.SCALAR_C_ENTRIES):
        if "j" in pattern:
            pairs = [(3, 4)] + ([(3, n), (n - 1, n)] if n > 4 else [])
            for i, j in pairs:
                yield label, name, pattern, coeff, {"i": i, "j": j}
        elif "i" in pattern:
            for i in sorted({3, n}):
                yield label, name, pattern, coeff, {"i": i}
        else:
            yield label, name, pattern, coeff, {}


def _scalar_chunk(points: list[GridPoint]) -> tuple[int, list[Failure]]:
    checks = 0
    failures: list[Failure] = []
    for point in points:
        mt = ModelTensors(IntModel.from_point(point))
        env = Env(point.n, point.a, point.b, point.c, point.mu, point.k_tilde)
        n = point.n
        grids4 = {"eq001*": mt.base("R"), "eqgWRICCI001**": mt.base("g^Ricc"),
                  "eq701*": mt.base("C")}
        ricc = mt.base("Ricc")
        for label, name, pattern, coeff, assign in _scalar_entries(n):
            idx = tuple(_resolve(s, assign) for s in pattern)
            tens = ricc if label == "eq001**" else grids4[label]
            brute = Fraction(int(tens.arr[idx])) / tens.scale
            expected = coeff(env)
            checks += 1
            if brute != expected:
                failures.append((label, name, point, tuple(sorted(set(assign.values()))),
                                 tuple(i + 1 for i in idx), expected, brute,
                                 _SCALAR_TENSOR_IDS[label]))
        tau = Fraction(mt.tau) / ricc.scale
        checks += 2
        if tau != tables.tau_formula(env):
            failures.append(("eq5", "tau", point, (), (), tables.tau_formula(env), tau, "tau"))
        rho = tau / (n * (n - 1))
        if rho != tables.rho_formula(env):
            failures.append(("eq6", "rho", point, (), (), tables.rho_formula(env), rho, "rho"))
        # eq010: operator rows are whole (Z, W)-slices of R
        R = mt.base("R")
        for formula in tables.EQ010_FORMULAS:
            for assign in _index_assignments(formula.index_vars, n):
                u = _resolve(formula.first[0], assign)
                v = _resolve(formula.first[1], assign)
                brute_slice = R.arr[u, v, :, :]
                expected = _formula_slice(formula, env, assign, n) * R.scale
                checks += 1
                diff = np.not_equal(brute_slice.astype(object), expected)
                if np.any(diff):
                    z, w = map(int, np.argwhere(diff)[0])
                    failures.append(("eq010", formula.line, point,
                                     tuple(sorted(set(assign.values()))),
                                     (u + 1, v + 1, z + 1, w + 1),
                                     Fraction(expected[z, w]) / R.scale,
                                     Fraction(int(brute_slice[z, w])) / R.scale, "R"))
        # eqbli3..6: wedges of shape-operator images
        im = mt.im
        D2 = Fraction(im.D) ** 2
        for label, op_idx, (s_sym, t_sym), terms in tables.EQBLI_ROWS:
            if op_idx >= point.m:
                continue
            ivars = "ij" if "j" in (s_sym, t_sym) else ("i" if "i" in (s_sym, t_sym) else "")
            for assign in _index_assignments(ivars, n):
                s = _resolve(s_sym, assign)
                t = _resolve(t_sym, assign)
                A = im.ops[op_idx]
                X, Y = A[:, s], A[:, t]
                brute_mat = np.outer(Y, X) - np.outer(X, Y)   # [z,w] = Y_z X_w - X_z Y_w
                expected = np.zeros((n, n), dtype=object)
                for coeff, (p, q) in terms:
                    expected = expected + (coeff(env) * D2) * _wedge_matrix(
                        _resolve(p, assign), _resolve(q, assign), n)
                checks += 1
                diff = np.not_equal(brute_mat.astype(object), expected)
                if np.any(diff):
                    z, w = map(int, np.argwhere(diff)[0])
                    failures.append((label, f"A_{op_idx + 1}", point,
                                     tuple(sorted(set(assign.values()))),
                                     (s + 1, t + 1, z + 1, w + 1),
                                     Fraction(expected[z, w]) / D2,
                                     Fraction(int(brute_mat[z, w])) / D2,
                                     f"bli:{op_idx}"))
    return checks, failures


def audit_scalar_tables(grid: GridSpec | None = None, jobs: int = 1) -> AuditResult:
    """Source 2.2.1: R, Ricci, g^Ricc, C component tables plus tau and rho."""
    grid = grid or default_grid()
    checks, failures = _run_chunked(_scalar_chunk, list(grid.points()), jobs)
    return _merge_and_confirm(checks, failures)


# --- commutation identity over the grid --------------------------------------

def _commutation_chunk(points: list[GridPoint]) -> tuple[int, list]:
    checked = 0
    bad = []
    for point in points:
        mt = ModelTensors(IntModel.from_point(point))
        checked += 1
        if not mt.commutation_residual_scaled().is_zero():
            bad.append(point)
    return checked, bad


def audit_commutation(grid: GridSpec | None = None, jobs: int = 1) -> tuple[int, list[GridPoint]]:
    """Commutation-identity residual over the grid; returns (checked, failures)."""
    grid = grid or default_grid()
    return _run_chunked(_commutation_chunk, list(grid.points()), jobs)


# --- completeness of the "other values are null" claims ----------------------

def check_table_completeness(grid: GridSpec | None = None) -> list[dict]:
    """Rebuild each 2.2.1 tensor from its listed generators and diff against
    brute force, exposing component families missing from the tables.

    Known outcome: the (1, i, i, 2) family of g^Ricc (value S_12 = (n-2) a mu)
    is absent from its table although the display claims all other components
    vanish.  Informational; not part of the listed-entry audit.
    """
    from .tensors import curvature_from_entries

    grid = grid or GridSpec(values={v: (Fraction(1, 3), Fraction(-2, 3)) for v in
                                    ("a", "b", "c", "mu", "k_tilde")}, n_list=(4, 5))
    omissions: dict[tuple, dict] = {}
    for point in grid.points():
        n = point.n
        env = Env(point.n, point.a, point.b, point.c, point.mu, point.k_tilde)
        mt = ModelTensors(IntModel.from_point(point))
        for label, entries_spec, tens in (
                ("eq001*", tables.SCALAR_R_ENTRIES, mt.base("R")),
                ("eqgWRICCI001**", tables.SCALAR_GW_ENTRIES, mt.base("g^Ricc")),
                ("eq701*", tables.SCALAR_C_ENTRIES, mt.base("C"))):
            entries = {}
            for _, name, pattern, coeff in entries_spec:
                if "j" in pattern:
                    assigns = [{"i": i, "j": j} for i in range(3, n + 1)
                               for j in range(3, n + 1) if i < j]
                elif "i" in pattern:
                    assigns = [{"i": i} for i in range(3, n + 1)]
                else:
                    assigns = [{}]
                for assign in assigns:
                    idx = tuple(_resolve(s, assign) + 1 for s in pattern)
                    entries[idx] = coeff(env)
            rebuilt = curvature_from_entries(n, entries)
            brute = tens.arr.astype(object) / tens.scale
            diff = np.not_equal(brute, rebuilt.comps)
            for raw in np.argwhere(diff):
                comp = tuple(int(i) + 1 for i in raw)
                key = (label, _component_family(comp))
                if key not in omissions:
                    omissions[key] = {
                        "table": label, "family": key[1],
                        "example_component": comp,
                        "example_point": point.as_dict(),
                        "brute_value": brute[tuple(raw)],
                        "table_value": rebuilt.comps[tuple(raw)],
                    }
    return list(omissions.values())


def _component_family(comp: tuple[int, ...]) -> str:
    return "".join("1" if i == 1 else "2" if i == 2 else "i" for i in comp)


# --- second, independent brute-force path (no shared kernels) ----------------

def naive_component(tensor_id: str, point: GridPoint, component: tuple[int, ...]) -> Fraction:
    """One tensor component straight from the definitions, nested loops only.

    Deliberately shares no code with the einsum kernels: shape operators as
    nested lists, explicit sums, the derivation and wedge actions expanded
    per their defining formulas.  Used to confirm audit mismatches.
    """
    n, m = point.n, point.m
    a, b, c, mu, kt = point.a, point.b, point.c, point.mu, point.k_tilde
    A1 = [[Fraction(0)] * n for _ in range(n)]
    A2 = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        A1[i][i] = a
        A2[i][i] = b
    A1[0][1] = A1[1][0] = mu
    A2[0][0] = b + mu
    A2[1][1] = b - mu
    ops = [A1, A2]
    if m >= 3:
        A3 = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            A3[i][i] = c
        ops.append(A3)

    def r_comp(x1, x2, x3, x4):
        total = Fraction(0)
        for A in ops:
            total += A[x1][x4] * A[x2][x3] - A[x1][x3] * A[x2][x4]
        total += kt * ((1 if x1 == x4 else 0) * (1 if x2 == x3 else 0)
                       - (1 if x1 == x3 else 0) * (1 if x2 == x4 else 0))
        return total

    S = [[sum(r_comp(i, u, v, i) for i in range(n)) for v in range(n)] for u in range(n)]
    tau = sum(S[i][i] for i in range(n))

    def d(p, q):
        return Fraction(1 if p == q else 0)

    def gw_comp(x1, x2, x, y):
        return (d(x1, y) * S[x2][x] + S[x1][y] * d(x2, x)
                - d(x1, x) * S[x2][y] - S[x1][x] * d(x2, y))

    def gg_comp(x1, x2, x, y):
        return 2 * (d(x1, y) * d(x2, x) - d(x1, x) * d(x2, y))

    def c_comp(x1, x2, x3, x4):
        return (r_comp(x1, x2, x3, x4) - Fraction(1, n - 2) * gw_comp(x1, x2, x3, x4)
                + Fraction(tau, 2 * (n - 1) * (n - 2)) * gg_comp(x1, x2, x3, x4))

    def endo_R(x, y, z):
        return [r_comp(x, y, z, w) for w in range(n)]

    def endo_C(x, y, z):
        return [c_comp(x, y, z, w) for w in range(n)]

    def wedge_A(A, x, y, z):
        vec = [Fraction(0)] * n
        vec[x] += A[y][z]
        vec[y] -= A[x][z]
        return vec

    def derived(comp_fn, endo, idx):
        x1, x2, x3, x4, x, y = idx
        total = Fraction(0)
        base = [x1, x2, x3, x4]
        for slot in range(4):
            coeffs = endo(x, y, base[slot])
            args = list(base)
            for t in range(n):
                if coeffs[t] == 0:
                    continue
                args[slot] = t
                total -= coeffs[t] * comp_fn(*args)
        return total

    if tensor_id == "tau":
        return tau
    if tensor_id == "rho":
        return Fraction(tau, n * (n - 1))
    if tensor_id.startswith("bli:"):
        op_idx = int(tensor_id.split(":")[1])
        s, t, z, w = (i - 1 for i in component)
        A = ops[op_idx]
        X = [A[r][s] for r in range(n)]
        Y = [A[r][t] for r in range(n)]
        return Y[z] * X[w] - X[z] * Y[w]
    idx0 = tuple(i - 1 for i in component)
    g_mat = [[d(i, j) for j in range(n)] for i in range(n)]
    if tensor_id == "R.C":
        return derived(c_comp, endo_R, idx0)
    if tensor_id == "C.R":
        return derived(r_comp, endo_C, idx0)
    if tensor_id == "R.C-C.R":
        return derived(c_comp, endo_R, idx0) - derived(r_comp, endo_C, idx0)
    if tensor_id.startswith("Q("):
        a_name, t_name = tensor_id[2:-1].split(",")
        A = g_mat if a_name == "g" else S
        comp_fn = {"R": r_comp, "C": c_comp, "g^Ricc": gw_comp}[t_name]
        return derived(comp_fn, lambda x, y, z: wedge_A(A, x, y, z), idx0)
    if tensor_id == "R":
        return r_comp(*idx0)
    if tensor_id == "Ricc":
        return S[idx0[0]][idx0[1]]
    if tensor_id == "g^Ricc":
        return gw_comp(*idx0)
    if tensor_id == "C":
        return c_comp(*idx0)
    raise ValueError(f"no naive evaluator for {tensor_id!r}")
