"""Pointwise curvature-tensor verification for Wintgen ideal submanifolds."""

from .choi_lu import ChoiLuParams, choi_lu_shape_ops, closed_form_table, theorem_case_builder
from .classify import (
    DependenceKind,
    DependenceVerdict,
    condition_matrix,
    counterexample_search,
    dependence,
    extract_L,
    theorem_verdict,
)
from .curvature import (
    SubmanifoldModel,
    UmbilicityClass,
    classify_umbilicity,
    ddvv_gap,
    gauss_curvature,
    inf_sectional,
    mean_curvature,
    normal_curvature,
    ricci_from_R,
    scalar_invariants,
    sectional_curvature,
    weyl,
)
from .derivations import (
    commutation_residual,
    endo_derive,
    extended_kulkarni,
    p_tensor,
    tachibana,
)
from .tensors import (
    CurvatureTensor4,
    DerivedTensor4,
    DerivedTensor6,
    FrameConvention,
    NormalTensor4,
    SymMatrix,
    TensorError,
    kulkarni_nomizu,
    linear_combination,
    max_abs_component,
    wedge_endomorphism,
)

__version__ = "0.1.0"
