"""Exact polynomial Heisenberg groups, their localized Weyl *-algebras,
and Fock state factorization checks."""

from .algebra import (
    AlgebraElement,
    LocalizedElement,
    TensorElement,
    alg_mul,
    alg_star,
    ambient_embed,
    embed_generator,
    embed_refine,
    merge_factorize,
    tensor_mul,
    tensor_star,
)
from .errors import (
    DegreeMismatchError,
    DomainError,
    RegionMismatchError,
    ShapeError,
    UnsupportedStateError,
)
from .fock import (
    FockQuadParams,
    StateSpec,
    evaluate,
    factorizability_defect,
    fock_eval_n1,
    fock_eval_n2,
    gram_psd_check,
    nogo_experiment,
    state_eval,
    weight,
)
from .group import GroupElement, RescaleMap, compose, identity, inverse, khat_apply, khat_inverse
from .lie import (
    CurrentElement,
    LieElement,
    RescalingParams,
    StepFunction,
    bracket_current,
    bracket_one_mode,
    ell_0,
    ell_I,
    jacobi_defect,
    rescaling_constants,
    shat_apply,
)
from .oracle import oracle_matrix_check
from .poly import Poly, s_apply, t_apply, t_inv_apply
from .regions import (
    Interval,
    Partition,
    Region,
    common_refinement,
    is_refinement,
    length,
    merge_partitions,
    split_partition,
)
from .scalars import complex_principal_sqrt, pow_half_int, rat_sqrt_exact

__version__ = "0.1.0"
