"""Exact-arithmetic toolkit for Category O of rational Cherednik algebras
of exceptional Coxeter groups."""

from .exact import (
    INFINITE,
    GradedCharacter,
    QuadRat,
    Rat,
    ShiftedLaurent,
    eval_at_one,
    is_palindromic,
    laurent_reduce,
)
from .chartab import (
    CharacterTable,
    ClassFunction,
    FusionMap,
    induce,
    inner,
    product_table,
    restrict,
    sign_twist,
    sym_power_reflection,
    tensor,
)
from .cato import (
    Block,
    DecompMatrix,
    Parameter,
    PartialMatrix,
    h_weight,
    invert_unitriangular,
    rouquier_scale_dim,
    simple_character,
    support_dim,
    verma_character,
    weight_lines,
)
from .ktheory import KVector, ind_k, peel_module, project_block, res_k
from . import lemmas
from .dataio import Dataset, load_dataset

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
