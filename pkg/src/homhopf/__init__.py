"""Exact structure-constant computations for Hom-associative and Hom-Hopf
structures: twisted tensor products, smash and diagonal crossed products,
Yetter-Drinfeld modules, and the Drinfeld double of a finite-dimensional
Hom-Hopf algebra, all over the rationals or a prime field with zero
numerical tolerance."""

from .scalars import GF, QQ
from .linalg import (CoTensor, Mat, MulTensor, Vec, contract, flip_matrix,
                     invert_linear_map, kron, permute_legs)
from .report import AxiomReport, AxiomResult, set_default_jobs
from .structures import (HomAlgebra, HomBialgebra, HomCoalgebra,
                         HomHopfAlgebra, check_hom_algebra,
                         check_hom_bialgebra, check_hom_coalgebra,
                         check_hom_hopf, check_quasitriangular, yau_twist)

__all__ = [
    "GF", "QQ",
    "CoTensor", "Mat", "MulTensor", "Vec", "contract", "flip_matrix",
    "invert_linear_map", "kron", "permute_legs",
    "AxiomReport", "AxiomResult", "set_default_jobs",
    "HomAlgebra", "HomBialgebra", "HomCoalgebra", "HomHopfAlgebra",
    "check_hom_algebra", "check_hom_bialgebra", "check_hom_coalgebra",
    "check_hom_hopf", "check_quasitriangular", "yau_twist",
]
