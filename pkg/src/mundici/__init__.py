"""Exact, executable Mundici equivalence between MV-algebras and unital l-groups."""
from .functors import gamma, gamma_hom, l_group, l_hom, phi, psi
from .goodseq import GoodSequence, good_sum, normalize
from .lgroup import FreePointwise, LexZ2, LHom, RationalVec, ScaledInt, check_l_hom, check_lu_axioms, check_torsion_free
from .mv import Chain, Chang, FiniteTable, MvHom, Product, check_mv_axioms, check_mv_hom
from .report import Report

__all__ = [
    "Chain", "Chang", "FiniteTable", "FreePointwise", "GoodSequence", "LHom", "LexZ2", "MvHom", "Product",
    "RationalVec", "Report", "ScaledInt", "check_l_hom", "check_lu_axioms", "check_mv_axioms", "check_mv_hom",
    "check_torsion_free", "gamma", "gamma_hom", "good_sum", "l_group", "l_hom", "normalize", "phi", "psi",
]
