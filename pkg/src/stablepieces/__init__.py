"""
Combinatorics of G-stable pieces of the wonderful compactification.

Root systems and Weyl groups (``rootsys``, ``weyl``), piece labels and their
point counts (``pieces``), orbit closures and the boundary of the unipotent
closure (``closure``), Coxeter elements (``coxeter``), admissible pairs
(``admissible``) and the explicit case data with its verifier (``cases``).
"""

from .kernels import BACKEND
from .rootsys import RootSystem, SeriesRank, build, fundamental_coweight, simple_coroot
from .weyl import (EnumerationBoundError, WeylElem, bruhat_leq, enumerate_elements,
                   from_word, group_order, identity, longest_element, parse_word)
from .qpoly import Q, QPoly
from .pieces import (BetaChain, ChainError, PieceLabel, beta_sequence, enumerate_pieces,
                     group_compactification_count, piece_count_poly, poincare_polynomial,
                     terminal_levi)
from .closure import (OrbitLabel, boundary_count_poly, boundary_pieces, coxeter_piece_closure,
                      orbit_closure_contains)
from .coxeter import (check_layer_closed_forms, conjugating_sequence, coxeter_below,
                      enumerate_coxeter, is_coxeter, w_J_coxeter)
from .admissible import (admissibility_basis, admissible_from_regular, is_admissible,
                         lifting_hypotheses)
from .cases import CaseData, NotCovered, case_data, verify_case

__all__ = [
    "BACKEND", "RootSystem", "SeriesRank", "build", "fundamental_coweight", "simple_coroot",
    "EnumerationBoundError", "WeylElem", "bruhat_leq", "enumerate_elements", "from_word",
    "group_order", "identity", "longest_element", "parse_word", "Q", "QPoly", "BetaChain",
    "ChainError", "PieceLabel", "beta_sequence", "enumerate_pieces",
    "group_compactification_count", "piece_count_poly", "poincare_polynomial", "terminal_levi",
    "OrbitLabel", "boundary_count_poly", "boundary_pieces", "coxeter_piece_closure",
    "orbit_closure_contains", "check_layer_closed_forms", "conjugating_sequence",
    "coxeter_below", "enumerate_coxeter", "is_coxeter", "w_J_coxeter", "admissibility_basis",
    "admissible_from_regular", "is_admissible", "lifting_hypotheses", "CaseData", "NotCovered",
    "case_data", "verify_case",
]

__version__ = "0.1.0"
