"""Local stationary presentation of the alternating groups.

The generators x_i = (i, i+1, i+2), i = 1..n-2, with relations

    x_i^3 = 1,  (x_i x_{i+1})^2 = 1,  x_i x_j = x_j x_i for |i-j| > 2,
    x_i x_{i+1}^-1 x_{i+2} = x_{i+2} x_i,

present A_n.  This package rewrites words into the canonical normal form
y_{1,k_1} ... y_{n-2,k_{n-2}}, converts between permutations, tuples and
ranks, and machine-checks the relations and their consequences.
"""

from .carmichael import check_carmichael, v_perm, v_to_x, x_to_v
from .census import census_solutions
from .derivations import builtin_scripts, verify_derivation
from .errors import AltnfError
from .normal_form import (
    NormalFormTuple,
    encode_perm,
    enumerate_nf,
    nf_evaluate,
    nf_to_word,
    normalize_word,
    rank,
    unrank,
    y_word,
)
from .perm import Permutation, compose, identity, inverse, parity, parse_perm, format_perm, three_cycle
from .presentation import check_assignment, check_stationarity, relation_instances
from .report import VerificationReport
from .words import Letter, Word, evaluate, format_word, free_reduce, parse_word

__version__ = "0.1.0"
