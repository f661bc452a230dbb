"""RSK variants, the Schur-Weyl graph and ergodic-method estimates of
Thoma measures."""
__version__ = "0.1.0"

from .diagrams import Cell, conjugate, diagram, frobenius, partitions
from .errors import (ContainmentError, EnumerationLimitError, InvalidCornerError, InvalidSymbolError,
                     ParseError, ScheduleError, SchurWeylError, ShapeError, TableauKindError)
from .rsk import (RskPair, c_a_bruteforce, c_a_formula, phi, psi, rsk, rsk_inverse, rsk_mixed,
                  rsk_mixed_star, rsk_star, shape_of)
from .symbols import dagger, format_word, parse_word, rev, star
from .tableau import (EMPTY, Tableau, evacuation, from_text, insert, insert_dual, insert_mixed,
                      insert_row, reverse_insert, tableau, to_text, transpose)
from .young import ThomaParams, count_ssyt, dim, dim_frobenius, dim_hook, dim_paths, hook_schur, schur

__all__ = [
    "Cell", "conjugate", "diagram", "frobenius", "partitions",
    "ContainmentError", "EnumerationLimitError", "InvalidCornerError", "InvalidSymbolError",
    "ParseError", "ScheduleError", "SchurWeylError", "ShapeError", "TableauKindError",
    "RskPair", "c_a_bruteforce", "c_a_formula", "phi", "psi", "rsk", "rsk_inverse", "rsk_mixed",
    "rsk_mixed_star", "rsk_star", "shape_of",
    "dagger", "format_word", "parse_word", "rev", "star",
    "EMPTY", "Tableau", "evacuation", "from_text", "insert", "insert_dual", "insert_mixed",
    "insert_row", "reverse_insert", "tableau", "to_text", "transpose",
    "ThomaParams", "count_ssyt", "dim", "dim_frobenius", "dim_hook", "dim_paths", "hook_schur", "schur",
]
