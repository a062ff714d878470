from typing import Tuple

from pomsat.cnf import CnfFormula, VarMap
from pomsat.encoder.determinism import add_determinism
from pomsat.encoder.memoryless import encode_memoryless
from pomsat.encoder.sizes import CLAUSE_BOUND_CONSTANT, clause_bound, variable_bound
from pomsat.encoder.small_memory import encode_small_memory
from pomsat.types.encoder import EncodeParams
from pomsat.types.pomdp import Pomdp


def encode(p: Pomdp, params: EncodeParams) -> Tuple[CnfFormula, VarMap]:
    """Build the frozen formula selected by ``params``."""

    if params.encoding == "memoryless":
        formula, var_map = encode_memoryless(p, params)
    else:
        formula, var_map = encode_small_memory(p, params)
    if params.deterministic:
        add_determinism(formula, var_map, p, params)
    return formula.freeze(), var_map


__all__ = [
    "CLAUSE_BOUND_CONSTANT",
    "EncodeParams",
    "add_determinism",
    "clause_bound",
    "encode",
    "encode_memoryless",
    "encode_small_memory",
    "variable_bound",
]
