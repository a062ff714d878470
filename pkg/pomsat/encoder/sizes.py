from typing import Final

from pomsat.types.encoder import EncodeParams
from pomsat.types.pomdp import Pomdp

CLAUSE_BOUND_CONSTANT: Final[int] = 20


def variable_bound(p: Pomdp, params: EncodeParams) -> int:
    """Upper bound on the number of non-auxiliary variables."""

    s, a, z = p.num_states, p.num_actions, p.num_observations
    mu, k = params.mu, params.k
    return 2 * (s * mu * k + mu * mu * z * a + s * a)


def clause_bound(p: Pomdp, params: EncodeParams) -> int:
    s, a, z = p.num_states, p.num_actions, p.num_observations
    mu, k = params.mu, params.k
    return CLAUSE_BOUND_CONSTANT * s * s * mu * mu * z * a * k
