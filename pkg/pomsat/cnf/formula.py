from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Text, Tuple

from pomsat.exceptions import DuplicateVariable, InvalidClause

Clause = Tuple[int, ...]

VAR_KINDS = ("A", "C", "P", "M", "AUX")


class VarKey(NamedTuple):
    kind: Text
    args: Tuple[int, ...]

    def __str__(self) -> Text:
        return f"{self.kind}({','.join(str(a) for a in self.args)})"


class VarMap:
    """Bidirectional map between structured keys and DIMACS variable indices."""

    def __init__(self):
        self._index: Dict[VarKey, int] = {}
        self._keys: List[VarKey] = []

    def __len__(self) -> int:
        return len(self._keys)

    def __contains__(self, key: VarKey) -> bool:
        return key in self._index

    def __iter__(self) -> Iterator[Tuple[VarKey, int]]:
        return ((key, i + 1) for i, key in enumerate(self._keys))

    @property
    def num_vars(self) -> int:
        return len(self._keys)

    def fresh_var(self, key: VarKey) -> int:
        if key.kind not in VAR_KINDS:
            raise ValueError(f"Unknown variable kind '{key.kind}'")
        if key in self._index:
            raise DuplicateVariable(f"Variable {key} already allocated")
        self._keys.append(key)
        self._index[key] = len(self._keys)
        return self._index[key]

    def var(self, kind: Text, *args: int) -> int:
        return self._index[VarKey(kind, args)]

    def lookup(self, key: VarKey) -> Optional[int]:
        return self._index.get(key)

    def key_of(self, index: int) -> VarKey:
        if not 1 <= index <= len(self._keys):
            raise KeyError(index)
        return self._keys[index - 1]

    def count(self, kind: Text) -> int:
        return sum(1 for key in self._keys if key.kind == kind)


class CnfFormula:
    """A CNF formula over the variables of a ``VarMap``.

    Clauses are validated on insertion: no empty clause, no literal outside
    ``1..num_vars`` and no complementary pair. Repeated literals are merged.
    """

    def __init__(self, var_map: VarMap):
        self.var_map = var_map
        self._clauses: List[Clause] = []
        self._frozen = False

    @property
    def num_vars(self) -> int:
        return self.var_map.num_vars

    @property
    def clauses(self) -> List[Clause]:
        return self._clauses

    @property
    def num_clauses(self) -> int:
        return len(self._clauses)

    @property
    def frozen(self) -> bool:
        return self._frozen

    def freeze(self) -> "CnfFormula":
        self._frozen = True
        return self

    def add_clause(self, literals: Iterable[int]) -> None:
        if self._frozen:
            raise InvalidClause("Formula is frozen")
        clause: List[int] = []
        seen = set()
        num_vars = self.num_vars
        for lit in literals:
            if lit == 0 or abs(lit) > num_vars:
                raise InvalidClause(f"Literal {lit} out of range 1..{num_vars}")
            if -lit in seen:
                raise InvalidClause(f"Tautological clause containing {lit} and {-lit}")
            if lit not in seen:
                seen.add(lit)
                clause.append(lit)
        if not clause:
            raise InvalidClause("Empty clause")
        self._clauses.append(tuple(clause))

    def __iter__(self) -> Iterator[Clause]:
        return iter(self._clauses)

    def __len__(self) -> int:
        return len(self._clauses)


def fresh_var(var_map: VarMap, key: VarKey) -> int:
    return var_map.fresh_var(key)


def add_clause(formula: CnfFormula, literals: Iterable[int]) -> None:
    formula.add_clause(literals)
