from typing import NamedTuple, Tuple, Union


class And(NamedTuple):
    children: Tuple["BoolExpr", ...]


class Or(NamedTuple):
    children: Tuple["BoolExpr", ...]


# Leaves are DIMACS literals; negation appears only at the leaves.
BoolExpr = Union[int, And, Or]


def conj(*children: "BoolExpr") -> "BoolExpr":
    return And(tuple(children))


def disj(*children: "BoolExpr") -> "BoolExpr":
    return Or(tuple(children))


def simplify(expr: BoolExpr) -> BoolExpr:
    """Flatten nested nodes of the same kind and collapse single-child nodes."""

    if isinstance(expr, int):
        return expr
    kind = type(expr)
    flat = []
    for child in expr.children:
        child = simplify(child)
        if not isinstance(child, int) and type(child) is kind:
            flat.extend(child.children)
        else:
            flat.append(child)
    if len(flat) == 1:
        return flat[0]
    return kind(tuple(flat))


def evaluate(expr: BoolExpr, assignment) -> bool:
    """Evaluate under ``assignment`` mapping variable index to bool."""

    if isinstance(expr, int):
        value = bool(assignment[abs(expr)])
        return value if expr > 0 else not value
    if isinstance(expr, And):
        return all(evaluate(c, assignment) for c in expr.children)
    return any(evaluate(c, assignment) for c in expr.children)


def count_internal_nodes(expr: BoolExpr) -> int:
    if isinstance(expr, int):
        return 0
    return 1 + sum(count_internal_nodes(c) for c in expr.children)


def count_fan_in(expr: BoolExpr) -> int:
    if isinstance(expr, int):
        return 0
    return len(expr.children) + sum(count_fan_in(c) for c in expr.children)
