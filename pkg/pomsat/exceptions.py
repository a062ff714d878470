from typing import Optional


class PomdpError(Exception):
    pass


class PomdpSyntaxError(PomdpError):
    def __init__(self, message: str, line: int, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = f"line {line}" if column is None else f"line {line}, col {column}"
        super().__init__(f"{location}: {message}")


class PomdpValidationError(PomdpError):
    pass


class CnfError(Exception):
    pass


class DuplicateVariable(CnfError):
    pass


class InvalidClause(CnfError):
    pass


class SolverError(Exception):
    pass


class ExternalSolverError(SolverError):
    pass


class ModelValidationError(SolverError):
    pass


class StrategyError(Exception):
    pass


class EmptySupport(StrategyError):
    pass


class DimensionMismatch(StrategyError):
    pass


class StrategySyntaxError(StrategyError):
    pass


class VerificationFailed(StrategyError):
    pass


class CapExceeded(Exception):
    pass


class EnumerationCapExceeded(CapExceeded):
    pass


class NodeCapExceeded(CapExceeded):
    pass


class InvalidGeometry(ValueError):
    pass
