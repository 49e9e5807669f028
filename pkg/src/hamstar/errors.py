"""Exception types shared across the package."""


class HamstarError(Exception):
    pass


class GraphArgumentError(HamstarError, ValueError):
    """Bad argument: index out of range, wrong size, invalid sequence."""


class CapacityError(HamstarError, ValueError):
    """Graph too large for the requested operation."""


class Graph6Error(HamstarError, ValueError):
    def __init__(self, message, offset=None, line=None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class RegimeError(HamstarError):
    """A check was asked about a graph outside the hypothesis it applies to."""


class StructureError(HamstarError):
    """The graph lacks structure a proof step relies on."""


class ExtractionFailure(HamstarError):
    def __init__(self, message, searched=None):
        super().__init__(message)
        self.searched = searched or []
