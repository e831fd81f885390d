"""Exception hierarchy shared by all modules."""


class HierarchyError(Exception):
    pass


class InputError(HierarchyError):
    """Malformed regex, DFA document or alphabet."""


class RegexSyntaxError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class AlphabetError(InputError):
    pass


class ResourceError(HierarchyError):
    """A configured size cap was exceeded."""


class InconsistencyError(HierarchyError):
    """Two independent routes disagreed; always an implementation bug."""
