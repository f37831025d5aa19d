"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class MforbitsError(Exception):
    exit_code = 1
    kind = "error"


class ContractError(MforbitsError):
    """A pre/post-condition of an operation was violated."""

    kind = "contract"


class ConformanceError(ContractError):
    """Computed data does not fit the expected pattern (signals a catalogue bug)."""

    kind = "conformance"

    def __init__(self, message, offending=None):
        super().__init__(message)
        self.offending = offending


class UnsupportedError(ContractError):
    kind = "unsupported"


class ParameterError(MforbitsError):
    exit_code = 2
    kind = "parameter"


class ResourceError(MforbitsError):
    exit_code = 3
    kind = "resource"
