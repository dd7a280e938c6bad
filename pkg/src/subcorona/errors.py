"""Exception type shared by every module.

Each failure carries a short machine-readable ``code`` (``REG_REQUIRED``,
``INVALID_PARAMS`` ...) so the CLI can map it onto an exit status and
print it on stderr.
"""


class SpectraError(Exception):
    def __init__(self, code: str, message: str = ""):
        self.code = code
        super().__init__(f"{code}: {message}" if message else code)


# Precondition failures (the CLI exits 3 on these).
PRECONDITION_CODES = frozenset({
    "INVALID_PARAMS",
    "EDGE_REQUIRED",
    "NON_SQUARE",
    "NOT_MONIC",
    "NOT_SYMMETRIC",
    "COMPLEX_ROOTS",
    "REG_REQUIRED",
    "DISCONNECTED",
    "HYPOTHESIS_NOT_MET",
    "TOO_LARGE",
    "PARSE_ERROR",
})
