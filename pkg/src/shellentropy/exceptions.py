class DegenerateDistribution(ValueError):
    """Two probabilities coincide, so the Stotland measure has no finite value."""

    def __init__(self, i: int, j: int, pi: float, pj: float):
        self.indices = (i, j)
        self.values = (pi, pj)
        super().__init__(
            f"probabilities #{i} ({pi!r}) and #{j} ({pj!r}) are equal within "
            "tolerance; the Stotland excess entropy diverges"
        )


class InconsistentRecord(ValueError):
    """An occupation record whose probabilities do not sum to one."""


class UnsupportedNucleus(ValueError):
    """Proton number outside the tabulated shell sequence."""


class DatasetParseError(ValueError):
    def __init__(self, source: str, line: int, field: str, message: str):
        self.source = source
        self.line = line
        self.field = field
        super().__init__(f"{source}:{line}: field {field!r}: {message}")
