"""Exception hierarchy.

Input problems (bad files, bad indices) derive from :class:`InputError`;
failures of a lattice to satisfy an axiom derive from :class:`LatticeAxiomError`
and carry the offending witness.
"""

from __future__ import annotations


class OrthoError(Exception):
    """Base class for every error raised by this package."""


class InputError(OrthoError, ValueError):
    pass


class IoError(InputError):
    """A file could not be read."""


class MalformedInput(InputError):
    def __init__(self, message: str, *, field: str | None = None, line: int | None = None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"[{', '.join(where)}] " if where else ""
        super().__init__(prefix + message)


class IndexOutOfRange(MalformedInput):
    pass


class LatticeAxiomError(OrthoError, ValueError):
    """A candidate structure violates an axiom; ``witnesses`` names the elements."""

    def __init__(self, axiom_id: str, witnesses: tuple[int, ...], report=None):
        self.axiom_id = axiom_id
        self.witnesses = tuple(witnesses)
        self.report = report
        super().__init__(f"{axiom_id} fails at {self.witnesses}")


class NotAPoset(LatticeAxiomError):
    pass


class NotALattice(LatticeAxiomError):
    pass


class NotOrtholattice(LatticeAxiomError):
    pass


class NotOrthomodular(LatticeAxiomError):
    pass


class SizeLimitExceeded(OrthoError):
    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: {size} exceeds limit {limit}")


class PreconditionViolated(OrthoError):
    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class NotCentralSubalgebra(OrthoError):
    def __init__(self, flag: str):
        self.flag = flag
        super().__init__(f"subset is not a central boolean subalgebra: {flag} fails")
