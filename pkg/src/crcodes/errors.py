"""Exception taxonomy shared by all modules.

The CLI maps these onto its exit-code contract: input problems
(DomainError, FormatError, CatalogError) exit 2, guard violations
(ResourceError) exit 3, verification mismatches exit 1.
"""

from __future__ import annotations


class CRCodesError(Exception):
    """Base class for all toolkit errors."""


class DomainError(CRCodesError):
    """A mathematical precondition is violated (bad field element, wrong characteristic, ...)."""


class FormatError(CRCodesError):
    """Malformed external input (code files, CLI rationals)."""


class ResourceError(CRCodesError):
    """A size guard was exceeded. ``guard`` names the limit that fired."""

    def __init__(self, guard: str, detail: str = ""):
        self.guard = guard
        msg = f"resource guard exceeded: {guard}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class CatalogError(CRCodesError):
    """Unknown catalog id or invalid family parameters."""


class EmptyCodeError(DomainError):
    """A transform produced a code with no codewords."""


class InternalConsistencyError(CRCodesError):
    """Two independent computations of the same quantity disagree.

    This is never silenced: it indicates a bug in the toolkit, not a
    property of the input code.
    """
