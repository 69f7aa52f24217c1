"""
Error hierarchy for the interval spectra toolkit.

Every error carries a stable snake-case `code` for machine-readable reports and
the process `exit_code` the CLI uses when the error escapes a command.
Theorem violations are never raised; they are reported as values.
"""

from typing import Any, Dict, Optional


class SpectraError(Exception):
    """Base class for all toolkit errors"""

    code = "spectra_error"
    exit_code = 1

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.message = message
        self.context: Dict[str, Any] = context

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "context": self.context}


class InvalidInput(SpectraError):
    code = "invalid_input"


# Graph construction and parsing

class LoopEdge(SpectraError):
    code = "loop_edge"


class DuplicateEdge(SpectraError):
    code = "duplicate_edge"


class EmptyEdgeSet(SpectraError):
    code = "empty_edge_set"


class Disconnected(SpectraError):
    code = "disconnected"


class MalformedHeader(SpectraError):
    code = "malformed_header"


class TruncatedBits(SpectraError):
    code = "truncated_bits"


class EdgeListSyntax(SpectraError):
    code = "edge_list_syntax"


class Unreachable(SpectraError):
    code = "unreachable"


class InvalidVertex(SpectraError):
    code = "invalid_vertex"


class NotAnEdge(SpectraError):
    code = "not_an_edge"


# Labelings

class EmptySpectrum(SpectraError):
    code = "empty_spectrum"


class NonInjective(SpectraError):
    code = "non_injective"


class NotBijective(SpectraError):
    code = "not_bijective"


class LabelCountMismatch(SpectraError):
    code = "label_count_mismatch"


class LabelOutOfRange(SpectraError):
    code = "label_out_of_range"


# Galaxies

class EmptySequence(SpectraError):
    code = "empty_sequence"


class NotAGalaxy(SpectraError):
    code = "not_a_galaxy"


# Chains and gradient paths

class NotEligible(SpectraError):
    code = "not_eligible"


class ChainBroken(SpectraError):
    code = "chain_broken"
    exit_code = 2


class NotInLambda(SpectraError):
    code = "not_in_lambda"


class InvalidPath(SpectraError):
    code = "invalid_path"


class TruncatedOutput(SpectraError):
    """Raised when an enumeration hits its bound; `partial` holds what was produced"""

    code = "truncated_output"

    def __init__(self, message: str, partial: Optional[list] = None, **context: Any):
        super().__init__(message, **context)
        self.partial = list(partial or [])


# Resource guards and internal consistency

class TooManyEdges(SpectraError):
    code = "too_many_edges"
    exit_code = 3


class InvariantFailure(SpectraError):
    code = "invariant_failure"
    exit_code = 2
