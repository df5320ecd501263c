"""Exception hierarchy shared across the library."""


class BitgraphError(Exception):
    """Base class for all library errors."""


class InvalidCharacter(BitgraphError):
    """A sequence contains a character the encoder refuses in strict mode."""


class EmptyPattern(BitgraphError):
    """Pattern bitmasks need at least one pattern character."""


class CyclicGraph(BitgraphError):
    """The input graph contains a cycle; only DAG references are supported."""


class UnsupportedOrientation(BitgraphError):
    """GFA link uses an orientation other than +/+."""


class MalformedRecord(BitgraphError):
    """Unparseable GFA record; carries the offending line number."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class AnchorOutOfRange(BitgraphError):
    """Subgraph extraction anchor does not address a real graph position."""


class HopOverflow(BitgraphError):
    """An edge spans more linearized positions than the hop limit allows."""


class DeadEnd(BitgraphError):
    """Traceback found no zero bit where one must exist; state is corrupt."""


class WindowFailure(BitgraphError):
    """A traceback window found no match within its error budget."""


class ZeroProgress(BitgraphError):
    """A traceback window consumed no characters (guarded degenerate case)."""


class NoAlignmentWithinK(BitgraphError):
    """No graph alignment exists within the edit threshold."""


class ReadTooShort(BitgraphError):
    """Read is shorter than one minimizer window (k + w - 1 bases)."""


class BadMagic(BitgraphError):
    """Binary file does not start with the expected magic bytes."""


class VersionMismatch(BitgraphError):
    """Binary file was written by an incompatible format version."""


class TruncatedFile(BitgraphError):
    """Binary file ended before the declared tables were complete."""
