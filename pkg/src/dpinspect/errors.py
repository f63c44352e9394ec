"""Exception types shared across the toolkit."""


class DpinspectError(Exception):
    """Base class for all toolkit errors."""


# -- capture parsing ---------------------------------------------------------

class UnknownMagic(DpinspectError):
    """Stream does not begin with a classic PCAP global header."""


class TruncatedRecord(DpinspectError):
    """PCAP record header or body cut short."""

    def __init__(self, offset, message):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class MalformedHeader(DpinspectError):
    """Declared header lengths exceed the captured frame bounds."""


class FileUnreadable(DpinspectError):
    """A capture path could not be opened or read."""


# -- dataset building --------------------------------------------------------

class EmptyClass(DpinspectError):
    """A class required for balancing has no samples."""


class UnknownCategory(DpinspectError):
    """An attack category is not present in the class map."""


class AmbiguousMatch(UserWarning):
    """Two ground-truth records with different categories match one packet."""


# -- tokenization ------------------------------------------------------------

class BadHexDigit(DpinspectError):
    """Hex string contains a character outside [0-9a-f]."""


class OddLength(DpinspectError):
    """Hex string length is not a multiple of two."""


class MalformedSequence(DpinspectError):
    """Token sequence violates its structural invariants."""


# -- tensor engine -----------------------------------------------------------

class ShapeMismatch(DpinspectError):
    """Operands have incompatible shapes."""

    def __init__(self, op, *shapes):
        super().__init__(f"{op}: incompatible shapes {' vs '.join(str(s) for s in shapes)}")


class NonScalarLoss(DpinspectError):
    """backward() called on a non-scalar tensor."""


# -- model / checkpoints -----------------------------------------------------

class InvalidConfig(DpinspectError):
    """Model configuration violates a structural constraint."""


class SequenceTooLong(DpinspectError):
    """Batch capacity exceeds the position-embedding table."""


class CheckpointError(DpinspectError):
    """Base class for checkpoint I/O failures."""


class VersionMismatch(CheckpointError):
    """Checkpoint format version or configuration is incompatible."""


class ConfigMismatch(VersionMismatch):
    """Checkpoint configuration disagrees with the requested use."""


class CorruptManifest(CheckpointError):
    """Checkpoint is truncated or fails its checksum."""


# -- training / evaluation ---------------------------------------------------

class LabelOutOfRange(DpinspectError):
    """A label id is outside [0, num_labels)."""


class LengthMismatch(DpinspectError):
    """Paired label sequences have different lengths."""


class EmptyMatrix(DpinspectError):
    """Metrics requested for a confusion matrix with zero samples."""


# -- encryption --------------------------------------------------------------

class BadKeyLength(DpinspectError):
    """Cipher key does not have the required length."""


class BadIvLength(DpinspectError):
    """Initialization vector does not have the required length."""


class InvalidToken(DpinspectError):
    """Authenticated token failed structural or MAC verification."""


# -- CLI ---------------------------------------------------------------------

class UsageError(DpinspectError):
    """Bad command-line flags or inconsistent run configuration."""


class InvalidSpec(DpinspectError):
    """Synthetic corpus specification is unsatisfiable."""
