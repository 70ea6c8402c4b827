"""Exception types raised by the vedsum library."""

from __future__ import annotations


class VedsumError(Exception):
    """Base class for every error raised by this package."""


# corpus loading -------------------------------------------------------------

class MissingDirectory(VedsumError):
    def __init__(self, path, detail: str = "directory not found"):
        self.path = str(path)
        super().__init__(f"{detail}: {self.path}")


class EmptyCluster(VedsumError):
    def __init__(self, path, detail: str):
        self.path = str(path)
        super().__init__(f"{detail}: {self.path}")


class EncodingError(VedsumError):
    def __init__(self, path, cause: Exception | None = None):
        self.path = str(path)
        msg = f"file is not valid UTF-8: {self.path}"
        if cause is not None:
            msg += f" ({cause})"
        super().__init__(msg)


class CorpusShapeWarning(UserWarning):
    """A cluster deviates from the usual 2-5 documents / 2 references shape."""


# embedding providers --------------------------------------------------------

class EmptyInput(VedsumError):
    pass


class CacheMiss(VedsumError):
    def __init__(self, key: str):
        self.key = key
        super().__init__(f"embedding cache has no entry for key {key!r}")


class DimensionMismatch(VedsumError):
    pass


class TransportError(VedsumError):
    def __init__(self, url: str, cause):
        self.url = url
        self.cause = cause
        super().__init__(f"embedding request to {url} failed: {cause}")


class ProtocolError(VedsumError):
    pass


class ParseError(VedsumError):
    def __init__(self, path, line_no: int, detail: str):
        self.path = str(path)
        self.line_no = line_no
        super().__init__(f"{self.path}:{line_no}: {detail}")


class DuplicateKey(VedsumError):
    def __init__(self, key: str):
        self.key = key
        super().__init__(f"duplicate embedding key {key!r}")


# k-means --------------------------------------------------------------------

class KTooLarge(VedsumError):
    pass


class NonFiniteInput(VedsumError):
    pass


# rouge ----------------------------------------------------------------------

class EmptyReferences(VedsumError):
    pass


# summarization / harness ----------------------------------------------------

class SummarizeError(VedsumError):
    """Failure while summarizing one cluster; carries the cluster id."""

    def __init__(self, cluster_id: str, cause: Exception):
        self.cluster_id = cluster_id
        self.cause = cause
        super().__init__(f"cluster {cluster_id}: {cause}")


class BatchErrors(VedsumError):
    """Raised when no cluster in a batch could be processed."""

    def __init__(self, errors: dict[str, Exception]):
        self.errors = dict(errors)
        detail = "; ".join(f"{cid}: {err}" for cid, err in sorted(self.errors.items()))
        super().__init__(f"all clusters failed: {detail}")


class DuplicateName(VedsumError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"duplicate model name in comparison: {name!r}")
