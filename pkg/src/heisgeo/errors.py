"""Exception types shared across the package."""


class WordParseError(ValueError):
    """Malformed word text.  `offset` is the 0-based position of the bad input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class ResourceLimitError(RuntimeError):
    """A configured size/search ceiling was exceeded before the work started."""


class CompletionLimitError(ResourceLimitError):
    """Dead-end completion exhausted its area budget without finding a word."""

    def __init__(self, word: str, max_area: int):
        super().__init__(
            f"no dead-end completion of {word!r} with commutator area <= {max_area}"
        )
        self.word = word
        self.max_area = max_area
