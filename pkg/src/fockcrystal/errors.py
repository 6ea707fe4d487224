class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ParseError(DomainError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position
