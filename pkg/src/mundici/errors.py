"""Exception hierarchy shared by all modules."""


class MundiciError(Exception):
    pass


class ElementNotInCarrier(MundiciError):
    def __init__(self, structure, element):
        super().__init__(f"{element!r} is not an element of {structure}")
        self.structure = structure
        self.element = element


class SourceTargetMismatch(MundiciError):
    pass


class AlgebraMismatch(MundiciError):
    pass


class NotAGoodSequence(MundiciError):
    def __init__(self, index, components):
        super().__init__(f"absorption fails at index {index} of {components!r}")
        self.index = index
        self.components = components


class NegativeElement(MundiciError):
    pass


class ImageEscapesInterval(MundiciError):
    pass


class RestrictionEscapesInterval(MundiciError):
    pass


class NotOpen(MundiciError):
    pass


class NotContinuous(MundiciError):
    pass


class UnboundVariable(MundiciError):
    pass


class SignatureMismatch(MundiciError):
    pass


class ParseError(MundiciError):
    pass


class SpecError(MundiciError):
    """Malformed JSON structure description."""


class InvariantViolation(MundiciError):
    """A construction produced a result the theory says is impossible."""
