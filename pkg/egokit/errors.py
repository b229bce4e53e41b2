# Common error types, kept in one module to avoid cyclical imports between subpackages.


class EgokitError(Exception):
    """Base class for all errors raised by egokit."""


# region Signals


class MissingColumn(EgokitError, ValueError):
    pass


class NonMonotonicTime(EgokitError, ValueError):
    pass


class NonUniformSampling(EgokitError, ValueError):
    pass


class RaggedRow(EgokitError, ValueError):
    pass


class MissingValue(EgokitError, ValueError):
    pass


class UnknownChannel(EgokitError, KeyError):
    pass


class EmptyChannelSet(EgokitError, ValueError):
    pass


class InvalidFeatureCase(EgokitError, ValueError):
    pass


class SeriesTooShort(EgokitError, ValueError):
    pass


# endregion

# region Clustering and vocabulary


class TooFewSamples(EgokitError, ValueError):
    pass


class DimensionMismatch(EgokitError, ValueError):
    pass


class SequenceTooShort(EgokitError, ValueError):
    pass


class UnknownWord(EgokitError, KeyError):
    pass


# endregion

# region Filtering and anomaly


class NotPositiveDefinite(EgokitError, ValueError):
    pass


class NumericalFailure(EgokitError, ArithmeticError):
    pass


class CoefficientOutOfRange(EgokitError, ValueError):
    pass


# endregion

# region Evaluation


class SingleClassLabels(EgokitError, ValueError):
    pass


class LengthMismatch(EgokitError, ValueError):
    pass


class EmptyReportSet(EgokitError, ValueError):
    pass


# endregion


class InvalidParams(EgokitError, ValueError):
    pass


class ModelFormatError(EgokitError, ValueError):
    pass
