"""Engine errors.  Each carries a stable machine-readable ``code``."""


class EngineError(Exception):
    code = "EngineError"


class DegreeCapExceeded(EngineError):
    code = "DegreeCapExceeded"


class NotMPrimaryLocally(EngineError):
    code = "NotMPrimaryLocally"


class NotAReduction(EngineError):
    code = "NotAReduction"


class ReductionBoundExceeded(EngineError):
    code = "ReductionBoundExceeded"


class CharacteristicTooSmall(EngineError):
    code = "CharacteristicTooSmall"


class HypothesisRefused(EngineError):
    """An operation whose hypothesis is not met (e.g. height without the CI flag)."""

    code = "HypothesisRefused"


class NotZeroDimensional(EngineError):
    code = "NotZeroDimensional"
