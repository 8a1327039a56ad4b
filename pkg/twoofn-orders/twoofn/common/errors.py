# --------------------------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------


class OrderingError(Exception):
    """
    Base class for errors raised by the twoofn library
    """

    pass


class OutOfSupport(OrderingError):
    """
    A point or grid lies outside the support of a baseline distribution
    """

    pass


class DegenerateDenominator(OrderingError):
    """
    A ratio was requested whose denominator vanishes at the evaluation point
    """

    pass


class InvalidProbability(OrderingError, ValueError):
    """
    A probability argument lies outside the open unit interval
    """

    pass


class ShapeNotUnit(OrderingError):
    """
    The closed-form reversed hazard rate was requested for a configuration with a shape other than 1
    """

    pass


class GridBelowLocation(OrderingError):
    """
    The evaluation grid starts at or below the largest location parameter
    """

    pass


class GeneratorDomain(OrderingError):
    """
    A generator inverse was evaluated outside its finite domain
    """

    pass


class UnsupportedGenerator(OrderingError):
    """
    The generator family has no frailty sampler
    """

    pass


class LengthMismatch(OrderingError, ValueError):
    """
    Parameter vectors have different lengths
    """

    pass


class StructuralMismatch(OrderingError):
    """
    Two configurations cannot be compared by the requested theorem
    """

    pass


class EvaluationFailure(OrderingError):
    """
    A user-supplied function failed at a sample point
    """

    def __init__(self, message, point=None, cause=None):
        super(EvaluationFailure, self).__init__(message)
        self.point = point
        self.cause = cause


class PolicyExhausted(OrderingError):
    """
    Rejection sampling could not produce a hypothesis-satisfying configuration pair
    """

    pass


class ScenarioError(ValueError):
    """
    A scenario file or command-line scenario argument could not be parsed
    """

    def __init__(self, message, line=None, field=None):
        if line is not None:
            message = "line {}: {}".format(line, message)
        super(ScenarioError, self).__init__(message)
        self.line = line
        self.field = field


EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2

error_exit_codes = {
    ScenarioError: EXIT_USAGE,
    LengthMismatch: EXIT_USAGE,
    StructuralMismatch: EXIT_USAGE,
    GridBelowLocation: EXIT_USAGE,
    OutOfSupport: EXIT_USAGE,
    InvalidProbability: EXIT_USAGE,
    UnsupportedGenerator: EXIT_USAGE,
    ShapeNotUnit: EXIT_USAGE,
    PolicyExhausted: EXIT_USAGE,
}


def exit_code_from_error(error):
    """
    Return the process exit status for an error raised while running a command

    :param error: The exception that stopped the command
    :returns: Exit status to use
    """
    for error_class, code in error_exit_codes.items():
        if isinstance(error, error_class):
            return code
    return EXIT_USAGE
