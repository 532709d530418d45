# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function

import logging
log = logging.getLogger(__name__)


class CmiError(Exception):
    """
    Base class for all errors raised by this package.

    Every error carries a fixed numeric code, a fixed message and an
    optional detail string describing the concrete failure.
    """

    #: Process exit code used by the command line interface.
    exit_code = 1

    def __init__(self, code, message, detail=None):
        """
        :param int code: The error code.
        :param str message: The fixed error message.
        :param str detail: Optional description of the concrete failure.
        """
        text = message if not detail else "{}: {}".format(message, detail)
        super(CmiError, self).__init__(text)
        self.error_code = code
        self.error_message = message
        self.detail = detail


class LabelSpaceError(CmiError):
    """
    The label space sizes are invalid (I, J >= 2 and K >= 1 required).
    """
    def __init__(self, detail=None):
        super(LabelSpaceError, self).__init__(
            0x10, "invalid label space", detail)


class EmptySampleError(CmiError):
    """
    The sample does not contain any observation.
    """
    def __init__(self, detail=None):
        super(EmptySampleError, self).__init__(0x11, "empty sample", detail)


class OutOfRangeError(CmiError):
    """
    A coordinate or flat index lies outside the label space.
    """
    def __init__(self, detail=None):
        super(OutOfRangeError, self).__init__(
            0x12, "coordinate out of range", detail)


class InvalidPmfError(CmiError):
    """
    The probabilities are negative or do not sum to one.
    """
    def __init__(self, detail=None):
        super(InvalidPmfError, self).__init__(
            0x13, "invalid probability mass function", detail)


class AbsoluteContinuityError(CmiError):
    """
    The second distribution vanishes where the first one does not.
    """
    def __init__(self, detail=None):
        super(AbsoluteContinuityError, self).__init__(
            0x14, "absolute continuity violated", detail)


class InvalidParameterError(CmiError):
    """
    A numeric parameter lies outside its admissible range.
    """
    def __init__(self, detail=None):
        super(InvalidParameterError, self).__init__(
            0x15, "invalid parameter", detail)


class InvalidDataError(CmiError):
    """
    A data column holds missing or non-numeric values.
    """
    exit_code = 2

    def __init__(self, detail=None):
        super(InvalidDataError, self).__init__(0x16, "invalid data", detail)


class UnknownStratumError(CmiError):
    """
    The sample contains a stratum of Z without a conditional column.
    """
    def __init__(self, detail=None):
        super(UnknownStratumError, self).__init__(
            0x20, "unknown stratum in conditional", detail)


class EnumerationTooLargeError(CmiError):
    """
    The number of tables with the requested margins exceeds the cap.
    """
    def __init__(self, detail=None):
        super(EnumerationTooLargeError, self).__init__(
            0x21, "enumeration too large", detail)


class NonPositivePmfError(CmiError):
    """
    The operation needs all cell probabilities to be strictly positive.
    """
    def __init__(self, detail=None):
        super(NonPositivePmfError, self).__init__(
            0x30, "gradient requires strictly positive pmf", detail)


class NotConditionallyIndependentError(CmiError):
    """
    The operation is only defined at conditionally independent
    distributions.
    """
    def __init__(self, detail=None):
        super(NotConditionallyIndependentError, self).__init__(
            0x31, "M identities hold only at CI distributions", detail)


class DimensionMismatchError(CmiError):
    """
    Two operands do not have the same shape or label space.
    """
    def __init__(self, detail=None):
        super(DimensionMismatchError, self).__init__(
            0x32, "dimension mismatch", detail)


class ConfigError(CmiError):
    """
    The experiment configuration is invalid.
    """
    exit_code = 2

    def __init__(self, detail=None):
        super(ConfigError, self).__init__(
            0x40, "invalid configuration", detail)


class AcceptanceViolationError(CmiError):
    """
    A rejection rate of a level-controlled test exceeds its Monte Carlo band.
    """
    exit_code = 3

    def __init__(self, detail=None):
        super(AcceptanceViolationError, self).__init__(
            0x41, "acceptance violation", detail)


"""
List containing one instance of every error specified in this file.
"""
CMI_ERROR_LIST = [
    LabelSpaceError(),
    EmptySampleError(),
    OutOfRangeError(),
    InvalidPmfError(),
    AbsoluteContinuityError(),
    InvalidParameterError(),
    UnknownStratumError(),
    EnumerationTooLargeError(),
    NonPositivePmfError(),
    NotConditionallyIndependentError(),
    DimensionMismatchError(),
    ConfigError(),
    InvalidDataError(),
    AcceptanceViolationError(),
]
