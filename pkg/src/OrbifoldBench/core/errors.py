# errors.py - OrbifoldBench - exceptions raised while building and evaluating atlases

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later


class OrbifoldError(ValueError):
    """ Base class of every error raised by OrbifoldBench.

    Subclasses ValueError so callers that only care about bad input can
    catch the usual builtin.
    """
    pass


class MalformedElementError(OrbifoldError):
    pass


class ValidationError(OrbifoldError):
    """ A document or presentation violates the schema or an atlas invariant.

    Args:
        message (str): what is wrong
        location (str): where in the input, e.g. 'sectors[2].iota'
    """

    def __init__(self, message, location=None):
        self.message = message
        self.location = location

        if location:
            message = '{}: {}'.format(location, message)

        super().__init__(message)
        return


class InvalidBranchDataError(OrbifoldError):
    pass


class InconsistentAtlasError(OrbifoldError):
    pass


class UnsupportedRestrictionError(OrbifoldError):
    pass


class AtlasIntegrityError(OrbifoldError):
    pass


class MalformedClassError(OrbifoldError):
    pass


class OracleValidationError(OrbifoldError):
    pass


class DualityFailureError(OrbifoldError):
    pass
