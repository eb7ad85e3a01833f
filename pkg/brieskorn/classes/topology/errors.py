"""
Exception hierarchy shared by every topology layer.
The command line front end maps these classes onto exit codes.
"""


class BrieskornError(Exception):
    """
    Base class for every error raised by the package
    """


class InputValidationError(BrieskornError, ValueError):
    """
    Raised when user-supplied data violates an operation's preconditions
    """


class CoprimalityError(InputValidationError):
    """
    Raised when integers that must be (pairwise) coprime share a factor
    """


class DomainError(InputValidationError):
    """
    Raised when a value lies outside the domain of an operation
    """


class CharacteristicParityError(InputValidationError):
    """
    Raised when a vector fails the characteristic parity condition x_i = Q_ii (mod 2)
    """


class UnsupportedFramingError(InputValidationError):
    """
    Raised when a plumbing vertex weight falls outside the Legendrian stabilization scheme (weight >= -1)
    """


class LatticeError(BrieskornError):
    """
    Base class for failed lattice preconditions
    """


class DefinitenessError(LatticeError):
    """
    Raised when a form that must be negative definite is not
    """


class UnimodularityError(LatticeError):
    """
    Raised when a form that must have determinant +-1 does not
    """


class BadVertexError(LatticeError):
    """
    Raised when a plumbing graph has more than one bad vertex
    """


class SearchBudgetError(BrieskornError):
    """
    Raised when an exhaustive search would exceed its configured budget
    """

    def __init__(self, message, box_size=None, nodes=None):
        """
        :param message: Human readable description
        :type message: str
        :param box_size: Number of candidate vectors in the search box
        :type box_size: int
        :param nodes: Number of search nodes explored before giving up
        :type nodes: int
        """
        super().__init__(message)
        self.box_size = box_size
        self.nodes = nodes


class ConsistencyError(BrieskornError):
    """
    Raised when an internal cross-check between independent computations fails
    """
