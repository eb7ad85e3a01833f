# Project libraries
from brieskorn.utilities.utils import setup_logger
import brieskorn.config as config

# Initialize the logger
logger = setup_logger(__name__, config.DEBUG_LEVEL)


class DInvariantMethod:
    """
    Base class for d-invariant methods.
    Subclasses declare when they apply and how they compute; the registry runs every applicable method
    and cross-checks the answers.
    """

    #: Tag recorded in DInvariantResult.methods
    name = None
    #: When True, a failing compute() aborts the whole computation
    #: instead of just dropping this method from the result.
    required = False

    def applies(self, context):
        """
        Decides whether the method covers the sphere described by the context. Override if needed.

        :param context: Shared data for one sphere: ``brieskorn``, ``family``, ``graph``, ``margin``, ``budget``
        :type context: dict
        :rtype: bool
        """
        return True

    def compute(self, context):
        """
        Computes d for the sphere described by the context

        :param context: Shared data for one sphere
        :type context: dict
        :return: The d-invariant
        :rtype: int
        """
        raise NotImplementedError('{} does not implement compute()'.format(self.__class__.__name__))
