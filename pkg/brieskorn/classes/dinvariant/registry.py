# Project libraries
from brieskorn.classes.topology.errors import BrieskornError
from brieskorn.classes.topology.floer import PLUMBING, DInvariantResult
from brieskorn.classes.topology.plumbing import build_plumbing
from brieskorn.classes.topology.seifert import recognize_family, seifert_invariants
from brieskorn.utilities.utils import setup_logger
import brieskorn.config as config

# Initialize the logger
logger = setup_logger(__name__, config.DEBUG_LEVEL)

# Active method instances
_methods = []


def register(method):
    """
    Register a d-invariant method instance.

    :param method: A DInvariantMethod subclass instance
    :type method: DInvariantMethod
    """
    _methods.append(method)
    logger.debug('Registered d-invariant method: {}'.format(method.__class__.__name__))


def get_methods():
    """
    Returns a copy of the registered methods list.

    :return: List of registered method instances
    :rtype: list
    """
    return list(_methods)


def clear():
    """Removes all registered methods."""
    _methods.clear()


def register_defaults():
    """
    Registers the built-in methods in their reporting order: semigroup, family closed form, plumbing.
    """
    from brieskorn.classes.dinvariant.semigroup_method import SemigroupMethod
    from brieskorn.classes.dinvariant.family_method import FamilyClosedFormMethod
    from brieskorn.classes.dinvariant.plumbing_method import PlumbingMethod

    register(SemigroupMethod())
    register(FamilyClosedFormMethod())
    register(PlumbingMethod())


def build_context(b, margin=None, budget=None):
    """
    Collects what the methods share for one sphere so the plumbing is built once

    :param b: Brieskorn data
    :type b: BrieskornData
    :rtype: dict
    """
    return {
        'brieskorn': b,
        'family': recognize_family(b),
        'graph': build_plumbing(seifert_invariants(b)),
        'margin': margin,
        'budget': budget,
    }


def compute_all(b, margin=None, budget=None, context=None):
    """
    Runs every registered method that applies to the sphere and cross-checks the values.
    Methods that fail are dropped from the result, unless they are required.
    When methods disagree the disagreement is logged and the plumbing value is reported.

    :param b: Brieskorn data
    :type b: BrieskornData
    :param margin: Characteristic box widening passed to the plumbing method
    :type margin: int
    :param budget: Search node budget passed to the plumbing method
    :type budget: int
    :param context: Precomputed context from :func:`build_context`
    :type context: dict
    :rtype: DInvariantResult
    """
    if not _methods:
        register_defaults()
    if context is None:
        context = build_context(b, margin, budget)

    values = {}
    for method in _methods:
        if not method.applies(context):
            continue
        try:
            values[method.name] = method.compute(context)
        except BrieskornError as e:
            if method.required:
                logger.error('{} is required and failed for {}: {}'.format(method.__class__.__name__, b.label, e))
                raise
            logger.warning('{} failed for {} and is dropped: {}'.format(method.__class__.__name__, b.label, e))

    if not values:
        raise BrieskornError('No d-invariant method applied to {}'.format(b.label))
    agree = len(set(values.values())) == 1
    if agree:
        value = next(iter(values.values()))
    else:
        logger.error('d-invariant methods disagree for {}: {}'.format(b.label, values))
        value = values.get(PLUMBING, next(iter(values.values())))
    logger.debug('d({}) = {} from {}'.format(b.label, value, ', '.join(values)))
    return DInvariantResult(value, tuple(sorted(values)), agree, values)
