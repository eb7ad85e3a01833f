# Project libraries
from brieskorn.classes.dinvariant.base_method import DInvariantMethod
from brieskorn.classes.topology.floer import FAMILY_CLOSED_FORM, d_family_plus
from brieskorn.classes.topology.seifert import PQ_PLUS


class FamilyClosedFormMethod(DInvariantMethod):
    """
    d(Sigma(p, q, npq + 1)) = 0, taken as a closed form and checked against the plumbing
    """

    name = FAMILY_CLOSED_FORM

    def applies(self, context):
        family = context.get('family')
        return family is not None and family.family == PQ_PLUS

    def compute(self, context):
        family = context['family']
        return d_family_plus(family.p, family.q, family.n)
