# Project libraries
from brieskorn.classes.dinvariant.base_method import DInvariantMethod
from brieskorn.classes.topology.floer import SEMIGROUP, d_torus_surgery_minus
from brieskorn.classes.topology.seifert import PQ_MINUS


class SemigroupMethod(DInvariantMethod):
    """
    d(Sigma(p, q, pq - 1)) = 2 alpha_{g-1} from the gaps of the semigroup <p, q>
    """

    name = SEMIGROUP

    def applies(self, context):
        family = context.get('family')
        return family is not None and family.family == PQ_MINUS and family.n == 1

    def compute(self, context):
        family = context['family']
        return d_torus_surgery_minus(family.p, family.q)
