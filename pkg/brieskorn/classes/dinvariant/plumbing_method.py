# Project libraries
from brieskorn.classes.dinvariant.base_method import DInvariantMethod
from brieskorn.classes.topology.floer import PLUMBING, d_invariant_plumbing


class PlumbingMethod(DInvariantMethod):
    """
    d = (K^2_max + b2) / 4 on the negative-definite plumbing; applies to every Brieskorn sphere
    """

    name = PLUMBING
    required = True

    def compute(self, context):
        result = d_invariant_plumbing(context['graph'], margin=context.get('margin'), budget=context.get('budget'))
        return result.value
