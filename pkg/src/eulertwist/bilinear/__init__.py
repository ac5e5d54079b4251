"""Bilinear spaces, semi-orthogonal decompositions and periodic chains."""

from .spaces import *  # noqa: F401,F403
from .spaces import __all__ as _spaces_all
from .periodic import (CriterionReport, chain_mutations, continuant_at, least_period,
                       mutation_matrix_product, orthogonal_chain,
                       periodicity_criterion)
from .instances import (PositiveCase, positive_library, random_gram, random_space,
                        random_instance, random_isometry_instance,
                        random_matrix, random_nondegenerate_subspace)

__all__ = list(_spaces_all) + [
    "CriterionReport", "chain_mutations", "continuant_at", "least_period",
    "mutation_matrix_product", "orthogonal_chain", "periodicity_criterion",
    "PositiveCase", "positive_library", "random_gram", "random_space", "random_instance",
    "random_isometry_instance", "random_matrix",
    "random_nondegenerate_subspace",
]
