"""Exact Frobenius-problem toolkit for Proth numerical semigroups.

``semigroup`` is a generic engine for any coprime generator list, ``proth``
holds the closed forms for P_{2^r+1}(n), and ``verify`` compares the two.
"""

from .errors import *  # noqa: F401,F403
from .proth import (
    ProthGenerators,
    ProthParams,
    RewriteConstants,
    apery_closed_form,
    check_rewrite_identity,
    embedding_dimension,
    enumerate_tuples,
    forbidden_set,
    frobenius_closed_form,
    generator,
    genus_lower_bound,
    minimal_generating_set,
    pf_closed_form,
    proth_params,
    rewrite_constants,
    w12_closed_form,
)
from .semigroup import (
    AperyTable,
    GeneratorSet,
    SemigroupSummary,
    WilfReport,
    apery_table,
    frobenius,
    gaps,
    genus,
    membership,
    minimal_generators,
    pseudo_frobenius,
    summarize,
    validate_generators,
    wilf_check,
)
from .verify import (
    SweepSummary,
    VerificationReport,
    cross_check,
    explore_arbitrary_k,
    sweep,
)

__version__ = '0.1.0'
