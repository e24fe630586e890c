"""Exact class-sum arithmetic modulo prime powers.

Class sums (binomial coefficients summed over an index class mod m, weighted
by powers of a base a) are computed in the cyclic ring (Z/M)[x]/(x^m - 1),
their periods modulo q are computed exactly, and a suite of congruence
verifiers checks the identities these sums satisfy.
"""

from classum.class_sums import (
    AksReport,
    ClassSumQuery,
    aks_polynomial_check,
    class_sum,
    class_sum_oracle,
    class_sum_vector,
    signed_class_sum,
)
from classum.congruences import (
    CongruenceReport,
    NotApplicableReport,
    QNormalDecomposition,
    qnormal_decompose,
    verify_carlitz,
    verify_carlitz_lift,
    verify_classical,
    verify_cor13_even,
    verify_cor13_general,
    verify_cor13_period,
    verify_cor13_split,
    verify_cor14,
    verify_dimitrov,
    verify_glaisher,
    verify_hermite,
    verify_lemma21,
    verify_remark11_period,
    verify_remark21,
    verify_theorem11,
    verify_theorem11_all_r,
    verify_theorem12,
    verify_theorem12_all_r,
)
from classum.cyclic_ring import (
    CyclicPoly,
    Modulus,
    one_plus_ax,
    reduce_mod_allones,
    ring_mul,
    ring_one,
    ring_pow,
)
from classum.errors import InternalInconsistencyError, PreconditionError
from classum.intnum import (
    PrimePowerFactorization,
    crt_combine,
    euler_phi,
    factorize,
    mod_inverse,
    mult_order,
)
from classum.periods import (
    Admissibility,
    PeriodReport,
    SweepReport,
    admissible,
    conjecture_sweep,
    mu,
    mu_report,
    nu,
)

__version__ = "0.1.0"

__all__ = [
    "AksReport",
    "Admissibility",
    "ClassSumQuery",
    "CongruenceReport",
    "CyclicPoly",
    "InternalInconsistencyError",
    "Modulus",
    "NotApplicableReport",
    "PeriodReport",
    "PreconditionError",
    "PrimePowerFactorization",
    "QNormalDecomposition",
    "SweepReport",
    "aks_polynomial_check",
    "admissible",
    "class_sum",
    "class_sum_oracle",
    "class_sum_vector",
    "conjecture_sweep",
    "crt_combine",
    "euler_phi",
    "factorize",
    "mod_inverse",
    "mu",
    "mu_report",
    "mult_order",
    "nu",
    "one_plus_ax",
    "qnormal_decompose",
    "reduce_mod_allones",
    "ring_mul",
    "ring_one",
    "ring_pow",
    "signed_class_sum",
    "verify_carlitz",
    "verify_carlitz_lift",
    "verify_classical",
    "verify_cor13_even",
    "verify_cor13_general",
    "verify_cor13_period",
    "verify_cor13_split",
    "verify_cor14",
    "verify_dimitrov",
    "verify_glaisher",
    "verify_hermite",
    "verify_lemma21",
    "verify_remark11_period",
    "verify_remark21",
    "verify_theorem11",
    "verify_theorem11_all_r",
    "verify_theorem12",
    "verify_theorem12_all_r",
]
