"""WRT SO(3) invariants of lens spaces, by matrix products and by Gauss sums."""
from .cyclo import (ComplexApprox, CyclotomicNumber, ExactBackend, NumericBackend, arith,
                    e_frac, embed, get_backend, sqrt_exact)
from .errors import DegenerateConvergentError, DomainError
from .lens import (InvariantResult, LensSpace, normalize_lens, verify_grid, wrt_closed,
                   wrt_invariant, wrt_oracle)
from .modgroup import (ContinuedFraction, LinkingData, SL2Matrix, cf_expand, cf_for_lens,
                       cf_to_matrix, linking_data)
from .numtheory import (ReciprocityInstance, dedekind_sum, gauss_reciprocity, rademacher_phi,
                        rademacher_phi_cf)
from .tqftrep import (TheoryParams, im_sum, rep_bruteforce, rep_closed_entry, rep_closed_matrix,
                      rep_generators)

__all__ = [
    "ComplexApprox", "CyclotomicNumber", "ExactBackend", "NumericBackend", "arith", "e_frac",
    "embed", "get_backend", "sqrt_exact", "DegenerateConvergentError", "DomainError",
    "InvariantResult", "LensSpace", "normalize_lens", "verify_grid", "wrt_closed",
    "wrt_invariant", "wrt_oracle", "ContinuedFraction", "LinkingData", "SL2Matrix", "cf_expand",
    "cf_for_lens", "cf_to_matrix", "linking_data", "ReciprocityInstance", "dedekind_sum",
    "gauss_reciprocity", "rademacher_phi", "rademacher_phi_cf", "TheoryParams", "im_sum",
    "rep_bruteforce", "rep_closed_entry", "rep_closed_matrix", "rep_generators",
]
