"""Alexander polynomials of closed braids via the Burau representation,
Iwasawa mu/lambda invariants at an odd prime, and lambda-distribution
statistics over the one-generator-per-block braid family."""

from ._kernel import BACKEND as CENSUS_BACKEND
from .arithstat import (
    CensusReport,
    Rational,
    a_set_count,
    census_exhaustive,
    census_montecarlo,
    compare_report,
    count_compositions_p_power,
    density_F,
    density_n_closed_paper,
    density_n_sum,
    density_tuple,
    list_compositions_p_power,
)
from .braid import (
    BraidWord,
    FamilyTuple,
    closure_component_count,
    family_word,
    family_word_length,
    parse_braid_word,
    underlying_permutation,
)
from .burau import (
    alexander_closed_braid,
    alexander_family_burau,
    alexander_family_product,
    burau_generator,
    burau_image,
    reduced_burau_generator,
    torus_f,
)
from .iwasawa import (
    INFINITY,
    IwasawaInvariants,
    complete,
    completed_torus_f,
    e_count_and_lambda_check,
    family_invariants_fast,
    growth_prediction,
    invariants_exact,
    invariants_modular,
    lambda_F_fast,
    lambda_family_fast,
)
from .laurent import LaurentMatrix, LaurentPoly

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "CensusReport",
    "CENSUS_BACKEND",
    "FamilyTuple",
    "INFINITY",
    "IwasawaInvariants",
    "LaurentMatrix",
    "LaurentPoly",
    "Rational",
    "a_set_count",
    "alexander_closed_braid",
    "alexander_family_burau",
    "alexander_family_product",
    "burau_generator",
    "burau_image",
    "census_exhaustive",
    "census_montecarlo",
    "closure_component_count",
    "compare_report",
    "complete",
    "completed_torus_f",
    "count_compositions_p_power",
    "density_F",
    "density_n_closed_paper",
    "density_n_sum",
    "density_tuple",
    "e_count_and_lambda_check",
    "family_invariants_fast",
    "family_word",
    "family_word_length",
    "growth_prediction",
    "invariants_exact",
    "invariants_modular",
    "lambda_F_fast",
    "lambda_family_fast",
    "list_compositions_p_power",
    "parse_braid_word",
    "reduced_burau_generator",
    "torus_f",
    "underlying_permutation",
]
