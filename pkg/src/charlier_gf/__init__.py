"""Charlier polynomials, Charlier configurations and their generating functions."""

from .charlier import (
    charlier_C,
    charlier_classical,
    derangement_poly,
    derangement_poly2,
    rising_factorial,
    stirling_cycle,
)
from .configs import (
    CharlierConfig,
    ColoredDigraph,
    DigraphTuple,
    Type1,
    Type2,
    Type3,
    classify,
    components,
    config_weight,
    enumerate_configs,
    enumerate_H,
    expand_type3,
    reduce_type3,
    superpose,
    tuple_weight,
)
from .identities import REGISTRY, VerificationReport, oracle_compare, verify
from .polyring import ParamSet, Polynomial, poly_add, poly_eval, poly_mul
from .series import TruncatedSeries, coefficient, neg_binomial, series_add, series_exp, series_mul

__version__ = "0.1.0"
