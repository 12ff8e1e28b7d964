"""Symbolic calculator for generic representations of metaplectic groups:
Langlands-data classification and odd orthogonal theta lifts."""

from .core import (HALF, ONE, TRIVIAL_CHI, ZERO, Cuspidal, HalfInt, QuadChar,
                   Segment, character_segment, segment_new, segments_linked)
from .gamma import (ord_gamma_rs, ord_gamma_std, ord_gamma_sym2,
                    ord_local_coeff, so_rank1_standard_irreducible)
from .reps import (EMPTY_PARAM, METAPLECTIC, MU0, ODD_ORTHOGONAL,
                   CuspidalReducibility, GenericityVerdict, LanglandsDatum,
                   LParameter, NotGenericError, ReducibilityVerdict,
                   TemperedRep, cuspidal_reducibility_point,
                   discrete_series_embedding, generic_transfer_is_generic,
                   is_generic_lq, is_generic_lq_via_coeff, l_of_tempered,
                   mp_rank1_irreducible, normalize_datum,
                   ord_gamma_vs_parameter, standard_module_reducible,
                   tempered_datum, theta_psi_transfer, validate_parameter)
from .lifts import (NONSPLIT, SPLIT, FirstOccurrence, LiftResult, ThetaTempered,
                    Tower, first_occurrence, lift_table, tempered_lift,
                    theta_lift)
from .grammar import ParseError, parse_datum, parse_rep, render

__version__ = "0.1.0"
