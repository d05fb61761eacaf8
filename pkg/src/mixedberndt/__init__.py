"""Exact closed forms of mixed Berndt-type integrals, with numeric certification.

The exact side works over Q and Q[sqrt 2] and returns values as rational
combinations of ``Gamma(1/4)**g * pi**h`` (:class:`GammaPiExpr`); the numeric
side re-derives every value independently at arbitrary precision.
"""

from .berndt_integrals import (
    BarnesComboSpec,
    ComboKind,
    Family,
    IntegralSpec,
    InvalidSpec,
    barnes_combination_exact,
    check_conjecture,
    closed_form,
    coefficient_table,
)
from .exact_arith import GammaPiExpr, NonRationalError, Sqrt2Number
from .hyperbolic_closed_forms import SumKind, SumVariant, cbar_at_quarter, sbar_at_quarter
from .numeric_oracle import (
    BarnesParams,
    ConvergenceError,
    DomainError,
    PrecisionContext,
    VerificationReport,
    barnes_combination_numeric,
    barnes_zeta,
    eval_gamma_pi,
    integrate_berndt,
    sum_hyperbolic,
    verify,
)

__version__ = "0.1.0"
