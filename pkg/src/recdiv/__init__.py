"""Empirical study of prime divisors of integer linear recurrence sequences."""

from .arith import FactoredInteger, factor_integer, is_prime, mult_order, sieve_primes
from .charpoly import (
    PolyProfile,
    analyze_poly,
    discriminant,
    expected_pattern_density,
    is_irreducible_over_Q,
    nondegeneracy,
    sd_certificate,
)
from .detect import (
    DetectPolicy,
    Excluded,
    StructuralContext,
    Verdict,
    build_context,
    cross_validate,
    detect,
    structural_base,
    structural_detect,
)
from .fppoly import (
    ExtElem,
    ExtField,
    FactorPattern,
    FpPoly,
    ext_elem_order,
    ext_norm,
    factor_mod_p,
    fp_root,
    frobenius,
    pattern,
    reduce_poly,
    solve_gamma,
)
from .orderstats import OrderRow, artin_fraction, index_histogram, root_order_row
from .recurrence import (
    RecurrenceSpec,
    has_zero_bruteforce,
    perfect_power_probe,
    period_mod,
    term_int,
    term_mod,
    zero_term_scan,
)
from .sweep import (
    PrimeRow,
    SweepConfig,
    SweepSummary,
    merge_summaries,
    run_sweep,
    summarize_rows,
    write_csv,
    write_json,
)

__version__ = "0.1.0"
