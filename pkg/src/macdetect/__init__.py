"""Exact construction and verification of MacMahonesque prime-cube and
arithmetic-progression prime detectors."""

from .cyclotomic import CycloNum, cyclotomic_poly, root_power
from .detect import CubeClass, classify_cube, is_prime, is_prime_in_ap, probe_lemmas, scan_ap, scan_cube
from .expansion import (
    LinearCombination,
    Term,
    evaluate_combination,
    fit_expansion,
    independence_rank,
    verify_fstar,
    verify_gstar,
)
from .macmahon import ExponentVector, macmahon_bruteforce, macmahon_series, twisted_macmahon
from .qseries import QSeries, apply_D, lambda_series, series_mul
from .quasimodular import (
    DetectorParams,
    a_coeff,
    a_total,
    b_coeff,
    bernoulli,
    build_f,
    build_g,
    eisenstein,
    eisenstein_twisted,
    eisenstein_twisted_by_filter,
    ramanujan_check,
    sigma_pow,
)

__version__ = "0.1.0"
