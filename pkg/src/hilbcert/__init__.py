"""Arithmetic certificates for space curves on quartic surfaces with a double line."""
from .certificate import CurveCertificate, VerificationReport, build_decuple, verify
from .genus_bounds import Region, fd2, gmax, region_of
from .lattice import DivisorClass, check_prop312
from .polar import PolarOutcome, l, polar_count
from .sweep import SweepReport, oracle_exists, sweep

__version__ = "0.1.0"

__all__ = [
    "CurveCertificate", "DivisorClass", "PolarOutcome", "Region", "SweepReport",
    "VerificationReport", "build_decuple", "check_prop312", "fd2", "gmax", "l",
    "oracle_exists", "polar_count", "region_of", "sweep", "verify",
]
