"""Exact verification of combinatorial t-designs through Walsh spectra of
their characteristic functions, with Delsarte-style cross-checks."""

__version__ = "0.1.0"

from .boolfn import (
    AlgebraicNormalForm,
    BooleanFunction,
    PointSet,
    WalshSpectrum,
    anf,
    inverse_walsh,
    walsh_at,
    walsh_full,
)
from .codes import WeightDistribution, code_enumerate, code_weight_distribution
from .design import DesignParameters, IncidenceStructure, complement_design, verify_bruteforce
from .errors import BudgetExceeded, InconsistencyError, NotBooleanError
from .exactmath import binomial, eberlein, krawtchouk, krawtchouk_table
from .fixtures import generate_s5612, load_fixture
from .spectral import SpectralVerdict, verify_spectral

__all__ = [
    "AlgebraicNormalForm", "BooleanFunction", "PointSet", "WalshSpectrum", "anf", "inverse_walsh",
    "walsh_at", "walsh_full", "WeightDistribution", "code_enumerate", "code_weight_distribution",
    "DesignParameters", "IncidenceStructure", "complement_design", "verify_bruteforce",
    "BudgetExceeded", "InconsistencyError", "NotBooleanError", "binomial", "eberlein", "krawtchouk",
    "krawtchouk_table", "generate_s5612", "load_fixture", "SpectralVerdict", "verify_spectral",
]
