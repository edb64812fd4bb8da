"""Exact truncated-series toolkit for non-stationary Ruijsenaars functions.

Modules
-------
scalar      rationals and reduced rational functions in one variable
partition   partitions, cyclic tuples and degree vectors
nekrasov    cyclic Nekrasov factors and tangent characters
qseries     truncated series, q-Pochhammer and theta expansions
specialfn   the affine, Macdonald, Toda and elliptic Calogero-Sutherland series
operators   difference and differential operators acting on twisted series
checks      one trial of every named identity
verify      sampling, retries and JSON/CSV reports
cli         the ``nsr`` command
"""

from .scalar import TAU, Q, RatFunc
from .partition import Partition, PartitionTuple, DominantWeight
from .qseries import Cyclic, Finite, Monomial, PSeries, TruncSeries
from .specialfn import ParamPoint
from .operators import TwistedSeries
from .verify import CheckSpec, run_check, sample_params

__version__ = "0.1.0"

__all__ = [
    "TAU", "Q", "RatFunc", "Partition", "PartitionTuple", "DominantWeight",
    "Cyclic", "Finite", "Monomial", "PSeries", "TruncSeries", "ParamPoint",
    "TwistedSeries", "CheckSpec", "run_check", "sample_params",
]
