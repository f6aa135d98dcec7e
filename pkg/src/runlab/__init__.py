"""Exact-arithmetic toolkit for alternating-run permutation statistics.

Submodules:

* :mod:`runlab.exactnum`   -- rationals, Q(sqrt(d)), polynomials, series
* :mod:`runlab.permcore`   -- brute-force statistics over S_n (the oracle)
* :mod:`runlab.triangles`  -- recurrence-driven triangles and polynomial families
* :mod:`runlab.grammar`    -- substitution-rule derivative calculus and its DSL
* :mod:`runlab.identities` -- executable identity checks with exact reports
* :mod:`runlab.cli`        -- the ``runlab`` command
"""

from .exactnum import Fraction, PowerSeries, QuadExt, RatPoly
from .grammar import Grammar, MPoly, Monomial, parse_grammar
from .permcore import Permutation, Stat, distribution, enumerate_sn
from .triangles import PolyFamily, Triangle

__version__ = "0.1.0"

__all__ = [
    "Fraction",
    "Grammar",
    "MPoly",
    "Monomial",
    "Permutation",
    "PolyFamily",
    "PowerSeries",
    "QuadExt",
    "RatPoly",
    "Stat",
    "Triangle",
    "__version__",
    "distribution",
    "enumerate_sn",
    "parse_grammar",
]
