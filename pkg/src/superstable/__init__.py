"""Super-stable common independent sets of two matroids under tied preferences.

The main entry point is :func:`solve`, which takes an :class:`Instance`
(two matroids on a common ground set plus a weak order for each side) and
returns a :class:`SolveOutcome`.  :func:`brute_force_all` enumerates every
super-stable set of a small instance, and :mod:`superstable.spa` reduces
student-project allocation with ties to the matroid setting.
"""

from .errors import (InputError, InvariantError, ParseError, PreconditionError,
                     SuperStableError)
from .matroids import (CachedMatroid, CountingMatroid, GraphicMatroid, LaminarMatroid,
                       LinearMatroid, Matroid, MinorView, PartitionMatroid,
                       UniformMatroid, chain_base, contract, restrict)
from .preferences import Comparison, WeakOrder
from .solver import ChDTrace, ChHTrace, SolveOutcome, ch_d, ch_h, solve
from .stability import (Instance, StabilityReport, block_h, brute_force_all, dom,
                        is_super_stable)

__version__ = "0.1.0"
