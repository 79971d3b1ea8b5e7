"""cyclat: the graded lattice of circular permutations.

Three interchangeable incarnations of one order: n-cycles under the
adjacent-exchange cover relation, admitted triangular vectors under the
componentwise order, and an interval of the affine symmetric group
under the left weak order.  `cyclat.poset` materializes the whole
diagram at small orders and verifies its structural properties;
`cyclat.oracle` holds independent brute-force references; the `cyclat`
command line exposes conversions, lattice operations, exports, and the
verification suite.
"""

from cyclat.kernels import BACKEND
from cyclat.perm import (
    CircularPermutation,
    DescentLabel,
    complement,
    covers_down,
    covers_up,
    invert,
    large_circular_ascents,
    large_circular_descents,
    word_rank,
)
from cyclat.vectors import (
    AdmittedVector,
    DeltaSequence,
    Triangulation,
    cycle_to_vector,
    join,
    meet,
    vector_to_cycle,
)
from cyclat.affine import (
    AffineWindow,
    interval_top,
    length,
    project,
    vector_of_window,
    weak_leq,
    window_of_vector,
)
from cyclat.poset import HasseDiagram, build, compare, eulerian, mobius

__version__ = "0.1.0"

__all__ = [
    "AdmittedVector",
    "AffineWindow",
    "BACKEND",
    "CircularPermutation",
    "DeltaSequence",
    "DescentLabel",
    "HasseDiagram",
    "Triangulation",
    "build",
    "compare",
    "complement",
    "covers_down",
    "covers_up",
    "cycle_to_vector",
    "eulerian",
    "interval_top",
    "invert",
    "join",
    "large_circular_ascents",
    "large_circular_descents",
    "length",
    "meet",
    "mobius",
    "project",
    "vector_of_window",
    "vector_to_cycle",
    "weak_leq",
    "window_of_vector",
    "word_rank",
    "__version__",
]
