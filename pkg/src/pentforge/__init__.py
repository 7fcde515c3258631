"""pentforge: construct, verify, analyze and catalog pentagonal geometries.

A pentagonal geometry PENT(k,r) is a uniform regular partial linear space
in which the points not collinear with any point x themselves form a line
(the opposite line of x).
"""

from .core import (Design, DesignError, ParseError, parameters,
                   divisibility_ok, parse_design, serialize_design, verify_pls)
from .analysis import (count_olps, known_spectrum, max_olps_bound,
                       opposite_line, two_olp_excluded, verify_pentagonal)
from .defgraph import Graph, build_deficiency, classify, girth, is_connected, moore_pent
from .construct import (OrbitSpec, expand_orbits, bose_pent3, pbd_pent3,
                        gdd_compose, td3, degenerate_pent, sts_bose,
                        steiner_quasigroup, cyclic_idempotent_quasigroup)
from .search import (SearchBudget, complete_from_deficiency, partition_p,
                     pent2_count, pent2_enumerate)

__all__ = [
    "Design", "DesignError", "ParseError", "parameters", "divisibility_ok",
    "parse_design", "serialize_design", "verify_pls",
    "count_olps", "known_spectrum", "max_olps_bound", "opposite_line",
    "two_olp_excluded", "verify_pentagonal",
    "Graph", "build_deficiency", "classify", "girth", "is_connected",
    "moore_pent",
    "OrbitSpec", "expand_orbits", "bose_pent3", "pbd_pent3", "gdd_compose",
    "td3", "degenerate_pent", "sts_bose", "steiner_quasigroup",
    "cyclic_idempotent_quasigroup",
    "SearchBudget", "complete_from_deficiency", "partition_p", "pent2_count",
    "pent2_enumerate",
]

__version__ = "0.1.0"
