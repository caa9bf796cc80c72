"""knotsurf: knot invariants through Seifert surfaces, and closed-surface classification."""

from .catalog import continued_fraction, named, torus_knot, two_bridge
from .diagram import (
    Crossing, Diagram, MoveSite, apply_move, canonical_hash, connected_sum,
    find_move_sites, linking_number, mirror, reverse, simplify, validate, writhe,
)
from .errors import DomainError, KnotError, MoveError, NotationError, ValidationError
from .invariants import (
    LaurentPoly, alexander, block_sum, congruent, determinant_invariant, enlarge,
    genus_lower_bound, reduce, s_distinguish, satellite_genus, signature,
)
from .notation import BraidWord, braid_closure, parse_braid, parse_gauss, parse_pd, serialize
from .seifert import (
    build_surface, genus_upper_bound, seifert_circles, seifert_graph, seifert_matrix,
)
from .surfaces import (
    apply_modification, canonical_presentation, classify, euler_characteristic,
    is_orientable, parse_word,
)

__version__ = "0.1.0"
