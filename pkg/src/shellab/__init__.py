"""Maximal chain descent orders of EL- and CL-labeled posets."""

from .descent_order import (MCDOrder, build_mcd, differ_by_polygon, find_characterization_witness,
                            find_easy_noncover_witness, inversion_set, is_inversion_ranked,
                            is_polygon_complete, polygon_predecessor)
from .errors import ShellabError
from .labeling import (ChainEdgeLabeling, EdgeLabeling, is_polygon_strong, is_sn_el,
                       label_sequence, lex_compare, validate_labeling)
from .poset import Poset, are_isomorphic, build_poset, closed_interval, verify_map_isomorphism
from .shelling import equivalence_audit, order_complex, shelling_equivalence_check

__version__ = "0.1.0"
