"""Sorting networks, signed pure braids, and their Milnor invariants."""

__version__ = "0.1.0"

from .braid import (NotPureError, artin_apply, comb, free_reduce,
                    format_signed_word, inverse_word, is_pure, is_trivial,
                    parse_signed_word)
from .constructions import (asb, complement, conjugate, conjugate_signed,
                            crossing_indices, dsb, format_signature,
                            loop_word, parse_signature, signed_word)
from .invariants import (lk_crossings, lk_l1, magnus_count, mu, mu3_l1,
                         mu3_vector, triple_order)
from .symmetric import (CapExceeded, apply_word, braid_move_distance,
                        commutation_class, commutation_class_members,
                        enumerate_networks, format_network, inversion_set,
                        is_sorting_network, num_crossings, parse_network,
                        stanley_count, wiring_diagram)

__all__ = [
    "NotPureError", "CapExceeded",
    "apply_word", "is_sorting_network", "enumerate_networks",
    "stanley_count", "inversion_set", "wiring_diagram",
    "commutation_class", "commutation_class_members", "braid_move_distance",
    "num_crossings", "parse_network", "format_network",
    "free_reduce", "artin_apply", "comb", "is_trivial", "is_pure",
    "inverse_word", "parse_signed_word", "format_signed_word",
    "lk_crossings", "lk_l1", "magnus_count", "mu", "mu3_vector", "mu3_l1",
    "triple_order",
    "conjugate", "conjugate_signed", "asb", "dsb", "loop_word",
    "crossing_indices", "complement", "signed_word",
    "parse_signature", "format_signature",
]
