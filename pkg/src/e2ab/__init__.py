"""Abelianizations of ``E_2(A)`` computed three ways.

The subgroup ``M`` (and its refinement ``N``) of a ring, closed forms for
local rings, ``Z[1/m]`` and quadratic integer rings, and brute-force
enumeration of ``E_2`` over finite rings.
"""

from .abelian import AbelianGroup, finite_quotient, lattice_quotient, smith_normal_form
from .e2group import abelianization, beta_map, generate_e2
from .formulas import fundamental_unit, od_ab, od_m_oracle, od_refined_ab, pslinv_ab, zinv_ab
from .msubgroup import a_mod_m, a_mod_n, local_formula, m_subgroup, n_subgroup
from .quadratic import QuadInt, QuadraticOrder
from .rings import galois_field, is_local
from .ringspec import ParseError, parse_ring_spec
from .steinberg import am_image, parse_word, theta_eval

__all__ = [
    "AbelianGroup",
    "ParseError",
    "QuadInt",
    "QuadraticOrder",
    "a_mod_m",
    "a_mod_n",
    "abelianization",
    "am_image",
    "beta_map",
    "finite_quotient",
    "fundamental_unit",
    "galois_field",
    "generate_e2",
    "is_local",
    "lattice_quotient",
    "local_formula",
    "m_subgroup",
    "n_subgroup",
    "od_ab",
    "od_m_oracle",
    "od_refined_ab",
    "parse_ring_spec",
    "parse_word",
    "pslinv_ab",
    "smith_normal_form",
    "theta_eval",
    "zinv_ab",
]

__version__ = "0.1.0"
