"""Canonical stratification of finite simplicial complexes by local homology."""

from .complex import (
    ComplexView,
    DegenerateSimplex,
    EmptyComplex,
    SimplexId,
    SimplicialComplex,
    boundary_sign,
    build_complex,
    codim_simplices,
    fresh_view,
    remove_assigned,
)
from .generators import GenSpec, generate
from .homology import (
    HomologyGroup,
    InsufficientDepth,
    IntMatrix,
    LinkChainComplex,
    SNFResult,
    is_sphere_link_oracle,
    link_chain_complex,
    link_homology,
    smith_normal_form,
)
from .io import ParseError, RunReport, parse_input
from .poset import HomCount, StrataPoset, hom_component_count, strata_poset
from .stratify import (
    Assignment,
    SmallLink,
    Stratification,
    StratumRecord,
    canonical_stratification,
    codim_general_pass,
    codim_three_pass,
    codim_two_pass,
    codim_zero_one_pass,
    get_small_link,
    link_component_count,
    oracle_divergences,
    unique_stratum_among_cofaces,
)

__version__ = "0.1.0"
