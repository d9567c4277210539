"""Zero-cost monochromatic cycle covers for 2-edge-colored complete graphs."""

__version__ = "0.1.0"

from .graph_core import (BLUE, RED, ColoredCompleteGraph, CycleCover, InfeasibleError,
                         InputError, SimpleGraph, color_degree, induced_subgraph,
                         is_monochromatic, validate_cover)
from .coloring import (ColoringClass, classify, equitable_feasible, generate_equitable,
                       generate_nearly_equitable, random_equitable_walk)
from .reload import (ReloadCostMatrix, cover_cost, cycle_cost, is_symmetric, path_cost,
                     satisfies_triangle)
from .hamiltonicity import (closure, closure_hamiltonian, detect_exceptional,
                            dirac_hamiltonian, extension_dirac_hamiltonian,
                            sufficiency_predicates)
from .mcca import Branch, MccaTrace, mcca, min_reload_cycle_cover
from .oracle import (enumerate_two_factors, exhaustive_monochromatic_exists, solve_exact)
from .reduction import GeneralInstance, opt_preserved, reduce_to_complete
