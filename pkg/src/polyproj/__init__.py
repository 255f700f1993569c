"""Exact polyhedral projection, multiple objective and vector linear programming."""
from .benson import MOLPSolution, solve_molp
from .errors import (InconsistencyError, InfeasibleError, InputError, NoSolutionError,
                     VerificationError)
from .io import format_instance, parse_instance, parse_solution, write_mesh, write_solution
from .lp import LPInstance, LPResult, solve_lp
from .polyhedra import (HRep, VRep, canonicalize, fm_project, h_to_v, lineality_space,
                        recession_cone, v_to_h)
from .problems import (MOLPInstance, PPInstance, SolutionPair, UpperImage, VLPInstance,
                       cond_lineality_pointed, in_L_plus_C, nonminimal_direction,
                       nonminimal_point)
from .reductions import (VLPOutcome, classical_molp, hat_upper_image_to_upper_image,
                         irredundant_pp_solution_to_vlp_solution, molp_solution_to_pp_solution,
                         pp_solution_to_vlp_solution, pp_to_molp, solve_pp, solve_vlp, vlp_to_pp)
from .verify import (brute_force_project_polytope, verify_outcome, verify_pp_solution,
                     verify_vlp_solution, vrep_equal)

__version__ = "0.1.0"

__all__ = [
    "MOLPSolution", "solve_molp", "InconsistencyError", "InfeasibleError", "InputError",
    "NoSolutionError", "VerificationError", "format_instance", "parse_instance",
    "parse_solution", "write_mesh", "write_solution", "LPInstance", "LPResult", "solve_lp",
    "HRep", "VRep", "canonicalize", "fm_project", "h_to_v", "lineality_space",
    "recession_cone", "v_to_h", "MOLPInstance", "PPInstance", "SolutionPair", "UpperImage",
    "VLPInstance", "cond_lineality_pointed", "in_L_plus_C", "nonminimal_direction",
    "nonminimal_point", "VLPOutcome", "classical_molp", "hat_upper_image_to_upper_image",
    "irredundant_pp_solution_to_vlp_solution", "molp_solution_to_pp_solution",
    "pp_solution_to_vlp_solution", "pp_to_molp", "solve_pp", "solve_vlp", "vlp_to_pp",
    "brute_force_project_polytope", "verify_outcome", "verify_pp_solution",
    "verify_vlp_solution", "vrep_equal",
]
