"""Identifying codes and locating-dominating sets on paths and cycles.

Closed-form minimum sizes, witness constructions built from constraint
streams, definitional and structural verifiers, and an exhaustive oracle
for small instances.
"""

from .bounds import (BoundResult, ld_lower_bound, min_ic_cycle, min_ic_odd_cycle,
                     min_ic_path, min_ld2_cycle)
from .construct import (Construction, build, build_ic_cycle, build_ic_odd_cycle,
                        build_ic_path, build_ld2_cycle, forced_completion, full_streams,
                        parity_selection, stream)
from .errors import BudgetExceeded, ConstructionError, InputError, NoCharacterization
from .oracle import OracleResult, SearchBudget, enumerate_optima, min_ic, min_ld
from .topology import Kind, Topology, admits_r_ic, ball, distance
from .verify import (Verdict, check_characterization, check_cycle_characterization,
                     check_path_characterization, is_r_ic, is_r_ld, separation_census,
                     signature)

__version__ = "0.1.0"

__all__ = [
    "BoundResult", "BudgetExceeded", "Construction", "ConstructionError", "InputError",
    "Kind", "NoCharacterization", "OracleResult", "SearchBudget", "Topology", "Verdict",
    "admits_r_ic", "ball", "build", "build_ic_cycle", "build_ic_odd_cycle", "build_ic_path",
    "build_ld2_cycle", "check_characterization", "check_cycle_characterization",
    "check_path_characterization", "distance", "enumerate_optima", "forced_completion",
    "full_streams", "is_r_ic", "is_r_ld", "ld_lower_bound", "min_ic", "min_ic_cycle",
    "min_ic_odd_cycle", "min_ic_path", "min_ld", "min_ld2_cycle", "parity_selection",
    "separation_census", "signature", "stream",
]
