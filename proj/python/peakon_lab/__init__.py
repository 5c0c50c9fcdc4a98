"""Pseudo-spectral laboratory for the two-component cubic peakon system."""

import importlib

try:  # installed wheel: extension lives inside the package
    _core = importlib.import_module("._peakon_lab", __name__)
except ImportError:  # CMake build tree: extension sits on sys.path
    _core = importlib.import_module("_peakon_lab")

__all__ = [
    "Field",
    "PeriodicGrid",
    "SolveConfig",
    "State",
    "Trajectory",
    "bessel",
    "calibrated_cs",
    "classify_gamma",
    "classify_mu",
    "conservative_rhs",
    "derivative",
    "hamiltonian_h1",
    "hamiltonian_h2",
    "helmholtz_solve_dx",
    "integral",
    "lifespan",
    "lifespan_rho",
    "mkdv_hierarchy_rhs",
    "mollified_rhs",
    "mollifier_symbol",
    "mollify",
    "multiply",
    "peakon_profile",
    "reflect",
    "reformulated_rhs",
    "rk4_step",
    "sobolev_norm",
    "solve",
]

for _name in __all__:
    globals()[_name] = getattr(_core, _name)
__version__ = _core.__version__
