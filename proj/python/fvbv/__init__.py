"""Finite-volume solvers and convergence studies for scalar conservation laws."""

from ._core import (
    admissibility_constant,
    bv_xy,
    dump_mesh,
    godunov_flux,
    list_cases,
    max_timestep,
    mesh_summary,
    rate,
    run_experiment,
)

__all__ = [
    "admissibility_constant",
    "bv_xy",
    "dump_mesh",
    "godunov_flux",
    "list_cases",
    "max_timestep",
    "mesh_summary",
    "rate",
    "run_experiment",
]
