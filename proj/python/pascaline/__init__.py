"""Simulator of a multi-digit adding machine built on memristive digits."""

from pascaline._core import (
    Config,
    IVTrace,
    Machine,
    MemristorParams,
    __version__,
    complement,
    default_config,
    device_current,
    dr_dt,
    euler_step,
    hysteresis,
    integrate_const,
    loop_area,
    make_config,
    write_figures,
)

__all__ = [
    "Config",
    "IVTrace",
    "Machine",
    "MemristorParams",
    "__version__",
    "complement",
    "default_config",
    "device_current",
    "dr_dt",
    "euler_step",
    "hysteresis",
    "integrate_const",
    "loop_area",
    "make_config",
    "write_figures",
]
