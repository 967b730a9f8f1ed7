"""Zero forcing parameters of simple graphs via exact integer programming.

The heavy lifting lives in the compiled extension; this package re-exports it.
All optimization runs in exact rational arithmetic, so returned values are
exact (fractional quantities come back as fractions.Fraction).
"""

from ._zfip import (
    Graph,
    cartesian_product,
    closure,
    edge_sum,
    family,
    fort_number,
    fractional_zero_forcing_number,
    from_graph6,
    is_fort,
    is_zfs,
    minimal_forts,
    propagation_time,
    propagation_times,
    random_gnp,
    realized_propagation_interval,
    throttling_number,
    to_graph6,
    vertex_sum,
    zero_forcing_number,
)

__all__ = [
    "Graph",
    "cartesian_product",
    "closure",
    "edge_sum",
    "family",
    "fort_number",
    "fractional_zero_forcing_number",
    "from_graph6",
    "is_fort",
    "is_zfs",
    "minimal_forts",
    "propagation_time",
    "propagation_times",
    "random_gnp",
    "realized_propagation_interval",
    "throttling_number",
    "to_graph6",
    "vertex_sum",
    "zero_forcing_number",
]
