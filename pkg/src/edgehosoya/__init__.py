"""Edge-Hosoya polynomials of benzenoid chains.

Three independent routes to the same polynomial:

* :mod:`edgehosoya.oracle` -- breadth-first search on the line graph;
* :mod:`edgehosoya.recurrence` -- annelation recurrences over a turn string;
* :mod:`edgehosoya.polyacene` -- closed forms for linear chains.

:mod:`edgehosoya.indices` turns a polynomial into edge-Wiener and
edge-hyper-Wiener indices.
"""

from .chain import BenzenoidGraph, ChainSpec, build_graph, enumerate_chains, parse_spec
from .graph import Graph
from .indices import IndexReport, edge_hyper_wiener, edge_wiener, from_hat, index_report, to_hat
from .oracle import edge_hosoya_bruteforce, hat_edge_hosoya_bruteforce, line_graph
from .poly import CoefficientOverflow, InexactDivision, Polynomial, fixed_width
from .polyacene import beta_closed, delta_closed, edge_hosoya_closed
from .recurrence import AnnelationCase, ChainState, chain_edge_hosoya, chain_states, step

__version__ = "0.1.0"
