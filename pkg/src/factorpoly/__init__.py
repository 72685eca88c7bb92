"""Exact degree-bounded subgraph polynomials of multigraphs and their zeros."""

from .multigraph import DegreeBounds, Multigraph, parse_graph, read_graph, serialize_graph
from .polynomials import UniPoly
from .fugacities import FugacitySpec
from .enumeration import brute_counts, dp_counts, factor_counts
from .roots import Disc, DiscExterior, Sector, classify, find_roots, nonvanishing_in
from .config import RunConfig

__version__ = "0.1.0"

__all__ = [
    "DegreeBounds", "Multigraph", "parse_graph", "read_graph", "serialize_graph",
    "UniPoly", "FugacitySpec", "brute_counts", "dp_counts", "factor_counts",
    "Disc", "DiscExterior", "Sector", "classify", "find_roots", "nonvanishing_in", "RunConfig",
]
