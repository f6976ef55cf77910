"""Exact and constructive domination for maximal outerplane graphs."""

__all__ = (
    "__version__",
    "OuterdomConfig",
    "build_ht",
    "build_mop",
    "dominate_mop",
    "dominate_triangulation",
    "gamma_exact_bb",
    "gamma_mop_dp",
    "named_graph",
)

from outerdom.config import OuterdomConfig
from outerdom.domination import gamma_exact_bb, gamma_mop_dp
from outerdom.generators import named_graph
from outerdom.hamiltonian import build_ht, dominate_triangulation
from outerdom.mop import build_mop
from outerdom.reductions import dominate_mop
from outerdom.version import __version__
