"""Exact-arithmetic laboratory for the hard-core model on small graphs.

Partition functions, occupancy and variance fractions, marginals, the seven
polynomial orderings, certified transcendental enclosures, and a Glauber
sampler, all over exact rationals (the sampler alone uses floats, and only
for statistics).
"""

from .graphs import (
    Graph,
    disjoint_union,
    encode_graph6,
    from_edges,
    generate,
    parse_graph6,
    read_edge_list,
)
from .hardcore import (
    HardCoreProfile,
    brute_force_polynomial,
    cycle_polynomial,
    independence_polynomial,
    marginal,
    occupancy_fraction,
    occupancy_value,
    pair_marginal,
    path_polynomial,
    profile,
    var_of_polynomial,
    variance_fraction,
    variance_value,
    variance_via_marginals,
)
from .intervals import (
    RationalInterval,
    entropy_interval,
    exp_interval,
    free_energy_interval,
    lambert_w_interval,
    log1p_interval,
    log_interval,
)
from .multipoly import MultiPoly
from .orderings import (
    OrderingKind,
    compare,
    implication_web_check,
    var_difference_certificate,
)
from .polynomials import Poly, RatFunc, lambda_d_dlambda, poly_gcd, squarefree_part
from .roots import (
    isolate_positive_roots,
    nonneg_on_halfline,
    nonneg_on_segment,
    sturm_chain,
)
from .sampler import ChainState, EstimateReport, SplitMix64, estimate, glauber_step, new_chain
from .series import MultiSeries, g_series
from .verdict import Verdict

__version__ = "0.1.0"
