from bounds.binomials import f_interp, f_value, inverse_binomial
from bounds.chain import bollobas_check, bollobas_sum, chain_check_family, jensen_chain_check
from bounds.classical import (
    bound_report,
    conjectured_scale,
    djo_multipartite_exact,
    djo_multipartite_lower_bound,
    djo_upper_bound,
    egp_bound,
    katona_tarjan_bound,
    lower_bound_scc_multipartite,
    qi_rate,
    qi_target_rate,
    upper_constant,
)
from bounds.config import BoundsConfig
from bounds.schemas import BollobasSum, BoundReport, ChainReport, LogBase, WeightMatrix

__all__ = [
    "BollobasSum",
    "BoundsConfig",
    "BoundReport",
    "ChainReport",
    "LogBase",
    "WeightMatrix",
    "bollobas_check",
    "bollobas_sum",
    "bound_report",
    "chain_check_family",
    "conjectured_scale",
    "djo_multipartite_exact",
    "djo_multipartite_lower_bound",
    "djo_upper_bound",
    "egp_bound",
    "f_interp",
    "f_value",
    "inverse_binomial",
    "jensen_chain_check",
    "katona_tarjan_bound",
    "lower_bound_scc_multipartite",
    "qi_rate",
    "qi_target_rate",
    "upper_constant",
]
