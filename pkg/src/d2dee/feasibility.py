"""Per-channel feasible power interval under both outage ceilings and the hard cap.

Inverting the two outage expressions at their thresholds gives a lower bound
(group outage) and an upper bound (cellular protection) on the group transmit
power.  An empty interval is data, not an error: the allocator skips such
channels.
"""
import math
from dataclasses import dataclass

from .model import ChannelParams, ScenarioConfig, chi_cu, chi_d2d

# brackets this close to zero are treated as zero before fractional powers
_BRACKET_EPS = 1e-12


@dataclass(frozen=True)
class PowerBounds:
    """Feasible group-power interval for one channel, milliwatts.

    p_low     power where group outage meets its ceiling (0 if unconstrained,
              +inf if unsatisfiable at any power)
    p_high    power where cellular outage meets its ceiling (+inf if the
              cellular side never binds, -inf if violated already at zero)
    p_inf     effective infimum, max(0, p_low)
    p_sup     effective supremum, min(p_up, p_high)
    feasible  p_inf <= p_sup with both finite
    """

    p_low: float
    p_high: float
    p_inf: float
    p_sup: float
    feasible: bool


def power_bounds(cfg: ScenarioConfig, ch: ChannelParams) -> PowerBounds:
    """Resolve the feasible power interval for one channel.

    The group-outage bound solves
        -ln(1 - theta_g) / (lambda_c * chi_g) - lambda_g / lambda_c = (p_c / p)^(2/alpha)
    and the cellular bound the mirrored expression; a nonpositive bracket on
    either side means the corresponding constraint cannot be met at any power.
    """
    alpha = cfg.alpha
    cg = chi_d2d(cfg)
    cc = chi_cu(cfg)
    budget_g = -math.log1p(-cfg.theta_d2d)
    budget_c = -math.log1p(-cfg.theta_cu)

    if ch.lambda_c > 0.0:
        bracket_low = budget_g / (ch.lambda_c * cg) - ch.lambda_g / ch.lambda_c
        if bracket_low <= _BRACKET_EPS:
            p_low = math.inf  # group outage exceeds its ceiling at any power
        else:
            p_low = ch.p_c * bracket_low ** (-alpha / 2.0)
    else:
        # no cellular interference: group outage is flat at its floor
        p_low = 0.0 if cg * ch.lambda_g <= budget_g else math.inf

    if ch.lambda_g > 0.0:
        bracket_high = budget_c / (ch.lambda_g * cc) - ch.lambda_c / ch.lambda_g
        if bracket_high <= _BRACKET_EPS:
            p_high = -math.inf  # cellular outage violated even by zero group power
        else:
            p_high = ch.p_c * bracket_high ** (alpha / 2.0)
    else:
        # no group interference onto the base station: only the floor matters
        p_high = math.inf if cc * ch.lambda_c <= budget_c else -math.inf

    p_inf = max(0.0, p_low)
    p_sup = min(ch.p_up, p_high)
    feasible = p_inf <= p_sup and math.isfinite(p_inf) and math.isfinite(p_sup)
    return PowerBounds(p_low=p_low, p_high=p_high, p_inf=p_inf, p_sup=p_sup, feasible=feasible)
