"""Physical-layer model for D2D multicast groups underlaying cellular uplink channels.

Transmitters of each population (cellular users, multicast-group senders) form
independent homogeneous Poisson fields on the plane; links are Rayleigh faded
and interference limited (no thermal-noise term anywhere).  All powers are
linear milliwatts internally; dBm appears only at configuration boundaries.
"""
import math
from dataclasses import dataclass

import numpy as np

from .specfun import gamma


def dbm_to_mw(x: float) -> float:
    """Convert dBm to linear milliwatts."""
    return 10.0 ** (x / 10.0)


def mw_to_dbm(p: float) -> float:
    """Convert linear milliwatts to dBm (p must be > 0)."""
    if p <= 0:
        raise ValueError(f"power must be positive to express in dBm (got {p})")
    return 10.0 * math.log10(p)


@dataclass(frozen=True)
class ScenarioConfig:
    """Global physical and threshold parameters shared by every channel.

    alpha         path-loss exponent, must exceed 2
    group_size    number of receivers per multicast group, >= 1
    d_gr          transmitter-to-worst-receiver distance of a group, meters
    d_cb          cellular-user-to-base-station distance, meters
    rate_th_d2d   group rate target, bits/s/Hz
    rate_th_cu    cellular rate target, bits/s/Hz
    theta_d2d     outage-probability ceiling for groups, in (0, 1)
    theta_cu      outage-probability ceiling for cellular users, in (0, 1)
    p_total_d2d   total transmit-power budget of all groups, milliwatts
    """

    alpha: float
    group_size: int = 1
    d_gr: float = 25.0
    d_cb: float = 300.0
    rate_th_d2d: float = 1.0
    rate_th_cu: float = 1.0
    theta_d2d: float = 0.1
    theta_cu: float = 0.1
    p_total_d2d: float = dbm_to_mw(25.0)

    def __post_init__(self):
        if not (self.alpha > 2.0):
            raise ValueError(
                f"alpha must exceed 2 (gamma pole in the interference tail otherwise), got {self.alpha}"
            )
        if int(self.group_size) != self.group_size or self.group_size < 1:
            raise ValueError(f"group_size must be an integer >= 1, got {self.group_size}")
        for name in ("d_gr", "d_cb", "rate_th_d2d", "rate_th_cu", "p_total_d2d"):
            v = getattr(self, name)
            if not (v > 0.0 and math.isfinite(v)):
                raise ValueError(f"{name} must be finite and positive, got {v}")
        for name in ("theta_d2d", "theta_cu"):
            v = getattr(self, name)
            if not (0.0 < v < 1.0):
                raise ValueError(f"{name} must lie strictly inside (0, 1), got {v}")


@dataclass(frozen=True)
class ChannelParams:
    """Per-channel densities and powers.

    lambda_c   cellular-user density on this channel, per m^2
    lambda_g   multicast-group density on this channel, per m^2
    p_c        cellular transmit power, milliwatts
    p_up       per-channel cap on group transmit power, milliwatts
    """

    lambda_c: float
    lambda_g: float
    p_c: float
    p_up: float

    def __post_init__(self):
        for name in ("lambda_c", "lambda_g"):
            v = getattr(self, name)
            if not (v >= 0.0 and math.isfinite(v)):
                raise ValueError(f"{name} must be finite and >= 0, got {v}")
        if self.lambda_c + self.lambda_g <= 0.0:
            raise ValueError(
                "lambda_c + lambda_g must be positive: a channel with no interferers "
                "has no interference-limited model"
            )
        for name in ("p_c", "p_up"):
            v = getattr(self, name)
            if not (v > 0.0 and math.isfinite(v)):
                raise ValueError(f"{name} must be finite and positive, got {v}")


@dataclass(frozen=True)
class ChiCoefficients:
    """Interference-geometry coefficients of the two outage expressions."""

    chi_g: float
    chi_c: float


def chi_coefficient(alpha: float, distance: float, rate_threshold: float, group_size: int = 1) -> float:
    """Outage-exponent geometry coefficient for one link class.

    Equals pi * distance^2 * G(1 + 2/alpha) * G(1 - 2/alpha) * t^(2/alpha)
    where t = 2^(rate_threshold / group_size) - 1 is the SIR threshold and G
    is the gamma function.  Zero exactly when the rate threshold is zero.
    """
    if not alpha > 2.0:
        raise ValueError(f"alpha must exceed 2 (gamma pole at 1 - 2/alpha), got {alpha}")
    if rate_threshold < 0.0:
        raise ValueError(f"rate_threshold must be >= 0, got {rate_threshold}")
    sir_th = 2.0 ** (rate_threshold / group_size) - 1.0
    if sir_th == 0.0:
        return 0.0
    gg = gamma(1.0 + 2.0 / alpha) * gamma(1.0 - 2.0 / alpha)
    return math.pi * distance * distance * gg * sir_th ** (2.0 / alpha)


def chi_d2d(cfg: ScenarioConfig) -> float:
    """Geometry coefficient of the group-outage expression."""
    return chi_coefficient(cfg.alpha, cfg.d_gr, cfg.rate_th_d2d, cfg.group_size)


def chi_cu(cfg: ScenarioConfig) -> float:
    """Geometry coefficient of the cellular-outage expression."""
    return chi_coefficient(cfg.alpha, cfg.d_cb, cfg.rate_th_cu, 1)


def chi_coefficients(cfg: ScenarioConfig) -> ChiCoefficients:
    return ChiCoefficients(chi_g=chi_d2d(cfg), chi_c=chi_cu(cfg))


def _check_positive_power(p_g) -> np.ndarray:
    p = np.asarray(p_g, dtype=float)
    if np.any(p <= 0.0) or not np.all(np.isfinite(p)):
        raise ValueError(f"p_g must be finite and positive, got {p_g}")
    return p


def outage_d2d(cfg: ScenarioConfig, ch: ChannelParams, p_g):
    """Probability a multicast group misses its rate target at group power p_g (mW).

    1 - exp(-chi_g * [lambda_c * (p_c / p_g)^(2/alpha) + lambda_g]); nonincreasing
    in p_g with floor 1 - exp(-chi_g * lambda_g).  Accepts a scalar or an array
    of powers.
    """
    p = _check_positive_power(p_g)
    cg = chi_d2d(cfg)
    expo = cg * (ch.lambda_c * (ch.p_c / p) ** (2.0 / cfg.alpha) + ch.lambda_g)
    out = -np.expm1(-expo)
    return float(out) if np.isscalar(p_g) else out


def outage_cu(cfg: ScenarioConfig, ch: ChannelParams, p_g):
    """Probability a cellular user misses its rate target given group power p_g (mW).

    1 - exp(-chi_c * [lambda_c + lambda_g * (p_g / p_c)^(2/alpha)]); nondecreasing
    in p_g.
    """
    p = _check_positive_power(p_g)
    cc = chi_cu(cfg)
    expo = cc * (ch.lambda_c + ch.lambda_g * (p / ch.p_c) ** (2.0 / cfg.alpha))
    out = -np.expm1(-expo)
    return float(out) if np.isscalar(p_g) else out
