"""Error bounds for approximate solutions built by cutting off model solutions.

Three regimes:

  spinor_neck_stretch  neck of length T, bound C/T
  oneform_pinch        S^2 neck of size delta, bound C delta^{1-mu}
  torus_pinch          torus neck of size delta, bound C delta^{-mu/2}/log(1/delta)

`error_rate_check` integrates a model of the cutoff-error integrand and fits
its scaling exponent against the parameter.
"""
import enum
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .commons import InvalidInputError, fit_line, require_finite, smoothstep_derivative

logger = logging.getLogger(__name__)


class RateRegime(str, enum.Enum):
  SPINOR_NECK_STRETCH = "spinor_neck_stretch"
  ONEFORM_PINCH = "oneform_pinch"
  TORUS_PINCH = "torus_pinch"


@dataclass(frozen=True)
class ErrorRatePrediction:
  regime: str
  parameter: float
  mu: float
  predicted_norm_bound: float
  exponent: float
  vanishes: bool
  validity: str


@dataclass(frozen=True)
class RateFit:
  regime: str
  mu: float
  parameters: tuple
  values: tuple
  fitted_exponent: float
  predicted_exponent: float
  vanishes_numerically: bool


def _regime(regime):
  try:
    return RateRegime(regime)
  except ValueError:
    names = ", ".join(r.value for r in RateRegime)
    raise InvalidInputError(f"unknown regime {regime!r}; expected one of {names}")


def _check_delta(delta):
  if not 0 < delta < 1:
    raise InvalidInputError(f"delta must lie in (0, 1), got {delta}")


def error_rate(regime, parameter, mu, constant=1.0):
  regime = _regime(regime)
  parameter = require_finite("parameter", parameter)
  mu = require_finite("mu", mu)
  if regime is RateRegime.SPINOR_NECK_STRETCH:
    if parameter <= 0:
      raise InvalidInputError(f"neck length must be positive, got {parameter}")
    return ErrorRatePrediction(regime.value, parameter, mu, constant / parameter, -1.0, True,
                               "decreasing in T for every admissible weight")
  _check_delta(parameter)
  if regime is RateRegime.ONEFORM_PINCH:
    exponent = 1.0 - mu
    return ErrorRatePrediction(regime.value, parameter, mu, constant * parameter ** exponent,
                               exponent, exponent > 0, "mu < 1")
  exponent = -0.5 * mu
  bound = constant / math.log(1.0 / parameter) * parameter ** exponent
  vanishes = mu <= 0
  if not vanishes:
    logger.warning("torus pinch at mu = %g: error does not vanish as delta -> 0", mu)
  return ErrorRatePrediction(regime.value, parameter, mu, bound, exponent, vanishes, "mu <= 0")


def spinor_cutoff_error(T):
  """Cutoff chi(sigma/T) over a neck of length T, measured against the unit-mass weight dsigma/T."""
  value, _ = integrate.quad(lambda x: smoothstep_derivative(x / T) ** 2 / (T * T), 0.0, T, limit=200)
  return math.sqrt(value / T)


def oneform_cutoff_error(delta, mu, c=1.0):
  """Integral of (delta^-2 + 1) <rho>^-mu over cdelta <= rho <= 2cdelta on the S^2 neck.

  The neck volume element is 4 pi (rho^2 + delta^2) drho.
  """
  _check_delta(delta)

  def integrand(rho):
    bracket_sq = rho * rho + delta * delta
    return (delta ** -2 + 1.0) * bracket_sq ** (-0.5 * mu) * 4.0 * math.pi * bracket_sq

  value, _ = integrate.quad(integrand, c * delta, 2.0 * c * delta, limit=200)
  return value


def torus_cutoff_error(delta, mu):
  """Logarithmic cutoff between delta^{3/4} and delta^{5/8} on the torus neck.

  chi = psi(log(rho/a)/Lambda) with Lambda = log(b/a), so |chi'| <= C/(Lambda rho).
  The squared norm is (4 pi^2/Lambda) int_0^1 psi'(t)^2 rho(t)^{-2 mu} dt.
  """
  _check_delta(delta)
  log_a = 0.75 * math.log(delta)
  lam = 0.125 * math.log(1.0 / delta)

  def integrand(t):
    return smoothstep_derivative(t) ** 2 * math.exp(-2.0 * mu * (log_a + lam * t))

  value, _ = integrate.quad(integrand, 0.0, 1.0, limit=200)
  return math.sqrt(4.0 * math.pi ** 2 * value / lam)


def error_rate_check(regime, parameters, mu, pinch_c=1.0):
  regime = _regime(regime)
  params = sorted(float(p) for p in parameters)
  if len(params) < 2:
    raise InvalidInputError("at least two parameter values are needed for a fit")
  x = np.log(params)
  if regime is RateRegime.SPINOR_NECK_STRETCH:
    values = [spinor_cutoff_error(T) for T in params]
    slope, _, _ = fit_line(x, np.log(values))
    predicted = -1.0
    # values should shrink as T grows
    vanishing = all(b < a for a, b in zip(values, values[1:]))
  else:
    if regime is RateRegime.ONEFORM_PINCH:
      values = [oneform_cutoff_error(delta, mu, pinch_c) for delta in params]
      slope, _, _ = fit_line(x, np.log(values))
      predicted = 1.0 - mu
    else:
      values = [torus_cutoff_error(delta, mu) for delta in params]
      logs = np.log([math.log(1.0 / delta) for delta in params])
      slope, _, _ = fit_line(x, np.log(values) + logs)
      predicted = -0.5 * mu
    # params ascend, so values should ascend with delta
    vanishing = all(a < b for a, b in zip(values, values[1:]))
  return RateFit(regime.value, mu, tuple(params), tuple(values), slope, predicted, vanishing)
