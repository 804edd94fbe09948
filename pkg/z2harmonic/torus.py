"""Torus neck: Bessel cokernel elements, their asymptotics, the obstruction pairing and the index."""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import integrate

from . import bessel
from .commons import InvalidInputError, NumericalError, require_int

logger = logging.getLogger(__name__)

ASYMPTOTIC_MIN_ARGUMENT = 5.0
DEFAULT_WINDOW = (1.0, 0.5)


@dataclass(frozen=True)
class ModeProblem3D:
  k: int
  ell: int
  delta: float
  mu: float = 0.0

  def __post_init__(self):
    require_int("k", self.k)
    require_int("ell", self.ell)
    if not 0 < self.delta <= 1:
      raise InvalidInputError(f"delta must lie in (0, 1], got {self.delta}")
    if abs(self.mu) >= 0.25:
      raise InvalidInputError(f"|mu| must be below 1/4, got {self.mu}")

  @property
  def mode_cutoff(self):
    return mode_cutoff(self.delta)


@dataclass(frozen=True)
class BesselSample:
  """alpha, beta at R; true values are alpha * exp(log_scale), beta * exp(log_scale)."""
  R: float
  alpha: float
  beta: float
  log_scale: float


@dataclass(frozen=True)
class BesselSolution:
  k: int
  ell: int
  delta: float
  samples: tuple
  residual: float


@dataclass(frozen=True)
class AsymptoticRatio:
  p: float
  p0: float
  bessel_ratio: float
  geometric_factor: float
  ratio: float
  deviation: float
  advisory: object = None


@dataclass(frozen=True)
class PairingResult:
  psi: complex
  psi_bar: complex
  magnitude: float
  scale: float
  p0: float


@dataclass(frozen=True)
class IndexCount:
  L: int
  index: int
  constraints: int


def mode_cutoff(delta):
  return math.floor(1 / Fraction(repr(float(delta))))


def _orders(k):
  return [abs(k - 1), abs(k), abs(k + 1), abs(k + 2)]


def bessel_mode_solution(problem, sample_Rs, scale_threshold=bessel.SCALE_THRESHOLD,
                         series_max=bessel.SERIES_MAX, uniform_order=bessel.UNIFORM_ORDER):
  """(I_k(x), -sgn(ell) I_{k+1}(x)) at x = delta |ell| R, with the defect of the first-order system.

  The system rows are -delta ell a - b' - (k+1) b/R and a' - k a/R + delta ell b.
  Derivatives use I'_n = (I_{n-1} + I_{n+1})/2; the defect is normalized by
  delta |ell| times the largest Bessel value involved.
  """
  if problem.ell == 0:
    raise InvalidInputError("fiber mode ell must be nonzero")
  k, ell, delta = problem.k, problem.ell, problem.delta
  sign = 1.0 if ell > 0 else -1.0
  rate = delta * abs(ell)
  samples, worst = [], 0.0
  for R in sample_Rs:
    R = float(R)
    if R <= 0:
      raise InvalidInputError(f"sample radius must be positive, got {R}")
    x = rate * R
    values = [bessel.ive(n, x, series_max, uniform_order) for n in _orders(k)]
    i_km1, i_k, i_k1, i_k2 = values
    alpha, beta = i_k, -sign * i_k1
    d_alpha = rate * 0.5 * (i_km1 + i_k1)
    d_beta = -sign * rate * 0.5 * (i_k + i_k2)
    row1 = -delta * ell * alpha - d_beta - (k + 1) * beta / R
    row2 = d_alpha - k * alpha / R + delta * ell * beta
    size = rate * max(abs(v) for v in values)
    if size > 0:
      worst = max(worst, max(abs(row1), abs(row2)) / size)
    if x > scale_threshold:
      samples.append(BesselSample(R, alpha, beta, x))
    else:
      factor = math.exp(x)
      samples.append(BesselSample(R, alpha * factor, beta * factor, 0.0))
  return BesselSolution(k, ell, delta, tuple(samples), worst)


def cokernel_asymptotics(problem, R0, R):
  """Direct magnitude of the cokernel element over its leading exponential profile.

  With p = delta |ell| |R| the shared normalizations cancel and the ratio is
  sqrt(pi p) e^{-p} (I_k(p)^2 + I_{k+1}(p)^2)^{1/2} times (|R|/<R>)^{1/2}.
  The weight <R>^{2 mu} multiplies the element and its profile alike, so
  problem.mu does not enter the ratio.
  """
  if problem.ell == 0:
    raise InvalidInputError("fiber mode ell must be nonzero")
  if R == 0 or abs(R) > R0:
    raise InvalidInputError(f"R must satisfy 0 < |R| <= R0, got R = {R}, R0 = {R0}")
  rate = problem.delta * abs(problem.ell)
  p, p0 = rate * abs(R), rate * R0
  advisory = None
  if p0 < ASYMPTOTIC_MIN_ARGUMENT:
    advisory = f"asymptotic regime not reached: delta |ell| R0 = {p0:.3g} < {ASYMPTOTIC_MIN_ARGUMENT}"
    logger.warning(advisory)
  sample = bessel_mode_solution(problem, [abs(R)]).samples[0]
  scaled = math.hypot(sample.alpha, sample.beta) * math.exp(sample.log_scale - p)
  bessel_ratio = math.sqrt(math.pi * p) * scaled
  geometric = math.sqrt(abs(R) / math.sqrt(R * R + 1.0))
  ratio = bessel_ratio * geometric
  return AsymptoticRatio(p, p0, bessel_ratio, geometric, ratio, abs(bessel_ratio - 1.0), advisory)


def pairing_scale(p0, window=DEFAULT_WINDOW, limit=200):
  """sqrt(2) * integral of e^{p - a p0}/sqrt(p) over p in [b p0, a p0]."""
  a, b = window
  if not 0 < b < a:
    raise InvalidInputError(f"window must satisfy 0 < b < a, got {window}")
  top = a * p0
  upper = (a - b) * p0

  def integrand(u):
    return math.exp(-u) / math.sqrt(top - u)

  pieces = [(0.0, min(upper, 50.0))]
  if upper > 50.0:
    pieces.append((50.0, upper))
  total, error = 0.0, 0.0
  for lo, hi in pieces:
    value, err = integrate.quad(integrand, lo, hi, limit=limit)
    total += value
    error += err
  if not math.isfinite(total) or error > 1e-8 * max(abs(total), 1e-300):
    raise NumericalError(f"pairing quadrature did not converge (error {error:.3g}); raise quad_limit")
  return math.sqrt(2.0) * total


def obstruction_pairing(ell, delta, R0, c, d, xi, window=DEFAULT_WINDOW, limit=200):
  """Leading-order pairing of the perturbation (xi_1, xi_2) with the cokernel pair (Psi, Psi-bar)."""
  ell = require_int("ell", ell)
  if ell == 0:
    raise InvalidInputError("fiber mode ell must be nonzero")
  c, d = complex(c), complex(d)
  if abs(c) ** 2 + abs(d) ** 2 == 0:
    raise InvalidInputError("spinor constants c and d are both zero")
  xi1, xi2 = (complex(x) for x in xi)
  p0 = abs(ell) * delta * R0
  S = pairing_scale(p0, window, limit)
  psi = S * (xi1 + 1j * xi2) * c.conjugate()
  psi_bar = S * (xi1 - 1j * xi2) * d.conjugate()
  return PairingResult(psi, psi_bar, math.hypot(abs(psi), abs(psi_bar)), S, p0)


def pairing_matrix(ell, delta, R0, c, d, window=DEFAULT_WINDOW, limit=200):
  """Matrix of (xi_1, xi_2) -> (psi, psi_bar) and its determinant -2i S^2 conj(c) conj(d)."""
  S = obstruction_pairing(ell, delta, R0, c, d, (1.0, 0.0), window, limit).scale
  cb, db = complex(c).conjugate(), complex(d).conjugate()
  M = np.array([[S * cb, 1j * S * cb], [S * db, -1j * S * db]])
  det = complex(np.linalg.det(M))
  invertible = abs(det) > 1e-12 * S * S
  return M, det, invertible


def index_3d(delta):
  if not 0 < delta <= 1:
    raise InvalidInputError(f"delta must lie in (0, 1], got {delta}")
  L = mode_cutoff(delta)
  index = -(4 * L + 2)
  constraints = sum(2 for _ in range(-L, L + 1))
  return IndexCount(L, index, constraints)
