"""Modified Bessel functions of the first kind, integer order.

Self-contained evaluation of the exponentially scaled function

  ive(n, x) = exp(-x) * I_n(x),   x >= 0

using the power series for small arguments, Miller's downward recurrence
normalized by the Hankel asymptotic series for large arguments, and the
Debye uniform expansion for large orders. I_{-n} = I_n.
"""
import math

import numpy as np

from .commons import InvalidInputError

SERIES_MAX = 25.0
UNIFORM_ORDER = 50
SCALE_THRESHOLD = 700.0

_EPS = 1e-17


def _series(n, x):
  half = 0.5 * x
  term = math.exp(n * math.log(half) - math.lgamma(n + 1) - x)
  total = term
  q = half * half
  m = 0
  while True:
    m += 1
    term *= q / (m * (m + n))
    total += term
    if term <= _EPS * total:
      return total


def _hankel(n, x):
  """Hankel asymptotic series, scaled by exp(-x)."""
  mu = 4.0 * n * n
  term = 1.0
  total = 1.0
  k = 0
  while True:
    k += 1
    nxt = -term * (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
    if abs(nxt) >= abs(term) or nxt == 0.0:
      break
    term = nxt
    total += term
    if abs(term) < _EPS * abs(total):
      break
  return total / math.sqrt(2.0 * math.pi * x)


def _debye_u(k, p):
  if k == 0:
    return 1.
  if k == 1:
    return (p - (5*p**3)/3.)/8.
  if k == 2:
    return (p**2*(81 - 462*p**2 + 385*p**4))/1152.
  if k == 3:
    return (30375*p**3 - 369603*p**5 + 765765*p**7 - 425425*p**9)/414720.
  if k == 4:
    return (p**4*(4465125 - 94121676*p**2 + 349922430*p**4 - 446185740*p**6 + 185910725*p**8))/3.981312e7
  return 0.


def _debye(nu, x):
  """Uniform large-order expansion, scaled by exp(-x)."""
  z = x / nu
  root = math.sqrt(1.0 + z * z)
  eta = root + math.log(z / (1.0 + root))
  p = 1.0 / root
  correction = sum(_debye_u(k, p) / nu ** k for k in range(5))
  return math.exp(nu * eta - x) / math.sqrt(2.0 * math.pi * nu * root) * correction


def _miller(n_max, x):
  """Scaled I_0..I_{n_max} by downward recurrence, normalized with the Hankel value of I_0."""
  start = n_max + 20 + int(math.sqrt(80.0 * max(x, 1.0)))
  values = np.zeros(n_max + 1)
  upper, current = 0.0, 1e-300
  for k in range(start, 0, -1):
    lower = (2.0 * k / x) * current + upper
    upper, current = current, lower
    if abs(current) > 1e250:
      upper *= 1e-250
      current *= 1e-250
      values *= 1e-250
    if k - 1 <= n_max:
      values[k - 1] = current
  return values * (_hankel(0, x) / values[0])


def ive_sequence(n_max, x, series_max=SERIES_MAX, uniform_order=UNIFORM_ORDER):
  """Scaled I_0(x)..I_{n_max}(x) as a numpy array."""
  if n_max < 0:
    raise InvalidInputError(f"order must be >= 0, got {n_max}")
  x = float(x)
  if x < 0 or not math.isfinite(x):
    raise InvalidInputError(f"argument must be finite and >= 0, got {x}")
  if x == 0.0:
    out = np.zeros(n_max + 1)
    out[0] = 1.0
    return out
  if x <= series_max:
    return np.array([ive(n, x, series_max, uniform_order) for n in range(n_max + 1)])
  out = _miller(min(n_max, uniform_order - 1), x)
  if n_max >= uniform_order:
    tail = [_debye(n, x) for n in range(uniform_order, n_max + 1)]
    out = np.concatenate([out, tail])
  return out


def ive(n, x, series_max=SERIES_MAX, uniform_order=UNIFORM_ORDER):
  n = abs(int(n))
  x = float(x)
  if x < 0 or not math.isfinite(x):
    raise InvalidInputError(f"argument must be finite and >= 0, got {x}")
  if x == 0.0:
    return 1.0 if n == 0 else 0.0
  if n >= uniform_order:
    return _debye(n, x)
  if x <= series_max:
    return _series(n, x)
  return float(_miller(n, x)[n])


def iv(n, x, **kwargs):
  """Unscaled I_n(x); raises past the overflow threshold, use `iv_scaled` there."""
  x = float(x)
  if x > SCALE_THRESHOLD:
    raise OverflowError(f"I_{n}({x}) overflows; use iv_scaled")
  return ive(n, x, **kwargs) * math.exp(x)


def iv_scaled(n, x, threshold=SCALE_THRESHOLD, **kwargs):
  """(value, log_scale) with I_n(x) = value * exp(log_scale)."""
  x = float(x)
  if x > threshold:
    return ive(n, x, **kwargs), x
  return ive(n, x, **kwargs) * math.exp(x), 0.0
