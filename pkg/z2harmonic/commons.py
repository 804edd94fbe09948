import math
import re
from fractions import Fraction

import numpy as np


class InvalidInputError(ValueError):
  """Malformed input or a violated precondition."""


class FormulaNotProvidedError(InvalidInputError):
  """The requested case has no closed formula."""


class NumericalError(RuntimeError):
  """A numerical procedure did not reach a trustworthy answer."""


RATIONAL_RE = re.compile(r"^-?\d+/\d+$")


def as_fraction(value):
  if isinstance(value, Fraction):
    return value
  if isinstance(value, (int, np.integer)):
    return Fraction(int(value))
  if isinstance(value, str):
    try:
      return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
      raise InvalidInputError(f"not a rational number: {value!r}")
  # floats go through their shortest repr so 0.1 stays 1/10
  return Fraction(repr(float(value)))


def fraction_str(q):
  q = as_fraction(q)
  return f"{q.numerator}/{q.denominator}"


def require_int(name, value, minimum=None):
  if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
    raise InvalidInputError(f"{name} must be an integer, got {value!r}")
  value = int(value)
  if minimum is not None and value < minimum:
    raise InvalidInputError(f"{name} must be >= {minimum}, got {value}")
  return value


def require_finite(name, value):
  value = float(value)
  if not math.isfinite(value):
    raise InvalidInputError(f"{name} must be finite, got {value!r}")
  return value


def fit_line(x, y):
  """Least-squares line through (x, y); returns (slope, intercept, r_squared)."""
  x = np.asarray(x, dtype=float)
  y = np.asarray(y, dtype=float)
  slope, intercept = np.polyfit(x, y, 1)
  residual = y - (slope * x + intercept)
  ss_res = float(np.sum(residual ** 2))
  ss_tot = float(np.sum((y - y.mean()) ** 2))
  if ss_tot == 0.0:
    r_squared = 1.0
  else:
    r_squared = 1.0 - ss_res / ss_tot
  return float(slope), float(intercept), r_squared


def smoothstep_derivative(t):
  t = np.clip(t, 0.0, 1.0)
  return 6.0 * t * (1.0 - t)
