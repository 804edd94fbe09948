"""S^2 neck: Laplacian spectra, slice-operator flow and the admissible weight window."""
import math
from dataclasses import dataclass

import numpy as np

from .commons import InvalidInputError, require_int


@dataclass(frozen=True)
class FlowCurve:
  lambda_sq: int
  discriminant: int
  at_zero: tuple
  at_plus: tuple
  at_minus: tuple


@dataclass(frozen=True)
class S2Spectra:
  functions: tuple
  oneforms: tuple
  flows: tuple


@dataclass(frozen=True)
class S2Window:
  mu0: float
  nearest_forbidden: float
  forbidden: tuple


def function_spectrum(max_level):
  return tuple(l * (l + 1) for l in range(max_level + 1))


def coexact_spectrum(max_level):
  return tuple(l * (l + 1) - 1 for l in range(1, max_level + 1))


def flow_eigenvalues(lambda_sq, H):
  """Eigenvalues H/2 -+ sqrt(lambda^2 + H^2/4) of [[0, lambda], [lambda, H]]."""
  root = math.sqrt(lambda_sq + 0.25 * H * H)
  return (0.5 * H - root, 0.5 * H + root)


def flow_curve(lambda_sq, R):
  H = np.asarray(R, dtype=float) / np.sqrt(np.asarray(R, dtype=float) ** 2 + 1.0)
  root = np.sqrt(lambda_sq + 0.25 * H * H)
  return 0.5 * H - root, 0.5 * H + root


def s2_neck_spectra(max_level):
  max_level = require_int("max_level", max_level, minimum=1)
  functions = function_spectrum(max_level)
  oneforms = coexact_spectrum(max_level)
  flows = []
  for lambda_sq in sorted(set(functions) | set(oneforms)):
    flows.append(FlowCurve(lambda_sq, 4 * lambda_sq + 1,
                           flow_eigenvalues(lambda_sq, 0.0),
                           flow_eigenvalues(lambda_sq, 1.0),
                           flow_eigenvalues(lambda_sq, -1.0)))
  return S2Spectra(functions, oneforms, tuple(flows))


def endpoint_eigenvalues(max_level=4):
  values = set()
  for flow in s2_neck_spectra(max_level).flows:
    values.update(flow.at_plus)
    values.update(flow.at_minus)
  return sorted(values)


def s2_fredholm_window(max_level=4):
  """Largest symmetric window (-mu0, mu0) missing every endpoint eigenvalue shifted by 1/2."""
  if max_level < 1:
    raise InvalidInputError(f"max_level must be >= 1, got {max_level}")
  forbidden = sorted({round(e + 0.5, 15) for e in endpoint_eigenvalues(max_level)})
  nearest = min(forbidden, key=abs)
  if nearest == 0:
    raise InvalidInputError("weight 0 is forbidden; no symmetric window exists")
  return S2Window(abs(nearest), nearest, tuple(f for f in forbidden if abs(f) < 2.0))
