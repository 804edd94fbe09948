"""Bookkeeping for connected sums and torus sums of Z2-harmonic data.

Branched double covers, anti-invariant cohomology H^1_-, glued quadratic
differentials and representation-variety dimension counts. Integer
arithmetic only.
"""
import logging
from dataclasses import dataclass

from .commons import FormulaNotProvidedError, InvalidInputError, require_int

logger = logging.getLogger(__name__)

STRATUM_HYPOTHESIS = "dim R = 2k"


@dataclass(frozen=True)
class CoverProfile:
  """dim H^1_- of the branched double cover, or b1 of Y when the singular set is empty."""
  h1_minus: int = 0
  z_nonempty: bool = True
  b1: int = 0

  def __post_init__(self):
    require_int("h1_minus", self.h1_minus, minimum=0)
    require_int("b1", self.b1, minimum=0)


@dataclass(frozen=True)
class ZeroProfile:
  simple_zeros: int
  even_zero_multiplicity: int
  total_with_multiplicity: int

  def __post_init__(self):
    if self.total_with_multiplicity != self.simple_zeros + self.even_zero_multiplicity:
      raise InvalidInputError("zero counts do not add up")
    if self.even_zero_multiplicity % 2:
      raise InvalidInputError("even zeros must have even total multiplicity")


@dataclass(frozen=True)
class StratumGap:
  glued: int
  expected_top: int
  gap: int
  hypothesis: str = STRATUM_HYPOTHESIS


@dataclass(frozen=True)
class CableLink:
  descriptor: str
  components: int


def moduli_dimension(profile):
  if profile.z_nonempty:
    return profile.h1_minus
  return profile.b1


def h1_minus_connected_sum(p1, p2):
  if p1.z_nonempty and p2.z_nonempty:
    return p1.h1_minus + p2.h1_minus + 1
  if p1.z_nonempty:
    return p1.h1_minus + p2.b1
  if p2.z_nonempty:
    return p2.h1_minus + p1.b1
  raise FormulaNotProvidedError("formula not provided: both singular sets are empty")


def h1_minus_zero_surgery(h1_minus, null_homologous=True):
  """H^1_- after 0-surgery along a knot whose lifts are null-homologous."""
  h1_minus = require_int("h1_minus", h1_minus, minimum=0)
  if not null_homologous:
    raise FormulaNotProvidedError("formula not provided: lifts are not null-homologous")
  return h1_minus + 1


def branched_cover_genus(genus, branch_points):
  genus = require_int("genus", genus, minimum=0)
  branch_points = require_int("branch_points", branch_points, minimum=0)
  if branch_points % 2:
    raise InvalidInputError(f"no double cover branched over {branch_points} points")
  return 2 * genus - 1 + branch_points // 2


def _check_glued_genera(genus1, genus2, minimum):
  genus1 = require_int("genus1", genus1, minimum=minimum)
  genus2 = require_int("genus2", genus2, minimum=minimum)
  for g in (genus1, genus2):
    if g == 1:
      logger.warning("genus 1 summand has no zeros; the glued formulas assume a nonempty branch set")
  return genus1, genus2


def glued_cover_genus(genus1, genus2):
  genus1, genus2 = _check_glued_genera(genus1, genus2, 1)
  glued = 4 * (genus1 + genus2) - 5
  check = branched_cover_genus(genus1 + genus2, (4 * genus1 - 4) + (4 * genus2 - 4))
  assert glued == check
  return glued


def glued_zero_profile(genus1, genus2):
  genus1, genus2 = _check_glued_genera(genus1, genus2, 2)
  simple = 4 * (genus1 + genus2) - 8
  return ZeroProfile(simple, 4, simple + 4)


def representation_dim_sum(d1, d2):
  d1 = require_int("d1", d1, minimum=0)
  d2 = require_int("d2", d2, minimum=0)
  return d1 + d2 + 6


def stratum_gap(k1, k2):
  k1 = require_int("k1", k1, minimum=0)
  k2 = require_int("k2", k2, minimum=0)
  glued = k1 + k2 + 1
  top = k1 + k2 + 3
  return StratumGap(glued, top, top - glued)


def cable_descriptor(k):
  k = require_int("k", k, minimum=1)
  return CableLink(f"({2 * k},0)-cable of K", 2 * k)
