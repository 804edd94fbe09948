"""Seifert-fibered 3-manifolds and existence criteria for Z2-harmonic spinors and 1-forms.

A Seifert manifold is given by (genus, b, ((a_1, b_1), ..., (a_n, b_n))). Its
defining orbifold line bundle L lives over the base orbifold (genus; a_1..a_n).
Two orientation conventions for L are supported:

  plus:  L = (b; beta_1..beta_n),        deg L = b + sum beta_i/a_i
  minus: L = normalize(-b; -beta_1..),   deg L = -(b + sum beta_i/a_i)
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import orbifold
from .commons import InvalidInputError, require_int

logger = logging.getLogger(__name__)

CONVENTIONS = ("plus", "minus")
DEFAULT_CONVENTION = "plus"


@dataclass(frozen=True)
class SeifertManifold:
  genus: int
  b: int
  pairs: tuple = ()

  @property
  def cone_orders(self):
    return tuple(a for a, _ in self.pairs)

  def __str__(self):
    pairs = ",".join(f"{a}:{beta}" for a, beta in self.pairs)
    return f"{self.genus},{self.b}" + (f",{pairs}" if pairs else "")


@dataclass(frozen=True)
class SingularSetDescription:
  fiber_count: int
  descriptor: str


@dataclass(frozen=True)
class MetricParams:
  """Volume V = volume * pi, fiber scale s and perturbation xi = b*pi/V."""
  volume: object
  fiber_scale: Fraction = Fraction(1)
  xi: object = None
  valid: bool = True


@dataclass(frozen=True)
class ExistenceReport:
  kind: str
  exists: bool
  N: int
  dim_sections: object
  twist_k: int
  aux_degree: int
  singular_set: object = None
  metric: object = None
  convention: str = DEFAULT_CONVENTION
  advisories: tuple = field(default_factory=tuple)


def validate_seifert(genus, b, pairs):
  genus = require_int("genus", genus, minimum=0)
  b = require_int("b", b)
  normalized = []
  for pair in pairs:
    try:
      a, beta = pair
    except (TypeError, ValueError):
      raise InvalidInputError(f"expected an (alpha, beta) pair, got {pair!r}")
    a = require_int("alpha", a, minimum=1)
    beta = require_int("beta", beta)
    carry, beta = divmod(beta, a)
    b += carry
    if a == 1:
      # an order-1 fiber is regular, its beta is already in b
      continue
    if math.gcd(a, beta) != 1:
      raise InvalidInputError(
        f"non-smooth total space: gcd({a}, {beta}) != 1")
    normalized.append((a, beta))
  return SeifertManifold(genus, b, tuple(normalized))


def parse_seifert(text):
  """Parse the "genus,b,a1:b1,a2:b2,..." syntax."""
  parts = [p.strip() for p in str(text).split(",") if p.strip()]
  if len(parts) < 2:
    raise InvalidInputError(f"Seifert data needs at least genus and b: {text!r}")
  try:
    genus, b = int(parts[0]), int(parts[1])
    pairs = []
    for item in parts[2:]:
      a, beta = item.split(":")
      pairs.append((int(a), int(beta)))
  except ValueError:
    raise InvalidInputError(f"malformed Seifert data: {text!r}")
  return validate_seifert(genus, b, pairs)


def euler_number(Y):
  e = Fraction(Y.b)
  for a, beta in Y.pairs:
    e += Fraction(beta, a)
  return -e


def is_homology_sphere(Y):
  if Y.genus != 0:
    return False
  order = 1
  for a in Y.cone_orders:
    order *= a
  return abs(euler_number(Y)) * order == 1


def base_orbifold(Y):
  return orbifold.OrbifoldSurface(Y.genus, Y.cone_orders)


def euler_bundle(Y, convention=DEFAULT_CONVENTION):
  if convention not in CONVENTIONS:
    raise InvalidInputError(f"unknown sign convention {convention!r}")
  base = base_orbifold(Y)
  betas = tuple(beta for _, beta in Y.pairs)
  if convention == "plus":
    return orbifold.OrbifoldLineBundle(base, Y.b, betas)
  return orbifold.OrbifoldLineBundle(base, -Y.b, tuple(-beta for beta in betas))


def is_spin_base(surface):
  return all(a % 2 == 1 for a in surface.cone_orders)


def _twist_bundle(Y, k, convention):
  """The bundle L entering the twist, and whether the c1(L) = 0 branch was taken."""
  L = euler_bundle(Y, convention)
  if orbifold.is_trivial(L):
    return orbifold.smooth_bundle(L.surface, 1), True
  if k == 0:
    raise InvalidInputError("degenerate twist: k = 0 needs a trivial defining bundle")
  return L, False


def spinor_degree(L, k, aux_degree):
  """deg|K (x) aux^2 (x) L^{2k}| by the floor formula."""
  surface = L.surface
  N = 2 * k * L.b + 2 * surface.genus - 2 + 2 * aux_degree
  for beta, a in zip(L.betas, surface.cone_orders):
    N += (2 * k * beta + a - 1) // a
  return N


def spinor_bundle_chain(L, k, aux_degree):
  """K (x) aux^2 (x) L^{2k} assembled through the orbifold tensor product."""
  surface = L.surface
  aux_sq = orbifold.smooth_bundle(surface, 2 * aux_degree)
  return orbifold.tensor(orbifold.canonical_bundle(surface),
                         orbifold.tensor(aux_sq, orbifold.power(L, 2 * k)))


def _gate(L, k, aux_degree):
  twist = 2 * aux_degree + 2 * k * L.b
  if twist > 0:
    return True
  if twist == 0:
    aux_sq = orbifold.smooth_bundle(L.surface, 2 * aux_degree)
    return not orbifold.is_trivial(orbifold.tensor(aux_sq, orbifold.power(L, 2 * k)))
  return False


def describe_singular_set(Y, N, trivial_branch):
  if N == 1:
    return SingularSetDescription(1, "single fiber")
  if trivial_branch:
    return SingularSetDescription(N, f"S¹ × {{{N} points}}")
  if Y.genus == 0 and not Y.pairs and abs(Y.b) == 1:
    return SingularSetDescription(N, f"{N}-component Hopf link")
  return SingularSetDescription(N, f"union of {N} fibers")


def metric_params(Y, L, k):
  if k == 0:
    return MetricParams(volume=None, xi=None, valid=True)
  volume = orbifold.degree(L) / k
  if volume <= 0:
    return MetricParams(volume=volume, xi=None, valid=False)
  return MetricParams(volume=volume, xi=Fraction(Y.b) / volume, valid=True)


def _advisories(Y, L, k, metric):
  notes = []
  if not is_spin_base(L.surface):
    notes.append("base orbifold has even cone orders; spin structure compatibility is not checked")
  if metric is not None and not metric.valid:
    notes.append(f"volume coefficient deg(L)/k = {metric.volume} is not positive")
  for note in notes:
    logger.warning("%s (Y = %s, k = %d)", note, Y, k)
  return tuple(notes)


def spinor_existence(Y, k, aux_degree=0, convention=DEFAULT_CONVENTION, strict=False):
  k = require_int("k", k)
  aux_degree = require_int("aux_degree", aux_degree)
  L, trivial_branch = _twist_bundle(Y, k, convention)
  N = spinor_degree(L, k, aux_degree)
  chained = orbifold.desingularized_degree(spinor_bundle_chain(L, k, aux_degree))
  if chained != N:
    # the floor formula and the tensor chain are the same number
    raise AssertionError(f"floor formula {N} disagrees with tensor chain {chained}")

  genus = Y.genus
  rr = N + 1 - genus
  exists = _gate(L, k, aux_degree) and rr >= (1 if strict else 0) and N >= 2 * genus
  metric = metric_params(Y, L, k)
  advisories = _advisories(Y, L, k, metric)
  if not exists:
    logger.info("no spinor for Y = %s at k = %d (N = %d)", Y, k, N)
    return ExistenceReport("spinor", False, N, None, k, aux_degree,
                           metric=metric, convention=convention, advisories=advisories)
  return ExistenceReport("spinor", True, N, orbifold.SectionCount.exact(rr), k, aux_degree,
                         singular_set=describe_singular_set(Y, N, trivial_branch),
                         metric=metric, convention=convention, advisories=advisories)


def spinc_existence(Y, k, aux_degree=0, convention=DEFAULT_CONVENTION, strict=False):
  """Same pipeline with section bundle aux^2 (x) L^{2k}; no spin condition on the base."""
  k = require_int("k", k)
  aux_degree = require_int("aux_degree", aux_degree)
  L, trivial_branch = _twist_bundle(Y, k, convention)
  section_bundle = orbifold.tensor(orbifold.smooth_bundle(L.surface, 2 * aux_degree),
                                   orbifold.power(L, 2 * k))
  N = orbifold.desingularized_degree(section_bundle)
  count = orbifold.h0_dim(section_bundle)
  genus = Y.genus
  exists = (_gate(L, k, aux_degree) and N + 1 - genus >= (1 if strict else 0)
            and N >= 2 * genus and count.is_exact and count.value >= 1)
  metric = metric_params(Y, L, k)
  advisories = ()
  if metric is not None and not metric.valid:
    advisories = (f"volume coefficient deg(L)/k = {metric.volume} is not positive",)
    logger.warning("%s (Y = %s, k = %d)", advisories[0], Y, k)
  if not exists:
    return ExistenceReport("spinc", False, N, count, k, aux_degree,
                           metric=metric, convention=convention, advisories=advisories)
  return ExistenceReport("spinc", True, N, count, k, aux_degree,
                         singular_set=describe_singular_set(Y, N, trivial_branch),
                         metric=metric, convention=convention, advisories=advisories)


def oneform_existence(Y):
  genus, n = Y.genus, len(Y.pairs)
  dim = 3 * genus - 3 + n
  zeros = 4 * genus - 4 + n
  exists = dim > 0 and 2 * genus - 4 + n >= 0
  if not exists:
    return ExistenceReport("oneform", False, zeros, None, 0, 0)
  if zeros == 0:
    singular = SingularSetDescription(0, "empty")
  elif zeros == 1:
    singular = SingularSetDescription(1, "single fiber")
  else:
    singular = SingularSetDescription(zeros, f"union of {zeros} fibers")
  return ExistenceReport("oneform", True, zeros, orbifold.SectionCount.exact(dim), 0, 0,
                         singular_set=singular)


def oneform_case_classification(genus, n):
  return (genus == 0 and n >= 4) or (genus == 1 and n >= 2) or genus >= 2


def brieskorn_to_seifert(exponents):
  a = [require_int("exponent", x, minimum=2) for x in exponents]
  if len(a) < 3:
    raise InvalidInputError(f"a Brieskorn sphere needs at least 3 exponents, got {len(a)}")
  for i in range(len(a)):
    for j in range(i + 1, len(a)):
      if math.gcd(a[i], a[j]) != 1:
        raise InvalidInputError(f"exponents not pairwise coprime: {a[i]} and {a[j]}")
  total = math.prod(a)
  betas = [pow(total // ai, -1, ai) for ai in a]
  numerator = 1 - sum(beta * (total // ai) for beta, ai in zip(betas, a))
  b, rem = divmod(numerator, total)
  assert rem == 0
  return validate_seifert(0, b, list(zip(a, betas)))


def sweep_conventions(Y, target_N, k_range, aux_degree=0, strict=False):
  """Every (convention, k) whose spinor degree hits target_N with the positivity gate open."""
  hits = []
  for convention in CONVENTIONS:
    L = euler_bundle(Y, convention)
    trivial = orbifold.is_trivial(L)
    if trivial:
      L = orbifold.smooth_bundle(L.surface, 1)
    for k in k_range:
      if k == 0 and not trivial:
        continue
      N = spinor_degree(L, k, aux_degree)
      if N != target_N or not _gate(L, k, aux_degree):
        continue
      rr = N + 1 - Y.genus
      if rr < (1 if strict else 0) or N < 2 * Y.genus:
        continue
      hits.append({"convention": convention, "k": k, "N": N, "dim": rr})
  return hits
