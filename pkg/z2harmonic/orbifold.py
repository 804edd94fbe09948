"""Orbifold Riemann surfaces and orbifold line bundles.

A line bundle over an orbifold surface with cone points of orders a_1..a_n is
recorded by its Seifert invariant (b; beta_1..beta_n) with 0 <= beta_i < a_i.
All arithmetic is exact; degrees are `fractions.Fraction` values.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from .commons import InvalidInputError, require_int

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbifoldSurface:
  genus: int = 0
  cone_orders: tuple = ()

  def __post_init__(self):
    genus = require_int("genus", self.genus, minimum=0)
    orders = []
    for a in self.cone_orders:
      a = require_int("cone order", a, minimum=1)
      # order 1 points are smooth
      if a > 1:
        orders.append(a)
    object.__setattr__(self, "genus", genus)
    object.__setattr__(self, "cone_orders", tuple(orders))

  @property
  def n(self):
    return len(self.cone_orders)

  def __str__(self):
    orders = ",".join(str(a) for a in self.cone_orders)
    return f"({self.genus}; {orders})"


@dataclass(frozen=True)
class OrbifoldLineBundle:
  """Seifert invariant (b; betas) over `surface`, normalized on construction."""
  surface: OrbifoldSurface
  b: int = 0
  betas: tuple = ()

  def __post_init__(self):
    betas = tuple(require_int("beta", x) for x in self.betas)
    if not betas and self.surface.n:
      betas = (0,) * self.surface.n
    if len(betas) != self.surface.n:
      raise InvalidInputError(
        f"expected {self.surface.n} local invariants, got {len(betas)}")
    b = require_int("b", self.b)
    normalized = []
    for beta, a in zip(betas, self.surface.cone_orders):
      b += beta // a
      normalized.append(beta % a)
    object.__setattr__(self, "b", b)
    object.__setattr__(self, "betas", tuple(normalized))

  def __str__(self):
    return f"({self.b}; {','.join(str(x) for x in self.betas)})"


@dataclass(frozen=True)
class SectionCount:
  """dim H^0 as either an exact value or an undetermined count with a lower bound."""
  kind: str
  value: int

  @classmethod
  def exact(cls, d):
    return cls("exact", int(d))

  @classmethod
  def indeterminate(cls, lower_bound):
    return cls("indeterminate", int(lower_bound))

  @property
  def is_exact(self):
    return self.kind == "exact"

  def __str__(self):
    if self.is_exact:
      return str(self.value)
    return f">={self.value} (indeterminate)"


def orb_euler_characteristic(surface):
  chi = Fraction(2 - 2 * surface.genus)
  for a in surface.cone_orders:
    chi += Fraction(1, a) - 1
  return chi


def trivial_bundle(surface):
  return OrbifoldLineBundle(surface, 0, (0,) * surface.n)


def smooth_bundle(surface, degree):
  """Bundle pulled back from the underlying surface, invariant (degree; 0,...,0)."""
  return OrbifoldLineBundle(surface, degree, (0,) * surface.n)


def canonical_bundle(surface):
  return OrbifoldLineBundle(
    surface, 2 * surface.genus - 2, tuple(a - 1 for a in surface.cone_orders))


def degree(L):
  deg = Fraction(L.b)
  for beta, a in zip(L.betas, L.surface.cone_orders):
    deg += Fraction(beta, a)
  return deg


def desingularized_degree(L):
  return L.b


def is_trivial(L):
  return L.b == 0 and all(beta == 0 for beta in L.betas)


def _check_same_surface(L, L2):
  if L.surface != L2.surface:
    raise InvalidInputError(
      f"bundles live over different surfaces: {L.surface} and {L2.surface}")


def tensor(L, L2):
  _check_same_surface(L, L2)
  b = L.b + L2.b
  deltas = []
  for beta, beta2, a in zip(L.betas, L2.betas, L.surface.cone_orders):
    carry, delta = divmod(beta + beta2, a)
    b += carry
    deltas.append(delta)
  return OrbifoldLineBundle(L.surface, b, tuple(deltas))


def power(L, m):
  m = require_int("exponent", m)
  deltas = tuple((m * beta) % a for beta, a in zip(L.betas, L.surface.cone_orders))
  target = m * degree(L)
  b = target - sum((Fraction(d, a) for d, a in zip(deltas, L.surface.cone_orders)), Fraction(0))
  assert b.denominator == 1, "power produced a non-integral b"
  return OrbifoldLineBundle(L.surface, int(b), deltas)


def inverse(L):
  return power(L, -1)


def dual_bundle(L):
  """Serre dual L^{-1} (x) K."""
  return tensor(inverse(L), canonical_bundle(L.surface))


def riemann_roch_rhs(L):
  return 1 - L.surface.genus + desingularized_degree(L)


def h0_dim(L):
  """dim H^0(L) where the vanishing and Riemann-Roch criteria determine it."""
  if is_trivial(L):
    return SectionCount.exact(1)
  if degree(L) <= 0:
    return SectionCount.exact(0)
  rr = riemann_roch_rhs(L)
  dual = dual_bundle(L)
  if is_trivial(dual):
    return SectionCount.exact(rr + 1)
  if degree(dual) <= 0:
    return SectionCount.exact(rr)
  logger.debug("h0 of %s over %s left indeterminate (rr=%d)", L, L.surface, rr)
  return SectionCount.indeterminate(max(0, rr))
