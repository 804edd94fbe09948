"""Named Seifert examples and their recorded expectations.

Each record in `configs/catalog.json` has the keys

  name        unique identifier
  kind        "spinor", "spinc" or "oneform"
  seifert     "genus,b,a1:b1,..." data, or
  brieskorn   list of pairwise coprime exponents
  k           twist (spinor/spinc)
  aux_degree  degree of the auxiliary bundle (spinor/spinc)
  convention  optional sign convention override
  expected    subset of {exists, N, dim, descriptor}
  citation    free text describing where the expectation comes from
"""
import json
import logging
from dataclasses import dataclass, field

from . import orbifold, seifert
from .commons import InvalidInputError
from .utils import CATALOG_PATH

logger = logging.getLogger(__name__)

STATUS_OK = "ok"
STATUS_DISCREPANCY = "discrepancy"


@dataclass(frozen=True)
class CatalogEntry:
  name: str
  kind: str
  manifold: seifert.SeifertManifold
  k: int = 0
  aux_degree: int = 0
  convention: object = None
  expected: dict = field(default_factory=dict)
  citation: str = ""


@dataclass
class CatalogCheck:
  name: str
  status: str
  expected: dict
  computed: dict
  citation: str
  sweep: list = field(default_factory=list)


def _entry_from_record(record):
  try:
    name, kind = record["name"], record["kind"]
  except KeyError as e:
    raise InvalidInputError(f"catalog record without {e}")
  if kind not in ("spinor", "spinc", "oneform"):
    raise InvalidInputError(f"catalog record {name}: unknown kind {kind!r}")
  if "brieskorn" in record:
    manifold = seifert.brieskorn_to_seifert(record["brieskorn"])
  elif "seifert" in record:
    manifold = seifert.parse_seifert(record["seifert"])
  else:
    raise InvalidInputError(f"catalog record {name}: no manifold data")
  return CatalogEntry(name, kind, manifold,
                      k=int(record.get("k", 0)),
                      aux_degree=int(record.get("aux_degree", 0)),
                      convention=record.get("convention"),
                      expected=dict(record.get("expected", {})),
                      citation=record.get("citation", ""))


def load_catalog(path=None):
  if path is None:
    path = CATALOG_PATH
  with open(path, "r", encoding="utf-8") as f:
    records = json.load(f)
  entries = [_entry_from_record(r) for r in records]
  names = [e.name for e in entries]
  if len(set(names)) != len(names):
    raise InvalidInputError("catalog names are not unique")
  return entries


def expected_report(entry):
  """The recorded expectation as an ExistenceReport; fields the record leaves out stay None."""
  expected = entry.expected
  N = expected.get("N")
  dim = expected.get("dim")
  singular_set = None
  if "descriptor" in expected:
    singular_set = seifert.SingularSetDescription(N, expected["descriptor"])
  return seifert.ExistenceReport(
    entry.kind, expected.get("exists"), N,
    None if dim is None else orbifold.SectionCount.exact(dim),
    entry.k, entry.aux_degree, singular_set=singular_set,
    convention=entry.convention or seifert.DEFAULT_CONVENTION)


def catalog(path=None):
  return [(e.name, e.manifold, expected_report(e)) for e in load_catalog(path)]


def evaluate(entry, convention=seifert.DEFAULT_CONVENTION, strict=False):
  convention = entry.convention or convention
  if entry.kind == "oneform":
    report = seifert.oneform_existence(entry.manifold)
  elif entry.kind == "spinor":
    report = seifert.spinor_existence(entry.manifold, entry.k, entry.aux_degree,
                                      convention=convention, strict=strict)
  else:
    report = seifert.spinc_existence(entry.manifold, entry.k, entry.aux_degree,
                                     convention=convention, strict=strict)
  return report


def summarize(report):
  out = {"exists": report.exists, "N": report.N}
  if report.dim_sections is not None and report.dim_sections.is_exact:
    out["dim"] = report.dim_sections.value
  if report.singular_set is not None:
    out["descriptor"] = report.singular_set.descriptor
  if report.kind != "oneform":
    out["convention"] = report.convention
  return out


def _matches(expected, computed):
  return all(computed.get(key) == value for key, value in expected.items())


def verify_entry(entry, convention=seifert.DEFAULT_CONVENTION, strict=False, sweep_k_max=60):
  computed = summarize(evaluate(entry, convention, strict))
  if _matches(entry.expected, computed):
    return CatalogCheck(entry.name, STATUS_OK, entry.expected, computed, entry.citation)

  sweep = []
  if entry.kind != "oneform" and not entry.convention:
    # an entry may only hold under the other orientation convention
    for other in seifert.CONVENTIONS:
      if other == convention:
        continue
      alternative = summarize(evaluate(entry, other, strict))
      if _matches(entry.expected, alternative):
        logger.info("%s reproduced under the %s convention", entry.name, other)
        return CatalogCheck(entry.name, STATUS_OK, entry.expected, alternative, entry.citation)
    if "N" in entry.expected:
      sweep = seifert.sweep_conventions(entry.manifold, entry.expected["N"],
                                        range(-sweep_k_max, sweep_k_max + 1),
                                        aux_degree=entry.aux_degree, strict=strict)
  logger.warning("catalog discrepancy for %s: expected %s, computed %s",
                 entry.name, entry.expected, computed)
  return CatalogCheck(entry.name, STATUS_DISCREPANCY, entry.expected, computed,
                      entry.citation, sweep)


def verify_catalog(entries=None, convention=seifert.DEFAULT_CONVENTION, strict=False, sweep_k_max=60):
  if entries is None:
    entries = load_catalog()
  return [verify_entry(e, convention, strict, sweep_k_max) for e in entries]
