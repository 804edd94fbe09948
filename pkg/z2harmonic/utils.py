import os
import sys
import json
import logging

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "configs", "base.json")
CATALOG_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "configs", "catalog.json")

# stdout carries the reports
logging.basicConfig(stream=sys.stderr, level=logging.INFO)
logger = logging.getLogger("z2harmonic")


def get_logger(log_dir, filename="z2harmonic.log"):
  global logger
  logger = logging.getLogger("z2harmonic")
  logger.setLevel(logging.DEBUG)

  formatter = logging.Formatter("%(asctime)s\t%(name)s\t%(levelname)s\t%(message)s")
  if not os.path.exists(log_dir):
    os.makedirs(log_dir)
  path = os.path.join(log_dir, filename)
  for h in logger.handlers:
    if isinstance(h, logging.FileHandler) and h.baseFilename == os.path.abspath(path):
      return logger
  h = logging.FileHandler(path)
  h.setLevel(logging.DEBUG)
  h.setFormatter(formatter)
  logger.addHandler(h)
  return logger


def get_hparams_from_file(config_path=None):
  if config_path is None:
    config_path = DEFAULT_CONFIG_PATH
  with open(config_path, "r") as f:
    data = f.read()
  config = json.loads(data)

  hparams = HParams(**config)
  return hparams


def section(hparams, name):
  """Sub-section of a config as a plain dict, empty when absent."""
  if hparams is None or name not in hparams:
    return {}
  return dict(hparams[name].items())


class HParams():
  def __init__(self, **kwargs):
    for k, v in kwargs.items():
      if type(v) == dict:
        v = HParams(**v)
      self[k] = v

  def items(self):
    return self.__dict__.items()

  def __getitem__(self, key):
    return getattr(self, key)

  def __setitem__(self, key, value):
    return setattr(self, key, value)

  def __contains__(self, key):
    return key in self.__dict__

  def __repr__(self):
    return self.__dict__.__repr__()
