# 路径配置
import os

from z2harmonic import utils

BASE_DIR = os.path.dirname(os.path.abspath(__file__))
DEFAULT_CONFIG_PATH = utils.DEFAULT_CONFIG_PATH
CATALOG_PATH = utils.CATALOG_PATH
GOLDEN_DIR = os.path.join(BASE_DIR, "golden")
