from .config import *
from .common import *
from .yaml_config import *

from . import config
from . import common
from . import yaml_config

__all__ = config.__all__
__all__ += common.__all__
__all__ += yaml_config.__all__
