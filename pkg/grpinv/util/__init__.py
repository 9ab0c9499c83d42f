from .util import *

from . import util

__all__ = util.__all__
