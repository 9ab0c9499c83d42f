from .report import *
from .suites import *
from .tool import *

from . import report
from . import suites
from . import tool

__all__ = list(report.__all__)
__all__ += suites.__all__
__all__ += tool.__all__
