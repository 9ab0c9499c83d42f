from .fields import *
from .constructors import *
from .loader import *
from .registry import *

from . import fields
from . import constructors
from . import loader
from . import registry

__all__ = list(fields.__all__)
__all__ += constructors.__all__
__all__ += loader.__all__
__all__ += registry.__all__
