from .permutation import *
from .group import *
from .quotient import *
from .subgroups import *

from . import permutation
from . import group
from . import quotient
from . import subgroups

__all__ = list(permutation.__all__)
__all__ += group.__all__
__all__ += quotient.__all__
__all__ += subgroups.__all__
