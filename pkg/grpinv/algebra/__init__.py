from .linalg import *
from .classfunc import *
from .chartab import *
from .invariants import *
from .pairs import *
from .repmod import *
from .predicates import *
from .classification import *
from .matmod import *
from .properties import *

from . import linalg
from . import classfunc
from . import chartab
from . import invariants
from . import pairs
from . import repmod
from . import predicates
from . import classification
from . import matmod
from . import properties

__all__ = list(linalg.__all__)
__all__ += classfunc.__all__
__all__ += chartab.__all__
__all__ += invariants.__all__
__all__ += pairs.__all__
__all__ += repmod.__all__
__all__ += predicates.__all__
__all__ += classification.__all__
__all__ += matmod.__all__
__all__ += properties.__all__
