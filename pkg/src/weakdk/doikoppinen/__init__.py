"""Doi-Koppinen structures over weak Hopf algebras and bialgebroids."""

from .structures import *  # noqa: F401,F403
from .structures import __all__ as _structures
from .translate import *  # noqa: F401,F403
from .translate import __all__ as _translate
from .coring import *  # noqa: F401,F403
from .coring import __all__ as _coring
from .separability import *  # noqa: F401,F403
from .separability import __all__ as _separability
from .identities import *  # noqa: F401,F403
from .identities import __all__ as _identities
from .morphisms import *  # noqa: F401,F403
from .morphisms import __all__ as _morphisms

__all__ = (_structures + _translate + _coring + _separability + _identities
           + _morphisms)
