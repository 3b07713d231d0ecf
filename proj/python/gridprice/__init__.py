"""Dynamic-pricing toolkit for threshold-policy smart grid consumers."""

from ._gridprice import *  # noqa: F401,F403
from ._gridprice import __doc__  # noqa: F401
