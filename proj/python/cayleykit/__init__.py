from cayleykit._core import *  # noqa: F401,F403
from cayleykit._core import __version__  # noqa: F401
