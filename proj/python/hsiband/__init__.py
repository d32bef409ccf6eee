from ._hsiband import *  # noqa: F401,F403
