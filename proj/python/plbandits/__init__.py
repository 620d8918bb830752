try:
    from ._plbandits import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _plbandits import *  # noqa: F401,F403  (in-tree build layout)
