"""Chain complexes, functor matrices, continuant cubes and higher twists."""

from .complexes import *  # noqa: F401,F403
from .functors import *  # noqa: F401,F403
from .cubes import *  # noqa: F401,F403
from .twists import *  # noqa: F401,F403
from .instances import *  # noqa: F401,F403
from .enriques import enriques_check  # noqa: F401
