"""Symmetry-preserving finite-difference schemes on evolving lattices."""

import os
import sys

# In-tree test runs point SYMM_CORE_DIR at the build directory holding the
# extension; installed wheels find _core next to this file.
_core_dir = os.environ.get("SYMM_CORE_DIR")
if _core_dir and _core_dir not in sys.path:
    sys.path.insert(0, _core_dir)

try:
    from _core import *  # noqa: F401,F403
    from _core import __doc__  # noqa: F401
except ImportError:
    from symmschemes._core import *  # noqa: F401,F403

del os, sys
