"""Pick the kernel implementation at import time.

The compiled ``_kernels`` extension is used when it was built and the graph
fits in a machine word; otherwise calls go to ``_kernels_py``.  Setting
``SATGRAPH_PURE_PYTHON=1`` forces the fallback everywhere.
"""

from __future__ import annotations

import os

from . import _kernels_py as pure

try:
    from . import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

if os.environ.get("SATGRAPH_PURE_PYTHON"):
    compiled = None

BACKEND = "compiled" if compiled is not None else "python"

WORD_LIMIT = 64  # vertices per bitset word in the compiled kernels
SEARCH_LIMIT = 11  # C(11, 2) = 55 edge slots fit one word


def kernels(n: int):
    if compiled is not None and n <= WORD_LIMIT:
        return compiled
    return pure


def search_kernels(n: int):
    if compiled is not None and n <= SEARCH_LIMIT:
        return compiled
    return pure
