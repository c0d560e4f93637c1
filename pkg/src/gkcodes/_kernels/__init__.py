"""Hot numeric kernels with a compiled core and a pure numpy fallback.

Three operations dominate runtime: Gaussian elimination over a small
finite field, exhaustive minimum-weight search over a span, and the
triangular nu-count grid behind the order-bound table.  Both backends
implement the same duck-typed API against FieldTables; the Cython
extension is preferred when present, and GKCODES_BACKEND=pure or
GKCODES_BACKEND=compiled forces the choice.
"""

from __future__ import annotations

import os
from typing import NamedTuple

import numpy as np


class FieldTables(NamedTuple):
    """Flat lookup tables describing GF(p^deg) for the kernels.

    exp has length 2*(order-1) (doubled so two log values can be added
    without reducing); log[0] is a meaningless filler, zero operands are
    always branched on before indexing.  digits/pows support vectorized
    addition in odd characteristic.
    """

    p: int
    deg: int
    order: int
    exp: np.ndarray
    log: np.ndarray
    digits: np.ndarray
    pows: np.ndarray


def _load_backend():
    forced = os.environ.get("GKCODES_BACKEND", "").strip().lower()
    if forced == "pure":
        from . import _pure

        return _pure, "pure"
    if forced in ("compiled", "core"):
        from . import _core

        return _core, "compiled"
    try:
        from . import _core

        return _core, "compiled"
    except ImportError:
        from . import _pure

        return _pure, "pure"


_impl, BACKEND = _load_backend()

row_reduce = _impl.row_reduce
min_nonzero_weight = _impl.min_nonzero_weight
nu_grid = _impl.nu_grid

# Elementwise field multiply is cheap enough that the numpy version is
# always used; exported here so callers need not reach into _pure.
from ._pure import elementwise_mul  # noqa: E402


def backend_name() -> str:
    return BACKEND
