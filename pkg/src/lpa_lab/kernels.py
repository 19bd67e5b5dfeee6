"""Backend selection for the hot kernels.

The compiled extension (checked 64-bit arithmetic) is used when it imported
successfully; the pure-Python big-integer kernels are the fallback.  Setting
``LPA_LAB_BIGINT=1`` forces the pure-Python path.

``precision`` arguments accept ``"auto"`` (compiled first, big integers on
overflow), ``"fixed"`` (compiled only; overflow propagates) and ``"big"``.
"""

from __future__ import annotations

import os

from . import _pykernels
from .errors import InputError, Overflow

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

COMPILED_AVAILABLE = _compiled is not None


def bigint_forced() -> bool:
    return os.environ.get("LPA_LAB_BIGINT", "") not in ("", "0")


def backend_name() -> str:
    return "compiled" if COMPILED_AVAILABLE and not bigint_forced() else "python"


PRECISIONS = ("auto", "fixed", "big")


def _impl(precision: str):
    if precision not in PRECISIONS:
        raise InputError(f"precision must be one of {PRECISIONS}, got {precision!r}")
    if precision == "big" or bigint_forced():
        return None
    if _compiled is None:
        if precision == "fixed":
            raise Overflow("fixed precision requested but the compiled kernels are not built")
        return None
    return _compiled


def _call(name: str, precision: str, *args):
    fast = _impl(precision)
    if fast is not None:
        try:
            return getattr(fast, name)(*args)
        except OverflowError as exc:
            if precision == "fixed":
                raise Overflow(str(exc)) from exc
    return getattr(_pykernels, name)(*args)


def snf(rows, precision: str = "auto"):
    return _call("snf", precision, rows)


def det(rows, precision: str = "auto"):
    return _call("det", precision, rows)


def hs_scan(n, reach, out_masks, nonsink):
    return _call("hs_scan", "auto", n, reach, out_masks, nonsink)
