"""Kernel backend selection.

The four hot kernels (apply_map, apply_map_add, min_apply_maps, ess_mask)
exist twice: a compiled Cython extension and a pure-Python fallback with
identical behaviour.  The compiled one is used when importable; set the
environment variable MINORLOGIC_BACKEND to "pure" or "c" to force a
choice, or call set_backend() at runtime (callers go through module
attributes, so rebinding takes effect immediately).
"""

import os

from . import _pykernels

_BACKENDS = {"pure": _pykernels}

try:
    from . import _ckernels

    _BACKENDS["c"] = _ckernels
except ImportError:
    pass

_active = ""


def set_backend(name: str) -> None:
    global apply_map, apply_map_add, min_apply_maps, ess_mask, _active
    if name not in _BACKENDS:
        raise ValueError(
            f"unknown kernel backend {name!r}; available: {sorted(_BACKENDS)}"
        )
    mod = _BACKENDS[name]
    apply_map = mod.apply_map
    apply_map_add = mod.apply_map_add
    min_apply_maps = mod.min_apply_maps
    ess_mask = mod.ess_mask
    _active = name


def backend_name() -> str:
    return _active


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


set_backend(os.environ.get("MINORLOGIC_BACKEND") or ("c" if "c" in _BACKENDS else "pure"))
