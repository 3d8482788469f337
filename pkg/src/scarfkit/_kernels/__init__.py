"""Hot inner loops, compiled when available.

The compiled module ``_ckernels`` is preferred; set ``SCARFKIT_PURE_PYTHON=1``
to force the pure-Python twin.  ``BACKEND`` names the active one.
"""

import os

from . import _pykernels

_FORCE_PY = os.environ.get("SCARFKIT_PURE_PYTHON", "").strip().lower() in {"1", "true", "yes"}

_impl = _pykernels
BACKEND = "python"
if not _FORCE_PY:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

lcm_closure = _impl.lcm_closure
divisor_masks = _impl.divisor_masks
scarf_faces = _impl.scarf_faces
canonical_permutation = _impl.canonical_permutation


def rank_mod_p(rows, ncols, p):
    try:
        return _impl.rank_mod_p(rows, ncols, p)
    except OverflowError:
        # compiled elimination needs p < 2^31 so products fit in 64 bits
        return _pykernels.rank_mod_p(rows, ncols, p)


def rank_fraction_free(rows, ncols):
    try:
        return _impl.rank_fraction_free(rows, ncols)
    except OverflowError:
        # the compiled Bareiss works in 64-bit words
        return _pykernels.rank_fraction_free(rows, ncols)


def available_backends():
    """Modules implementing the kernel API, keyed by name."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out


__all__ = [
    "BACKEND",
    "available_backends",
    "canonical_permutation",
    "divisor_masks",
    "lcm_closure",
    "rank_fraction_free",
    "rank_mod_p",
    "scarf_faces",
]
