"""Kernel selection: the compiled extension when available, else pure Python.

Set ``QROOTS_PURE=1`` to force the pure-Python kernels (used by the parity
tests and the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("QROOTS_PURE"):
    from qroots import _kernel_py as _impl
else:
    try:
        from qroots import _kernel as _impl  # type: ignore[no-redef]
    except ImportError:
        from qroots import _kernel_py as _impl  # type: ignore[no-redef]

IMPLEMENTATION: str = _impl.IMPLEMENTATION

reduce_word = _impl.reduce_word
word_key = _impl.word_key
act_on_root = _impl.act_on_root
act_on_coroot = _impl.act_on_coroot
act_on_coweight = _impl.act_on_coweight
inversion_pairs = _impl.inversion_pairs
descend_to_simple = _impl.descend_to_simple
real_roots_upto = _impl.real_roots_upto
quantum_closure = _impl.quantum_closure
box_closure = _impl.box_closure
certify_pairings = _impl.certify_pairings

__all__ = [
    "IMPLEMENTATION",
    "reduce_word",
    "word_key",
    "act_on_root",
    "act_on_coroot",
    "act_on_coweight",
    "inversion_pairs",
    "descend_to_simple",
    "real_roots_upto",
    "quantum_closure",
    "box_closure",
    "certify_pairings",
]
