"""Kernel lane selection.

Imports the compiled extension when it is available, otherwise the
pure-Python reference lane. SUPERCONG_PURE_PYTHON=1 forces the fallback
(useful for debugging and for the lane-comparison benchmark).
"""

import os

from . import pyref

if os.environ.get("SUPERCONG_PURE_PYTHON"):
    impl = pyref
else:
    try:
        from supercong import _ckernels as impl  # type: ignore[no-redef]
    except ImportError:
        impl = pyref

BACKEND = impl.BACKEND

KIND_C3 = pyref.KIND_C3
KIND_C236 = pyref.KIND_C236
KIND_C223 = pyref.KIND_C223
KIND_C224 = pyref.KIND_C224
KIND_C2 = pyref.KIND_C2
SEQ_A = pyref.SEQ_A
SEQ_LITTLE_A = pyref.SEQ_LITTLE_A
SEQ_B = pyref.SEQ_B

fact_vu = impl.fact_vu
coeff_resid = impl.coeff_resid
seq_rec_mod = impl.seq_rec_mod
dsum_mod = impl.dsum_mod
powersum = impl.powersum
mul_arrays = impl.mul_arrays
chi_table = impl.chi_table
char_sum = impl.char_sum
inv_mod = impl.inv_mod
