"""supercong: verification engine for binomial-sum supercongruences mod p^e.

Exact checks of the underlying integer-sequence identities and formal
power-series transformations, plus configurable per-prime sweeps that confirm
the theorems and gather evidence for the conjectures.
"""

__version__ = "0.1.0"

from .kernels import BACKEND

__all__ = ["BACKEND", "__version__"]
