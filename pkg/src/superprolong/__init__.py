"""Exact computations with divided-power contact Lie superalgebras over GF(p)."""

from .dpsuper import DPElement, Signature, contact_signature
from .gfp import Fp, binom_mod
from .linalg import BACKEND

__all__ = ["BACKEND", "DPElement", "Fp", "Signature", "binom_mod", "contact_signature"]
