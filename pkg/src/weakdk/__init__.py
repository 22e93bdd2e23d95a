"""Exact verification of weak Hopf algebras, bialgebroids and Doi-Koppinen structures."""

from .exactlin import GF, QQ, Field, Fp, Matrix, QuotientSpace, Subspace
from .report import Report, VerificationError

__all__ = ["Field", "Fp", "GF", "QQ", "Matrix", "QuotientSpace", "Subspace",
           "Report", "VerificationError"]
__version__ = "0.1.0"
