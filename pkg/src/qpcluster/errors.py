"""Exception hierarchy.

Every error raised by the library derives from :class:`QPClusterError`, and
carries a short machine-readable ``code`` used by the CLI's JSON error output.
"""

from __future__ import annotations


class QPClusterError(Exception):
    code = "Error"


# lattice core
class NotSkewSymmetric(QPClusterError):
    code = "NotSkewSymmetric"


class NonIntegralExchange(QPClusterError):
    code = "NonIntegralExchange"


class BadSublattice(QPClusterError):
    code = "BadSublattice"


class FormNotRespected(QPClusterError):
    code = "FormNotRespected"


class LatticeNotPreserved(QPClusterError):
    code = "LatticeNotPreserved"


class NotBijective(QPClusterError):
    code = "NotBijective"


class NotComposable(QPClusterError):
    code = "NotComposable"


class UnknownIndex(QPClusterError):
    code = "UnknownIndex"


# symbolic
class NonIntegralExponent(QPClusterError):
    code = "NonIntegralExponent"


class PoleAtPoint(QPClusterError):
    code = "PoleAtPoint"


# toric / fano
class NotPrimitive(QPClusterError):
    code = "NotPrimitive"


class RankDeficient(QPClusterError):
    code = "RankDeficient"


class NotPositivelySpanning(QPClusterError):
    code = "NotPositivelySpanning"


class InconsistentFan(QPClusterError):
    code = "InconsistentFan"


class NotQPainleveType(QPClusterError):
    code = "NotQPainleveType"


class NoPositiveKernelVector(QPClusterError):
    code = "NoPositiveKernelVector"


class SingularSystem(QPClusterError):
    code = "SingularSystem"


class UnrecognizedInvariants(QPClusterError):
    code = "UnrecognizedInvariants"


class Unbounded(QPClusterError):
    code = "Unbounded"


class NotLattice(QPClusterError):
    code = "NotLattice"


class NotPrimitiveVertex(QPClusterError):
    code = "NotPrimitiveVertex"


class HasRemainders(QPClusterError):
    code = "HasRemainders"


# catalog / qp6
class UnknownLabel(QPClusterError):
    code = "UnknownLabel"


class InvalidWord(QPClusterError):
    code = "InvalidWord"


class NotMonomial(QPClusterError):
    code = "NotMonomial"


class NotAutomorphism(QPClusterError):
    code = "NotAutomorphism"


class LatticeValidationFailed(QPClusterError):
    code = "LatticeValidationFailed"


class NonGenericParameters(QPClusterError):
    code = "NonGenericParameters"
