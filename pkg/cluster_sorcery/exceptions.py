"""Exceptions.

Every error carries a ``message``, a machine readable ``code`` and a ``params`` payload. Params are
interpolated into the message with ``%`` formatting and double as the
minimal reproduction of whatever went wrong (seed path, subset, indices).

Errors are grouped by the exit status the command line reports for them:

* ``1`` - bad input or usage,
* ``2`` - a theorem violation, i.e. an internal assertion backed by a proven result failed,
* ``3`` - a query needed a complete exchange graph but exploration was truncated.
"""
from .utils import jsonable


class ClusterSorceryError(Exception):
    """Base error for everything raised by cluster sorcery."""

    message = "Cluster sorcery error."
    code = "error"
    exit_status = 1

    def __init__(self, message=None, code=None, params=None):
        self.message = message or self.message
        self.code = code or self.code
        self.params = params or {}
        super().__init__(self.message, self.code, self.params)

    def __str__(self):
        if self.params:
            try:
                return self.message % self.params
            except (KeyError, TypeError, ValueError):
                return self.message
        return self.message

    def __repr__(self):
        return "{}({!r}, code={!r})".format(self.__class__.__name__, str(self), self.code)

    def as_dict(self):
        """Returns a json friendly representation of the error."""
        return {"code": self.code, "message": str(self), "params": jsonable(self.params)}


class ImproperlyConfigured(ClusterSorceryError):
    message = "Improperly configured setting %(name)s: %(value)r"
    code = "improperly_configured"


class InvalidDescriptor(ClusterSorceryError):
    message = "Invalid seed descriptor: %(reason)s"
    code = "invalid_descriptor"


class RankMismatch(ClusterSorceryError):
    message = "Rank mismatch: %(left)s != %(right)s"
    code = "rank_mismatch"


class IndexOutOfRange(ClusterSorceryError):
    message = "Index %(index)s out of range 1..%(rank)s"
    code = "index_out_of_range"


class ZeroPolynomial(ClusterSorceryError):
    message = "Operation is undefined on the zero polynomial"
    code = "zero_polynomial"


class ExponentOverflow(ClusterSorceryError):
    message = "Exponent %(value)s does not fit in %(bits)s bits"
    code = "exponent_overflow"


class NotSkewSymmetrizable(ClusterSorceryError):
    message = "Matrix is not skew-symmetrizable: %(reason)s"
    code = "not_skew_symmetrizable"


class PreconditionError(ClusterSorceryError):
    message = "Precondition failed: %(reason)s"
    code = "precondition"


class UnknownVariable(ClusterSorceryError):
    message = "Not a cluster variable of the explored graph: %(variable)s"
    code = "unknown_variable"


class TruncatedGraph(ClusterSorceryError):
    message = "Exchange graph was truncated at %(limit)s nodes, a complete graph is required"
    code = "truncated"
    exit_status = 3


class InfiniteType(TruncatedGraph):
    """Raised when exploration stopped at a seed proving the pattern is not of finite type."""

    message = "Pattern is not of finite type: |b_%(i)s%(j)s * b_%(j)s%(i)s| = %(product)s at path %(path)s"
    code = "infinite_type"


class TheoremViolation(ClusterSorceryError):
    """Raised when a property guaranteed by a proven theorem does not hold.

    These are never expected on valid input and indicate an implementation bug.
    """

    message = "Theorem violation"
    code = "theorem_violation"
    exit_status = 2


class InexactDivision(TheoremViolation):
    message = "Division is not exact: (%(dividend)s) / (%(divisor)s)"
    code = "inexact_division"


class MalformedExpansion(TheoremViolation):
    message = "Expansion does not have a unique y-free monomial with coefficient 1: %(expansion)s"
    code = "malformed_expansion"


class NonUnimodular(TheoremViolation):
    message = "Matrix is not unimodular, determinant is %(det)s"
    code = "non_unimodular"


class SingularBlock(TheoremViolation):
    message = "G-matrix block on %(subset)s has determinant %(det)s"
    code = "singular_block"


class NotFound(TheoremViolation):
    message = "No %(what)s found for %(where)s"
    code = "not_found"


class MultipleFound(TheoremViolation):
    message = "Found %(count)s %(what)s for %(where)s, expected exactly one"
    code = "multiple_found"


class NestedViolation(TheoremViolation):
    """Theorem violation which allows nested violations.

    Useful for collecting every failing property of a verification run in one error.

    For example::

        raise NestedViolation({
            "unimodularity": [NonUnimodular(params={"det": 2})],
            "degree-trichotomy": ["degree 3 for a cocluster pair"],
        })
    """

    message = "Properties violated"
    code = "nested"

    def __init__(self, message, code=None, params=None):
        if isinstance(message, dict):
            super().__init__(code=code, params=params)
            self.error_dict = {}
            for name, errors in message.items():
                self.error_dict[name] = NestedViolation(errors).error_list

        elif isinstance(message, (list, tuple)):
            super().__init__(code=code, params=params)
            self.error_list = []
            for error in message:
                if isinstance(error, NestedViolation) and hasattr(error, "error_list"):
                    self.error_list.extend(error.error_list)
                elif isinstance(error, ClusterSorceryError):
                    self.error_list.append(error)
                else:
                    self.error_list.append(TheoremViolation(str(error)))

        elif isinstance(message, NestedViolation):
            self.__dict__.update(vars(message))

        else:
            super().__init__(message, code, params)
            self.error_list = [self]

    @property
    def messages(self):
        if hasattr(self, "error_dict"):
            return {name: [str(e) for e in errors] for name, errors in self.error_dict.items()}
        return [str(e) for e in self.error_list if e is not self] or [super().__str__()]

    def __iter__(self):
        if hasattr(self, "error_dict"):
            for name, errors in self.error_dict.items():
                yield name, [e.as_dict() for e in errors]
        else:
            for error in self.error_list:
                yield error.as_dict()

    def __str__(self):
        if hasattr(self, "error_dict"):
            return "; ".join("{}: {}".format(name, ", ".join(errors)) for name, errors in self.messages.items())
        return "; ".join(self.messages)
