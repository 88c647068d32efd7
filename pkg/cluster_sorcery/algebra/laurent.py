"""Exact sparse Laurent polynomials and the tropical semifield.

A :py:class:`LaurentPoly` of rank ``n`` lives in ``Z[x1^±1..xn^±1, y1^±1..yn^±1]``. Terms are stored as a map
from a flat exponent tuple ``(a1..an, b1..bn)`` to a nonzero integer coefficient, so equal polynomials always
have equal term maps. Coefficients are python integers, exponents are range checked against
``settings.exponent_bits``.

For example::

    >>> x1, x2 = LaurentPoly.variable(1, 2), LaurentPoly.variable(2, 2)
    >>> str((x2 + 1) * x1 ** -1)
    'x1^-1 * x2 + x1^-1'
    >>> str(poly_div_exact(x1 * x1 - 1, x1 + 1))
    'x1 - 1'
"""
import heapq
import re
from collections import namedtuple
from types import MappingProxyType

from ..conf import settings
from ..exceptions import ExponentOverflow, InexactDivision, RankMismatch, ZeroPolynomial


def _check_exponents(flat):
    bound = 2 ** (settings.exponent_bits - 1)
    for value in flat:
        if not -bound <= value < bound:
            raise ExponentOverflow(params={"value": value, "bits": settings.exponent_bits})
    return flat


def _check_rank(left, right):
    if left.rank != right.rank:
        raise RankMismatch(params={"left": left.rank, "right": right.rank})


def _add(a, b):
    return tuple(i + j for i, j in zip(a, b))


def _sub(a, b):
    return tuple(i - j for i, j in zip(a, b))


def _grlex(flat):
    return (sum(flat), flat)


class ExponentVector(namedtuple("ExponentVector", ["xexp", "yexp"])):
    """Exponents of a Laurent monomial ``x^xexp * y^yexp``."""

    __slots__ = ()

    @classmethod
    def zero(cls, rank):
        return cls((0,) * rank, (0,) * rank)

    @classmethod
    def from_flat(cls, flat):
        rank = len(flat) // 2
        return cls(tuple(flat[:rank]), tuple(flat[rank:]))

    @property
    def rank(self):
        return len(self.xexp)

    @property
    def flat(self):
        return tuple(self.xexp) + tuple(self.yexp)

    def plus(self, other):
        if self.rank != other.rank:
            raise RankMismatch(params={"left": self.rank, "right": other.rank})
        return self.from_flat(_check_exponents(_add(self.flat, other.flat)))

    def minus(self, other):
        if self.rank != other.rank:
            raise RankMismatch(params={"left": self.rank, "right": other.rank})
        return self.from_flat(_check_exponents(_sub(self.flat, other.flat)))


class TropicalMonomial(namedtuple("TropicalMonomial", ["yexp"])):
    """An element ``y1^a1 ... yn^an`` of the tropical semifield ``Trop(y1..yn)``.

    Multiplication adds exponents, ``⊕`` takes the componentwise minimum.
    """

    __slots__ = ()

    @classmethod
    def one(cls, rank):
        return cls((0,) * rank)

    @classmethod
    def generator(cls, index, rank):
        """Returns ``y_index`` (1-based)."""
        return cls(tuple(1 if i == index - 1 else 0 for i in range(rank)))

    @property
    def rank(self):
        return len(self.yexp)

    def __mul__(self, other):
        if self.rank != other.rank:
            raise RankMismatch(params={"left": self.rank, "right": other.rank})
        return TropicalMonomial(_check_exponents(_add(self.yexp, other.yexp)))

    def __pow__(self, power):
        return TropicalMonomial(_check_exponents(tuple(a * power for a in self.yexp)))

    def inverse(self):
        return TropicalMonomial(_check_exponents(tuple(-a for a in self.yexp)))

    def oplus(self, other):
        return trop_oplus(self, other)

    def as_poly(self):
        return LaurentPoly.monomial((0,) * self.rank, self.yexp)

    def __str__(self):
        return _format_factors((), self.yexp) or "1"

    def __json__(self):
        return list(self.yexp)


def trop_oplus(a, b):
    """Tropical addition, the componentwise minimum of the exponent vectors."""
    if a.rank != b.rank:
        raise RankMismatch(params={"left": a.rank, "right": b.rank})
    return TropicalMonomial(tuple(min(i, j) for i, j in zip(a.yexp, b.yexp)))


class LaurentPoly:
    """Immutable sparse Laurent polynomial in ``x1..xn`` and ``y1..yn`` with integer coefficients."""

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, terms, rank):
        self.rank = rank
        self._hash = None
        self._terms = {}
        for exponents, coeff in dict(terms).items():
            flat = exponents.flat if isinstance(exponents, ExponentVector) else tuple(exponents)
            if len(flat) != 2 * rank:
                raise RankMismatch(params={"left": len(flat) // 2, "right": rank})
            if coeff:
                self._terms[_check_exponents(flat)] = int(coeff)

    @classmethod
    def _from_flat(cls, terms, rank):
        poly = cls.__new__(cls)
        poly.rank = rank
        poly._hash = None
        poly._terms = {e: c for e, c in terms.items() if c}
        return poly

    @classmethod
    def zero(cls, rank):
        return cls._from_flat({}, rank)

    @classmethod
    def constant(cls, value, rank):
        return cls._from_flat({(0,) * (2 * rank): value}, rank)

    @classmethod
    def one(cls, rank):
        return cls.constant(1, rank)

    @classmethod
    def monomial(cls, xexp, yexp=None, coeff=1):
        rank = len(xexp)
        yexp = tuple(yexp) if yexp is not None else (0,) * rank
        if len(yexp) != rank:
            raise RankMismatch(params={"left": rank, "right": len(yexp)})
        return cls._from_flat({_check_exponents(tuple(xexp) + yexp): coeff}, rank)

    @classmethod
    def variable(cls, index, rank):
        """Returns the initial cluster variable ``x_index`` (1-based)."""
        return cls.monomial(tuple(1 if i == index - 1 else 0 for i in range(rank)))

    @property
    def terms(self):
        """Read only map of :py:class:`ExponentVector` to coefficient."""
        return MappingProxyType({ExponentVector.from_flat(e): c for e, c in self._terms.items()})

    def items(self):
        """Yields ``(flat exponent tuple, coefficient)`` pairs in canonical (descending graded lex) order."""
        for flat in sorted(self._terms, key=_grlex, reverse=True):
            yield flat, self._terms[flat]

    @property
    def is_zero(self):
        return not self._terms

    @property
    def is_monomial(self):
        return len(self._terms) == 1

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.rank)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            constant = (0,) * (2 * self.rank)
            if self._terms.keys() <= {constant}:
                # constants compare equal to ints
                self._hash = hash(self._terms.get(constant, 0))
            else:
                self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.rank)
        if isinstance(other, TropicalMonomial):
            return other.as_poly()
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._from_flat({e: -c for e, c in self._terms.items()}, self.rank)

    def __sub__(self, other):
        other = self._coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, power):
        if power < 0:
            if not self.is_monomial:
                raise InexactDivision(params={"dividend": 1, "divisor": self})
            (flat, coeff), = self._terms.items()
            if coeff not in (1, -1):
                raise InexactDivision(params={"dividend": 1, "divisor": self})
            return LaurentPoly._from_flat(
                {_check_exponents(tuple(a * power for a in flat)): coeff ** -power}, self.rank
            )
        result = LaurentPoly.one(self.rank)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return poly_div_exact(self, other)

    def min_x_exponents(self):
        return min_x_exponents(self)

    def y_free_part(self):
        """Returns the sum of the terms without any ``y`` factor, i.e. the polynomial at ``y = 0``."""
        zero = (0,) * self.rank
        return LaurentPoly._from_flat({e: c for e, c in self._terms.items() if e[self.rank :] == zero}, self.rank)

    def sort_key(self):
        """Total order on polynomials used for canonical seed keys."""
        return tuple((_grlex(flat), coeff) for flat, coeff in self.items())

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "LaurentPoly({!r}, rank={})".format(str(self), self.rank)

    def __json__(self):
        return str(self)


def poly_add(p, q):
    _check_rank(p, q)
    terms = dict(p._terms)
    for e, c in q._terms.items():
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly._from_flat(terms, p.rank)


def poly_mul(p, q):
    _check_rank(p, q)
    terms = {}
    for e, c in p._terms.items():
        for f, d in q._terms.items():
            key = _add(e, f)
            terms[key] = terms.get(key, 0) + c * d
    for key in terms:
        _check_exponents(key)
    return LaurentPoly._from_flat(terms, p.rank)


def _bounds(poly):
    flats = list(poly._terms)
    return (
        tuple(min(column) for column in zip(*flats)),
        tuple(max(column) for column in zip(*flats)),
    )


def _negated(flat):
    return tuple(-a for a in flat)


def poly_div_exact(p, q):
    """Returns ``r`` with ``r * q == p`` or raises :py:class:`InexactDivision`.

    Repeatedly cancels the lexicographically leading term of the remainder against the leading term of
    ``q``. Remainder exponents sit in a heap, entries of cancelled terms are skipped when popped. Any quotient
    term must lie in the box spanned by the per-variable minimal and maximal exponents of ``p`` and ``q``, so
    leaving the box proves the division inexact and guarantees termination.
    """
    _check_rank(p, q)
    if q.is_zero:
        raise ZeroPolynomial()
    if p.is_zero:
        return LaurentPoly.zero(p.rank)

    error = InexactDivision(params={"dividend": p, "divisor": q})

    lead_q = max(q._terms)
    lead_c = q._terms[lead_q]
    p_lo, p_hi = _bounds(p)
    q_lo, q_hi = _bounds(q)
    lo, hi = _sub(p_lo, q_lo), _sub(p_hi, q_hi)
    if any(a > b for a, b in zip(lo, hi)):
        raise error

    remainder = dict(p._terms)
    heap = [_negated(e) for e in remainder]
    heapq.heapify(heap)
    quotient = {}
    while remainder:
        lead_r = _negated(heapq.heappop(heap))
        if lead_r not in remainder:
            continue
        exponent = _sub(lead_r, lead_q)
        if not all(a <= e <= b for a, e, b in zip(lo, exponent, hi)):
            raise error

        coeff, rest = divmod(remainder[lead_r], lead_c)
        if rest:
            raise error

        quotient[exponent] = coeff
        for f, d in q._terms.items():
            key = _add(exponent, f)
            value = remainder.get(key, 0) - coeff * d
            if value:
                if key not in remainder:
                    heapq.heappush(heap, _negated(key))
                remainder[key] = value
            else:
                remainder.pop(key, None)

    return LaurentPoly._from_flat(quotient, p.rank)


def min_x_exponents(p):
    """Componentwise minimum of the ``x`` exponents over all terms of ``p``."""
    if p.is_zero:
        raise ZeroPolynomial()
    return tuple(min(column) for column in zip(*(e[: p.rank] for e in p._terms)))


def _format_factors(xexp, yexp):
    factors = []
    for name, exponents in (("x", xexp), ("y", yexp)):
        for i, a in enumerate(exponents, 1):
            if a == 1:
                factors.append("{}{}".format(name, i))
            elif a:
                factors.append("{}{}^{}".format(name, i, a))
    return " * ".join(factors)


def format_poly(p):
    """Serializes ``p`` as a sum of ``c * x1^a1 ... * y1^b1 ...`` terms in canonical order."""
    if p.is_zero:
        return "0"

    parts = []
    for flat, coeff in p.items():
        factors = _format_factors(flat[: p.rank], flat[p.rank :])
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = factors
        else:
            body = "{} * {}".format(magnitude, factors)

        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts)


_FACTOR = r"(?:\d+|[xy]\d+(?:\^-?\d+)?)"
_TERM_RE = re.compile(r"\s*([+-])?\s*({f}(?:\s*\*\s*{f})*)\s*".format(f=_FACTOR))
_VARIABLE_RE = re.compile(r"([xy])(\d+)(?:\^(-?\d+))?$")


def parse_poly(text, rank):
    """Parses the output of :py:func:`format_poly` (whitespace is not significant).

    For example::

        >>> str(parse_poly("x1^-1*x2 + 2*y1 - 3", 2))
        '2 * y1 - 3 + x1^-1 * x2'
    """
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(rank)

    result = LaurentPoly.zero(rank)
    position = 0
    while position < len(text):
        match = _TERM_RE.match(text, position)
        if not match or match.end() == position or (position and not match.group(1)):
            raise ValueError("Cannot parse polynomial {!r} at position {}".format(text, position))
        position = match.end()

        coeff = -1 if match.group(1) == "-" else 1
        xexp, yexp = [0] * rank, [0] * rank
        for factor in (f.strip() for f in match.group(2).split("*")):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, index, power = _VARIABLE_RE.match(factor).groups()
            index = int(index)
            if not 1 <= index <= rank:
                raise ValueError("Variable {} out of range for rank {}".format(factor, rank))
            (xexp if name == "x" else yexp)[index - 1] += int(power) if power is not None else 1
        result = result + LaurentPoly.monomial(xexp, yexp, coeff)
    return result
