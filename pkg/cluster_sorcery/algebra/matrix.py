"""Exact integer matrices."""
import sympy

from ..exceptions import NonUnimodular, RankMismatch


class IntMatrix:
    """Immutable integer matrix housing exchange matrices as well as G-, D-, R- and Q-matrices.

    Indices are 0-based here, everything user facing is 1-based. Determinants and adjugates are computed
    exactly by sympy.

    For example::

        >>> m = IntMatrix([[-1, 0], [1, 1]])
        >>> m.det()
        -1
        >>> m.inverse_unimodular() == m
        True
    """

    __slots__ = ("rows", "ncols", "_hash")

    def __init__(self, rows, ncols=None):
        self.rows = tuple(tuple(int(v) for v in row) for row in rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        self._hash = None
        if any(len(row) != self.ncols for row in self.rows):
            raise ValueError("Matrix rows must all have {} entries".format(self.ncols))

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_columns(cls, columns, nrows=None):
        columns = [tuple(c) for c in columns]
        nrows = len(columns[0]) if columns else (nrows or 0)
        return cls([[c[i] for c in columns] for i in range(nrows)], ncols=len(columns))

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return IntMatrix(self.columns(), ncols=self.nrows)

    def submatrix(self, rows, cols):
        """Restriction ``A|_{rows x cols}`` with 0-based index lists."""
        return IntMatrix([[self.rows[i][j] for j in cols] for i in rows], ncols=len(cols))

    def permuted(self, perm):
        """Returns the matrix with entries ``a[perm[i]][perm[j]]`` (``perm`` 0-based)."""
        return IntMatrix([[self.rows[p][q] for q in perm] for p in perm], ncols=self.ncols)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise RankMismatch(params={"left": self.ncols, "right": other.nrows})
            columns = other.columns()
            return IntMatrix(
                [[sum(a * b for a, b in zip(row, col)) for col in columns] for row in self.rows], ncols=other.ncols
            )

        vector = tuple(other)
        if self.ncols != len(vector):
            raise RankMismatch(params={"left": self.ncols, "right": len(vector)})
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.rows)

    def __neg__(self):
        return IntMatrix([[-v for v in row] for row in self.rows], ncols=self.ncols)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.rows))
        return self._hash

    def _sympy(self):
        return sympy.Matrix(self.nrows, self.ncols, [v for row in self.rows for v in row])

    def det(self):
        if not self.is_square:
            raise RankMismatch(params={"left": self.nrows, "right": self.ncols})
        if not self.nrows:
            return 1
        return int(self._sympy().det(method="bareiss"))

    def adjugate(self):
        if not self.nrows:
            return self
        return IntMatrix(self._sympy().adjugate().tolist(), ncols=self.ncols)

    def inverse_unimodular(self):
        """Exact inverse through the adjugate, valid because the determinant is ``±1``."""
        det = self.det()
        if det not in (1, -1):
            raise NonUnimodular(params={"det": det, "matrix": self.to_list()})
        adjugate = self.adjugate()
        return adjugate if det == 1 else -adjugate

    def to_list(self):
        return [list(row) for row in self.rows]

    def __json__(self):
        return self.to_list()

    def __str__(self):
        return str(self.to_list())

    def __repr__(self):
        return "IntMatrix({})".format(self.to_list())
