"""
Exact rational matrix container for stabverify.

Thin wrapper around sympy's DomainMatrix over QQ so that every matrix in
the package shares one exact arithmetic, one constructor vocabulary and
one JSON form. No floating point is involved anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Scalar = Union[int, Fraction, str]


def to_fraction(value: Any) -> Fraction:
    """Convert an int, Fraction, "p/q" string or QQ element to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(int(value.numerator), int(value.denominator))


def fraction_to_str(value: Fraction) -> str:
    """Render as "p/q", or "p" for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _qq(value: Scalar) -> Any:
    f = to_fraction(value)
    return QQ(f.numerator, f.denominator)


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    """
    Exact rational matrix.

    Attributes:
        rep: the underlying DomainMatrix, always over QQ

    Example:
        >>> m = ExactMatrix.from_rows([[0, 1], [0, 0]])
        >>> (m @ m).is_zero
        True
    """
    rep: DomainMatrix

    def __post_init__(self):
        if not isinstance(self.rep, DomainMatrix):
            raise TypeError(f"ExactMatrix wraps a DomainMatrix, got {type(self.rep).__name__}")
        rep = self.rep
        if rep.domain != QQ:
            rep = rep.convert_to(QQ)
        # eye and zeros come back sparse; mixed formats cannot be multiplied or compared
        object.__setattr__(self, "rep", rep.to_dense())

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "ExactMatrix":
        """Build from a list of rows of ints, Fractions or "p/q" strings."""
        rows = [list(row) for row in rows]
        if not rows:
            raise ValueError("Matrix needs at least one row")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("All rows must have the same length")
        data = [[_qq(x) for x in row] for row in rows]
        return cls(DomainMatrix(data, (len(rows), width), QQ))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(DomainMatrix.zeros((rows, cols), QQ))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(DomainMatrix.eye(n, QQ))

    @classmethod
    def from_entries(cls, rows: int, cols: int,
                     entries: Dict[Tuple[int, int], Scalar]) -> "ExactMatrix":
        """Build a sparse-style matrix from {(i, j): value}."""
        data = [[QQ(0)] * cols for _ in range(rows)]
        for (i, j), value in entries.items():
            data[i][j] += _qq(value)
        return cls(DomainMatrix(data, (rows, cols), QQ))

    @classmethod
    def block_diagonal(cls, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        size_r = sum(b.rows for b in blocks)
        size_c = sum(b.cols for b in blocks)
        entries: Dict[Tuple[int, int], Scalar] = {}
        r0 = c0 = 0
        for block in blocks:
            for i, row in enumerate(block.to_rows()):
                for j, value in enumerate(row):
                    if value:
                        entries[(r0 + i, c0 + j)] = value
            r0 += block.rows
            c0 += block.cols
        return cls.from_entries(size_r, size_c, entries)

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[str]]) -> "ExactMatrix":
        return cls.from_rows([[Fraction(x) for x in row] for row in rows])

    # -- shape and access ---------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rep.shape

    @property
    def rows(self) -> int:
        return self.rep.shape[0]

    @property
    def cols(self) -> int:
        return self.rep.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero_matrix

    def entry(self, i: int, j: int) -> Fraction:
        return to_fraction(self.rep[i, j].element)

    def to_rows(self) -> List[List[Fraction]]:
        return [[to_fraction(x) for x in row] for row in self.rep.to_list()]

    def column(self, j: int) -> List[Fraction]:
        return [row[j] for row in self.to_rows()]

    def to_json(self) -> List[List[str]]:
        """Rows of rational strings ("p/q")."""
        return [[fraction_to_str(x) for x in row] for row in self.to_rows()]

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rep == other.rep

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(self.rep + other.rep)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(self.rep - other.rep)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(-self.rep)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch: {self.shape} @ {other.shape}")
        return ExactMatrix(self.rep.matmul(other.rep))

    def scale(self, factor: Scalar) -> "ExactMatrix":
        return ExactMatrix(self.rep * _qq(factor))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.rep.transpose())

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def power(self, k: int) -> "ExactMatrix":
        if not self.is_square:
            raise ValueError(f"Only square matrices have powers, got {self.shape}")
        if k < 0:
            raise ValueError("Negative powers are not supported")
        if k == 0:
            return ExactMatrix.identity(self.rows)
        return ExactMatrix(self.rep ** k)

    def rank(self) -> int:
        return int(self.rep.rank())

    def inverse(self) -> "ExactMatrix":
        return ExactMatrix(self.rep.inv())

    def commutator(self, other: "ExactMatrix") -> "ExactMatrix":
        """[A, B] = AB - BA."""
        return self @ other - other @ self

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product, row index (i, k) -> i * other.rows + k."""
        entries: Dict[Tuple[int, int], Scalar] = {}
        b_rows = other.to_rows()
        for i, row in enumerate(self.to_rows()):
            for j, a in enumerate(row):
                if not a:
                    continue
                for k, b_row in enumerate(b_rows):
                    for l, b in enumerate(b_row):
                        if b:
                            entries[(i * other.rows + k, j * other.cols + l)] = a * b
        return ExactMatrix.from_entries(self.rows * other.rows, self.cols * other.cols, entries)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(self.rep.hstack(other.rep))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols}, {self.to_json()})"
