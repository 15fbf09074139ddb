"""Category O layer: h_c weights, weight lines, blocks, graded characters,
decomposition-matrix algebra, and support dimensions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .chartab import CharacterTable
from .exact import GradedCharacter, NegativeLeading, ShiftedLaurent


class CatOError(Exception):
    pass


class IrrationalWeight(CatOError):
    pass


class NotUnitriangular(CatOError):
    pass


class BlockError(CatOError):
    pass


@dataclass(frozen=True)
class Parameter:
    """The Cherednik parameter c = r/d > 0 (equal parameters)."""

    c: Fraction

    def __post_init__(self):
        if self.c <= 0:
            raise CatOError("only positive c is modeled")

    @property
    def r(self) -> int:
        return self.c.numerator

    @property
    def d(self) -> int:
        return self.c.denominator

    @property
    def is_half_integer(self) -> bool:
        return self.d <= 2

    def is_regular_for(self, T: CharacterTable) -> bool:
        """True when d divides no fundamental degree (category O semisimple)."""
        return all(deg % self.d for deg in T.degrees)


def reflection_sum(T: CharacterTable, tau: int) -> Fraction:
    """sum over reflections s of chi_tau(s), as an exact rational."""
    total = None
    for ci in T.reflection_classes:
        v = T.irreducibles[tau].values[ci]
        term = T.classes[ci].size * v
        total = term if total is None else total + term
    if total is None:
        return Fraction(0)
    if not total.is_rational:
        raise IrrationalWeight(
            f"{T.name}: reflection sum of {T.irr_label(tau)} is irrational"
        )
    return total.a


def h_weight(T: CharacterTable, c: Fraction, tau: int) -> Fraction:
    """h_c(tau) = rank/2 - c * (sum over reflections of chi_tau)/dim tau."""
    return Fraction(T.rank, 2) - c * reflection_sum(T, tau) / T.dim(tau)


def weight_lines(T: CharacterTable, c: Fraction) -> list[list[int]]:
    """Partition of Irr W into lines where h_c values differ by integers.

    Each line is sorted by (h, table index); lines are sorted by their
    smallest h, then by first member index.
    """
    hs = {i: h_weight(T, c, i) for i in range(len(T.irreducibles))}
    lines: list[list[int]] = []
    for i in sorted(hs, key=lambda i: (hs[i], i)):
        for line in lines:
            if (hs[i] - hs[line[0]]).denominator == 1:
                line.append(i)
                break
        else:
            lines.append([i])
    lines.sort(key=lambda line: (hs[line[0]], line[0]))
    return lines


def verma_character(T: CharacterTable, c: Fraction, tau: int) -> GradedCharacter:
    """t^{h_c(tau)} * dim(tau) / (1-t)^rank, unreduced."""
    h = h_weight(T, c, tau)
    return GradedCharacter(ShiftedLaurent.make(h, [T.dim(tau)]), T.rank)


def rouquier_scale_dim(dim_at_1_over_d: int, r: int, n: int) -> int:
    """dim L_{r/d}(triv) = r^n * dim L_{1/d}(triv)."""
    return r**n * dim_at_1_over_d


@dataclass(frozen=True)
class Block:
    """A block of O_c(W): an ordered list of irreducibles on one weight line."""

    table: CharacterTable
    param: Parameter
    label: str
    members: tuple[int, ...]
    h: tuple[Fraction, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        hs = tuple(h_weight(self.table, self.param.c, m) for m in self.members)
        object.__setattr__(self, "h", hs)
        for a, b in zip(hs, hs[1:]):
            if b < a:
                raise BlockError(f"block {self.label}: members not ordered by h")
            if (b - a).denominator != 1:
                raise BlockError(f"block {self.label}: members span two weight lines")

    @property
    def size(self) -> int:
        return len(self.members)

    def member_labels(self) -> list[str]:
        return [self.table.irr_label(m) for m in self.members]

    def position_of(self, tau: int) -> int:
        return self.members.index(tau)


def invert_unitriangular(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Exact inverse of an upper unitriangular integer matrix."""
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise NotUnitriangular("matrix is not square")
        if row[i] != 1 or any(row[j] for j in range(i)):
            raise NotUnitriangular(f"row {i} is not upper unitriangular")
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            # inv[i][j] = -(sum over i<k<=j of rows[i][k]*inv[k][j])
            inv[i][j] = -sum(rows[i][k] * inv[k][j] for k in range(i + 1, j + 1))
    return inv


@dataclass(frozen=True)
class DecompMatrix:
    """A full decomposition matrix D[tau][sigma] = [M(tau):L(sigma)] on a block."""

    block: Block
    rows: tuple[tuple[int, ...], ...]
    finite: tuple[bool, ...]
    support: tuple[Optional[int], ...]
    provenance: str = "verified"
    hecke_columns: tuple[int, ...] = ()  # member positions preserved by KZ
    defect_one: bool = False

    def __post_init__(self):
        n = self.block.size
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise BlockError(f"block {self.block.label}: matrix shape mismatch")
        if self.provenance not in ("verified", "conjectural"):
            raise BlockError(f"unknown provenance {self.provenance!r}")

    def validate(self) -> None:
        n = self.block.size
        h = self.block.h
        for i in range(n):
            if self.rows[i][i] != 1:
                raise NotUnitriangular(f"block {self.block.label}: diagonal != 1")
            for j in range(n):
                e = self.rows[i][j]
                if e < 0:
                    raise BlockError(f"block {self.block.label}: negative entry")
                if e and i != j:
                    gap = h[j] - h[i]
                    if gap.denominator != 1 or gap <= 0:
                        raise BlockError(
                            f"block {self.block.label}: entry ({i},{j}) violates "
                            "the strict h-order zero pattern"
                        )

    def inverse(self) -> list[list[int]]:
        return invert_unitriangular(self.rows)


@dataclass(frozen=True)
class PartialMatrix:
    """Decomposition matrix with unknown cells (None)."""

    block: Block
    cells: tuple[tuple[Optional[int], ...], ...]

    def __post_init__(self):
        n = self.block.size
        if len(self.cells) != n or any(len(r) != n for r in self.cells):
            raise BlockError("partial matrix shape mismatch")
        for i in range(n):
            if self.cells[i][i] != 1:
                raise BlockError("partial matrix diagonal must be known 1")
            for j in range(i):
                if self.cells[i][j] not in (0, None):
                    raise BlockError("partial matrix not upper triangular")

    def unknowns(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i, row in enumerate(self.cells)
            for j, v in enumerate(row)
            if v is None and j > i
        ]

    def with_cell(self, i: int, j: int, v: int) -> "PartialMatrix":
        rows = [list(r) for r in self.cells]
        rows[i][j] = v
        return PartialMatrix(self.block, tuple(tuple(r) for r in rows))


def simple_character(block: Block, l_row: Sequence[int]) -> GradedCharacter:
    """Graded character of L(tau) from its row of the inverse matrix.

    sum_sigma L[tau][sigma] * dim(sigma) * t^{h(sigma)} / (1-t)^rank, reduced.
    Raises NegativeLeading when the reduced numerator's lowest coefficient is
    not positive (the signal that the input rows are inconsistent).
    """
    T = block.table
    num = ShiftedLaurent.zero()
    for coeff, m, h in zip(l_row, block.members, block.h):
        if coeff:
            num = num + ShiftedLaurent.make(h, [coeff * T.dim(m)])
    g = GradedCharacter(num, T.rank).reduce()
    if not g.numerator.is_zero and g.numerator.coeffs[0] <= 0:
        raise NegativeLeading(
            f"block {block.label}: leading coefficient "
            f"{g.numerator.coeffs[0]} at t^{g.numerator.shift}"
        )
    return g


def support_dim(g: GradedCharacter) -> int:
    """Pole order at t=1 of the reduced character; 0 iff finite-dimensional."""
    return g.reduce().den_power
