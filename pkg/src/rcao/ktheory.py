"""Grothendieck-group functors: induction/restriction of Verma vectors,
block projection, and the peeling test for module positivity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .chartab import (
    CharacterTable,
    FusionMap,
    TableMismatch,
    decompose_integral,
    restrict,
)
from .cato import Block


class KTheoryError(Exception):
    pass


class Virtual(KTheoryError):
    """Peeling met a negative leading coefficient: not a genuine module."""


class Incomplete(KTheoryError):
    """Peeling needed a simple whose Verma vector is unknown."""


@dataclass(frozen=True)
class KVector:
    """Integer vector of Verma multiplicities, indexed by Irr W."""

    table: CharacterTable
    coeffs: tuple[tuple[int, int], ...]  # (irreducible index, coefficient), sorted

    @staticmethod
    def make(table: CharacterTable, coeffs: Mapping[int, int]) -> "KVector":
        items = tuple(sorted((i, c) for i, c in coeffs.items() if c != 0))
        return KVector(table, items)

    @staticmethod
    def zero(table: CharacterTable) -> "KVector":
        return KVector(table, ())

    @staticmethod
    def single(table: CharacterTable, tau: int, mult: int = 1) -> "KVector":
        return KVector.make(table, {tau: mult})

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, tau: int) -> int:
        for i, c in self.coeffs:
            if i == tau:
                return c
        return 0

    def __add__(self, other: "KVector") -> "KVector":
        if self.table is not other.table:
            raise TableMismatch("KVector tables differ")
        d = self.as_dict()
        for i, c in other.coeffs:
            d[i] = d.get(i, 0) + c
        return KVector.make(self.table, d)

    def __neg__(self) -> "KVector":
        return KVector(self.table, tuple((i, -c) for i, c in self.coeffs))

    def __sub__(self, other: "KVector") -> "KVector":
        return self + (-other)

    def scale(self, n: int) -> "KVector":
        if n == 0:
            return KVector.zero(self.table)
        return KVector(self.table, tuple((i, n * c) for i, c in self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in self.coeffs:
            label = self.table.irr_label(i)
            if c == 1:
                parts.append(f"M({label})")
            elif c == -1:
                parts.append(f"-M({label})")
            else:
                parts.append(f"{c}M({label})")
        return " + ".join(parts).replace("+ -", "- ")


_branching_cache: dict[int, dict[int, dict[int, int]]] = {}


def branching(F: FusionMap, tau: int) -> dict[int, int]:
    """Multiplicities <Res chi_tau, chi_sigma> of sub irreducibles sigma."""
    per_fusion = _branching_cache.setdefault(id(F), {})
    if tau not in per_fusion:
        res = restrict(F, F.amb.class_function(tau))
        per_fusion[tau] = decompose_integral(res)
    return per_fusion[tau]


def res_k(F: FusionMap, v: KVector) -> KVector:
    """[Res M_W(tau)] = sum_sigma <Res chi_tau, chi_sigma> [M_W'(sigma)], linearly."""
    if v.table is not F.amb:
        raise TableMismatch("res_k: vector not on the ambient table")
    out: dict[int, int] = {}
    for tau, c in v.coeffs:
        for sigma, m in branching(F, tau).items():
            out[sigma] = out.get(sigma, 0) + c * m
    return KVector.make(F.sub, out)


def ind_k(F: FusionMap, v: KVector) -> KVector:
    """[Ind M_W'(sigma)] = sum_tau <chi_sigma, Res chi_tau> [M_W(tau)], linearly."""
    if v.table is not F.sub:
        raise TableMismatch("ind_k: vector not on the sub table")
    out: dict[int, int] = {}
    for tau in range(len(F.amb.irreducibles)):
        branch = branching(F, tau)
        total = sum(c * branch.get(sigma, 0) for sigma, c in v.coeffs)
        if total:
            out[tau] = total
    return KVector.make(F.amb, out)


def project_block(v: KVector, B: Block) -> KVector:
    """Zero all coefficients outside the block's member list."""
    keep = set(B.members)
    return KVector(v.table, tuple((i, c) for i, c in v.coeffs if i in keep))


def peel_module(
    v: KVector,
    B: Block,
    simples: Mapping[int, KVector],
) -> dict[int, int]:
    """Greedy decomposition of v into known simples of the block B.

    Walks the block members in increasing h order (the fixture tie order);
    whenever the coefficient c_tau at tau is positive, subtracts
    c_tau * (Verma vector of L(tau)).  Raises ``Virtual`` the moment a leading
    coefficient is negative, ``Incomplete`` if a needed simple is unknown.
    Returns the multiplicity multiset if the remainder reaches zero.
    """
    if v.table is not B.table:
        raise TableMismatch("peel_module: vector not on the block's table")
    members = set(B.members)
    outside = [i for i, _ in v.coeffs if i not in members]
    if outside:
        labels = [v.table.irr_label(i) for i in outside]
        raise KTheoryError(f"vector not supported on the block (project first): {labels}")
    rest = v
    out: dict[int, int] = {}
    for tau in B.members:
        c = rest.coeff(tau)
        if c == 0:
            continue
        if c < 0:
            raise Virtual(
                f"leading coefficient {c} at M({B.table.irr_label(tau)})"
            )
        if tau not in simples:
            raise Incomplete(
                f"no Verma vector known for L({B.table.irr_label(tau)})"
            )
        rest = rest - simples[tau].scale(c)
        out[tau] = c
    if not rest.is_zero:  # impossible for unitriangular simple vectors
        leftovers = [v.table.irr_label(i) for i, _ in rest.coeffs]
        raise Incomplete(f"nonzero remainder: {leftovers}")
    return out
