"""Branch-and-prune completion of partial decomposition matrices.

A completion problem covers one block or a dual pair of blocks (the sign
twist maps the members of one onto the other; a self-dual block pairs with
itself).  The search seeds from the known cells, propagates the
(RR)+(dim Hom) mirror equalities to a fixpoint, then branches on the
remaining unknown cells bottom row first so that each completed row can be
checked immediately: its inverse-matrix row gives the graded character of a
simple, which must have a positive leading term, non-negative graded
dimensions, support at most the rank, the sl2 inequality, palindromicity
with non-positive integer lowest weight when finite-dimensional, vanishing
parabolic restriction when finite-dimensional, and any pinned dimension.
The sign-twist duality of minimal-support rows and induced-module peeling
are checked on full assignments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from . import lemmas
from .cato import Block, DecompMatrix, PartialMatrix, simple_character
from .chartab import FusionMap, sign_twist
from .exact import NegativeLeading
from .ktheory import Incomplete, KVector, Virtual, ind_k, peel_module, project_block, res_k
from .lemmas import INDETERMINATE, BudgetExceeded, LemmaError, rr_blocked

UNIQUE = "UNIQUE"
AMBIGUOUS = "AMBIGUOUS"
INFEASIBLE = "INFEASIBLE"


@dataclass(frozen=True)
class DimPin:
    """Externally computed dimension of a finite-dimensional simple."""

    block_index: int
    member_label: str
    dim: int


@dataclass(frozen=True)
class SuppPin:
    """Externally known support dimension of a simple (its character's pole order)."""

    block_index: int
    member_label: str
    support: int


@dataclass(frozen=True)
class IndCheck:
    """An induced simple, projected to a block, must peel non-negatively."""

    fusion: FusionMap
    sub_vector: KVector
    block_index: int


@dataclass(frozen=True)
class ResCheck:
    """Restriction of every simple must be a genuine module of the subgroup.

    ``blocks`` carries the complete list of nontrivial sub weight-line blocks
    at this parameter, each with the Verma vectors of its simples; restricted
    classes must peel non-negatively inside them and have non-negative
    coefficients everywhere else (those Vermas are simple).
    """

    fusion: FusionMap
    blocks: tuple  # of (Block, {member: KVector}) pairs


@dataclass(frozen=True)
class LRowPin:
    """Externally known Verma-decomposition row of a simple (an inverse row)."""

    block_index: int
    member_label: str
    row: tuple[int, ...]  # coefficients over the block's member order


@dataclass
class CompletionProblem:
    blocks: list[PartialMatrix]
    rules: frozenset[str]
    bound: int = 3
    budget: int = 2_000_000
    res_fusions: Sequence[FusionMap] = ()
    pins: Sequence[DimPin] = ()
    row_pins: Sequence[LRowPin] = ()
    supp_pins: Sequence[SuppPin] = ()
    ind_checks: Sequence[IndCheck] = ()
    res_checks: Sequence[ResCheck] = ()
    half_integer: bool = False
    # optional per-cell upper bounds (block, row, col) -> cap, e.g. from the
    # multiplicity of the column member in (row member) x S^gap(h*)
    caps: Optional[Mapping[tuple[int, int, int], int]] = None


@dataclass
class CompletionResult:
    status: str
    solutions: list[list[list[list[int]]]]  # per solution, per block, the matrix
    warnings: list[str] = field(default_factory=list)
    nodes: int = 0


def seed_partial(
    matrix: DecompMatrix, hecke_only: bool = True
) -> PartialMatrix:
    """Partial matrix seeded with the block's Hecke columns and structural zeros.

    Structural zeros are the cells whose h-gap is not a positive integer
    (irreducibles with the same h_c-weight are never linked).
    """
    B = matrix.block
    n = B.size
    hecke = set(matrix.hecke_columns)
    cells: list[list[Optional[int]]] = []
    for i in range(n):
        row: list[Optional[int]] = []
        for j in range(n):
            if i == j:
                row.append(1)
            elif j < i:
                row.append(0)
            elif j in hecke:
                row.append(matrix.rows[i][j])
            elif (B.h[j] - B.h[i]) <= 0 or (B.h[j] - B.h[i]).denominator != 1:
                row.append(0)
            else:
                row.append(None)
        cells.append(row)
    return PartialMatrix(B, tuple(tuple(r) for r in cells))


class _Engine:
    def __init__(self, prob: CompletionProblem):
        self.prob = prob
        self.blocks: list[Block] = [P.block for P in prob.blocks]
        self.cells: list[list[list[Optional[int]]]] = [
            [list(r) for r in P.cells] for P in prob.blocks
        ]
        self.rules = prob.rules
        self.nodes = 0
        self.warnings: list[str] = []
        self.solutions: list[list[list[list[int]]]] = []
        self._build_mirrors()
        self._pins: dict[tuple[int, int], int] = {}
        for pin in prob.pins:
            B = self.blocks[pin.block_index]
            pos = B.position_of(B.table.irr_of(pin.member_label))
            self._pins[(pin.block_index, pos)] = pin.dim
        self._row_pins: dict[tuple[int, int], tuple[int, ...]] = {}
        for rpin in prob.row_pins:
            B = self.blocks[rpin.block_index]
            pos = B.position_of(B.table.irr_of(rpin.member_label))
            if len(rpin.row) != B.size:
                raise LemmaError("row pin length does not match block size")
            self._row_pins[(rpin.block_index, pos)] = tuple(rpin.row)
        self._supp_pins: dict[tuple[int, int], int] = {}
        for spin in prob.supp_pins:
            B = self.blocks[spin.block_index]
            pos = B.position_of(B.table.irr_of(spin.member_label))
            self._supp_pins[(spin.block_index, pos)] = spin.support
        self._caps = dict(prob.caps) if prob.caps else {}
        # (RR) memoization.  A determinate answer only consults known cells,
        # so it stays valid until the search undoes an assignment made after
        # it was computed (entries past a rollback mark are dropped).  An
        # INDETERMINATE answer is valid until any cell changes.
        self._rr_cache: dict[tuple[int, int, int], bool] = {}
        self._rr_log: list[tuple[int, int, int]] = []
        self._rr_indet: dict[tuple[int, int, int], int] = {}
        self._mutations = 0

    def _rr(self, b: int, i: int, j: int):
        key = (b, i, j)
        r = self._rr_cache.get(key)
        if r is not None:
            return r
        if self._rr_indet.get(key) == self._mutations:
            return lemmas.INDETERMINATE
        r = lemmas.rr_blocked_cells(self.cells[b], self.blocks[b].size, i, j)
        if r is lemmas.INDETERMINATE:
            self._rr_indet[key] = self._mutations
        else:
            self._rr_cache[key] = r
            self._rr_log.append(key)
        return r

    def _cap(self, b: int, i: int, j: int) -> int:
        return min(self.prob.bound, self._caps.get((b, i, j), self.prob.bound))

    def _build_mirrors(self) -> None:
        """mirror[(b,i,j)] = (b2,i2,j2) with D_b[i][j] = D_b2[i2][j2] under
        (dim Hom) once (RR) blocks both cells."""
        locate: dict[int, tuple[int, int]] = {}
        for b, B in enumerate(self.blocks):
            for pos, m in enumerate(B.members):
                locate[m] = (b, pos)
        self.mirror: dict[tuple[int, int, int], tuple[int, int, int]] = {}
        if "DIMHOM" not in self.rules or "RR" not in self.rules:
            return
        if self.prob.half_integer or any(
            B.param.is_half_integer for B in self.blocks
        ):
            return
        for b, B in enumerate(self.blocks):
            T = B.table
            for i in range(B.size):
                for j in range(i + 1, B.size):
                    si = sign_twist(T, B.members[j])
                    ti = sign_twist(T, B.members[i])
                    if si in locate and ti in locate:
                        b2, i2 = locate[si]
                        b3, j2 = locate[ti]
                        if b2 == b3 and i2 < j2:
                            self.mirror[(b, i, j)] = (b2, i2, j2)

    # -- propagation -------------------------------------------------------

    def _propagate(self, trail: list[tuple[int, int, int]]) -> bool:
        """Fixpoint of two deductions; False on contradiction.

        1. (RR)+(dim Hom): copy values between mirrored blocked cells.
        2. A pinned inverse row l of row i forces, column by column,
           D[i][j] = -sum_{k>i} l[k] * D[k][j] once the lower cells of the
           column are known.
        Appends assignments to the trail.
        """
        changed = True
        while changed:
            changed = False
            for (b, i), l in self._row_pins.items():
                rows = self.cells[b]
                n = self.blocks[b].size
                for j in range(i + 1, n):
                    s = 0
                    for k in range(i + 1, j + 1):
                        v = rows[k][j]
                        if v is None:
                            s = None
                            break
                        s -= l[k] * v
                    if s is None:
                        continue
                    if rows[i][j] is None:
                        if s < 0 or s > self._cap(b, i, j):
                            return False
                        rows[i][j] = s
                        self._mutations += 1
                        trail.append((b, i, j))
                        changed = True
                    elif rows[i][j] != s:
                        return False
            for (b, i, j), (b2, i2, j2) in self.mirror.items():
                v1 = self.cells[b][i][j]
                v2 = self.cells[b2][i2][j2]
                if v1 is None and v2 is None:
                    continue
                if v1 is not None and v2 is not None and v1 == v2:
                    continue
                r1 = self._rr(b, i, j)
                r2 = self._rr(b2, i2, j2)
                if r1 is True and r2 is True:
                    if v1 is not None and v2 is not None:
                        return False  # blocked mirror cells disagree
                    if v1 is None:
                        self.cells[b][i][j] = v2
                        self._mutations += 1
                        trail.append((b, i, j))
                        if v2 > self._cap(b, i, j):
                            return False
                    else:
                        self.cells[b2][i2][j2] = v1
                        self._mutations += 1
                        trail.append((b2, i2, j2))
                        if v1 > self._cap(b2, i2, j2):
                            return False
                    changed = True
        return True

    # -- row checks ---------------------------------------------------------

    def _row_complete(self, b: int, i: int) -> bool:
        return all(v is not None for v in self.cells[b][i])

    def _rows_below_complete(self, b: int, i: int) -> bool:
        return all(
            self._row_complete(b, k) for k in range(i, self.blocks[b].size)
        )

    def _l_row(self, b: int, i: int) -> list[int]:
        """Row i of the inverse, needing rows i..n-1 of block b complete."""
        B = self.blocks[b]
        n = B.size
        rows = self.cells[b]
        l = [0] * n
        l[i] = 1
        for j in range(i + 1, n):
            l[j] = -sum(l[k] * rows[k][j] for k in range(i, j))  # type: ignore[operator]
        return l

    def _check_row(self, b: int, i: int) -> bool:
        """All single-row constraints on the simple L at position i of block b."""
        B = self.blocks[b]
        l = self._l_row(b, i)
        try:
            g = simple_character(B, l)
        except NegativeLeading:
            return False
        if "COLUMN_DOT" in self.rules:
            span = int(B.h[-1] - B.h[0]) + B.table.rank + 2
            if any(c < 0 for c in g.series_prefix(span)):
                return False
            if g.den_power > B.table.rank:
                return False
            # with a pole at t=1 the numerator's value at 1 is the leading
            # Hilbert coefficient; nonpositive means negative dims eventually
            if g.den_power > 0 and sum(g.numerator.coeffs) <= 0:
                return False
        if "SL2" in self.rules:
            ok, fails = lemmas.sl2_check(g)
            if not ok:
                hard = [k for k in fails if k <= 2]
                if hard:
                    return False
                self.warnings.append(
                    f"sl2 inequality fails at k={fails} for row "
                    f"{B.member_labels()[i]} (not pruned)"
                )
        finite = g.den_power == 0
        if "E_COROLLARY" in self.rules and not finite:
            if lemmas.e_corollary(g) == lemmas.FINITE:
                return False
        if finite:
            h = B.h[i]
            if h > 0 or h.denominator != 1:
                return False
            if not g.is_palindromic():
                return False
            if "RES_ZERO" in self.rules:
                v = KVector.make(
                    B.table, {m: c for m, c in zip(B.members, l) if c}
                )
                for F in self.prob.res_fusions:
                    if F.amb is B.table and not res_k(F, v).is_zero:
                        return False
        pin = self._pins.get((b, i))
        if pin is not None:
            if not finite or g.eval_at_one() != pin:
                return False
        rpin = self._row_pins.get((b, i))
        if rpin is not None and tuple(l) != rpin:
            return False
        spin = self._supp_pins.get((b, i))
        if spin is not None and g.den_power != spin:
            return False
        return True

    # -- leaf checks --------------------------------------------------------

    def _leaf_check(self) -> bool:
        inverses = []
        chars = []
        for b, B in enumerate(self.blocks):
            inv = [self._l_row(b, i) for i in range(B.size)]
            inverses.append(inv)
            try:
                chars.append([simple_character(B, row) for row in inv])
            except NegativeLeading:
                return False
        if "SYMM" in self.rules:
            if not self._check_symm(inverses, chars):
                return False
        if "RES_PEEL" in self.rules:
            for rc in self.prob.res_checks:
                known = set()
                for Bs, _simples in rc.blocks:
                    known.update(Bs.members)
                for b, B in enumerate(self.blocks):
                    if rc.fusion.amb is not B.table:
                        continue
                    for i in range(B.size):
                        lvec = KVector.make(
                            B.table,
                            {m: c for m, c in zip(B.members, inverses[b][i]) if c},
                        )
                        w = res_k(rc.fusion, lvec)
                        if any(c < 0 for m, c in w.coeffs if m not in known):
                            return False
                        for Bs, simples in rc.blocks:
                            try:
                                peel_module(project_block(w, Bs), Bs, simples)
                            except (Virtual, Incomplete):
                                return False
        if "IND_MEMBER" in self.rules:
            for chk in self.prob.ind_checks:
                B = self.blocks[chk.block_index]
                if chk.fusion.amb is not B.table:
                    continue
                w = project_block(ind_k(chk.fusion, chk.sub_vector), B)
                simples = {
                    m: KVector.make(
                        B.table,
                        {
                            mm: c
                            for mm, c in zip(
                                B.members, inverses[chk.block_index][pos]
                            )
                            if c
                        },
                    )
                    for pos, m in enumerate(B.members)
                }
                try:
                    peel_module(w, B, simples)
                except (Virtual, Incomplete):
                    return False
        return True

    def _check_symm(self, inverses, chars) -> bool:
        """Minimal-support rows must pair up under the sign-twist duality."""
        locate: dict[int, tuple[int, int]] = {}
        for b, B in enumerate(self.blocks):
            for pos, m in enumerate(B.members):
                locate[m] = (b, pos)
        for b, B in enumerate(self.blocks):
            supports = [g.den_power for g in chars[b]]
            smin = min(supports)
            for i, s in enumerate(supports):
                if s != smin:
                    continue
                v = KVector.make(
                    B.table, {m: c for m, c in zip(B.members, inverses[b][i]) if c}
                )
                try:
                    dual_label, dual_vec = lemmas.symm_dual(B, v)
                except lemmas.NotMinimal:
                    return False
                if dual_label not in locate:
                    continue  # dual lives outside the problem's blocks
                b2, pos2 = locate[dual_label]
                B2 = self.blocks[b2]
                actual = KVector.make(
                    B2.table,
                    {m: c for m, c in zip(B2.members, inverses[b2][pos2]) if c},
                )
                if actual != dual_vec:
                    return False
        return True

    # -- search -------------------------------------------------------------

    def run(self) -> CompletionResult:
        trail: list[tuple[int, int, int]] = []
        if not self._propagate(trail):
            return CompletionResult(INFEASIBLE, [], self.warnings, self.nodes)
        unknowns = [
            (b, i, j)
            for b, P in enumerate(self.cells)
            for i in range(len(P))
            for j in range(len(P))
            if P[i][j] is None
        ]
        # bottom rows first so each completed row is checked immediately
        unknowns.sort(key=lambda t: (-t[1], t[0], -t[2]))
        # rows already complete at the start still need their checks
        for b, B in enumerate(self.blocks):
            for i in range(B.size - 1, -1, -1):
                if self._rows_below_complete(b, i) and not self._check_row(b, i):
                    return CompletionResult(INFEASIBLE, [], self.warnings, self.nodes)
        self._search(unknowns, 0)
        if not self.solutions:
            return CompletionResult(INFEASIBLE, [], self.warnings, self.nodes)
        if len(self.solutions) == 1:
            return CompletionResult(UNIQUE, self.solutions, self.warnings, self.nodes)
        return CompletionResult(AMBIGUOUS, self.solutions, self.warnings, self.nodes)

    def _search(self, unknowns: list[tuple[int, int, int]], depth: int) -> None:
        if len(self.solutions) >= 2:
            return
        self.nodes += 1
        if self.nodes > self.prob.budget:
            raise BudgetExceeded(f"budget of {self.prob.budget} nodes exceeded")
        pos = next(
            (k for k in range(depth, len(unknowns))
             if self.cells[unknowns[k][0]][unknowns[k][1]][unknowns[k][2]] is None),
            None,
        )
        if pos is None:
            if self._leaf_check():
                self.solutions.append(
                    [[list(map(int, r)) for r in P] for P in self.cells]
                )
            return
        unknowns[depth], unknowns[pos] = unknowns[pos], unknowns[depth]
        b, i, j = unknowns[depth]
        for v in range(self._cap(b, i, j) + 1):
            trail: list[tuple[int, int, int]] = [(b, i, j)]
            mark = len(self._rr_log)
            self.cells[b][i][j] = v
            self._mutations += 1
            ok = self._propagate(trail)
            if ok:
                ok = self._recheck_completed_rows(trail)
            if ok:
                self._search(unknowns, depth + 1)
            for (b2, i2, j2) in trail:
                self.cells[b2][i2][j2] = None
            self._mutations += 1
            for key in self._rr_log[mark:]:
                del self._rr_cache[key]
            del self._rr_log[mark:]
        unknowns[depth], unknowns[pos] = unknowns[pos], unknowns[depth]

    def _recheck_completed_rows(self, trail) -> bool:
        """Row checks for rows that just became complete (and whose lower
        rows are complete)."""
        rows = sorted({(b, i) for b, i, _ in trail}, key=lambda t: -t[1])
        for b, i in rows:
            if self._row_complete(b, i) and self._rows_below_complete(b, i):
                # also re-check rows above that were already complete? they
                # were checked when they completed; their checks depend on
                # lower rows, so only rows at or above a changed cell matter.
                if not self._check_row(b, i):
                    return False
                for k in range(i - 1, -1, -1):
                    if not self._row_complete(b, k):
                        break
                    if not self._check_row(b, k):
                        return False
        return True


def complete(prob: CompletionProblem) -> CompletionResult:
    """Fill the unknown cells of the problem's blocks; see the module docstring."""
    return _Engine(prob).run()
