"""Execution of completion manifests against a loaded dataset.

A manifest names a stored block (optionally with its dual), a rule set, and
the external data the completion may consume: fusion maps, K-vectors to
induce, parabolic restriction targets, and dimension/row pins.  ``run``
assembles the corresponding :class:`~rcao.completion.CompletionProblem`,
seeds the partial matrices, and returns the engine's result;
``verify`` additionally compares the unique completion against the stored
matrix.

Seeding always starts from the Hecke columns (the full-support members
marked in the block file) and the structural zeros of the weight line.
When the rule ``TENSOR`` is enabled, the seed is refined by symmetric-power
multiplicities of the reflection representation: the cell (tau, sigma) is
zero when sigma does not occur in tau (x) S^gap(h*), equals that
multiplicity exactly when the h-gap is 1, and is capped by it otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cato import Block, DecompMatrix, PartialMatrix, invert_unitriangular
from .chartab import ClassFunction, inner, sym_power_reflection, tensor
from .completion import (
    CompletionProblem,
    CompletionResult,
    DimPin,
    IndCheck,
    LRowPin,
    ResCheck,
    SuppPin,
    UNIQUE,
    complete,
    seed_partial,
)
from .dataio import Dataset, ManifestSpec
from .ktheory import KVector
from .lemmas import RULE_KINDS, LemmaError


class ManifestError(LemmaError):
    pass


def tensor_multiplicity(T, tau: int, sigma: int, k: int) -> int:
    """Multiplicity of sigma in tau (x) S^k(h*)."""
    f = tensor(
        ClassFunction(T, T.irreducibles[tau].values), sym_power_reflection(T, k)
    )
    m = inner(f, ClassFunction(T, T.irreducibles[sigma].values)).as_rational()
    if m.denominator != 1 or m < 0:
        raise ManifestError("non-integral tensor multiplicity")
    return int(m)


def tensor_seed(
    dm: DecompMatrix, block_index: int = 0
) -> tuple[PartialMatrix, dict[tuple[int, int, int], int]]:
    """Hecke/structural seed refined by symmetric-power multiplicities.

    Returns the partial matrix together with the per-cell caps for the
    remaining unknowns (keyed for ``block_index`` in a completion problem).
    """
    P = seed_partial(dm, hecke_only=True)
    B = P.block
    T = B.table
    n = B.size
    cells = [list(r) for r in P.cells]
    caps: dict[tuple[int, int, int], int] = {}
    for i in range(n):
        for j in range(i + 1, n):
            gap = B.h[j] - B.h[i]
            if gap <= 0 or gap.denominator != 1:
                continue
            m = tensor_multiplicity(T, B.members[i], B.members[j], int(gap))
            known = cells[i][j]
            if m == 0 or gap == 1:
                # no copy of sigma in tau (x) S^gap(h*) forces zero; when the
                # h-gap is 1 the whole sigma-part is singular, so the cell is
                # exactly the multiplicity
                if known is not None and known != m:
                    raise ManifestError(
                        f"block {B.label}: stored cell ({i},{j}) contradicts "
                        f"the tensor multiplicity"
                    )
                cells[i][j] = m
            elif known is None:
                caps[(block_index, i, j)] = m
            elif known > m:
                raise ManifestError(
                    f"block {B.label}: stored cell ({i},{j}) exceeds "
                    f"the tensor multiplicity"
                )
    return PartialMatrix(B, tuple(tuple(r) for r in cells)), caps


def simples_of(dm: DecompMatrix) -> dict[int, KVector]:
    """Verma-decomposition vectors of the simples of a stored block."""
    B = dm.block
    inv = invert_unitriangular(dm.rows)
    return {
        m: KVector.make(B.table, {mm: c for mm, c in zip(B.members, inv[i]) if c})
        for i, m in enumerate(B.members)
    }


def sub_block_data(ds: Dataset, group: str, d: int) -> tuple:
    """All stored blocks of ``group`` at c=1/d, with their simples' vectors."""
    out = []
    for _spec, dm in sorted(
        ds.blocks_for(group, d), key=lambda t: t[0].block_id
    ):
        out.append((dm.block, simples_of(dm)))
    return tuple(out)


@dataclass
class AssembledManifest:
    spec: ManifestSpec
    problem: CompletionProblem
    matrices: list[DecompMatrix]  # stored matrices, same order as blocks


def assemble(ds: Dataset, spec: ManifestSpec, budget: int = 2_000_000) -> AssembledManifest:
    for r in spec.rules:
        if r not in RULE_KINDS:
            raise ManifestError(f"unknown rule {r!r} in manifest {spec.block_id}")
    matrices: list[DecompMatrix] = []
    for bid in (spec.block_id, spec.dual_block_id):
        if bid is None:
            continue
        if bid not in ds.blocks:
            raise ManifestError(f"manifest references unknown block {bid!r}")
        matrices.append(ds.blocks[bid][1])
    use_tensor = "TENSOR" in spec.rules
    partials: list[PartialMatrix] = []
    caps: dict[tuple[int, int, int], int] = {}
    for b, dm in enumerate(matrices):
        if use_tensor:
            P, c = tensor_seed(dm, b)
            caps.update(c)
        else:
            P = seed_partial(dm, hecke_only=True)
        partials.append(P)
    d = matrices[0].block.param.d

    def fusion(name: str):
        if name not in ds.fusions:
            raise ManifestError(f"manifest references unknown fusion {name!r}")
        return ds.fusions[name]

    res_fusions = [fusion(f) for f in spec.fusions]
    ind_checks = []
    for fname, kvname in spec.ind_checks:
        F = fusion(fname)
        if kvname not in ds.kvectors:
            raise ManifestError(f"manifest references unknown kvector {kvname!r}")
        v = ds.kvectors[kvname]
        if v.table is not F.sub:
            raise ManifestError(
                f"kvector {kvname!r} does not live on the sub table of {fname!r}"
            )
        ind_checks.append(IndCheck(F, v, 0))
    res_checks = []
    for fname in spec.res_checks:
        F = fusion(fname)
        res_checks.append(ResCheck(F, sub_block_data(ds, F.sub.name, d)))
    pins = [DimPin(0, m, dim) for m, dim in spec.pins]
    row_pins = [LRowPin(0, m, row) for m, row in spec.row_pins]
    supp_pins = [SuppPin(0, m, s) for m, s in spec.supp_pins]
    prob = CompletionProblem(
        blocks=partials,
        rules=frozenset(spec.rules) - {"TENSOR"},
        bound=spec.bound,
        budget=budget,
        res_fusions=res_fusions,
        pins=pins,
        row_pins=row_pins,
        supp_pins=supp_pins,
        ind_checks=ind_checks,
        res_checks=res_checks,
        caps=caps or None,
    )
    return AssembledManifest(spec, prob, matrices)


def run(ds: Dataset, spec: ManifestSpec, budget: int = 2_000_000) -> CompletionResult:
    return complete(assemble(ds, spec, budget).problem)


@dataclass
class ManifestReport:
    block_id: str
    status: str
    matches: Optional[bool]  # None unless UNIQUE
    nodes: int
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == UNIQUE and bool(self.matches)


def verify(ds: Dataset, spec: ManifestSpec, budget: int = 2_000_000) -> ManifestReport:
    """Run the manifest and compare its unique completion to the stored data."""
    asm = assemble(ds, spec, budget)
    res = complete(asm.problem)
    matches = None
    if res.status == UNIQUE:
        sol = res.solutions[0]
        matches = all(
            tuple(map(tuple, sol[b])) == tuple(map(tuple, dm.rows))
            for b, dm in enumerate(asm.matrices)
        )
    return ManifestReport(spec.block_id, res.status, matches, res.nodes, res.warnings)
