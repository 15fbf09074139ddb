"""Command-line front end.

``rcao verify <dir>`` runs the verification suite over a dataset directory;
the other subcommands are thin wrappers over the library: weight lines,
graded characters, dimension tables, matrix completion, and K-theoretic
induction/restriction.  Output is a stable text grammar, or JSON with
``--format=structured``.  Exit codes: 0 all pass, 1 verification failure,
2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import manifest as manifest_mod
from .cato import (
    Block,
    CatOError,
    DecompMatrix,
    NotUnitriangular,
    h_weight,
    simple_character,
    weight_lines,
)
from .chartab import (
    FormatError,
    TableError,
    UnknownLabel,
    inner,
    sign_twist,
    sym_power_reflection,
    tensor,
)
from .dataio import (
    DEFAULT_DATASET,
    Dataset,
    ManifestSpec,
    format_kvector,
    KVectorSpec,
    load_dataset,
    parse_kvector,
)
from .exact import ExactError, NegativeLeading
from .ktheory import (
    Incomplete,
    KTheoryError,
    KVector,
    Virtual,
    ind_k,
    peel_module,
    project_block,
    res_k,
)
from .lemmas import LemmaError, NotMinimal, RULE_KINDS, symm_dual
from .manifest import simples_of

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class InputError(Exception):
    """Bad command-line input: unknown label, missing fixture, parse error."""


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass
class Check:
    name: str
    status: str  # PASS | FAIL
    detail: str = ""


@dataclass
class BlockReport:
    block_id: str
    provenance: str
    checks: list[Check] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(c.status == "FAIL" for c in self.checks)


@dataclass
class DimReport:
    group: str
    d: int
    label: str
    value: int
    status: str  # PASS | FAIL | SKIP
    conjectural: bool
    detail: str = ""


@dataclass
class VerifyReport:
    blocks: list[BlockReport] = field(default_factory=list)
    dims: list[DimReport] = field(default_factory=list)
    concordance: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """All checks on verified-provenance fixtures pass."""
        for b in self.blocks:
            if b.provenance == "verified" and b.failed:
                return False
        return not any(
            r.status == "FAIL" and not r.conjectural for r in self.dims
        )

    @property
    def conjectural_flagged(self) -> list[str]:
        return sorted(
            b.block_id for b in self.blocks if b.provenance == "conjectural"
        )


@lru_cache(maxsize=None)
def _sym_power(T, k: int):
    return sym_power_reflection(T, k)


@lru_cache(maxsize=None)
def _tensor_mult(T, tau: int, sigma: int, k: int) -> int:
    """Multiplicity of sigma in tau (x) S^k(h*)."""
    f = tensor(T.class_function(tau), _sym_power(T, k))
    m = inner(f, T.class_function(sigma)).as_rational()
    assert m.denominator == 1 and m >= 0, "non-integral tensor multiplicity"
    return int(m)


def _twist_partner(ds: Dataset, spec):
    """A stored block at the same (group, d) whose members are exactly the
    sign twists of this block's members, if any."""
    T = ds.table(spec.group)
    twisted = {
        T.irr_label(sign_twist(T, T.irr_of(m))) for m in spec.members
    }
    for bid in sorted(ds.blocks):
        s2, dm2 = ds.blocks[bid]
        if (
            bid != spec.block_id
            and s2.group == spec.group
            and s2.d == spec.d
            and set(s2.members) == twisted
        ):
            return s2, dm2
    return None


def _row_vector(dm: DecompMatrix, inv, i: int) -> KVector:
    return KVector.make(
        dm.block.table,
        {m: c for m, c in zip(dm.block.members, inv[i]) if c},
    )


def _min_support_rows(dm: DecompMatrix) -> list[int]:
    supp = [
        s if s is not None else dm.block.table.rank for s in dm.support
    ]
    least = min(supp)
    return [i for i, s in enumerate(supp) if s == least]


def _check(reports: list[Check], name: str, fn) -> None:
    try:
        detail = fn()
    except (ExactError, CatOError, KTheoryError, AssertionError) as e:
        reports.append(Check(name, "FAIL", str(e) or e.__class__.__name__))
    else:
        reports.append(Check(name, "PASS", detail or ""))


def verify_block(ds: Dataset, spec, dm: DecompMatrix) -> BlockReport:
    rep = BlockReport(spec.block_id, spec.provenance)
    checks = rep.checks
    T = dm.block.table
    c = dm.block.param.c
    n = dm.block.size

    def chk_unitriangular():
        dm.validate()

    _check(checks, "unitriangular", chk_unitriangular)

    try:
        inv = dm.inverse()
    except NotUnitriangular as e:
        checks.append(Check("inverse-round-trip", "FAIL", str(e)))
        return rep

    def chk_inverse():
        for i in range(n):
            for j in range(n):
                prod = sum(dm.rows[i][k] * inv[k][j] for k in range(n))
                assert prod == (1 if i == j else 0), (
                    f"(D*D^-1)[{i}][{j}] = {prod}"
                )

    _check(checks, "inverse-round-trip", chk_inverse)

    def chk_line():
        lines = weight_lines(T, c)
        members = set(dm.block.members)
        for line in lines:
            if members <= set(line):
                return f"line of size {len(line)}"
        raise AssertionError("members are not contained in one weight line")

    _check(checks, "weight-line", chk_line)

    chars = []

    def chk_chars():
        for i in range(n):
            ch = simple_character(dm.block, inv[i])  # NegativeLeading -> FAIL
            chars.append(ch)
            want = dm.support[i] if dm.support[i] is not None else T.rank
            assert ch.den_power == want, (
                f"L({spec.members[i]}): support {ch.den_power}, "
                f"annotation says {want}"
            )

    _check(checks, "characters-supports", chk_chars)
    if len(chars) < n:
        return rep

    def chk_positivity():
        # graded dimension series of every simple must be non-negative
        for i, ch in enumerate(chars):
            span = int(dm.block.h[-1] - dm.block.h[0]) + 3
            prefix = ch.series_prefix(span)
            assert all(v >= 0 for v in prefix), (
                f"L({spec.members[i]}): negative graded dimension"
            )

    _check(checks, "graded-positivity", chk_positivity)

    def chk_finite():
        for i, ch in enumerate(chars):
            if dm.support[i] != 0:
                continue
            assert ch.is_palindromic(), (
                f"L({spec.members[i]}): finite character not palindromic"
            )
            h = dm.block.h[i]
            assert h.denominator == 1 and h <= 0, (
                f"L({spec.members[i]}): h_c = {h} not a non-positive integer"
            )

    _check(checks, "finite-rows", chk_finite)

    fusions = [
        F for name, F in sorted(ds.fusions.items()) if F.amb.name == spec.group
    ]

    def chk_res_zero():
        count = 0
        for F in fusions:
            for i in range(n):
                if dm.support[i] != 0:
                    continue
                v = KVector.make(
                    T,
                    {m: coeff for m, coeff in zip(dm.block.members, inv[i]) if coeff},
                )
                r = res_k(F, v)
                assert r.is_zero, (
                    f"L({spec.members[i]}): restriction along {F.name} "
                    "of a finite simple is non-zero"
                )
                count += 1
        return f"{count} restrictions over {len(fusions)} fusions"

    _check(checks, "res-zero", chk_res_zero)

    def chk_tensor_bounds():
        # [M(tau):L(sigma)] is bounded by the multiplicity of sigma in
        # tau (x) S^gap(h*); for gap 1 the bound is attained exactly
        for i in range(n):
            for j in range(i + 1, n):
                gap = dm.block.h[j] - dm.block.h[i]
                if gap <= 0 or gap.denominator != 1:
                    continue
                cap = _tensor_mult(
                    T, dm.block.members[i], dm.block.members[j], int(gap)
                )
                e = dm.rows[i][j]
                assert e <= cap, (
                    f"cell ({i},{j}) = {e} exceeds tensor bound {cap}"
                )
                assert gap != 1 or e == cap, (
                    f"cell ({i},{j}) = {e} differs from the exact "
                    f"h-gap-1 multiplicity {cap}"
                )

    _check(checks, "tensor-bounds", chk_tensor_bounds)

    def chk_twist_duality():
        partner = _twist_partner(ds, spec)
        if partner is None:
            return "no stored twist partner"
        s2, dm2 = partner
        inv2 = dm2.inverse()
        count = 0
        for i in _min_support_rows(dm):
            v = _row_vector(dm, inv, i)
            try:
                sigma, w = symm_dual(dm.block, v)
            except NotMinimal as e:
                raise AssertionError(
                    f"L({spec.members[i]}): {e}"
                ) from None
            lab = T.irr_label(sigma)
            assert lab in s2.members, (
                f"twist of L({spec.members[i]}) leads outside {s2.block_id}"
            )
            j = s2.members.index(lab)
            assert w == _row_vector(dm2, inv2, j), (
                f"L({spec.members[i]}): twisted Verma vector disagrees "
                f"with L({lab}) of {s2.block_id}"
            )
            count += 1
        return f"{count} minimal-support rows against {s2.block_id}"

    _check(checks, "twist-duality", chk_twist_duality)

    def chk_res_peel():
        # restriction of every simple must decompose non-negatively into
        # the stored simples of each sub-block at the same parameter
        count = 0
        for F in fusions:
            subs = ds.blocks_for(F.sub.name, spec.d)
            if not subs:
                continue
            for i in range(n):
                r = res_k(F, _row_vector(dm, inv, i))
                for _s2, dm2 in sorted(subs, key=lambda t: t[0].block_id):
                    try:
                        peel_module(
                            project_block(r, dm2.block),
                            dm2.block,
                            simples_of(dm2),
                        )
                    except (Virtual, Incomplete) as e:
                        raise AssertionError(
                            f"L({spec.members[i]}) along {F.name} into "
                            f"{dm2.block.label}: {e}"
                        ) from None
                    count += 1
        return f"{count} peels"

    _check(checks, "res-peel", chk_res_peel)
    return rep


def verify_dataset(ds: Dataset) -> VerifyReport:
    rep = VerifyReport()
    computed: dict[tuple[str, int, str], tuple[int, str]] = {}
    for bid in sorted(ds.blocks):
        spec, dm = ds.blocks[bid]
        rep.blocks.append(verify_block(ds, spec, dm))
        try:
            inv = dm.inverse()
            for i, a in enumerate(spec.annotations):
                if a == "*":
                    ch = simple_character(dm.block, inv[i])
                    if ch.den_power == 0:
                        computed[(spec.group, spec.d, spec.members[i])] = (
                            ch.numerator.eval_at_one(),
                            spec.provenance,
                        )
        except (ExactError, CatOError):
            pass  # already reported by verify_block

    for group in sorted(ds.dims):
        for e in ds.dims[group].entries:
            key = (group, e.d, e.label)
            if key not in computed:
                rep.dims.append(
                    DimReport(group, e.d, e.label, e.value, "SKIP",
                              e.conjectural, "no block fixture")
                )
                continue
            got, prov = computed[key]
            conj = e.conjectural or prov == "conjectural"
            if got == e.value:
                rep.dims.append(
                    DimReport(group, e.d, e.label, e.value, "PASS", conj)
                )
            else:
                rep.dims.append(
                    DimReport(group, e.d, e.label, e.value, "FAIL", conj,
                              f"computed {got}")
                )

    facts = [f"block:{bid}" for bid in sorted(ds.blocks)]
    facts += [f"dims:{g}" for g in sorted(ds.dims)]
    rep.concordance = [(f, ds.concordance.get(f, "?")) for f in facts]
    return rep


def render_verify_text(rep: VerifyReport) -> str:
    out = ["verify report"]
    for b in rep.blocks:
        out.append(f"block {b.block_id} provenance={b.provenance}")
        for c in b.checks:
            line = f"  check {c.name} {c.status}"
            if c.detail:
                line += f" ({c.detail})"
            out.append(line)
    out.append("dimension table")
    for r in rep.dims:
        line = f"  dim {r.group} d={r.d} L({r.label}) = {r.value} {r.status}"
        if r.conjectural:
            line += " [conjectural]"
        if r.detail:
            line += f" ({r.detail})"
        out.append(line)
    out.append("source concordance")
    for fact, locus in rep.concordance:
        out.append(f"  {fact} section {locus}")
    flagged = rep.conjectural_flagged
    if flagged:
        out.append("conjectural " + " ".join(flagged))
    out.append("result " + ("PASS" if rep.ok else "FAIL"))
    return "\n".join(out) + "\n"


def render_verify_structured(rep: VerifyReport) -> str:
    obj = {
        "blocks": [
            {
                "id": b.block_id,
                "provenance": b.provenance,
                "checks": [
                    {"name": c.name, "status": c.status, "detail": c.detail}
                    for c in b.checks
                ],
            }
            for b in rep.blocks
        ],
        "dims": [
            {
                "group": r.group,
                "d": r.d,
                "label": r.label,
                "value": r.value,
                "status": r.status,
                "conjectural": r.conjectural,
                "detail": r.detail,
            }
            for r in rep.dims
        ],
        "concordance": {fact: locus for fact, locus in rep.concordance},
        "conjectural": rep.conjectural_flagged,
        "result": "PASS" if rep.ok else "FAIL",
    }
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# helpers for the wrapper commands
# ---------------------------------------------------------------------------


def _table(ds: Dataset, group: str):
    try:
        return ds.table(group)
    except (FormatError, KeyError):
        raise InputError(f"unknown group {group!r}") from None


def _find_block(ds: Dataset, group: str, d: int, label: str):
    bid = f"{group}_d{d}_{label}"
    if bid not in ds.blocks:
        raise InputError(f"no block fixture {bid!r}")
    return ds.blocks[bid]


def _fmt_q(x: Fraction) -> str:
    return str(x)


def cmd_hc(ds: Dataset, group: str, d: int) -> str:
    T = _table(ds, group)
    c = Fraction(1, d)
    out = [f"hc {group} d={d}"]
    hs = sorted(
        ((h_weight(T, c, i), T.irr_label(i)) for i in range(len(T.irreducibles))),
        key=lambda t: (t[0], t[1]),
    )
    for h, lab in hs:
        out.append(f"  {lab} {_fmt_q(h)}")
    return "\n".join(out) + "\n"


def cmd_weightlines(ds: Dataset, group: str, d: int) -> str:
    T = _table(ds, group)
    c = Fraction(1, d)
    out = [f"weightlines {group} d={d}"]
    for k, line in enumerate(weight_lines(T, c), 1):
        out.append(f"line {k}")
        for i in line:
            out.append(f"  {T.irr_label(i)} {_fmt_q(h_weight(T, c, i))}")
    return "\n".join(out) + "\n"


def cmd_char(ds: Dataset, group: str, d: int, block: str, label: str) -> str:
    spec, dm = _find_block(ds, group, d, block)
    if label not in spec.members:
        raise InputError(f"no member {label!r} in block {spec.block_id!r}")
    i = spec.members.index(label)
    ch = simple_character(dm.block, dm.inverse()[i])
    out = [f"char L({label}) of {spec.block_id}"]
    out.append(f"  numerator {ch.numerator}")
    out.append(f"  den_power {ch.den_power}")
    if ch.den_power == 0:
        out.append(f"  dim {ch.numerator.eval_at_one()}")
    else:
        out.append(f"  support {ch.den_power}")
    return "\n".join(out) + "\n"


def cmd_dims(ds: Dataset, group: str, d: int) -> str:
    if group not in ds.dims:
        raise InputError(f"no dimension table for group {group!r}")
    entries = [e for e in ds.dims[group].entries if e.d == d]
    if not entries:
        raise InputError(f"no dimension entries for {group} d={d}")
    out = [f"dims {group} d={d}"]
    for e in entries:
        line = f"  L({e.label}) {e.value}"
        if e.conjectural:
            line += " conjectural"
        out.append(line)
    return "\n".join(out) + "\n"


def cmd_complete(
    ds: Dataset,
    group: str,
    d: int,
    block: str,
    rules: str | None,
    bound: int | None,
    budget: int | None,
) -> tuple[str, bool]:
    bid = f"{group}_d{d}_{block}"
    if bid not in ds.blocks:
        raise InputError(f"no block fixture {bid!r}")
    if bid in ds.manifests:
        spec = ds.manifests[bid]
    else:
        spec = ManifestSpec(bid, None, ("RR", "DIMHOM"), 3, (), (), ())
    if rules is not None:
        parts = (
            tuple(RULE_KINDS)
            if rules == "all"
            else tuple(r for r in rules.split(",") if r)
        )
        for r in parts:
            if r not in RULE_KINDS and r != "TENSOR":
                raise InputError(f"unknown rule {r!r}")
        spec = ManifestSpec(
            spec.block_id, spec.dual_block_id, parts, spec.bound,
            spec.fusions, spec.ind_checks, spec.pins, spec.row_pins,
            spec.res_checks, spec.supp_pins,
        )
    if bound is not None:
        spec = ManifestSpec(
            spec.block_id, spec.dual_block_id, spec.rules, bound,
            spec.fusions, spec.ind_checks, spec.pins, spec.row_pins,
            spec.res_checks, spec.supp_pins,
        )
    report = manifest_mod.verify(ds, spec, budget or 2_000_000)
    out = [f"complete {bid}"]
    out.append("  rules " + " ".join(spec.rules))
    if spec.dual_block_id:
        out.append(f"  dual {spec.dual_block_id}")
    if spec.pins:
        out.append(
            "  external-input pins: "
            + " ".join(f"dim L({m})={v}" for m, v in spec.pins)
        )
    out.append(f"  status {report.status}")
    if report.matches is not None:
        out.append("  matches-fixture " + ("yes" if report.matches else "no"))
    out.append(f"  nodes {report.nodes}")
    for w in report.warnings:
        out.append(f"  warning {w}")
    return "\n".join(out) + "\n", report.ok


def cmd_ind_res(ds: Dataset, op: str, fusion: str, kvfile: str) -> str:
    if fusion not in ds.fusions:
        raise InputError(f"unknown fusion {fusion!r}")
    F = ds.fusions[fusion]
    try:
        with open(kvfile, encoding="utf-8") as f:
            spec = parse_kvector(f.read())
    except OSError as e:
        raise InputError(f"cannot read {kvfile!r}: {e}") from None
    except FormatError as e:
        raise InputError(str(e)) from None
    src = F.sub if op == "ind" else F.amb
    if spec.group != src.name:
        raise InputError(
            f"kvector lives on {spec.group!r}; {op} along {fusion!r} "
            f"needs {src.name!r}"
        )
    try:
        v = KVector.make(src, {src.irr_of(lab): c for lab, c in spec.coeffs})
    except UnknownLabel as e:
        raise InputError(str(e)) from None
    w = (ind_k if op == "ind" else res_k)(F, v)
    dst = w.table
    out = KVectorSpec(
        f"{op}_{fusion}_{spec.name}",
        dst.name,
        tuple((dst.irr_label(i), c) for i, c in w.coeffs),
    )
    return format_kvector(out)


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rcao",
        description="Exact verification and computation for Category O "
        "decomposition data of exceptional Coxeter groups.",
    )
    p.add_argument(
        "--dataset",
        default=DEFAULT_DATASET,
        help="dataset root directory (default: packaged data)",
    )
    p.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        dest="fmt",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="run the verification suite")
    sp.add_argument("dir", nargs="?", help="dataset directory (overrides --dataset)")

    for name in ("hc", "weightlines", "dims"):
        sp = sub.add_parser(name)
        sp.add_argument("group")
        sp.add_argument("d", type=int)

    sp = sub.add_parser("char")
    sp.add_argument("group")
    sp.add_argument("d", type=int)
    sp.add_argument("block")
    sp.add_argument("label")

    sp = sub.add_parser("complete")
    sp.add_argument("group")
    sp.add_argument("d", type=int)
    sp.add_argument("block")
    sp.add_argument("--rules")
    sp.add_argument("--bound", type=int)
    sp.add_argument("--budget", type=int)

    for name in ("ind", "res"):
        sp = sub.add_parser(name)
        sp.add_argument("fusion")
        sp.add_argument("kvfile", metavar="kvector-file")

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    root = args.dataset
    if args.command == "verify" and args.dir:
        root = args.dir
    try:
        ds = load_dataset(root)
    except (OSError, TableError, ExactError, CatOError, LemmaError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    try:
        if args.command == "verify":
            rep = verify_dataset(ds)
            if args.fmt == "structured":
                sys.stdout.write(render_verify_structured(rep))
            else:
                sys.stdout.write(render_verify_text(rep))
            return EXIT_OK if rep.ok else EXIT_FAIL
        if args.command == "hc":
            sys.stdout.write(cmd_hc(ds, args.group, args.d))
            return EXIT_OK
        if args.command == "weightlines":
            sys.stdout.write(cmd_weightlines(ds, args.group, args.d))
            return EXIT_OK
        if args.command == "char":
            sys.stdout.write(cmd_char(ds, args.group, args.d, args.block, args.label))
            return EXIT_OK
        if args.command == "dims":
            sys.stdout.write(cmd_dims(ds, args.group, args.d))
            return EXIT_OK
        if args.command == "complete":
            text, ok = cmd_complete(
                ds, args.group, args.d, args.block,
                args.rules, args.bound, args.budget,
            )
            sys.stdout.write(text)
            return EXIT_OK if ok else EXIT_FAIL
        if args.command in ("ind", "res"):
            sys.stdout.write(cmd_ind_res(ds, args.command, args.fusion, args.kvfile))
            return EXIT_OK
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (TableError, ExactError, CatOError, KTheoryError, LemmaError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
