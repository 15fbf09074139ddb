"""Parsers and writers for the on-disk dataset.

All files are whitespace-separated text with ``#`` comments.  See
``docs/formats.md`` for the exact grammar.  Character values are encoded as
``a_num/a_den;b_num/b_den`` meaning a + b*sqrt5, always with explicit
denominators in generated files; the parser also accepts the shorthands
``a_num`` and ``a_num/a_den``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .cato import Block, DecompMatrix, Parameter
from .chartab import (
    CharacterTable,
    ConjClass,
    FormatError,
    FusionMap,
    Irreducible,
    product_table,
)
from .exact import QuadRat
from .ktheory import KVector


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_value(tok: str) -> QuadRat:
    a, _, b = tok.partition(";")

    def rat(s: str) -> Fraction:
        num, _, den = s.partition("/")
        return Fraction(int(num), int(den) if den else 1)

    return QuadRat(rat(a), rat(b) if b else Fraction(0))


def format_value(v: QuadRat) -> str:
    return (
        f"{v.a.numerator}/{v.a.denominator};{v.b.numerator}/{v.b.denominator}"
    )


def parse_table(text: str) -> CharacterTable:
    fields: dict[str, object] = {}
    classes: list[ConjClass] = []
    irreducibles: list[Irreducible] = []
    for lineno, toks in _tokens(text):
        key = toks[0]
        try:
            if key == "group":
                fields["name"] = toks[1]
            elif key == "order":
                fields["order"] = int(toks[1])
            elif key == "rank":
                fields["rank"] = int(toks[1])
            elif key == "degrees":
                fields["degrees"] = [int(t) for t in toks[1:]]
            elif key == "reflection_classes":
                fields["reflection_classes"] = [int(t) for t in toks[1:]]
            elif key == "trivial":
                fields["trivial_rep"] = int(toks[1])
            elif key == "sign":
                fields["sign_rep"] = int(toks[1])
            elif key == "reflection":
                fields["reflection_rep"] = None if toks[1] == "-" else int(toks[1])
            elif key == "reflection_character":
                fields["reflection_character"] = [parse_value(t) for t in toks[1:]]
            elif key == "class":
                label, size = toks[1], int(toks[2])
                pm = []
                for t in toks[3:]:
                    p, _, j = t.partition(":")
                    pm.append((int(p), int(j)))
                classes.append(ConjClass(label, size, tuple(sorted(pm))))
            elif key == "irreducible":
                label = toks[1]
                values = tuple(parse_value(t) for t in toks[2:])
                irreducibles.append(Irreducible(label, values))
            else:
                raise FormatError(f"line {lineno}: unknown key {key!r}")
        except (IndexError, ValueError) as e:
            raise FormatError(f"line {lineno}: {e}") from None
    try:
        return CharacterTable(
            name=fields["name"],  # type: ignore[arg-type]
            order=fields["order"],  # type: ignore[arg-type]
            rank=fields["rank"],  # type: ignore[arg-type]
            degrees=fields["degrees"],  # type: ignore[arg-type]
            classes=classes,
            irreducibles=irreducibles,
            reflection_classes=fields["reflection_classes"],  # type: ignore[arg-type]
            trivial_rep=fields["trivial_rep"],  # type: ignore[arg-type]
            sign_rep=fields["sign_rep"],  # type: ignore[arg-type]
            reflection_rep=fields["reflection_rep"],  # type: ignore[arg-type]
            reflection_character=fields.get("reflection_character"),  # type: ignore[arg-type]
        )
    except KeyError as e:
        raise FormatError(f"missing header field {e}") from None


def format_table(T: CharacterTable) -> str:
    out = [
        f"group {T.name}",
        f"order {T.order}",
        f"rank {T.rank}",
        "degrees " + " ".join(map(str, T.degrees)),
        "reflection_classes " + " ".join(map(str, T.reflection_classes)),
        f"trivial {T.trivial_rep}",
        f"sign {T.sign_rep}",
        f"reflection {'-' if T.reflection_rep is None else T.reflection_rep}",
    ]
    if T.reflection_rep is None:
        vals = " ".join(format_value(v) for v in T.reflection_character().values)
        out.append(f"reflection_character {vals}")
    for c in T.classes:
        pm = " ".join(f"{p}:{j}" for p, j in c.power_map)
        out.append(f"class {c.label} {c.size} {pm}".rstrip())
    for x in T.irreducibles:
        vals = " ".join(format_value(v) for v in x.values)
        out.append(f"irreducible {x.label} {vals}")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class FusionSpec:
    name: str
    sub: str
    amb: str
    class_map: tuple[int, ...]


def parse_fusion(text: str) -> FusionSpec:
    name = sub = amb = None
    cmap: list[int] = []
    for lineno, toks in _tokens(text):
        if toks[0] == "fusion":
            name = toks[1]
        elif toks[0] == "sub":
            sub = toks[1]
        elif toks[0] == "amb":
            amb = toks[1]
        elif toks[0] == "map":
            cmap.extend(int(t) for t in toks[1:])
        else:
            raise FormatError(f"line {lineno}: unknown key {toks[0]!r}")
    if not (name and sub and amb):
        raise FormatError("fusion file missing name/sub/amb")
    return FusionSpec(name, sub, amb, tuple(cmap))


def format_fusion(spec: FusionSpec) -> str:
    out = [f"fusion {spec.name}", f"sub {spec.sub}", f"amb {spec.amb}"]
    cmap = list(spec.class_map)
    for k in range(0, len(cmap), 20):
        out.append("map " + " ".join(map(str, cmap[k : k + 20])))
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class BlockSpec:
    group: str
    d: int
    label: str
    provenance: str
    members: tuple[str, ...]
    annotations: tuple[str, ...]  # "*", "(k)", or "-"
    rows: tuple[tuple[int, ...], ...]
    hecke: tuple[str, ...]
    defect_one: bool

    @property
    def block_id(self) -> str:
        return f"{self.group}_d{self.d}_{self.label}"


def parse_block(text: str) -> BlockSpec:
    fields: dict[str, object] = {"provenance": "verified", "defect": False}
    members: list[str] = []
    annotations: list[str] = []
    hecke: list[str] = []
    rows: list[tuple[int, ...]] = []
    in_matrix = False
    for lineno, toks in _tokens(text):
        if in_matrix:
            rows.append(tuple(int(t) for t in toks))
            continue
        key = toks[0]
        if key == "group":
            fields["group"] = toks[1]
        elif key == "d":
            fields["d"] = int(toks[1])
        elif key == "block":
            fields["label"] = toks[1]
        elif key == "provenance":
            fields["provenance"] = toks[1]
        elif key == "defect":
            fields["defect"] = toks[1] == "1"
        elif key == "member":
            members.append(toks[1])
            annotations.append(toks[2] if len(toks) > 2 else "-")
        elif key == "hecke":
            hecke.extend(toks[1:])
        elif key == "matrix":
            in_matrix = True
        else:
            raise FormatError(f"line {lineno}: unknown key {key!r}")
    try:
        return BlockSpec(
            group=fields["group"],  # type: ignore[arg-type]
            d=fields["d"],  # type: ignore[arg-type]
            label=fields["label"],  # type: ignore[arg-type]
            provenance=fields["provenance"],  # type: ignore[arg-type]
            members=tuple(members),
            annotations=tuple(annotations),
            rows=tuple(rows),
            hecke=tuple(hecke),
            defect_one=bool(fields["defect"]),
        )
    except KeyError as e:
        raise FormatError(f"block file missing field {e}") from None


def format_block(spec: BlockSpec) -> str:
    out = [
        f"group {spec.group}",
        f"d {spec.d}",
        f"block {spec.label}",
        f"provenance {spec.provenance}",
    ]
    if spec.defect_one:
        out.append("defect 1")
    for m, a in zip(spec.members, spec.annotations):
        out.append(f"member {m} {a}")
    if spec.hecke:
        out.append("hecke " + " ".join(spec.hecke))
    out.append("matrix")
    for row in spec.rows:
        out.append(" ".join(map(str, row)))
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class KVectorSpec:
    name: str
    group: str
    coeffs: tuple[tuple[str, int], ...]


def parse_kvector(text: str) -> KVectorSpec:
    name = group = None
    coeffs: list[tuple[str, int]] = []
    for lineno, toks in _tokens(text):
        if toks[0] == "kvector":
            name = toks[1]
        elif toks[0] == "group":
            group = toks[1]
        elif len(toks) == 2:
            coeffs.append((toks[0], int(toks[1])))
        else:
            raise FormatError(f"line {lineno}: bad kvector line")
    if not (name and group):
        raise FormatError("kvector file missing name/group")
    return KVectorSpec(name, group, tuple(coeffs))


def format_kvector(spec: KVectorSpec) -> str:
    out = [f"kvector {spec.name}", f"group {spec.group}"]
    out.extend(f"{label} {c}" for label, c in spec.coeffs)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class DimEntry:
    d: int
    label: str
    value: int
    conjectural: bool


@dataclass(frozen=True)
class DimsSpec:
    """The table of finite-dimensional simples of one group: for each
    denominator d, the lowest weights with dim L_{1/d}(tau) finite and the
    dimensions themselves."""

    group: str
    entries: tuple[DimEntry, ...]


def parse_dims(text: str) -> DimsSpec:
    group = None
    entries: list[DimEntry] = []
    for lineno, toks in _tokens(text):
        if toks[0] == "group":
            group = toks[1]
        elif toks[0] == "dim":
            conj = len(toks) > 4 and toks[4] == "conjectural"
            entries.append(DimEntry(int(toks[1]), toks[2], int(toks[3]), conj))
        else:
            raise FormatError(f"line {lineno}: unknown key {toks[0]!r}")
    if group is None:
        raise FormatError("dims file missing group")
    return DimsSpec(group, tuple(entries))


def format_dims(spec: DimsSpec) -> str:
    out = [f"group {spec.group}"]
    for e in spec.entries:
        tail = " conjectural" if e.conjectural else ""
        out.append(f"dim {e.d} {e.label} {e.value}{tail}")
    return "\n".join(out) + "\n"


def parse_concordance(text: str) -> dict[str, str]:
    """Fixture id -> locus string in the source of the transcribed data."""
    loci: dict[str, str] = {}
    for lineno, toks in _tokens(text):
        if toks[0] != "locus" or len(toks) != 3:
            raise FormatError(f"line {lineno}: bad concordance line")
        loci[toks[1]] = toks[2]
    return loci


def format_concordance(loci: dict[str, str]) -> str:
    return "".join(f"locus {k} {v}\n" for k, v in sorted(loci.items()))


@dataclass(frozen=True)
class ManifestSpec:
    """Constraint manifest: rules and data for completing one block (or pair)."""

    block_id: str
    dual_block_id: Optional[str]
    rules: tuple[str, ...]
    bound: int
    fusions: tuple[str, ...]
    ind_checks: tuple[tuple[str, str], ...]  # (fusion name, kvector name)
    pins: tuple[tuple[str, int], ...]  # (member label, dimension)
    row_pins: tuple[tuple[str, tuple[int, ...]], ...] = ()  # (member, row)
    res_checks: tuple[str, ...] = ()  # fusion names
    supp_pins: tuple[tuple[str, int], ...] = ()  # (member label, support dim)


def parse_manifest(text: str) -> ManifestSpec:
    block_id = None
    dual = None
    rules: tuple[str, ...] = ()
    bound = 3
    fusions: list[str] = []
    ind_checks: list[tuple[str, str]] = []
    pins: list[tuple[str, int]] = []
    row_pins: list[tuple[str, tuple[int, ...]]] = []
    res_checks: list[str] = []
    supp_pins: list[tuple[str, int]] = []
    for lineno, toks in _tokens(text):
        key = toks[0]
        if key == "block":
            block_id = toks[1]
        elif key == "dual":
            dual = toks[1]
        elif key == "rules":
            rules = tuple(toks[1:])
        elif key == "bound":
            bound = int(toks[1])
        elif key == "fusion":
            fusions.append(toks[1])
        elif key == "ind":
            ind_checks.append((toks[1], toks[2]))
        elif key == "pin":
            pins.append((toks[1], int(toks[2])))
        elif key == "rowpin":
            row_pins.append((toks[1], tuple(int(t) for t in toks[2:])))
        elif key == "res":
            res_checks.append(toks[1])
        elif key == "supportpin":
            supp_pins.append((toks[1], int(toks[2])))
        else:
            raise FormatError(f"line {lineno}: unknown key {key!r}")
    if block_id is None:
        raise FormatError("manifest missing block id")
    return ManifestSpec(
        block_id, dual, rules, bound, tuple(fusions), tuple(ind_checks),
        tuple(pins), tuple(row_pins), tuple(res_checks), tuple(supp_pins),
    )


def format_manifest(spec: ManifestSpec) -> str:
    out = [f"block {spec.block_id}"]
    if spec.dual_block_id:
        out.append(f"dual {spec.dual_block_id}")
    if spec.rules:
        out.append("rules " + " ".join(spec.rules))
    out.append(f"bound {spec.bound}")
    out.extend(f"fusion {f}" for f in spec.fusions)
    out.extend(f"ind {f} {kv}" for f, kv in spec.ind_checks)
    out.extend(f"res {f}" for f in spec.res_checks)
    out.extend(f"pin {m} {n}" for m, n in spec.pins)
    out.extend(f"supportpin {m} {n}" for m, n in spec.supp_pins)
    out.extend(
        f"rowpin {m} " + " ".join(map(str, row)) for m, row in spec.row_pins
    )
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Dataset
# ---------------------------------------------------------------------------

DEFAULT_DATASET = os.path.join(os.path.dirname(__file__), "data")


@dataclass
class Dataset:
    tables: dict[str, CharacterTable] = field(default_factory=dict)
    fusions: dict[str, FusionMap] = field(default_factory=dict)
    blocks: dict[str, tuple[BlockSpec, DecompMatrix]] = field(default_factory=dict)
    kvectors: dict[str, KVector] = field(default_factory=dict)
    manifests: dict[str, ManifestSpec] = field(default_factory=dict)
    dims: dict[str, DimsSpec] = field(default_factory=dict)
    concordance: dict[str, str] = field(default_factory=dict)

    def table(self, name: str) -> CharacterTable:
        """Table by name; product-group names like A2xA1 are assembled on
        demand from their factors."""
        if name in self.tables:
            return self.tables[name]
        if "x" in name:
            factors = [self.tables[f] for f in name.split("x") if f]
            T = product_table(factors, name)
            self.tables[name] = T
            return T
        raise FormatError(f"unknown table {name!r}")

    def blocks_for(self, group: str, d: int) -> list[tuple[BlockSpec, DecompMatrix]]:
        return [
            (spec, dm)
            for spec, dm in self.blocks.values()
            if spec.group == group and spec.d == d
        ]


def _block_to_matrix(ds: Dataset, spec: BlockSpec) -> DecompMatrix:
    T = ds.table(spec.group)
    param = Parameter(Fraction(1, spec.d))
    members = tuple(T.irr_of(m) for m in spec.members)
    block = Block(T, param, spec.block_id, members)
    finite = []
    support: list[Optional[int]] = []
    for a in spec.annotations:
        if a == "*":
            finite.append(True)
            support.append(0)
        elif a.startswith("(") and a.endswith(")"):
            finite.append(False)
            support.append(int(a[1:-1]))
        elif a == "-":
            finite.append(False)
            support.append(None)
        else:
            raise FormatError(f"block {spec.block_id}: bad annotation {a!r}")
    hecke = tuple(spec.members.index(h) for h in spec.hecke)
    dm = DecompMatrix(
        block=block,
        rows=spec.rows,
        finite=tuple(finite),
        support=tuple(support),
        provenance=spec.provenance,
        hecke_columns=hecke,
        defect_one=spec.defect_one,
    )
    return dm


def load_dataset(root: str = DEFAULT_DATASET) -> Dataset:
    ds = Dataset()

    def read(path):
        with open(path, encoding="utf-8") as f:
            return f.read()

    def walk(sub: str, ext: str):
        base = os.path.join(root, sub)
        if not os.path.isdir(base):
            return
        for dirpath, _dirs, files in os.walk(base):
            for fn in sorted(files):
                if fn.endswith(ext):
                    yield os.path.join(dirpath, fn)

    for path in walk("tables", ".tbl"):
        T = parse_table(read(path))
        ds.tables[T.name] = T
    for path in walk("fusions", ".fus"):
        spec = parse_fusion(read(path))
        F = FusionMap(spec.name, ds.table(spec.sub), ds.table(spec.amb), spec.class_map)
        F.validate()
        ds.fusions[spec.name] = F
    for path in walk("blocks", ".blk"):
        spec = parse_block(read(path))
        ds.blocks[spec.block_id] = (spec, _block_to_matrix(ds, spec))
    for path in walk("kvectors", ".kv"):
        spec = parse_kvector(read(path))
        T = ds.table(spec.group)
        ds.kvectors[spec.name] = KVector.make(
            T, {T.irr_of(label): c for label, c in spec.coeffs}
        )
    for path in walk("manifests", ".man"):
        spec = parse_manifest(read(path))
        ds.manifests[spec.block_id] = spec
    for path in walk("dims", ".dim"):
        spec = parse_dims(read(path))
        ds.dims[spec.group] = spec
    conc = os.path.join(root, "concordance.txt")
    if os.path.isfile(conc):
        ds.concordance = parse_concordance(read(conc))
    return ds
