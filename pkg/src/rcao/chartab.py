"""Character tables of finite Coxeter groups and class-function algebra.

A table carries conjugacy classes with prime power maps, exact irreducible
characters over Q(sqrt5), the reflection data (reflection classes and the
character of the reflection representation), and the fundamental degrees.
Class functions support inner products, tensor products, symmetric powers of
the reflection representation, and Frobenius induction/restriction along
fusion maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import QR_ONE, QR_ZERO, QuadRat


class TableError(Exception):
    pass


class FormatError(TableError):
    pass


class OrthogonalityError(TableError):
    pass


class PowerMapError(TableError):
    pass


class PowerMapIncomplete(TableError):
    pass


class TableMismatch(TableError):
    pass


class NotIrreducible(TableError):
    pass


class UnknownLabel(TableError):
    pass


@dataclass(frozen=True)
class ConjClass:
    label: str
    size: int
    power_map: tuple[tuple[int, int], ...]  # (prime, class index), sorted

    def power_prime(self, p: int) -> int | None:
        for q, j in self.power_map:
            if q == p:
                return j
        return None


@dataclass(frozen=True)
class Irreducible:
    label: str
    values: tuple[QuadRat, ...]

    @property
    def dim_value(self) -> QuadRat:
        return self.values[0]


def _factorize(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class CharacterTable:
    def __init__(
        self,
        name: str,
        order: int,
        rank: int,
        degrees: Sequence[int],
        classes: Sequence[ConjClass],
        irreducibles: Sequence[Irreducible],
        reflection_classes: Sequence[int],
        trivial_rep: int,
        sign_rep: int,
        reflection_rep: int | None,
        reflection_character: Sequence[QuadRat] | None = None,
        validate: bool = True,
    ):
        self.name = name
        self.order = order
        self.rank = rank
        self.degrees = tuple(degrees)
        self.classes = tuple(classes)
        self.irreducibles = tuple(irreducibles)
        self.reflection_classes = tuple(reflection_classes)
        self.trivial_rep = trivial_rep
        self.sign_rep = sign_rep
        self.reflection_rep = reflection_rep
        if reflection_character is not None:
            self._refl_char = tuple(reflection_character)
        elif reflection_rep is not None:
            self._refl_char = self.irreducibles[reflection_rep].values
        else:
            raise FormatError("no reflection representation given")
        self._class_index = {c.label: i for i, c in enumerate(self.classes)}
        self._irr_index = {x.label: i for i, x in enumerate(self.irreducibles)}
        if validate:
            self._validate()

    # -- lookups ----------------------------------------------------------

    def class_of(self, label: str) -> int:
        try:
            return self._class_index[label]
        except KeyError:
            raise UnknownLabel(f"{self.name}: unknown class {label!r}") from None

    def irr_of(self, label: str) -> int:
        try:
            return self._irr_index[label]
        except KeyError:
            raise UnknownLabel(f"{self.name}: unknown irreducible {label!r}") from None

    def irr_label(self, i: int) -> str:
        return self.irreducibles[i].label

    def dim(self, i: int) -> int:
        v = self.irreducibles[i].dim_value
        if not v.is_rational or v.a.denominator != 1:
            raise FormatError(f"{self.name}: non-integer dimension for {self.irr_label(i)}")
        return int(v.a)

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def reflection_count(self) -> int:
        return sum(self.classes[i].size for i in self.reflection_classes)

    def reflection_character(self) -> "ClassFunction":
        return ClassFunction(self, self._refl_char)

    def class_function(self, i: int) -> "ClassFunction":
        return ClassFunction(self, self.irreducibles[i].values)

    # -- power maps --------------------------------------------------------

    def power_class(self, class_index: int, k: int) -> int:
        """Class of g^k, composing prime power maps."""
        if k == 0:
            return 0
        j = class_index
        for p in _factorize(k):
            nxt = self.classes[j].power_prime(p)
            if nxt is None:
                raise PowerMapIncomplete(
                    f"{self.name}: class {self.classes[j].label} lacks power map for prime {p}"
                )
            j = nxt
        return j

    # -- validation --------------------------------------------------------

    def _validate(self) -> None:
        if self.classes[0].size != 1:
            raise FormatError(f"{self.name}: first class must be the identity")
        if sum(c.size for c in self.classes) != self.order:
            raise FormatError(f"{self.name}: class sizes do not sum to the order")
        if len(self.irreducibles) != len(self.classes):
            raise FormatError(f"{self.name}: class/irreducible count mismatch")
        dimsq = sum(self.dim(i) ** 2 for i in range(len(self.irreducibles)))
        if dimsq != self.order:
            raise OrthogonalityError(f"{self.name}: sum of squared dimensions != order")
        for i, x in enumerate(self.irreducibles):
            for j in range(i, len(self.irreducibles)):
                y = self.irreducibles[j]
                s = QR_ZERO
                for c, cls in enumerate(self.classes):
                    s = s + cls.size * x.values[c] * y.values[c]
                want = QuadRat.of(self.order) if i == j else QR_ZERO
                if s != want:
                    raise OrthogonalityError(
                        f"{self.name}: row orthogonality fails for {x.label}, {y.label}"
                    )
        for c, cls in enumerate(self.classes):
            for p, j in cls.power_map:
                if not (0 <= j < len(self.classes)):
                    raise PowerMapError(f"{self.name}: power map of {cls.label} out of range")
                if c == 0 and j != 0:
                    raise PowerMapError(f"{self.name}: identity power map broken")
        if self._refl_char[0] != QuadRat.of(self.rank):
            raise FormatError(f"{self.name}: reflection character has wrong dimension")
        sgn = self.irreducibles[self.sign_rep].values
        for c in range(len(self.classes)):
            if sgn[c] * sgn[c] != QR_ONE:
                raise FormatError(f"{self.name}: sign character not of order 2")
        triv = self.irreducibles[self.trivial_rep].values
        if any(v != QR_ONE for v in triv):
            raise FormatError(f"{self.name}: trivial character is wrong")
        for c in self.reflection_classes:
            if sgn[c] != QuadRat.of(-1):
                raise FormatError(f"{self.name}: reflection class with sign != -1")

    def __repr__(self) -> str:
        return f"CharacterTable({self.name}, order={self.order}, classes={self.n_classes})"


class ClassFunction:
    def __init__(self, table: CharacterTable, values: Iterable[QuadRat]):
        self.table = table
        self.values = tuple(values)
        if len(self.values) != table.n_classes:
            raise TableMismatch("class function has wrong length")

    def _check(self, other: "ClassFunction") -> None:
        if self.table is not other.table:
            raise TableMismatch(
                f"tables differ: {self.table.name} vs {other.table.name}"
            )

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.table, (a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.table, (a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "ClassFunction":
        return ClassFunction(self.table, (-a for a in self.values))

    def scale(self, x) -> "ClassFunction":
        return ClassFunction(self.table, (a * x for a in self.values))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassFunction)
            and self.table is other.table
            and self.values == other.values
        )

    def __hash__(self):
        return hash((id(self.table), self.values))


def inner(f: ClassFunction, g: ClassFunction) -> QuadRat:
    """(1/|G|) sum_C |C| f(C) g(C); all characters here are real-valued."""
    f._check(g)
    T = f.table
    s = QR_ZERO
    for cls, a, b in zip(T.classes, f.values, g.values):
        s = s + cls.size * a * b
    return s * QuadRat.of(Fraction(1, T.order))


def tensor(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    f._check(g)
    return ClassFunction(f.table, (a * b for a, b in zip(f.values, g.values)))


def decompose(f: ClassFunction) -> dict[int, Fraction]:
    """Multiplicities of each irreducible in f (rational; integer for characters)."""
    out: dict[int, Fraction] = {}
    for i in range(f.table.n_classes):
        m = inner(f, f.table.class_function(i))
        if m:
            if not m.is_rational:
                raise TableError("irrational multiplicity")
            out[i] = m.a
    return out


def decompose_integral(f: ClassFunction) -> dict[int, int]:
    out = {}
    for i, m in decompose(f).items():
        if m.denominator != 1:
            raise TableError(f"non-integral multiplicity {m} of {f.table.irr_label(i)}")
        out[i] = int(m)
    return out


def sign_twist(T: CharacterTable, i: int) -> int:
    """Index of the irreducible chi_i * sign."""
    sgn = T.irreducibles[T.sign_rep].values
    target = tuple(a * b for a, b in zip(T.irreducibles[i].values, sgn))
    for j, x in enumerate(T.irreducibles):
        if x.values == target:
            return j
    raise NotIrreducible(f"{T.name}: sign twist of {T.irr_label(i)} not in the table")


def sym_power_reflection(T: CharacterTable, k: int) -> ClassFunction:
    """Character of S^k of the reflection representation.

    Newton's identity k*h_k = sum_{i=1..k} p_i h_{k-i} with power sums
    p_i(g) = chi_refl(g^i) evaluated through the class power maps.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    refl = T._refl_char
    n = T.n_classes
    h: list[list[QuadRat]] = [[QR_ONE] * n]
    p: list[list[QuadRat]] = [[]]
    for i in range(1, k + 1):
        p.append([refl[T.power_class(c, i)] for c in range(n)])
        row = []
        inv = QuadRat.of(Fraction(1, i))
        for c in range(n):
            s = QR_ZERO
            for j in range(1, i + 1):
                s = s + p[j][c] * h[i - j][c]
            row.append(s * inv)
        h.append(row)
    return ClassFunction(T, h[k])


@dataclass(frozen=True)
class FusionMap:
    name: str
    sub: CharacterTable
    amb: CharacterTable
    class_map: tuple[int, ...]

    def validate(self) -> None:
        if len(self.class_map) != self.sub.n_classes:
            raise FormatError(f"fusion {self.name}: class map has wrong length")
        if self.class_map[0] != 0:
            raise PowerMapError(f"fusion {self.name}: identity does not map to identity")
        for j in self.class_map:
            if not (0 <= j < self.amb.n_classes):
                raise FormatError(f"fusion {self.name}: class map index out of range")
        for c in range(self.sub.n_classes):
            for p, cp in self.sub.classes[c].power_map:
                ap = self.amb.classes[self.class_map[c]].power_prime(p)
                if ap is not None and ap != self.class_map[cp]:
                    raise PowerMapError(
                        f"fusion {self.name}: power map for prime {p} does not commute "
                        f"at sub class {self.sub.classes[c].label}"
                    )
        # The induced trivial character must be a genuine permutation character.
        perm = induce(self, self.sub.class_function(self.sub.trivial_rep))
        mults = decompose_integral(perm)
        if any(m < 0 for m in mults.values()):
            raise FormatError(f"fusion {self.name}: induced trivial is not a character")
        if mults.get(self.amb.trivial_rep) != 1:
            raise FormatError(f"fusion {self.name}: induced trivial misses the trivial once")


def restrict(F: FusionMap, g: ClassFunction) -> ClassFunction:
    if g.table is not F.amb:
        raise TableMismatch("restrict: class function not on the ambient table")
    return ClassFunction(F.sub, (g.values[j] for j in F.class_map))


def induce(F: FusionMap, f: ClassFunction) -> ClassFunction:
    if f.table is not F.sub:
        raise TableMismatch("induce: class function not on the sub table")
    index = Fraction(F.amb.order, F.sub.order)
    sums = [QR_ZERO] * F.amb.n_classes
    for c, j in enumerate(F.class_map):
        sums[j] = sums[j] + F.sub.classes[c].size * f.values[c]
    vals = [
        s * QuadRat.of(index / F.amb.classes[j].size) for j, s in enumerate(sums)
    ]
    return ClassFunction(F.amb, vals)


def product_table(factors: Sequence[CharacterTable], name: str) -> CharacterTable:
    """Direct-product table: classes and irreducibles are tuples of the factors'.

    Labels of classes and irreducibles are the factor labels joined by '*'.
    """
    if not factors:
        raise ValueError("empty product")
    import itertools

    order = 1
    rank = 0
    degrees: list[int] = []
    for T in factors:
        order *= T.order
        rank += T.rank
        degrees.extend(T.degrees)

    combos = list(itertools.product(*[range(T.n_classes) for T in factors]))
    cindex = {c: i for i, c in enumerate(combos)}
    classes = []
    for combo in combos:
        size = 1
        primes: set[int] = set()
        for T, c in zip(factors, combo):
            size *= T.classes[c].size
            primes.update(p for p, _ in T.classes[c].power_map)
        pm = []
        for p in sorted(primes):
            try:
                target = tuple(
                    T.power_class(c, p) for T, c in zip(factors, combo)
                )
            except PowerMapIncomplete:
                continue
            pm.append((p, cindex[target]))
        label = "*".join(T.classes[c].label for T, c in zip(factors, combo))
        classes.append(ConjClass(label, size, tuple(pm)))

    icombos = list(itertools.product(*[range(len(T.irreducibles)) for T in factors]))
    iindex = {c: i for i, c in enumerate(icombos)}
    irreducibles = []
    for combo in icombos:
        label = "*".join(T.irr_label(i) for T, i in zip(factors, combo))
        values = []
        for ccombo in combos:
            v = QR_ONE
            for T, i, c in zip(factors, combo, ccombo):
                v = v * T.irreducibles[i].values[c]
            values.append(v)
        irreducibles.append(Irreducible(label, tuple(values)))

    refl_classes = []
    for ci, ccombo in enumerate(combos):
        nonid = [k for k, c in enumerate(ccombo) if c != 0]
        if len(nonid) == 1 and ccombo[nonid[0]] in factors[nonid[0]].reflection_classes:
            refl_classes.append(ci)
    # The reflection representation of a product is the sum of the pullbacks
    # of the factor reflection representations.
    refl_char = []
    for ccombo in combos:
        v = QR_ZERO
        for T, c in zip(factors, ccombo):
            v = v + T._refl_char[c]
        refl_char.append(v)

    trivial = iindex[tuple(T.trivial_rep for T in factors)]
    sign = iindex[tuple(T.sign_rep for T in factors)]
    return CharacterTable(
        name=name,
        order=order,
        rank=rank,
        degrees=degrees,
        classes=classes,
        irreducibles=irreducibles,
        reflection_classes=refl_classes,
        trivial_rep=trivial,
        sign_rep=sign,
        reflection_rep=None,
        reflection_character=refl_char,
    )
