"""Finite measurable spaces, set functions and maxitive/additive measures.

A :class:`Space` is a finite list of atom labels carrying its full power set
as sigma-algebra.  Measurable sets are plain ``int`` bitmasks: bit ``i`` is
set when atom ``i`` belongs to the set, ``0`` is the empty set and
``space.full`` is the whole space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .extrat import ONE, ZERO, ExtRat, ext

__all__ = [
    "MAX_ATOMS",
    "MeasureError",
    "DuplicateLabel",
    "EmptyLabelList",
    "TooManyAtoms",
    "UnknownAtom",
    "MissingAtomValue",
    "SpaceMismatch",
    "Verdict",
    "Space",
    "SetFunction",
    "MaxitiveMeasure",
    "AdditiveMeasure",
    "Ideal",
    "make_space",
    "maxitive_from_atoms",
    "additive_from_atoms",
    "is_maxitive",
    "is_additive",
    "is_normed",
    "is_two_valued",
    "induced_delta",
    "principal_witness",
    "close_ideal",
    "max_disjoint_positive_family",
    "count_positive_atoms",
]

MAX_ATOMS = 16


class MeasureError(ValueError):
    """Base class for invalid inputs to the measure constructions."""


class DuplicateLabel(MeasureError):
    pass


class EmptyLabelList(MeasureError):
    pass


class TooManyAtoms(MeasureError):
    pass


class UnknownAtom(MeasureError):
    pass


class MissingAtomValue(MeasureError):
    pass


class SpaceMismatch(MeasureError):
    pass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a checker: truthy on success, otherwise carries a witness.

    ``stage`` names the failing step for multi-step pipelines and
    ``details`` holds intermediate objects worth reporting.
    """

    ok: bool
    witness: object = None
    stage: str | None = None
    details: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Space:
    atoms: tuple[str, ...]

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if not atoms:
            raise EmptyLabelList("a space needs at least one atom label")
        if len(atoms) > MAX_ATOMS:
            raise TooManyAtoms(f"{len(atoms)} atoms given, at most {MAX_ATOMS} supported")
        seen = set()
        for label in atoms:
            if not isinstance(label, str) or not label:
                raise MeasureError(f"atom labels must be nonempty strings, got {label!r}")
            if "," in label or label != label.strip():
                raise MeasureError(f"atom label {label!r} may not contain commas or surrounding spaces")
            if label in seen:
                raise DuplicateLabel(f"duplicate atom label {label!r}")
            seen.add(label)

    @property
    def n(self) -> int:
        return len(self.atoms)

    @property
    def size(self) -> int:
        """Number of measurable sets, ``2**n``."""
        return 1 << len(self.atoms)

    @property
    def full(self) -> int:
        return (1 << len(self.atoms)) - 1

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.atoms)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownAtom(f"unknown atom {label!r}; atoms are {list(self.atoms)}") from None

    def encode(self, labels: Iterable[str]) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def decode(self, mask: int) -> tuple[str, ...]:
        self.check_mask(mask)
        return tuple(label for i, label in enumerate(self.atoms) if mask >> i & 1)

    def parse_set(self, text: str) -> int:
        """Comma-joined labels to a mask; ``""`` is the empty set."""
        parts = [p.strip() for p in text.split(",")] if text.strip() else []
        return self.encode(p for p in parts if p)

    def format_set(self, mask: int) -> str:
        return ",".join(self.decode(mask))

    def check_mask(self, mask: int) -> int:
        if not isinstance(mask, int) or not 0 <= mask <= self.full:
            raise SpaceMismatch(f"mask {mask!r} is not a subset of a {self.n}-atom space")
        return mask

    def subsets(self) -> range:
        return range(self.size)

    def members(self, mask: int) -> Iterator[int]:
        """Indices of the atoms in ``mask``."""
        i = 0
        while mask:
            if mask & 1:
                yield i
            mask >>= 1
            i += 1


def make_space(labels: Sequence[str]) -> Space:
    return Space(tuple(labels))


def _same_space(*spaces: Space) -> Space:
    first = spaces[0]
    for other in spaces[1:]:
        if other != first:
            raise SpaceMismatch(f"spaces differ: {list(first.atoms)} vs {list(other.atoms)}")
    return first


@dataclass(frozen=True)
class SetFunction:
    """Arbitrary candidate table over all ``2**n`` subsets, not yet validated."""

    space: Space
    table: tuple[ExtRat, ...]

    def __post_init__(self):
        table = tuple(ext(v) for v in self.table)
        if len(table) != self.space.size:
            raise MeasureError(f"table has {len(table)} entries, expected {self.space.size}")
        object.__setattr__(self, "table", table)

    def __call__(self, mask: int) -> ExtRat:
        return self.table[mask]


AtomValues = Union[Mapping[str, object], Sequence[object]]


def _atom_values(space: Space, atom_values: AtomValues) -> tuple[ExtRat, ...]:
    if isinstance(atom_values, Mapping):
        for label in atom_values:
            space.index(label)
        missing = [a for a in space.atoms if a not in atom_values]
        if missing:
            raise MissingAtomValue(f"no value for atom(s) {missing}")
        return tuple(ext(atom_values[a]) for a in space.atoms)
    values = tuple(ext(v) for v in atom_values)
    if len(values) != space.n:
        raise MissingAtomValue(f"{len(values)} atom values given for {space.n} atoms")
    return values


class _AtomicMeasure:
    """Shared behaviour of measures determined by their singleton values."""

    space: Space
    atom_values: tuple[ExtRat, ...]

    def __call__(self, mask: int) -> ExtRat:
        return self.table[mask]

    def atom(self, label_or_index: Union[str, int]) -> ExtRat:
        if isinstance(label_or_index, str):
            label_or_index = self.space.index(label_or_index)
        return self.atom_values[label_or_index]

    def as_mapping(self) -> dict[str, ExtRat]:
        return dict(zip(self.space.atoms, self.atom_values))

    def as_set_function(self) -> SetFunction:
        return SetFunction(self.space, self.table)

    @property
    def positive_atoms(self) -> int:
        """Mask of atoms with positive singleton value."""
        mask = 0
        for i, v in enumerate(self.atom_values):
            if v.num:
                mask |= 1 << i
        return mask

    def is_zero(self) -> bool:
        return not any(v.num for v in self.atom_values)


@dataclass(frozen=True)
class MaxitiveMeasure(_AtomicMeasure):
    """``tau(B) = max(atom_values[a] for a in B)`` with ``tau(empty) = 0``."""

    space: Space
    atom_values: tuple[ExtRat, ...]

    def __post_init__(self):
        object.__setattr__(self, "atom_values", _atom_values(self.space, self.atom_values))

    @cached_property
    def table(self) -> tuple[ExtRat, ...]:
        table = [ZERO] * self.space.size
        for mask in range(1, self.space.size):
            low = mask & -mask
            a, b = table[mask ^ low], self.atom_values[low.bit_length() - 1]
            table[mask] = a if a >= b else b
        return tuple(table)


@dataclass(frozen=True)
class AdditiveMeasure(_AtomicMeasure):
    """``m(B) = sum(atom_values[a] for a in B)``."""

    space: Space
    atom_values: tuple[ExtRat, ...]

    def __post_init__(self):
        object.__setattr__(self, "atom_values", _atom_values(self.space, self.atom_values))

    @cached_property
    def table(self) -> tuple[ExtRat, ...]:
        table = [ZERO] * self.space.size
        for mask in range(1, self.space.size):
            low = mask & -mask
            table[mask] = table[mask ^ low] + self.atom_values[low.bit_length() - 1]
        return tuple(table)


def maxitive_from_atoms(space: Space, atom_values: AtomValues) -> MaxitiveMeasure:
    return MaxitiveMeasure(space, atom_values)


def additive_from_atoms(space: Space, atom_values: AtomValues) -> AdditiveMeasure:
    return AdditiveMeasure(space, atom_values)


def _table(f) -> tuple[Space, Sequence[ExtRat]]:
    if isinstance(f, (SetFunction, MaxitiveMeasure, AdditiveMeasure)):
        return f.space, f.table
    raise TypeError(f"expected a set function or measure, got {type(f).__name__}")


def _singletons(space: Space, table: Sequence[ExtRat]) -> list[ExtRat]:
    return [table[1 << i] for i in range(space.n)]


def is_maxitive(f) -> Verdict:
    """Check ``f(empty) = 0`` and ``f(A | B) = max(f(A), f(B))`` for all pairs.

    On failure the witness is the least violating pair ``(A, B)`` by mask;
    a nonzero ``f(empty)`` is reported as the pair ``(0, 0)``.
    """
    space, table = _table(f)
    if table[0].num:
        return Verdict(False, (0, 0))
    # fast path: on a finite space pairwise maxitivity is equivalent to the
    # max-of-singletons form, so a full pair scan is only needed to locate
    # the witness
    if table == MaxitiveMeasure(space, _singletons(space, table)).table:
        return Verdict(True)
    for a in range(space.size):
        ta = table[a]
        for b in range(a, space.size):
            tb = table[b]
            if table[a | b] != (ta if ta >= tb else tb):
                return Verdict(False, (a, b))
    raise AssertionError("unreachable: table differs from its maxitive extension")


def is_additive(f) -> Verdict:
    """Check ``f(empty) = 0`` and ``f(A | B) = f(A) + f(B)`` for disjoint pairs."""
    space, table = _table(f)
    if table[0].num:
        return Verdict(False, (0, 0))
    if table == AdditiveMeasure(space, _singletons(space, table)).table:
        return Verdict(True)
    for a in range(space.size):
        for b in range(a, space.size):
            if a & b:
                continue
            if table[a | b] != table[a] + table[b]:
                return Verdict(False, (a, b))
    raise AssertionError("unreachable: table differs from its additive extension")


def is_normed(tau: MaxitiveMeasure) -> bool:
    return tau(tau.space.full) == ONE


def is_two_valued(tau: MaxitiveMeasure) -> bool:
    """Range over all measurable sets is exactly ``{0, 1}``."""
    return set(tau.table) == {ZERO, ONE}


def induced_delta(m: AdditiveMeasure) -> MaxitiveMeasure:
    """Two-valued measure equal to 1 exactly on the ``m``-positive sets."""
    return MaxitiveMeasure(m.space, [ONE if v.num else ZERO for v in m.atom_values])


@dataclass(frozen=True)
class Ideal:
    """Principal ideal of all subsets of ``generator``."""

    space: Space
    generator: int

    def __post_init__(self):
        self.space.check_mask(self.generator)

    def __contains__(self, mask: int) -> bool:
        return mask & ~self.generator == 0

    def members(self) -> Iterator[int]:
        # standard submask enumeration, descending from the generator
        sub = self.generator
        while True:
            yield sub
            if sub == 0:
                return
            sub = (sub - 1) & self.generator


def close_ideal(space: Space, family: Iterable[int]) -> frozenset[int]:
    """Smallest family containing ``family`` closed under subsets and unions.

    Computed by saturation, without assuming the result is principal.
    """
    closed: set[int] = set()
    frontier = [space.check_mask(m) for m in family]
    while frontier:
        new: set[int] = set()
        for mask in frontier:
            if mask in closed:
                continue
            closed.add(mask)
            for i in space.members(mask):
                new.add(mask & ~(1 << i))
        for a in list(closed):
            for b in list(closed):
                if a | b not in closed:
                    new.add(a | b)
        frontier = [m for m in new if m not in closed]
    return frozenset(closed)


def principal_witness(mu, ideal: Ideal) -> int:
    """Member ``L`` of ``ideal`` with ``mu(S - L) = 0`` for every member ``S``.

    On a finite space the generator always works.
    """
    _same_space(mu.space, ideal.space)
    return ideal.generator


def count_positive_atoms(mu) -> int:
    return sum(1 for i in range(mu.space.n) if mu(1 << i).num)


def max_disjoint_positive_family(mu, *, brute_force_limit: int = 8) -> int:
    """Largest number of pairwise disjoint sets of positive measure.

    For ``n <= brute_force_limit`` the answer is found by search over
    disjoint families and cross-checked against the count of positive atoms.
    """
    closed_form = count_positive_atoms(mu)
    if mu.space.n > brute_force_limit:
        return closed_form
    brute = _max_disjoint_brute(mu)
    if brute != closed_form:
        raise AssertionError(f"disjoint family search {brute} != positive atom count {closed_form}")
    return brute


def _max_disjoint_brute(mu) -> int:
    positive = [b for b in range(1, mu.space.size) if mu(b).num]
    best = 0

    def extend(start: int, used: int, count: int) -> None:
        nonlocal best
        best = max(best, count)
        for k in range(start, len(positive)):
            b = positive[k]
            if not b & used:
                extend(k + 1, used | b, count + 1)

    extend(0, 0, 0)
    return best
