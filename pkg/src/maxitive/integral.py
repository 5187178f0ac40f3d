"""Shilkret integral and essential supremum on finite spaces.

The Shilkret integral of a density ``c`` over ``B`` with respect to a
maxitive ``nu`` is ``sup_{t >= 0} t * nu(B & {c > t})``.  On a finite space
it collapses to ``max_{a in B} c(a) * nu({a})``; :func:`shilkret_oracle`
evaluates the supremum from its definition instead and is kept for
verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .core import AdditiveMeasure, MaxitiveMeasure, Space, _atom_values, _same_space, induced_delta
from .extrat import INF, ZERO, ExtRat

__all__ = [
    "Density",
    "shilkret_integral",
    "shilkret_table",
    "shilkret_oracle",
    "ess_sup",
]


@dataclass(frozen=True)
class Density:
    """Nonnegative extended-valued function on the atoms of a space."""

    space: Space
    values: tuple[ExtRat, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", _atom_values(self.space, self.values))

    def __getitem__(self, label_or_index: Union[str, int]) -> ExtRat:
        if isinstance(label_or_index, str):
            label_or_index = self.space.index(label_or_index)
        return self.values[label_or_index]

    def as_mapping(self) -> dict[str, ExtRat]:
        return dict(zip(self.space.atoms, self.values))

    def above(self, t: ExtRat) -> int:
        """Mask of the threshold set ``{c > t}``."""
        mask = 0
        for i, v in enumerate(self.values):
            if v > t:
                mask |= 1 << i
        return mask

    def scaled(self, k: ExtRat) -> "Density":
        return Density(self.space, [k * v for v in self.values])

    def replace(self, changes: Mapping[int, ExtRat]) -> "Density":
        values = list(self.values)
        for i, v in changes.items():
            values[i] = v
        return Density(self.space, values)


def _products(c: Density, nu: MaxitiveMeasure) -> list[ExtRat]:
    return [cv * nv for cv, nv in zip(c.values, nu.atom_values)]


def shilkret_integral(c: Density, nu: MaxitiveMeasure, B: int) -> ExtRat:
    _same_space(c.space, nu.space)
    c.space.check_mask(B)
    best = ZERO
    for i, p in enumerate(_products(c, nu)):
        if B >> i & 1 and p > best:
            best = p
    return best


def shilkret_table(c: Density, nu: MaxitiveMeasure) -> tuple[ExtRat, ...]:
    """Integral over every measurable set, indexed by mask."""
    _same_space(c.space, nu.space)
    return MaxitiveMeasure(c.space, _products(c, nu)).table


def shilkret_oracle(c: Density, nu, B: int) -> ExtRat:
    """Evaluate ``sup_t t * nu(B & {c > t})`` directly from its definition.

    ``nu`` may be any set function indexed by mask; only its values on the
    threshold sets are read.  Between consecutive values of ``c`` the set
    ``{c > t}`` is constant, so each finite value ``v`` contributes the left
    limit ``v * nu(B & {c >= v})``.  Atoms where ``c`` is infinite stay in
    every threshold set and make the supremum unbounded when their trace has
    positive measure.
    """
    _same_space(c.space, nu.space)
    c.space.check_mask(B)
    values = [c.values[i] for i in c.space.members(B)]
    best = ZERO
    infinite_part = 0
    for i in c.space.members(B):
        if c.values[i].is_inf:
            infinite_part |= 1 << i
    if infinite_part and nu(infinite_part).num:
        return INF
    for v in sorted(set(values)):
        if v.is_inf or v.is_zero:
            continue
        at_least = 0
        for i in c.space.members(B):
            if c.values[i] >= v:
                at_least |= 1 << i
        contribution = v * nu(at_least)
        if contribution > best:
            best = contribution
    return best


def ess_sup(c: Density, m: AdditiveMeasure, B: int) -> ExtRat:
    """``m``-essential supremum of ``c`` on ``B``: the integral against ``delta_m``."""
    return shilkret_integral(c, induced_delta(m), B)

