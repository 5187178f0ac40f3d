"""Absolute continuity and Radon-Nikodym densities for the Shilkret integral."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Ideal, MaxitiveMeasure, MeasureError, Verdict, _same_space, principal_witness
from .extrat import INF, ZERO, ExtRat
from .integral import Density, shilkret_table

__all__ = [
    "AcWitness",
    "NotAbsolutelyContinuous",
    "NotSigmaFinite",
    "absolutely_continuous",
    "density",
    "density_by_ideals",
    "verify_density",
    "densities_agree_ae",
]


@dataclass(frozen=True)
class AcWitness:
    """A set that is ``nu``-null but not ``tau``-null."""

    set: int
    tau: MaxitiveMeasure
    nu: MaxitiveMeasure

    def __post_init__(self):
        if self.nu(self.set).num or not self.tau(self.set).num:
            raise ValueError(
                f"set {self.tau.space.format_set(self.set)!r} does not violate absolute continuity"
            )

    def __str__(self) -> str:
        return "{" + self.tau.space.format_set(self.set) + "}"


class NotAbsolutelyContinuous(MeasureError):
    def __init__(self, witness: AcWitness):
        self.witness = witness
        super().__init__(
            f"nu({witness}) = 0 but tau({witness}) = {witness.tau(witness.set)}"
        )


class NotSigmaFinite(MeasureError):
    def __init__(self, atom: str):
        self.atom = atom
        super().__init__(f"nu({{{atom}}}) = inf; the dominating measure must be finite on atoms")


def absolutely_continuous(tau: MaxitiveMeasure, nu: MaxitiveMeasure) -> Verdict:
    """``nu(B) = 0`` implies ``tau(B) = 0``; checked on atoms, least violator returned."""
    _same_space(tau.space, nu.space)
    for i, (t, v) in enumerate(zip(tau.atom_values, nu.atom_values)):
        if not v.num and t.num:
            return Verdict(False, AcWitness(1 << i, tau, nu))
    return Verdict(True)


def _check_density_inputs(tau: MaxitiveMeasure, nu: MaxitiveMeasure) -> None:
    _same_space(tau.space, nu.space)
    for label, v in zip(nu.space.atoms, nu.atom_values):
        if v.is_inf:
            raise NotSigmaFinite(label)
    verdict = absolutely_continuous(tau, nu)
    if not verdict:
        raise NotAbsolutelyContinuous(verdict.witness)


def density(tau: MaxitiveMeasure, nu: MaxitiveMeasure) -> Density:
    """Density ``c`` with ``tau(B) = integral of c over B w.r.t. nu`` for all ``B``.

    ``c(a) = tau({a}) / nu({a})`` on ``nu``-positive atoms and 0 elsewhere.
    The identity is re-checked over every set before returning.
    """
    _check_density_inputs(tau, nu)
    values = [t / v if v.num else ZERO for t, v in zip(tau.atom_values, nu.atom_values)]
    c = Density(tau.space, values)
    verdict = verify_density(tau, nu, c)
    if not verdict:
        raise AssertionError(f"density fails on set {tau.space.format_set(verdict.witness)!r}")
    return c


def density_by_ideals(tau: MaxitiveMeasure, nu: MaxitiveMeasure) -> Density:
    """Density built from level ideals, without dividing atom values.

    For each candidate level ``t`` (a ratio ``tau(B)/nu(B)`` over sets),
    ``I_t`` is the family of sets all of whose subsets satisfy
    ``tau <= t * nu``.  It is closed under subsets and unions, so it has a
    generator ``L_t``, and the density is the least ``t`` whose ``L_t``
    contains the atom.
    """
    _check_density_inputs(tau, nu)
    space = tau.space
    levels = sorted({tau(b) / nu(b) for b in range(1, space.size) if nu(b).num})
    values: list[ExtRat | None] = [None] * space.n
    null = ~nu.positive_atoms
    for i in range(space.n):
        if null >> i & 1:
            values[i] = ZERO
    for t in levels:
        if t.is_inf:
            break
        good = [tau(b) <= t * nu(b) for b in range(space.size)]
        hereditary = [False] * space.size
        generator = 0
        for b in range(space.size):
            ok = good[b] and all(hereditary[b & ~(1 << i)] for i in space.members(b))
            hereditary[b] = ok
            if ok:
                generator |= b
        L = principal_witness(tau, Ideal(space, generator))
        for i in space.members(L):
            if values[i] is None:
                values[i] = t
    return Density(space, [INF if v is None else v for v in values])


def verify_density(tau: MaxitiveMeasure, nu: MaxitiveMeasure, c: Density) -> Verdict:
    """Check ``tau(B) = integral of c over B`` for every set; least failing set as witness."""
    _same_space(tau.space, nu.space, c.space)
    integrals = shilkret_table(c, nu)
    for b, (lhs, rhs) in enumerate(zip(tau.table, integrals)):
        if lhs != rhs:
            return Verdict(False, b, details={"tau": lhs, "integral": rhs})
    return Verdict(True)


def densities_agree_ae(c1: Density, c2: Density, nu: MaxitiveMeasure) -> bool:
    _same_space(c1.space, c2.space, nu.space)
    differ = 0
    for i, (a, b) in enumerate(zip(c1.values, c2.values)):
        if a != b:
            differ |= 1 << i
    return not nu(differ).num
