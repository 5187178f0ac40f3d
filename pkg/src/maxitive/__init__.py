"""Exact maxitive measures, Shilkret integrals and their densities on finite spaces."""

__version__ = "0.1.0"

from .extrat import INF, ONE, ZERO, ExtRat, MalformedValue
from .core import (
    AdditiveMeasure,
    DuplicateLabel,
    EmptyLabelList,
    Ideal,
    MaxitiveMeasure,
    MeasureError,
    MissingAtomValue,
    SetFunction,
    Space,
    SpaceMismatch,
    TooManyAtoms,
    UnknownAtom,
    Verdict,
    additive_from_atoms,
    close_ideal,
    induced_delta,
    is_additive,
    is_maxitive,
    is_normed,
    is_two_valued,
    make_space,
    max_disjoint_positive_family,
    maxitive_from_atoms,
    principal_witness,
)
from .integral import Density, ess_sup, shilkret_integral, shilkret_oracle
from .variation import (
    Partition,
    PartitionEnumerationTooLarge,
    disjoint_variation,
    set_partitions,
    variation_oracle,
)
from .radon_nikodym import (
    AcWitness,
    NotAbsolutelyContinuous,
    NotSigmaFinite,
    absolutely_continuous,
    densities_agree_ae,
    density,
    verify_density,
)
