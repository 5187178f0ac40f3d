import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxitive import (
    INF,
    ONE,
    ZERO,
    AcWitness,
    MaxitiveMeasure,
    NotAbsolutelyContinuous,
    NotSigmaFinite,
    SetFunction,
    SpaceMismatch,
    absolutely_continuous,
    densities_agree_ae,
    density,
    disjoint_variation,
    induced_delta,
    is_maxitive,
    make_space,
    maxitive_from_atoms,
    shilkret_integral,
    verify_density,
)
from maxitive.integral import Density, shilkret_table
from maxitive.radon_nikodym import density_by_ideals

from strategies import ext_values, finite_ext, q


@pytest.fixture
def ab():
    return make_space("ab")


def test_absolute_continuity_examples(abc, ab):
    assert absolutely_continuous(maxitive_from_atoms(abc, ["1/2", 1, 0]), maxitive_from_atoms(abc, [1, 1, 0]))
    verdict = absolutely_continuous(maxitive_from_atoms(ab, [0, 1]), maxitive_from_atoms(ab, [1, 0]))
    assert not verdict
    assert verdict.witness.set == 0b10
    assert str(verdict.witness) == "{b}"
    zero = maxitive_from_atoms(abc, [0, 0, 0])
    assert absolutely_continuous(zero, maxitive_from_atoms(abc, [0, 5, 0]))


def test_ac_witness_rechecked(ab):
    tau = maxitive_from_atoms(ab, [0, 1])
    nu = maxitive_from_atoms(ab, [1, 0])
    with pytest.raises(ValueError):
        AcWitness(0b01, tau, nu)


def test_density_examples(abc, ab):
    tau = maxitive_from_atoms(abc, ["1/2", 1, 0])
    nu = induced_delta(disjoint_variation(tau))
    assert nu.atom_values == (ONE, ONE, ZERO)
    c = density(tau, nu)
    assert c.values == (q("1/2"), ONE, ZERO)
    # tau(B) = max{c(a) : a in B, nu(a) = 1}, checked set by set
    for b in abc.subsets():
        expected = max([c.values[i] for i in abc.members(b) if nu.atom_values[i] == ONE], default=ZERO)
        assert tau(b) == expected

    c = density(maxitive_from_atoms(ab, [3, "1/2"]), maxitive_from_atoms(ab, [2, 2]))
    assert c.values == (q("3/2"), q("1/4"))
    assert q("3/2") * 2 == q("3") and q("1/4") * 2 == q("1/2")

    with pytest.raises(NotAbsolutelyContinuous) as info:
        density(maxitive_from_atoms(ab, [0, 1]), maxitive_from_atoms(ab, [1, 0]))
    assert info.value.witness.set == 0b10


def test_density_preconditions(ab, abc):
    with pytest.raises(NotSigmaFinite, match="'?a'?"):
        density(maxitive_from_atoms(ab, [1, 1]), maxitive_from_atoms(ab, [INF, 1]))
    with pytest.raises(SpaceMismatch):
        density(maxitive_from_atoms(ab, [1, 1]), maxitive_from_atoms(abc, [1, 1, 1]))


def test_infinite_tau_gives_infinite_density(ab):
    c = density(maxitive_from_atoms(ab, [INF, 1]), maxitive_from_atoms(ab, [1, 1]))
    assert c.values == (INF, ONE)


def test_verify_density_examples(ab, abc):
    tau = maxitive_from_atoms(ab, ["1/2", 1])
    nu = maxitive_from_atoms(ab, [1, 1])
    verdict = verify_density(tau, nu, Density(ab, [1, 1]))
    assert not verdict
    assert verdict.witness == 0b01
    assert verdict.details["integral"] == ONE
    zero = maxitive_from_atoms(abc, [0, 0, 0])
    assert verify_density(zero, maxitive_from_atoms(abc, [1, 2, 3]), Density(abc, [0, 0, 0]))


def test_densities_agree_ae_examples(abc, ab):
    nu = maxitive_from_atoms(abc, [1, 1, 0])
    assert densities_agree_ae(Density(abc, ["1/2", 1, 0]), Density(abc, ["1/2", 1, 99]), nu)
    assert not densities_agree_ae(Density(ab, [1, 0]), Density(ab, [0, 0]), maxitive_from_atoms(ab, [1, 0]))
    c = Density(abc, [1, 2, 3])
    assert densities_agree_ae(c, c, nu)


@st.composite
def ac_pair(draw, max_atoms=6):
    n = draw(st.integers(1, max_atoms))
    space = make_space([chr(97 + i) for i in range(n)])
    nu = MaxitiveMeasure(space, [draw(finite_ext) for _ in range(n)])
    tau_vals = [draw(ext_values) if nu.atom_values[i] > ZERO else ZERO for i in range(n)]
    return MaxitiveMeasure(space, tau_vals), nu


@settings(max_examples=200)
@given(ac_pair())
def test_ac_implies_density(pair):
    tau, nu = pair
    assert absolutely_continuous(tau, nu)
    c = density(tau, nu)
    assert verify_density(tau, nu, c)


@settings(max_examples=200)
@given(ac_pair(max_atoms=5))
def test_two_constructions_agree(pair):
    tau, nu = pair
    c = density(tau, nu)
    other = density_by_ideals(tau, nu)
    assert verify_density(tau, nu, other)
    for i, v in enumerate(nu.atom_values):
        if v > ZERO:
            assert c.values[i] == other.values[i]


@given(st.data())
def test_converse_direction(data):
    n = data.draw(st.integers(1, 5))
    space = make_space([chr(97 + i) for i in range(n)])
    nu = MaxitiveMeasure(space, [data.draw(finite_ext) for _ in range(n)])
    c = Density(space, [data.draw(ext_values) for _ in range(n)])
    table = SetFunction(space, shilkret_table(c, nu))
    assert is_maxitive(table)
    induced = MaxitiveMeasure(space, [shilkret_integral(c, nu, 1 << i) for i in range(n)])
    assert absolutely_continuous(induced, nu)


@given(ac_pair(max_atoms=5), st.lists(ext_values, min_size=5, max_size=5))
def test_null_atom_freedom_and_uniqueness(pair, junk):
    tau, nu = pair
    c = density(tau, nu)
    perturbed = c.replace({i: junk[i] for i, v in enumerate(nu.atom_values) if v == ZERO})
    assert verify_density(tau, nu, perturbed)
    assert densities_agree_ae(c, perturbed, nu)


@given(ac_pair(max_atoms=4), st.lists(ext_values, min_size=4, max_size=4))
def test_any_valid_density_is_unique_on_positive_atoms(pair, candidate):
    tau, nu = pair
    other = Density(tau.space, candidate[: tau.space.n])
    if verify_density(tau, nu, other):
        assert densities_agree_ae(density(tau, nu), other, nu)


@given(st.data())
def test_non_ac_refused_with_least_witness(data):
    n = data.draw(st.integers(1, 5))
    space = make_space([chr(97 + i) for i in range(n)])
    nu = MaxitiveMeasure(space, [data.draw(finite_ext) for _ in range(n)])
    tau = MaxitiveMeasure(space, [data.draw(ext_values) for _ in range(n)])
    verdict = absolutely_continuous(tau, nu)
    violators = [i for i in range(n) if nu.atom_values[i] == ZERO and tau.atom_values[i] > ZERO]
    assert verdict.ok == (not violators)
    if violators:
        assert verdict.witness.set == 1 << violators[0]
        with pytest.raises(NotAbsolutelyContinuous):
            density(tau, nu)
