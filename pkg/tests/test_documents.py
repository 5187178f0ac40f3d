import pytest
from hypothesis import given

from maxitive import (
    AdditiveMeasure,
    DuplicateLabel,
    MalformedValue,
    MaxitiveMeasure,
    SetFunction,
    UnknownAtom,
)
from maxitive.documents import (
    IncompleteTable,
    ParseError,
    dump_density,
    dump_measure,
    parse_density,
    parse_measure,
)
from maxitive.integral import Density

from strategies import additive, maxitive, q

TAU = """
kind = "maxitive"
atoms = ["a", "b"]

[atom_values]
a = "1/2"
b = "1"
"""


def test_parse_maxitive():
    tau = parse_measure(TAU)
    assert isinstance(tau, MaxitiveMeasure)
    assert tau(tau.space.full) == q("1")


def test_parse_table_and_integers():
    f = parse_measure('kind = "table"\natoms = ["a", "b"]\n[table]\n"" = 0\n"a" = "1"\n"b" = 1\n"b,a" = "3"\n')
    assert isinstance(f, SetFunction)
    assert f.table == (q("0"), q("1"), q("1"), q("3"))


@pytest.mark.parametrize(
    "text, exc, where",
    [
        (TAU.replace('"1/2"', '"2/0"'), MalformedValue, "atom_values.a"),
        (TAU.replace('"1/2"', "0.5"), MalformedValue, "atom_values.a"),
        (TAU.replace('"1/2"', "-3"), MalformedValue, "atom_values.a"),
        (TAU.replace('a = "1/2"', 'z = "1/2"'), UnknownAtom, "atom_values.z"),
        (TAU.replace('a = "1/2"\n', ""), ParseError, "atom_values"),
        (TAU.replace('"maxitive"', '"signed"'), ParseError, "kind"),
        (TAU.replace('["a", "b"]', '["a", "a"]'), DuplicateLabel, "atoms"),
        (TAU.replace("[atom_values]", "[atom_values"), ParseError, "line"),
        ('kind = "table"\natoms = ["a", "b"]\n[table]\n"" = "0"\n"a" = "1"\n"b" = "1"\n', IncompleteTable, "'a,b'"),
        ('kind = "table"\natoms = ["a"]\n[table]\n"" = "0"\n"a" = "1"\n"q" = "1"\n', UnknownAtom, "table"),
        ('kind = "table"\natoms = ["a"]\n[table]\n"" = "0"\n"a" = "1"\n"a,a" = "1"\n', ParseError, "twice"),
    ],
)
def test_parse_errors_carry_location(text, exc, where):
    with pytest.raises(exc, match=where.replace(".", r"\.")):
        parse_measure(text)


@given(maxitive(max_atoms=5))
def test_maxitive_roundtrip(tau):
    text = dump_measure(tau)
    again = parse_measure(text)
    assert again == tau
    assert dump_measure(again) == text


@given(additive(max_atoms=5))
def test_additive_and_table_roundtrip(m):
    assert parse_measure(dump_measure(m)) == m
    table = m.as_set_function()
    assert parse_measure(dump_measure(table)) == table


@given(maxitive(max_atoms=5))
def test_density_roundtrip(tau):
    c = Density(tau.space, tau.atom_values)
    assert parse_density(dump_density(c)) == c


def test_no_float_tokens():
    text = dump_measure(AdditiveMeasure(parse_measure(TAU).space, ["1/3", "inf"]))
    assert "." not in text.replace("[atom_values]", "")
    assert '"1/3"' in text and '"inf"' in text


def test_labels_needing_quotes():
    tau = MaxitiveMeasure(parse_measure(TAU).space.__class__(("x y", 'q"t')), [1, 2])
    assert parse_measure(dump_measure(tau)) == tau
