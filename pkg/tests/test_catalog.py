from fractions import Fraction as F

import pytest

from secrecygain.catalog import (
    EXTREMAL_DIMENSIONS,
    catalog_entry,
    catalog_names,
    format_factored,
    lattice_entries,
)
from secrecygain.poly import PolyQ
from secrecygain.verifier import Status, verify_min_at_quarter


def test_lookup():
    assert catalog_entry(8).expected_D == PolyQ([1, -1])
    assert catalog_entry("40").expected_D == PolyQ([1, -1]) ** 5 - (PolyQ([1, -1]) ** 2 * PolyQ([0, 0, 1])).scale(F(75, 16))
    fixture = catalog_entry("refuted-fixture")
    assert fixture.expected_D == PolyQ([F(-1, 8), 1]) ** 2
    assert not fixture.is_lattice
    with pytest.raises(KeyError):
        catalog_entry(88)
    with pytest.raises(KeyError):
        catalog_entry("nonsense")


def test_names():
    names = catalog_names()
    assert [f"extremal-{n}" for n in EXTREMAL_DIMENSIONS] == names[:10]
    assert {"Z1", "Z8", "E8-gram", "refuted-fixture"} <= set(names)
    assert "refuted-fixture" not in [e.name for e in lattice_entries()]


@pytest.mark.parametrize("name", catalog_names())
def test_regenerated(name):
    e = catalog_entry(name)
    assert e.generated_D() == e.expected_D
    assert e.expected_D(0) == (1 if e.is_lattice else F(1, 64))


@pytest.mark.parametrize("n", EXTREMAL_DIMENSIONS)
def test_extremal_verdicts(n):
    assert verify_min_at_quarter(catalog_entry(n).expected_D).status is Status.CONFIRMED_STRICT


def test_factored_display():
    assert format_factored(catalog_entry(8).factored) == "(1-z)"
    assert format_factored(catalog_entry(56).factored) == (
        "(1-z)^7 - 105/16*(1-z)^4*z^2 + 21735/4096*(1-z)*z^4"
    )


def test_descriptors():
    assert catalog_entry(24).descriptor() == {"name": "extremal-24", "dim": 24, "kind": "extremal"}
    d = catalog_entry("refuted-fixture").descriptor()
    assert d["kind"] == "ar" and d["data"] == ["1/64", "-4", "256"]
    assert catalog_entry("E8-gram").descriptor()["data"][0][:2] == [2, -1]


def test_theta_of_non_lattice():
    with pytest.raises(ValueError):
        catalog_entry("refuted-fixture").theta()
