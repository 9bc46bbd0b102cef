import pytest

from tdesigns import fixtures
from tdesigns.design import complement_design, verify_bruteforce
from tdesigns.fixtures import (
    S5612_BASE_BLOCK,
    FixtureError,
    generate_s5612,
    load_fixture,
    psl2_11_orbit,
    scan_s5612_base_block,
)


def test_s5612_generator(s5612):
    assert s5612.b == 132
    assert str(verify_bruteforce(s5612, 5)) == "5-(12,6,1)"
    assert complement_design(s5612) == s5612


def test_frozen_base_block_is_first_found():
    assert scan_s5612_base_block() == S5612_BASE_BLOCK


def test_orbit_group_order():
    # PSL(2,11) acts on 12 points; a 6-set with trivial stabiliser would give 660
    sizes = {len(psl2_11_orbit(b)) for b in [(0, 1, 2, 3, 4, 5), S5612_BASE_BLOCK]}
    assert 132 in sizes and all(660 % s == 0 for s in sizes)


def test_bad_base_block_rejected():
    with pytest.raises(FixtureError):
        generate_s5612((0, 1, 2, 3, 4, 5))


def test_load_fixture():
    fx = load_fixture("fano")
    assert str(fx.expected_params) == "2-(7,3,1)"
    assert load_fixture("fano-minus-one").expected_params is None
    with pytest.raises(KeyError):
        load_fixture("nope")


def test_load_fixture_detects_corruption(monkeypatch):
    build, t, expected = fixtures._BUILDERS["fano"]
    monkeypatch.setitem(fixtures._BUILDERS, "fano", (fixtures.fano_minus_one, t, expected))
    with pytest.raises(FixtureError):
        load_fixture("fano")
