"""Smoke tests for the python bindings."""

import pytest

import finitetc


def test_builtin_and_poset_basics():
    s = finitetc.builtin("sphere:1")
    assert len(s) == 4
    assert s.labels() == ["a", "b", "c", "d"]
    assert s.leq(0, 2) and not s.leq(2, 0)
    assert s.is_connected()
    assert len(finitetc.core(s)) == 4


def test_parse_and_contractibility():
    p = finitetc.parse_poset("elements: x y\nx < y\n")
    assert len(p) == 2
    assert finitetc.is_contractible(p)
    assert not finitetc.is_contractible(finitetc.builtin("sphere:1"))


def test_invariants_of_the_circle():
    s = finitetc.builtin("sphere:1")
    r = finitetc.cc(s, n=2)
    assert r["value"] == 4
    assert r["certified"] == "exact"
    assert len(r["cover"]) == 4
    c = finitetc.cat(s)
    assert c["value"] == 2
    assert c["certified"] == "exact"


def test_bounded_and_homotopic():
    c = finitetc.builtin("chain:3")
    r = finitetc.cc_bounded(c, 2, 1, variant="wedge")
    assert r["value"] == 1
    assert finitetc.homotopic(c, c, [0, 0, 0], [0, 1, 2]) is True
    s = finitetc.builtin("sphere:1")
    assert finitetc.homotopic(s, s, [0, 1, 2, 3], [0, 0, 0, 0]) is False


def test_sc_of_an_edge():
    r = finitetc.sc([["a", "b"]], n=2, k_max=1)
    assert r["value"] == 1
    assert r["invariant"] == "sc_n"


def test_errors_are_wrapped():
    with pytest.raises(finitetc.FiniteTCError):
        finitetc.builtin("torus:1")
