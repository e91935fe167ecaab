"""Smoke tests for the python bindings: the main operations round-trip with
the paper-table values and the splitters return verifiable decompositions."""

import pytest

import matchpoly as mp


def test_families_and_predicates():
    w4 = mp.wheel(4)
    assert w4.vertex_count == 4
    assert w4.edge_count == 6
    assert mp.is_factor_critical(mp.cycle(5))
    assert not mp.is_factor_critical(mp.cycle(4))
    assert mp.essential_vertices(mp.wheel(6)) == [0, 1, 2, 3, 4, 5]
    assert mp.is_bipartite(mp.cycle(6))["bipartite"]
    assert not mp.is_bipartite(mp.wheel(5))["bipartite"]


def test_matchings_and_counts():
    w4 = mp.wheel(4)
    assert len(mp.enumerate_matchings(w4)) == 10
    assert mp.count_points(w4, 1) == 10
    assert mp.count_points(mp.path(2), 7) == 8
    assert len(mp.odd_structures(mp.complete(4))) == 4


def test_hstar_matches_table():
    assert mp.hstar(mp.wheel(4))["coefficients"] == [1, 3, 3, 1]
    h5 = mp.hstar(mp.wheel(5))
    assert h5["coefficients"] == [1, 10, 29, 26, 5]
    assert h5["unimodal"]
    assert not h5["palindromic"]


def test_gorenstein_reports():
    c5 = mp.check_conditions(mp.cycle(5))
    assert c5["verdict"] and c5["cls"] == "type_b" and c5["index"] == 3
    assert not mp.check_conditions(mp.wheel(6))["verdict"]
    assert mp.verify_lattice_witness(mp.cycle(5), 3)
    assert not mp.verify_lattice_witness(mp.cycle(5), 2)


def test_idp_and_split():
    assert mp.idp_check(mp.chortling_c5(), t_max=3)["certified"]
    assert mp.blocks_sufficient(mp.complete(4))

    g = mp.cycle(5)
    x = [1, 1, 1, 1, 0]
    assert mp.is_t_matching(g, x, 2)
    result = mp.split(g, x, 2)
    assert result is not None
    assert len(result["parts"]) == 2
    total = [sum(col) for col in zip(*result["parts"])]
    assert total == x


def test_input_errors():
    with pytest.raises(ValueError):
        mp.wheel(3)
    with pytest.raises(ValueError):
        mp.split(mp.complete(3), [1, 1, 1], 2)
