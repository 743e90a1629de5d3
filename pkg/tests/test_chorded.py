import networkx as nx
import pytest

from chordq.chorded import (
    ChordCertificate,
    brute_force_chorded,
    czipser_hypothesis,
    find_chorded_cycle,
    has_chorded_cycle,
    normalize,
    posa_hypothesis,
    verify_certificate,
)
from chordq.errors import CapacityError, PreconditionError
from chordq.graph import complete_bipartite_graph, complete_graph, cycle_graph, empty_graph, star_graph
from chordq.families import F, construct

from conftest import random_graph, to_nx


def nx_has_chorded_cycle(g):
    """Independent oracle: some simple cycle whose vertex set spans more edges than its length."""
    h = to_nx(g)
    for cyc in nx.simple_cycles(h):
        if len(cyc) >= 4 and h.subgraph(cyc).number_of_edges() > len(cyc):
            return True
    return False


def test_k4_certificate():
    cert = find_chorded_cycle(complete_graph(4))
    assert cert is not None and verify_certificate(complete_graph(4), cert)
    assert len(cert.cycle) == 4


@pytest.mark.parametrize("g", [
    cycle_graph(6), star_graph(7), complete_bipartite_graph(2, 5), construct(F(9, 4)), empty_graph(0),
])
def test_chord_free_families(g):
    assert find_chorded_cycle(g) is None
    assert brute_force_chorded(g) is None
    assert not has_chorded_cycle(g)


def test_k33_has_chord():
    g = complete_bipartite_graph(3, 3)
    assert verify_certificate(g, find_chorded_cycle(g))


def test_atlas_against_networkx(atlas):
    for g in atlas:
        expected = nx_has_chorded_cycle(g)
        cert = find_chorded_cycle(g)
        assert (cert is not None) == expected
        assert has_chorded_cycle(g) == expected
        assert (brute_force_chorded(g) is not None) == expected
        if cert is not None:
            assert verify_certificate(g, cert)


def test_random_certificates(rng):
    for _ in range(300):
        n = int(rng.integers(4, 13))
        g = random_graph(rng, n, float(rng.uniform(0.1, 0.5)))
        a, b = find_chorded_cycle(g), brute_force_chorded(g)
        assert (a is None) == (b is None)
        for c in (a, b):
            if c is not None:
                assert verify_certificate(g, c)


def test_normalize():
    c = normalize([3, 1, 4, 0, 2], (4, 3))
    assert c.cycle == (0, 2, 3, 1, 4) and c.chord == (3, 4)


def test_verify_rejects_bad_certificates():
    g = complete_graph(4)
    assert not verify_certificate(g, ChordCertificate((0, 1, 2), (0, 1)))      # too short
    assert not verify_certificate(g, ChordCertificate((0, 1, 2, 3), (0, 1)))   # cycle edge
    assert not verify_certificate(cycle_graph(4), ChordCertificate((0, 1, 2, 3), (0, 2)))  # not an edge
    assert not verify_certificate(g, ChordCertificate((0, 1, 1, 3), (0, 1)))


def test_brute_force_capacity():
    with pytest.raises(CapacityError):
        brute_force_chorded(empty_graph(13))


def test_predicates():
    assert posa_hypothesis(complete_graph(4))
    assert not posa_hypothesis(cycle_graph(6))
    with pytest.raises(PreconditionError):
        posa_hypothesis(complete_graph(3))
    assert czipser_hypothesis(complete_graph(4))
    assert not czipser_hypothesis(star_graph(5))
    assert not czipser_hypothesis(empty_graph(0))


def test_predicates_imply_chords(atlas):
    for g in atlas:
        if g.n >= 4 and (posa_hypothesis(g) or czipser_hypothesis(g)):
            assert find_chorded_cycle(g) is not None


def test_k4_reference_certificates():
    g = complete_graph(4)
    assert verify_certificate(g, ChordCertificate((0, 1, 2, 3), (0, 2)))
    assert not verify_certificate(g, ChordCertificate((0, 1, 2, 3), (0, 1)))
