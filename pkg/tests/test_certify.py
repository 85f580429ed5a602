import math
import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, random_graph, random_lists
from uklc.catalog import graphs_up_to
from uklc.certify import (
    Certificate,
    Rule,
    audit_theorem5,
    certify,
    certify_avg_degree,
    certify_block_m2,
    certify_induced,
    certify_lists,
    certify_planar_family,
    certify_regular,
    certify_regular_count,
    certify_surface,
    heawood,
    regular_threshold,
    surface_index,
    theorem5_bound,
    tight_equality_audit,
    varying_lists_necessary,
    verify_certificate,
)
from uklc.constructions import find_induced_k4, gen_complete, gen_Hn, gen_petersen
from uklc.errors import InputError
from uklc.graph import build_graph
from uklc.search import SearchBudget, WitnessStatus, find_witness
from uklc.solver import ListAssignment, Verdict, uniqueness


def test_heawood_values():
    # largest h with 2h - 7 <= sqrt(24g + 1), by squaring
    oracle = [max(h for h in range(4, 40) if (2 * h - 7) ** 2 <= 24 * g + 1) for g in range(1, 8)]
    assert oracle == [6, 7, 7, 8, 9, 9, 10]
    assert [heawood(g) for g in range(1, 8)] == oracle
    for g in range(1, 2000):
        assert heawood(g) == math.floor((7 + math.sqrt(24 * g + 1)) / 2)


@pytest.mark.parametrize("g", range(1, 60))
def test_surface_index(g):
    expected = max(i for i in range(2, 100) if 3 * g >= 2 * i * i - 3 * i + 1)
    assert surface_index(g) == expected


def test_torus_certificate():
    G = build_graph(7, [(i, j) for i in range(7) for j in range(i + 1, 7)], {"euler_genus": 2})
    cert = certify_surface(G, 5)
    assert cert.params["i"] == surface_index(2) and cert.params["base_k"] == 7 - 2
    small = build_graph(4, [(0, 1), (1, 2)], {"euler_genus": 1})
    cert = certify_surface(small, 4)
    assert cert.rule is Rule.SURFACE and cert.params["i"] == 2 and cert.params["base_k"] == 4
    assert certify_surface(small, 3) is None


def test_surface_rejects_impossible_genus():
    K8 = build_graph(8, [(i, j) for i in range(8) for j in range(i + 1, 8)], {"euler_genus": 1})
    notes = []
    assert certify_surface(K8, 10, notes) is None
    assert "contradicts" in notes[0]


def test_heawood_rejects():
    with pytest.raises(InputError):
        heawood(0)


def _truthful(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    planar = nx.check_planarity(H)[0]
    apex = H.copy()
    apex.add_edges_from((G.n, v) for v in range(G.n))
    outer = nx.check_planarity(apex)[0]
    meta = {"planar": planar, "outerplanar": outer}
    if planar:
        meta["euler_genus"] = 1
    return build_graph(G.n, G.edges, meta)


SMALL = [_truthful(G) for G in graphs_up_to(5)]


@pytest.mark.parametrize("G", SMALL, ids=lambda G: f"n{G.n}e{G.edges}")
def test_certificates_are_sound_exhaustively(G):
    for k in range(2, 5):
        result = certify(G, k, collect_all=True)
        for cert in result.certificates:
            assert verify_certificate(G, cert)
        if result.certificate is None:
            continue
        res = find_witness(G, k, SearchBudget(color_budget=5))
        assert res.status is WitnessStatus.EXHAUSTED


def test_certificates_are_sound_on_samples():
    rng = random.Random(99)
    checked = 0
    for _ in range(60):
        G = _truthful(random_graph(rng, rng.randint(6, 8), rng.uniform(0.2, 0.7)))
        for k in range(2, 6):
            cert = certify(G, k).certificate
            if cert is None:
                continue
            for _ in range(25):
                L = random_lists(rng, G.n, k, min(5, k + 2))
                assert uniqueness(G, L).verdict is not Verdict.UNIQUE
                checked += 1
    assert checked > 1000


def test_avg_degree_is_strict():
    C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert certify_avg_degree(C4, 2) is None
    assert certify_avg_degree(C4, 3).params["average_degree"] == "2"
    assert certify_avg_degree(C4, 1) is None


def test_block_rule_on_components():
    # a diamond plus a disjoint triangle: the triangle component suffices
    G = build_graph(7, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (4, 5), (5, 6), (4, 6)])
    cert = certify_block_m2(G)
    assert cert.params["component"] == [4, 5, 6]
    diamond = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert certify_block_m2(diamond) is None
    lifted = certify_block_m2(G, 3)
    assert lifted.k == 3 and lifted.params["base_k"] == 2


def test_planar_rules_use_metadata():
    K4 = build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert certify_planar_family(K4, 4) is None
    cert = certify_planar_family(K4.with_metadata(planar=True), 4)
    assert cert.rule is Rule.PLANAR_M4
    C6 = build_graph(6, [(i, (i + 1) % 6) for i in range(6)], {"planar": True})
    assert certify_planar_family(C6, 3).rule is Rule.TRIANGLE_FREE_PLANAR_M3
    tri = build_graph(3, [(0, 1), (1, 2), (0, 2)], {"outerplanar": True})
    assert certify_planar_family(tri, 3).rule is Rule.OUTERPLANAR_M3
    K5 = build_graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)], {"planar": True})
    notes = []
    assert certify_planar_family(K5, 4, notes) is None
    assert any("contradicts" in n for n in notes)


def test_regular_rules():
    P = gen_petersen().graph
    assert regular_threshold(3) == 3 and regular_threshold(4) == 4 and regular_threshold(5) == 4
    assert certify_regular(P).k == 3
    assert certify_regular(P, k=2) is None
    K6 = gen_complete(6).graph
    assert certify_regular_count(K6, 5).rule is Rule.KK1_EXCEPTION
    assert certify_regular_count(gen_complete(5).graph, 4) is None


def test_induced_rule_on_hn():
    G = gen_Hn(1).graph
    H = find_induced_k4(G, max_outside=1)
    assert H is not None
    K4 = build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    inner = certify_block_m2(K4)
    cert = certify_induced(G, H, 2, 1, inner)
    assert cert.rule is Rule.INDUCED_SUBGRAPH and cert.k == 3
    assert verify_certificate(G, cert)
    assert certify_induced(G, H, 2, 0, inner) is None
    with pytest.raises(InputError):
        certify_induced(G, H, 3, 1, inner)
    found = certify(G, 3, induced=[(H, 2, 1, inner)]).certificate
    assert found.rule is Rule.INDUCED_SUBGRAPH


def test_certificate_json_round_trip():
    P = gen_petersen().graph
    cert = certify(P, 4).certificate
    again = Certificate.from_json(cert.to_json())
    assert again == cert and verify_certificate(P, again)
    forged = Certificate(Rule.AVG_DEGREE, 2, {})
    assert not verify_certificate(P, forged)


def test_chain_notes_when_nothing_applies():
    result = certify(gen_petersen().graph, 2)
    assert result.certificate is None
    assert any(n.startswith("AvgDegree") for n in result.notes)


def test_theorem5_bound_and_audit():
    assert theorem5_bound(6, 5) == Fraction(5, 2)
    K6 = gen_complete(6).graph
    audit = audit_theorem5(K6, ListAssignment([[1, 2, 3, 4, 5]] * 6))
    assert audit.count == 0 and audit.complete_identical and audit.satisfied
    L = ListAssignment([[1, 2, 3, 4, 5]] * 5 + [[1, 2, 3, 4, 6]])
    audit = audit_theorem5(K6, L)
    assert audit.count >= 3 and audit.satisfied
    with pytest.raises(InputError):
        audit_theorem5(K6, ListAssignment([[1, 2]] * 6))


@given(graphs(max_n=7))
def test_negative_list_sum_forbids_uniqueness(G):
    rng = random.Random(G.m * 31 + G.n)
    L = ListAssignment(rng.sample(range(1, 6), rng.randint(1, 4)) for _ in range(G.n))
    total, possible = varying_lists_necessary(G, L)
    assert total == sum(G.degree(v) - 2 * (len(L[v]) - 1) for v in range(G.n))
    if not possible:
        assert uniqueness(G, L).verdict is not Verdict.UNIQUE
        cert = certify_lists(G, L)
        assert cert.rule is Rule.VARYING_LISTS_NECESSARY and verify_certificate(G, cert)
    else:
        assert certify_lists(G, L) is None


def test_tight_equality_audit():
    G = build_graph(2, [(0, 1)])
    L = ListAssignment([[1], [1, 2]])
    report = tight_equality_audit(G, L, (1, 2))
    assert all(r.equal for r in report.values())
    assert report[1].b_t == 1 and report[1].d_t == 1
    with pytest.raises(InputError, match="the unique coloring is"):
        tight_equality_audit(G, L, (1, 1))
    triangle = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(InputError, match="not unique"):
        tight_equality_audit(triangle, ListAssignment([[1, 2], [2, 3], [1, 3]]), (1, 2, 3))
    with pytest.raises(InputError, match="degree equality"):
        tight_equality_audit(G, ListAssignment([[1], [2]]), (1, 2))


@pytest.mark.parametrize("seed", range(40))
def test_tight_equality_holds_on_boundary_instances(seed):
    rng = random.Random(seed)
    for _ in range(2000):
        G = random_graph(rng, rng.randint(2, 6), 0.5)
        L = ListAssignment(rng.sample(range(1, 5), rng.randint(1, 3)) for _ in range(G.n))
        if varying_lists_necessary(G, L).sum != 0:
            continue
        u = uniqueness(G, L)
        if u.verdict is Verdict.UNIQUE:
            report = tight_equality_audit(G, L, u.coloring)
            assert all(r.equal for r in report.values()), report
            return
    pytest.skip("no boundary instance sampled")
