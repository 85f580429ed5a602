import networkx as nx
import pytest

from conftest import brute_colorings
from uklc.constructions import (
    FAMILIES,
    UNVERIFIED,
    check_claims,
    find_induced_k4,
    gen_complement_c6,
    gen_complete_bipartite,
    gen_cycle,
    gen_figure1_chain,
    gen_gadget,
    gen_Hn,
    gen_path,
    gen_petersen,
    gen_strip_triangle,
    gen_T,
)
from uklc.errors import InputError
from uklc.graph import average_degree, connected_components, is_k_regular
from uklc.solver import Verdict, uniqueness


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


def test_named_graphs_match_networkx():
    assert nx.is_isomorphic(to_nx(gen_petersen().graph), nx.petersen_graph())
    assert nx.is_isomorphic(to_nx(gen_complement_c6().graph), nx.complement(nx.cycle_graph(6)))
    assert nx.is_isomorphic(to_nx(gen_complete_bipartite(2, 3).graph),
                            nx.complete_bipartite_graph(2, 3))
    assert nx.is_isomorphic(to_nx(gen_cycle(7).graph), nx.cycle_graph(7))
    assert nx.is_isomorphic(to_nx(gen_path(4).graph), nx.path_graph(4))


@pytest.mark.parametrize("k, n", [(2, 3), (3, 2), (3, 4), (4, 3)])
def test_T_is_circulant(k, n):
    G = gen_T(k, n).graph
    assert G.n == k * n and is_k_regular(G, 2 * (k - 1))
    assert nx.is_isomorphic(to_nx(G), nx.circulant_graph(k * n, range(1, k)))


@pytest.mark.parametrize("k, n", [(2, 2), (2, 3)])
def test_gadget_uniqueness_by_product_oracle(k, n):
    inst = gen_gadget(k, n)
    assert brute_colorings(inst.graph, inst.lists) == [inst.predicted_coloring]


@pytest.mark.parametrize("k, n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_gadget_claims(k, n):
    inst = gen_gadget(k, n)
    G = inst.graph
    assert G.n == (k + 1) * k * n
    assert inst.lists.uniform_size(k)
    assert len(connected_components(G)) == 1
    claims = {c["claim"]: c for c in check_claims(inst)}
    assert claims["UkLC"]["status"] == "verified"
    assert claims["avg_degree"]["value"] == str(average_degree(G))
    assert claims["avg_degree_closed_form"]["status"] in ("discrepancy", "agrees")


def test_strip_triangle_counts():
    inst = gen_strip_triangle(4)
    assert inst.graph.n == 9 and inst.graph.m == 12
    assert nx.check_planarity(to_nx(inst.graph))[0]


@pytest.mark.parametrize("n", range(1, 6))
def test_Hn_shape(n):
    inst = gen_Hn(n)
    G = inst.graph
    assert is_k_regular(G, 4)
    assert len(connected_components(G)) == 1
    assert len(inst.params["hung"]) == n + 2
    assert G.n == 2 * n + 1 + 5 * (n + 2)
    k4 = find_induced_k4(G)
    assert k4 is not None and k4 in inst.params["induced_k4"]


def test_figure1_chain_is_quarantined():
    inst = gen_figure1_chain(2)
    assert inst.claims[0]["status"] == UNVERIFIED
    assert inst.graph.n == 13
    assert nx.check_planarity(to_nx(inst.graph))[0]
    checked = check_claims(inst)
    assert checked[0]["status"] == "verified"
    assert uniqueness(inst.graph, inst.lists).verdict is Verdict.UNIQUE


@pytest.mark.parametrize(
    "family, args",
    [("complete", (0,)), ("cycle", (2,)), ("T", (1, 3)), ("gadget", (2, 1)), ("hn", (0,)),
     ("figure1", (0,))],
)
def test_bad_parameters(family, args):
    with pytest.raises(InputError):
        FAMILIES[family](*args)


def test_generators_are_deterministic():
    a, b = gen_gadget(3, 2), gen_gadget(3, 2)
    assert a.graph == b.graph and a.lists == b.lists and a.claims_json() == b.claims_json()


@pytest.mark.parametrize("k", [2, 3, 4])
def test_gadget_average_degree_decreases_to_boundary(k):
    values = [average_degree(gen_gadget(k, n).graph) for n in range(2, 9)]
    assert all(v > 2 * k - 2 for v in values)
    assert all(a > b for a, b in zip(values, values[1:]))
    # the excess over 2k - 2 is exactly c/n, with c at most 2(k - 1)
    excess = {(v - (2 * k - 2)) * n for v, n in zip(values, range(2, 9))}
    assert len(excess) == 1 and 0 < excess.pop() <= 2 * (k - 1)


def test_Hn_regular_up_to_20():
    for n in range(1, 21):
        G = gen_Hn(n).graph
        assert is_k_regular(G, 4) and len(connected_components(G)) == 1
