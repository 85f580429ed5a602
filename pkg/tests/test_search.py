import itertools

import pytest

from uklc.catalog import graphs_up_to
from uklc.certify import certify
from uklc.constructions import (
    gen_complement_c6,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_diamond,
    gen_Hn,
)
from uklc.errors import InputError
from uklc.graph import build_graph
from uklc.search import (
    SearchBudget,
    WitnessStatus,
    canonical_lists,
    conjecture_scan,
    default_color_budget,
    find_witness,
    iter_canonical_assignments,
    m_number_bounds,
)
from uklc.solver import ListAssignment, Verdict, uniqueness


def _relabel_min(L, t):
    """Least relabelling of an assignment under all colour permutations."""
    best = None
    for perm in itertools.permutations(range(1, t + 1)):
        image = tuple(tuple(sorted(perm[c - 1] for c in lst)) for lst in L)
        if best is None or image < best:
            best = image
    return best


@pytest.mark.parametrize("n", range(1, 5))
def test_canonical_space_covers_every_orbit(n):
    k, t = 2, 3
    subsets = list(itertools.combinations(range(1, t + 1), k))
    every = {_relabel_min(L, t) for L in itertools.product(subsets, repeat=n)}
    canonical = list(iter_canonical_assignments(n, k, t))
    assert {_relabel_min(L, t) for L in canonical} == every
    assert len(set(canonical)) == len(canonical)


def test_canonical_lists_introduce_colours_in_order():
    assert canonical_lists(2, 4, 0) == (((1, 2), 2),)
    assert canonical_lists(2, 4, 2) == (((1, 2), 2), ((1, 3), 3), ((2, 3), 3), ((3, 4), 4))
    assert canonical_lists(2, 3, 3) == (((1, 2), 3), ((1, 3), 3), ((2, 3), 3))


def _first_unique(G, k, t):
    for L in iter_canonical_assignments(G.n, k, t):
        if uniqueness(G, L).verdict is Verdict.UNIQUE:
            return L
    return None


CASES = [(G, 2, 3) for G in graphs_up_to(4)] + [(G, 3, 4) for G in graphs_up_to(4, n_min=3)]


@pytest.mark.parametrize("G, k, t", CASES, ids=lambda x: str(x) if not hasattr(x, "n") else
                         f"n{x.n}m{x.m}")
def test_pruned_search_finds_the_least_witness(G, k, t):
    res = find_witness(G, k, SearchBudget(color_budget=t))
    expected = _first_unique(G, k, t)
    if expected is None:
        assert res.status is WitnessStatus.EXHAUSTED
    else:
        assert res.status is WitnessStatus.FOUND
        assert res.lists == expected
        assert uniqueness(G, res.lists).coloring == res.coloring


@pytest.mark.parametrize("G", graphs_up_to(5, connected=True, n_min=2),
                         ids=lambda G: f"n{G.n}e{G.edges}")
def test_never_contradicts_a_certificate(G):
    for k in (2, 3):
        res = find_witness(G, k, SearchBudget(color_budget=k + 2))
        if res.status is WitnessStatus.FOUND:
            assert certify(G, k).certificate is None
            assert uniqueness(G, res.lists).verdict is Verdict.UNIQUE


@pytest.mark.parametrize(
    "inst, status",
    [(gen_complete(4), "exhausted_negative"), (gen_complete_bipartite(3, 3), "exhausted_negative"),
     (gen_diamond(), "found"), (gen_complement_c6(), "found"), (gen_cycle(5), "exhausted_negative")],
)
def test_k2_verdicts_are_definitive(inst, status):
    res = find_witness(inst.graph, 2)
    assert res.status.value == status
    assert res.definitive


def test_k3_negative_is_not_definitive():
    res = find_witness(gen_complete(4).graph, 3)
    assert res.status is WitnessStatus.EXHAUSTED and not res.definitive
    assert res.t == 4


def test_budget_exceeded_is_tri_state():
    res = find_witness(gen_Hn(1).graph, 2, SearchBudget(node_budget=20))
    assert res.status is WitnessStatus.BUDGET_EXCEEDED
    assert not res.definitive and res.lists is None


@pytest.mark.parametrize("budget", [SearchBudget(), SearchBudget(node_budget=300)])
@pytest.mark.parametrize("inst", [gen_Hn(1), gen_complete(4), gen_complement_c6()])
def test_results_do_not_depend_on_jobs(inst, budget):
    one = find_witness(inst.graph, 2, budget, jobs=1)
    two = find_witness(inst.graph, 2, budget, jobs=2)
    assert one == two


def test_default_color_budget():
    assert default_color_budget(gen_cycle(4).graph, 2) == 3
    assert default_color_budget(gen_complete(5).graph, 2) == 5
    assert default_color_budget(gen_complete(5).graph, 3) == 5
    assert default_color_budget(gen_complete(3).graph, 3) == 3


def test_empty_graph_and_bad_k():
    assert find_witness(build_graph(0, []), 2).status is WitnessStatus.EXHAUSTED
    with pytest.raises(InputError):
        find_witness(gen_cycle(3).graph, 0)
    with pytest.raises(InputError):
        SearchBudget(node_budget=0)


@pytest.mark.parametrize(
    "inst, expected",
    [(gen_complete(4), (2, 2)), (gen_complete_bipartite(3, 3), (2, 2)), (gen_cycle(5), (2, 2)),
     (gen_complement_c6(), (3, 3))],
)
def test_m_number(inst, expected):
    b = m_number_bounds(inst.graph)
    assert (b.m_lower, b.m_upper) == expected and b.determined


def test_chi_u_2_reported():
    assert m_number_bounds(gen_complement_c6().graph).chi_u_2 == 3
    assert m_number_bounds(gen_complete(4).graph).chi_u_2 == 0


def test_conjecture_scan(tmp_path):
    assert conjecture_scan(2, []).to_json()["scanned"] == 0
    report = conjecture_scan(2, [gen_cycle(n).graph for n in range(3, 7)] + [gen_diamond().graph])
    assert (report.scanned, report.at_boundary, report.definitive_negatives) == (5, 4, 4)
    assert report.counterexamples == []
    K5 = conjecture_scan(3, [gen_complete(5).graph], SearchBudget(node_budget=200_000))
    assert K5.at_boundary == 1 and K5.counterexamples == []
    (tmp_path / "bad.col").write_text("p 2 1\ne 1 1\n")
    with pytest.warns(UserWarning):
        report = conjecture_scan(2, [tmp_path / "bad.col"])
    assert report.skipped == 1
    with pytest.raises(InputError):
        conjecture_scan(1, [])
