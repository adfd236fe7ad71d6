import itertools

import networkx as nx
import pytest

import multires as mr


def brute_lmd(g: nx.Graph):
    """Smallest W where adjacent vertices get different distance multisets, or None."""
    d = dict(nx.all_pairs_shortest_path_length(g))
    nodes = sorted(g)
    for k in range(1, len(nodes) + 1):
        for w in itertools.combinations(nodes, k):
            bag = {v: sorted(d[v][x] for x in w) for v in nodes}
            if all(bag[u] != bag[v] for u, v in g.edges()):
                return k
    return None


def test_cycle_values():
    c7 = mr.Graph.generate("cycle:7")
    r = mr.dimension(c7, "lmd")
    assert r["value"] == 3
    assert r["witness"] == [0, 1, 3]
    assert mr.dimension(mr.Graph.generate("cycle:5"), "lmd")["value"] == mr.INFINITY


@pytest.mark.parametrize("n", [4, 6, 7, 8])
def test_lmd_matches_networkx(n):
    for spec in (f"cycle:{n}", f"path:{n}", f"wheel:{n}"):
        g = mr.Graph.generate(spec)
        ref = brute_lmd(nx.Graph(g.edges()))
        got = mr.dimension(g, "lmd")["value"]
        assert got == (mr.INFINITY if ref is None else ref), spec


def test_graph_round_trip():
    g = mr.Graph.from_edge_list("0 1\n1 2\n2 0\n")
    assert (g.order, g.size) == (3, 3)
    assert mr.Graph.from_graph6(g.graph6()) == g
    assert g == mr.Graph(3, [(0, 1), (1, 2), (0, 2)])


def test_certify_and_bounds():
    c4 = mr.Graph.generate("cycle:4")
    assert mr.certify(c4, "lmd", [0])["valid"]
    bad = mr.certify(mr.Graph.generate("complete:4"), "lmd", [0, 1])
    assert not bad["valid"] and bad["violating_pairs"]
    b = mr.bounds(mr.Graph.generate("gadget:8"))
    assert any(x["source"] == "clique_log" and x["value"] == 3 for x in b["lower"])


def test_errors():
    with pytest.raises(mr.ValidationError):
        mr.Graph.generate("wheel:2")
    with pytest.raises(mr.ParseError):
        mr.Graph.from_graph6("")
    with pytest.raises(mr.ConnectivityError):
        mr.dimension(mr.Graph(3, [(0, 1)]), "dim")
    with pytest.raises(mr.BudgetExhausted):
        mr.dimension(mr.Graph.generate("cycle:9"), "lmd", budget=5, naive=True)
    with pytest.raises(mr.InputError):
        mr.dimension(mr.Graph.generate("cycle:4"), "nope")


def test_connected_counts_and_verify():
    assert len(mr.connected_graphs(4)) == 38
    assert "cycles" in mr.theorems()
    report = mr.verify("cycles", range="3..6")
    assert report["pass"] is True
