from itertools import combinations

import networkx as nx
from hypothesis import HealthCheck, settings, strategies as st

from monophonic.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    G = draw(graphs(min_n, max_n))
    # glue components with a spanning path over component representatives
    comps = list(nx.connected_components(to_nx(G)))
    edges = set(G.edges())
    for a, b in zip(comps, comps[1:]):
        edges.add(tuple(sorted((min(a), min(b)))))
    return Graph.from_edges(G.n, sorted(edges))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
