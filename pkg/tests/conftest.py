import random

from hypothesis import HealthCheck, settings, strategies as st

from deltaribbon.generate import random_delta_matroid, random_ribbon_graph

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def ribbon_graphs(max_edges: int = 5, min_edges: int = 0):
    return st.randoms(use_true_random=False).map(
        lambda r: random_ribbon_graph(r, max_edges, min_edges=min_edges)
    )


def delta_matroids(max_elements: int = 5, min_elements: int = 1):
    return st.randoms(use_true_random=False).map(
        lambda r: random_delta_matroid(r, max_elements, min_elements)
    )


def seeded(seed) -> random.Random:
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
