from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qhpoly.polyring import Polynomial

# fixed seed so the suite is reproducible run to run
settings.register_profile(
    "repro", derandomize=True, max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")

exponent = st.integers(min_value=0, max_value=4)
monomials = st.tuples(exponent, exponent, exponent)
polynomials = st.dictionaries(monomials, st.integers(-5, 5), max_size=6).map(Polynomial)


def close_up(n, sets):
    """Smallest building set on [n] containing ``sets``."""
    family = {frozenset([i]) for i in range(1, n + 1)} | {frozenset(s) for s in sets if s}
    changed = True
    while changed:
        changed = False
        for a in list(family):
            for b in list(family):
                if a & b and (a | b) not in family:
                    family.add(a | b)
                    changed = True
    return family


@st.composite
def building_sets(draw, max_n=6, connected=False):
    from qhpoly.buildsets import validate

    n = draw(st.integers(1, max_n))
    raw = draw(st.lists(st.sets(st.integers(1, n), min_size=min(2, n)), max_size=5))
    family = close_up(n, raw)
    if connected:
        family.add(frozenset(range(1, n + 1)))
    return validate(n, family)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
