import itertools
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from toricposets.quiver import Quiver

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def quivers(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(1, n + 1)))
    pos = {v: k for k, v in enumerate(order)}
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    arcs = {(a, b) if pos[a] < pos[b] else (b, a) for (a, b), k in zip(pairs, keep) if k}
    return Quiver(n, frozenset(arcs))


def Q(n, *arcs):
    return Quiver(n, frozenset(arcs))


def eval_chain_sum(words, point, closed):
    """Evaluate the defining sum of 1 / prod (x_a - x_b) directly with fractions."""
    total = Fraction(0)
    for w in words:
        pairs = list(zip(w, w[1:])) + ([(w[-1], w[0])] if closed else [])
        den = Fraction(1)
        for a, b in pairs:
            den *= point[a - 1] - point[b - 1]
        total += 1 / den
    return total


def eval_rf(r, point):
    num = Fraction(0)
    for e, c in r.numerator.terms.items():
        t = Fraction(c)
        for x, k in zip(point, e):
            t *= Fraction(x) ** k
        num += t
    den = Fraction(1)
    for f in r.denominator:
        den *= point[f.i - 1] - point[f.j - 1]
    return num / den


D4 = Q(4, (1, 2), (1, 3), (2, 4), (3, 4))
Q45 = Q(5, (1, 2), (1, 3), (2, 5), (3, 5), (1, 4))
CHAIN3 = Q(3, (1, 2), (2, 3))
CHAIN_CHORD = Q(3, (1, 2), (2, 3), (1, 3))


# acceptance results, one line per criterion, echoed in the terminal summary
ACCEPTANCE: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
