import sys
from functools import lru_cache
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from licci.core import Decoration, unit_ideal  # noqa: E402
from licci.enumgraph import enumerate_levels  # noqa: E402
from licci.linkage import neighbors  # noqa: E402

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@lru_cache(maxsize=None)
def graph(c: int, max_k: int, with_edges: bool = False):
    return enumerate_levels(c, max_k, with_edges=with_edges)


@st.composite
def walks(draw, c=None, max_steps=12, max_k=12):
    """A decoration reached by a random walk on the link graph from the unit ideal."""
    if c is None:
        c = draw(st.integers(2, 5))
    v = unit_ideal(c)
    for _ in range(draw(st.integers(0, max_steps))):
        options = [r.target for r in neighbors(v) if r.target.k <= max_k]
        v = draw(st.sampled_from(options))
    return v


@st.composite
def raw_pairs(draw, c=None):
    """Arbitrary partition pairs satisfying only the sum identity."""
    if c is None:
        c = draw(st.integers(2, 5))
    mu = draw(st.lists(st.integers(1, 6), max_size=5))
    total = (c - 1) * sum(mu) + 1
    lam = []
    while total:
        x = draw(st.integers(1, total))
        lam.append(x)
        total -= x
    return Decoration(c, tuple(lam), tuple(mu))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
