import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from skeinhecke.ring import LaurentPoly
from skeinhecke.young import YoungDiagram

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

exps = st.integers(-3, 3)


@st.composite
def laurent_polys(draw, max_terms=4, vars="xvs"):
    p = LaurentPoly.const(0)
    for _ in range(draw(st.integers(0, max_terms))):
        p = p + LaurentPoly.monomial(
            draw(st.integers(-4, 4)),
            draw(exps) if "x" in vars else 0,
            draw(exps) if "v" in vars else 0,
            draw(exps) if "s" in vars else 0,
        )
    return p


@st.composite
def nonzero_polys(draw, max_terms=3):
    p = draw(laurent_polys(max_terms))
    return p if p else LaurentPoly.monomial(draw(st.sampled_from([-2, -1, 1, 3])), s=draw(exps))


@st.composite
def young_diagrams(draw, max_cells=8):
    n = draw(st.integers(0, max_cells))
    rows = []
    while n:
        r = draw(st.integers(1, min(n, rows[-1] if rows else n)))
        rows.append(r)
        n -= r
    return YoungDiagram(tuple(rows))


@pytest.fixture(params=["compiled", "python"])
def each_backend(request):
    from skeinhecke import hecke

    if request.param == "compiled" and hecke._ckernel is None:
        pytest.skip("compiled kernel not built")
    old = hecke.backend()
    hecke.set_backend(request.param)
    yield request.param
    hecke.set_backend(old)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
