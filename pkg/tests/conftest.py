"""Shared fixtures: the five worked systems and hypothesis helpers."""

import pytest
from fractions import Fraction

from hypothesis import strategies as st

from mcgb.parser import parse_poly, parse_problem
from mcgb.poly import Polynomial


class System:
    """A parsed problem plus named reference polynomials."""

    def __init__(self, text, polys=None):
        self.problem = parse_problem(text)
        self.ring = self.problem.ring
        self.ideal = self.problem.ideal
        self.poly = {name: parse_poly(expr, self.ring)
                     for name, expr in (polys or {}).items()}

    def __getitem__(self, name):
        return self.poly[name]


TINY_TEXT = """
parameters: v, u;
variables: z, y, x;
order: lex, lex;
ideal: u*y + x, v*z + x + 1;
"""

ILLUS_TEXT = """
parameters: a, b;
variables: x, y, z;
order: lex, lex;
ideal: (a - 2*b)*x + y^2 + (a + b)*z, a^2*x + y + b*z;
"""

SIMPL_TEXT = """
parameters: u, v;
variables: x, y, z;
order: lex, lex;
ideal: u*x^2 - 2*y + (4*u + 4*v)*z, (2*v - 2*u)*x^2 - 2*y + 4*v*z;
"""

GRADED_TEXT = """
parameters: a, b;
variables: x, y;
order: grlex, grlex;
ideal: a*x^2*y + a^2*x^2 - 3*a, 4*a*b^2*y^2 + 4*b^3 - 4;
"""

LINEAR_TEXT = """
parameters: u;
variables: z, y, x;
order: lex, lex;
ideal: u*z + x, (u + 1)*y - x;
"""

PMUL_TEXT = """
parameters: a, b;
variables: x;
order: lex, lex;
ideal: (a^3 - b^3)*x^2 + (a^2 + b^2 + 1)*x + (a - b)*(b + 2);
"""


@pytest.fixture(scope="session")
def tiny():
    return System(TINY_TEXT, polys={
        "f": "u*y + x",
        "g": "v*z + x + 1",
        "h": "v*z - u*y + 1",
    })


@pytest.fixture(scope="session")
def illus():
    return System(ILLUS_TEXT, polys={
        "f1": "a^2*y^2 + (2*b - a)*y + (a^3 + a^2*b - a*b + 2*b^2)*z",
        "f2": "b^2*x - 1/4*(a + 2*b)*y^2 + 1/4*y - 1/4*(a^2 + 3*a*b + 2*b^2 - b)*z",
        "f3": "(a - 2*b)*x + y^2 + (a + b)*z",
        "f4": "a*b*x - 1/2*a*y^2 + 1/2*y - 1/2*(a^2 + a*b - b)*z",
        "f5": "a*b*x*y - 1/2*(a - 2*b)*x - 1/2*a*y^3 - 1/4*a^2*y^2*z"
              " - 1/4*(2*a^2 + 2*a*b - a)*y*z"
              " - 1/4*(a^3 + a^2*b - a*b + 2*b^2)*z^2 - 1/2*(a + b)*z",
    })


@pytest.fixture(scope="session")
def simpl():
    return System(SIMPL_TEXT, polys={
        "f1": "(u - 2/3*v)*y + (4/3*v^2 - 4/3*u^2 - 2/3*u*v)*z",
        "f2": "v*x^2 - 3*y + (4*u + 6*v)*z",
        "f3": "(u - 10/13*v)*x^2 + 4/13*y + 1/13*(12*u - 8*v)*z",
        "f4": "(u - 2/3*v)*x^2 + 4/3*u*z",
        "g": "u*x^2 - 2*y + (4*u + 4*v)*z",
    })


@pytest.fixture(scope="session")
def graded():
    return System(GRADED_TEXT, polys={
        "f1": "a*b^2*y^2 + b^3 - 1",
        "f2": "(a^3*b^2 + b^3 - 1)*x^2 + 3*a*b^2*y - 3*a^2*b^2",
        "f3": "(a^6*b^2 + 2*a^3*b^3 - a^3 + b^4 - b)*x^2"
              " + (3*a^4*b^2 + 3*a*b^3)*y - (3*a^5*b^2 + 3*a^2*b^3)",
        "f4": "(a^6*b^2 + 2*a^3*b^3 - a^3 + b^4 - b)*x^4"
              " - (6*a^5*b^2 + 6*a^2*b^3)*x^2 + 9*a^4*b^2 + 9*a*b^3",
        "f5": "(a^5*b^2 + a^2*b^3 - a^2)*x^2 + 3*a^3*b^2*y - 3*a^4*b^2",
        "f6": "(a^4*b^2 + a*b^3 - a)*x^4 - 6*a^3*b^2*x^2 + 9*a^2*b^2",
    })


@pytest.fixture(scope="session")
def linear():
    return System(LINEAR_TEXT, polys={
        "f": "u*z + x",
        "g": "(u + 1)*y - x",
        "h": "u*z + (u + 1)*y",
    })


@pytest.fixture(scope="session")
def pmul():
    sys = System(PMUL_TEXT, polys={
        "f": "(a^3 - b^3)*x^2 + (a^2 + b^2 + 1)*x + (a - b)*(b + 2)",
    })
    sys.poly["g"] = parse_poly("b^3 - 1/4*b^2 + 3/2*b + 1/2", sys.ring) * sys["f"]
    sys.poly["h"] = parse_poly("a + b", sys.ring) * sys["f"]
    return sys


def polynomials(ring, max_terms=5, max_exp=3, nonzero=False):
    """Hypothesis strategy for small polynomials over the given ring."""
    width = len(ring.names)
    mono = st.tuples(*[st.integers(0, max_exp) for _ in range(width)])
    coeff = st.fractions(
        min_value=Fraction(-5), max_value=Fraction(5), max_denominator=4)
    terms = st.lists(st.tuples(mono, coeff), max_size=max_terms)
    strat = terms.map(lambda ts: Polynomial(ring, ts))
    if nonzero:
        strat = strat.filter(lambda p: not p.is_zero())
    return strat


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Repeat one line per acceptance criterion at the end of the run."""
    lines = {}
    for outcome in ("failed", "error", "passed"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" not in nodeid:
                continue
            name = nodeid.rsplit("::", 1)[-1]
            if outcome == "passed":
                lines.setdefault(name, "PASS")
            else:
                lines[name] = "FAIL"
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name in sorted(lines):
            terminalreporter.write_line("%-62s %s" % (name, lines[name]))
