import sympy

from skeinlab.ring import LaurentPoly, SkeinScalar

q, a = sympy.symbols("q a")
z = q - 1 / q
s = (a - 1 / a) / z

ACCEPTANCE_LINES = []


def to_sympy(x):
    """Rational function of a LaurentPoly or SkeinScalar."""
    if isinstance(x, LaurentPoly):
        x = SkeinScalar(x)
    num = sum(c * q**qe * a**ae for (qe, ae), c in x.numerator.items())
    den = sympy.Integer(1)
    for k in x.denominators:
        den *= q**k - q**-k
    return num / den


def same(x, expr):
    return sympy.simplify(to_sympy(x) - expr) == 0


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
