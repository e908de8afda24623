from fractions import Fraction

from hypothesis import strategies as st

from staralg.scalars import GaussianRational

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, rationals, rationals)


def real_elements(n):
    return st.tuples(*[rationals] * n)


def complex_elements(n):
    return st.tuples(*[gaussians] * n)


def rand_rational(rng, span=9, den=4):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_gaussian(rng):
    return GaussianRational(rand_rational(rng), rand_rational(rng))


ACCEPTANCE: list[str] = []


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> bool:
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE.append(f"[{status}] criterion {number:>2}: {title}" + (f" -- {detail}" if detail else ""))
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
