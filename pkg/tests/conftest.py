from hypothesis import settings, strategies as st

from castella.text import parse_element
from castella.words import normalize

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def E(text: str):
    return parse_element(text)


def words_st(max_len: int = 5, max_index: int = 6):
    return st.lists(st.integers(0, max_index), max_size=max_len).map(tuple)


def elements_st(max_len: int = 5, max_index: int = 6):
    return words_st(max_len, max_index).map(normalize)


# one line per acceptance criterion, shown after the run
CRITERIA: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, text = CRITERIA[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}")
