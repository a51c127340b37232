import random

import pytest
from hypothesis import settings, strategies as st

from peuler.poset import random_poset

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_LINES_KEY = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Record one part of an acceptance criterion: ``criterion(n, part, ok, detail)``."""
    store = request.config.stash.setdefault(_LINES_KEY, {})

    def record(number: int, part: str, ok: bool, detail: str = "") -> bool:
        store.setdefault(number, []).append((part, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    store = config.stash.get(_LINES_KEY, {})
    if not store:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(store):
        parts = store[number]
        ok = all(p[1] for p in parts)
        detail = "; ".join(f"{name}: {'ok' if good else 'FAIL'} ({text})" if text else f"{name}: {'ok' if good else 'FAIL'}" for name, good, text in parts)
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@st.composite
def posets(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_poset(n, random.Random(seed))


@st.composite
def permutations(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(st.permutations(range(1, n + 1))))
